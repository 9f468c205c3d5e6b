// This code is part of vqeforge.
//
// (C) Copyright 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root
// directory of this source tree or at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef VQEFORGE_KERNELS_HPP_
#define VQEFORGE_KERNELS_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>

namespace vqeforge::kernels {

using cplx = std::complex<double>;

// Data-parallel inner loops of the state-vector simulator.  Two
// implementations exist: a scalar reference and an AVX2 variant selected at
// runtime.  Both operate on a contiguous array of `count` amplitudes
// (count = 2^n) and must produce bit-identical control flow decisions; the
// equivalence suite checks them against each other to 1e-13.
struct KernelTable {
    const char* name;

    // Applies the 2x2 matrix m (row-major) to every amplitude pair
    // (i, i + stride) where i runs over all indices whose `stride` bit is 0.
    void (*apply_matrix2)(cplx* amps, std::size_t count, std::size_t stride,
                          const cplx* m);

    // amps[i] *= phase for every i with (i & mask) == mask.
    void (*apply_phase_masked)(cplx* amps, std::size_t count,
                               std::uint64_t mask, cplx phase);

    // amps[i] *= even_phase or odd_phase depending on popcount(i & zmask) % 2.
    void (*apply_parity_phase)(cplx* amps, std::size_t count,
                               std::uint64_t zmask, cplx even_phase,
                               cplx odd_phase);

    // Sum of |amps[i]|^2.
    double (*norm_sq)(const cplx* amps, std::size_t count);

    // Sum over i of conj(amps[i ^ flip_mask]) * amps[i] * s(i) with
    // s(i) = (-1)^popcount(i & sign_mask).  The building block for Pauli
    // expectation values.
    cplx (*pauli_dot)(const cplx* amps, std::size_t count,
                      std::uint64_t flip_mask, std::uint64_t sign_mask);
};

const KernelTable& scalar_kernels();

// AVX2 table; on non-x86 builds this aliases the scalar table.
const KernelTable& avx2_kernels();

bool avx2_available();

// Runtime-selected table.  Honors VQEFORGE_KERNELS={auto,scalar,avx2};
// the default picks AVX2 when the CPU supports it.
const KernelTable& active_kernels();

} // namespace vqeforge::kernels

#endif // VQEFORGE_KERNELS_HPP_
