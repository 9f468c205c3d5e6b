// This code is part of vqeforge.
//
// (C) Copyright 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root
// directory of this source tree or at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "vqeforge/kernels.hpp"

#include <bit>

namespace vqeforge::kernels {

namespace {

void apply_matrix2_scalar(cplx* amps, std::size_t count, std::size_t stride,
                          const cplx* m) {
    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const cplx lo = amps[base + off];
            const cplx hi = amps[base + off + stride];
            amps[base + off] = m[0] * lo + m[1] * hi;
            amps[base + off + stride] = m[2] * lo + m[3] * hi;
        }
    }
}

void apply_phase_masked_scalar(cplx* amps, std::size_t count,
                               std::uint64_t mask, cplx phase) {
    for (std::size_t i = 0; i < count; ++i) {
        if ((i & mask) == mask) amps[i] *= phase;
    }
}

void apply_parity_phase_scalar(cplx* amps, std::size_t count,
                               std::uint64_t zmask, cplx even_phase,
                               cplx odd_phase) {
    for (std::size_t i = 0; i < count; ++i) {
        amps[i] *= (std::popcount(i & zmask) & 1) ? odd_phase : even_phase;
    }
}

double norm_sq_scalar(const cplx* amps, std::size_t count) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return acc;
}

cplx pauli_dot_scalar(const cplx* amps, std::size_t count,
                      std::uint64_t flip_mask, std::uint64_t sign_mask) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        const double s = (std::popcount(i & sign_mask) & 1) ? -1.0 : 1.0;
        acc += s * std::conj(amps[i ^ flip_mask]) * amps[i];
    }
    return acc;
}

} // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table = {
        "scalar",
        &apply_matrix2_scalar,
        &apply_phase_masked_scalar,
        &apply_parity_phase_scalar,
        &norm_sq_scalar,
        &pauli_dot_scalar,
    };
    return table;
}

} // namespace vqeforge::kernels
