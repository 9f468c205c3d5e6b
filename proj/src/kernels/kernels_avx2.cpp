// This code is part of vqeforge.
//
// (C) Copyright 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root
// directory of this source tree or at
// http://www.apache.org/licenses/LICENSE-2.0.

// AVX2 + FMA variants of the state-vector kernels.  One __m256d register
// holds two packed complex doubles [re0, im0, re1, im1].  This translation
// unit is compiled with -mavx2 -mfma; callers must consult avx2_available()
// before dispatching into it.

#include "vqeforge/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <bit>
#include <immintrin.h>

namespace vqeforge::kernels {

namespace {

// (re + i*im) * v where re/im broadcast one scalar complex coefficient over
// both packed complex lanes of v.
inline __m256d cmul_bcast(__m256d v, __m256d re, __m256d im) {
    const __m256d swapped = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(v, re, _mm256_mul_pd(swapped, im));
}

// conj(p) * v per complex lane.
inline __m256d conj_mul(__m256d p, __m256d v) {
    const __m256d p_re = _mm256_movedup_pd(p);
    const __m256d p_im = _mm256_permute_pd(p, 0xF);
    const __m256d v_sw = _mm256_permute_pd(v, 0x5);
    return _mm256_fmsubadd_pd(p_re, v, _mm256_mul_pd(p_im, v_sw));
}

inline __m256d select_mask(bool lane0, bool lane1) {
    const auto m0 = static_cast<long long>(lane0 ? ~0ull : 0ull);
    const auto m1 = static_cast<long long>(lane1 ? ~0ull : 0ull);
    return _mm256_castsi256_pd(_mm256_set_epi64x(m1, m1, m0, m0));
}

void apply_matrix2_avx2(cplx* amps, std::size_t count, std::size_t stride,
                        const cplx* m) {
    const __m256d re00 = _mm256_set1_pd(m[0].real()), im00 = _mm256_set1_pd(m[0].imag());
    const __m256d re01 = _mm256_set1_pd(m[1].real()), im01 = _mm256_set1_pd(m[1].imag());
    const __m256d re10 = _mm256_set1_pd(m[2].real()), im10 = _mm256_set1_pd(m[2].imag());
    const __m256d re11 = _mm256_set1_pd(m[3].real()), im11 = _mm256_set1_pd(m[3].imag());

    auto* p = reinterpret_cast<double*>(amps);

    if (stride == 1) {
        if (count < 4) {
            // Single amplitude pair: too small for the in-register shuffle.
            const cplx lo = amps[0], hi = amps[1];
            amps[0] = m[0] * lo + m[1] * hi;
            amps[1] = m[2] * lo + m[3] * hi;
            return;
        }
        // Pairs are interleaved in memory; deinterleave across 128-bit lanes.
        for (std::size_t i = 0; i < count; i += 4) {
            const __m256d x = _mm256_loadu_pd(p + 2 * i);
            const __m256d y = _mm256_loadu_pd(p + 2 * i + 4);
            const __m256d lo = _mm256_permute2f128_pd(x, y, 0x20);
            const __m256d hi = _mm256_permute2f128_pd(x, y, 0x31);
            const __m256d nlo = _mm256_add_pd(cmul_bcast(lo, re00, im00),
                                              cmul_bcast(hi, re01, im01));
            const __m256d nhi = _mm256_add_pd(cmul_bcast(lo, re10, im10),
                                              cmul_bcast(hi, re11, im11));
            _mm256_storeu_pd(p + 2 * i, _mm256_permute2f128_pd(nlo, nhi, 0x20));
            _mm256_storeu_pd(p + 2 * i + 4, _mm256_permute2f128_pd(nlo, nhi, 0x31));
        }
        return;
    }

    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; off += 2) {
            double* plo = p + 2 * (base + off);
            double* phi = p + 2 * (base + off + stride);
            const __m256d lo = _mm256_loadu_pd(plo);
            const __m256d hi = _mm256_loadu_pd(phi);
            _mm256_storeu_pd(plo, _mm256_add_pd(cmul_bcast(lo, re00, im00),
                                                cmul_bcast(hi, re01, im01)));
            _mm256_storeu_pd(phi, _mm256_add_pd(cmul_bcast(lo, re10, im10),
                                                cmul_bcast(hi, re11, im11)));
        }
    }
}

void apply_phase_masked_avx2(cplx* amps, std::size_t count, std::uint64_t mask,
                             cplx phase) {
    if (count < 2) {
        if ((0 & mask) == mask) amps[0] *= phase;
        return;
    }
    const __m256d re = _mm256_set1_pd(phase.real());
    const __m256d im = _mm256_set1_pd(phase.imag());
    auto* p = reinterpret_cast<double*>(amps);
    for (std::size_t i = 0; i < count; i += 2) {
        const bool hit0 = (i & mask) == mask;
        const bool hit1 = ((i + 1) & mask) == mask;
        if (!hit0 && !hit1) continue;
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        const __m256d prod = cmul_bcast(v, re, im);
        _mm256_storeu_pd(p + 2 * i,
                         _mm256_blendv_pd(v, prod, select_mask(hit0, hit1)));
    }
}

void apply_parity_phase_avx2(cplx* amps, std::size_t count, std::uint64_t zmask,
                             cplx even_phase, cplx odd_phase) {
    if (count < 2) {
        amps[0] *= even_phase;
        return;
    }
    const __m256d ere = _mm256_set1_pd(even_phase.real());
    const __m256d eim = _mm256_set1_pd(even_phase.imag());
    const __m256d ore = _mm256_set1_pd(odd_phase.real());
    const __m256d oim = _mm256_set1_pd(odd_phase.imag());
    auto* p = reinterpret_cast<double*>(amps);
    for (std::size_t i = 0; i < count; i += 2) {
        const bool odd0 = std::popcount(i & zmask) & 1;
        const bool odd1 = std::popcount((i + 1) & zmask) & 1;
        const __m256d sel = select_mask(odd0, odd1);
        const __m256d re = _mm256_blendv_pd(ere, ore, sel);
        const __m256d im = _mm256_blendv_pd(eim, oim, sel);
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul_bcast(v, re, im));
    }
}

double norm_sq_avx2(const cplx* amps, std::size_t count) {
    if (count < 2) return std::norm(amps[0]);
    const auto* p = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < count; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

cplx pauli_dot_avx2(const cplx* amps, std::size_t count,
                    std::uint64_t flip_mask, std::uint64_t sign_mask) {
    if (count < 2 || (flip_mask & 1)) {
        // Partner index breaks packed-pair contiguity; use the plain loop.
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < count; ++i) {
            const double s = (std::popcount(i & sign_mask) & 1) ? -1.0 : 1.0;
            acc += s * std::conj(amps[i ^ flip_mask]) * amps[i];
        }
        return acc;
    }
    const auto* p = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    const __m256d plus = _mm256_set1_pd(1.0);
    const __m256d minus = _mm256_set1_pd(-1.0);
    for (std::size_t i = 0; i < count; i += 2) {
        const bool odd0 = std::popcount(i & sign_mask) & 1;
        const bool odd1 = std::popcount((i + 1) & sign_mask) & 1;
        const __m256d sign = _mm256_blendv_pd(plus, minus, select_mask(odd0, odd1));
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        const __m256d partner = _mm256_loadu_pd(p + 2 * (i ^ flip_mask));
        acc = _mm256_fmadd_pd(conj_mul(partner, v), sign, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return {lanes[0] + lanes[2], lanes[1] + lanes[3]};
}

} // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table = {
        "avx2",
        &apply_matrix2_avx2,
        &apply_phase_masked_avx2,
        &apply_parity_phase_avx2,
        &norm_sq_avx2,
        &pauli_dot_avx2,
    };
    return table;
}

} // namespace vqeforge::kernels

#else // non-x86 fallback

namespace vqeforge::kernels {

const KernelTable& avx2_kernels() { return scalar_kernels(); }

} // namespace vqeforge::kernels

#endif
