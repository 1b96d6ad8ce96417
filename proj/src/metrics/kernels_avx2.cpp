// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 kernel variants. The edit distances run the DP along anti-diagonals:
// cells on one diagonal are independent, so a whole diagonal is one vector
// of saturating u8 arithmetic. The envelope is min(len) <= 32 (a diagonal
// fits one vector) and max(len) <= 255 (distances fit u8); longer inputs
// defer to the scalar kernels. Name and location strings sit far inside
// the envelope.

#include "kernels.hpp"

#if LINKAGE_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <algorithm>
#include <cstring>

namespace linkage::metrics::detail {

namespace {

constexpr std::size_t kMaxLen = 255;  // u8 saturation bound
constexpr std::size_t kMaxBand = 32;  // one vector per diagonal

// Input copies carry two lead sentinel bytes so diagonal-edge loads at
// a[i-2] / brev[...] stay in bounds; diagonal buffers carry the same lead
// plus 32 bytes of tail slack for unaligned store overhang.
constexpr int kPad = 2;

struct Scratch {
    std::uint8_t a[kPad + kMaxLen + kMaxBand];
    std::uint8_t brev[kPad + kMaxLen + kMaxBand];
    std::uint8_t diag[5][kPad + kMaxLen + 1 + kMaxBand];
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

inline __m256i load(const std::uint8_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint8_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

bool in_envelope(std::size_t na, std::size_t nb) {
    return std::min(na, nb) <= kMaxBand && std::max(na, nb) <= kMaxLen;
}

// Shared anti-diagonal driver; WithTranspositions selects OSA.
template <bool WithTranspositions>
std::size_t diagonal_edit_distance(const std::uint8_t* a, std::size_t na,
                                   const std::uint8_t* b, std::size_t nb) {
    const int m = static_cast<int>(na);
    const int n = static_cast<int>(nb);

    Scratch& s = scratch();
    std::uint8_t* pa = s.a + kPad;
    std::uint8_t* pb = s.brev + kPad;
    s.a[0] = 0xFE;
    s.a[1] = 0xFE;
    s.brev[0] = 0xFD;
    s.brev[1] = 0xFD;
    std::memcpy(pa, a, na);
    for (int k = 0; k < n; ++k) pb[k] = b[n - 1 - k];

    std::uint8_t* d0 = s.diag[0] + kPad; // rotates: current diagonal
    std::uint8_t* d1 = s.diag[1] + kPad; // previous
    std::uint8_t* d2 = s.diag[2] + kPad; // two back
    std::uint8_t* d3 = s.diag[3] + kPad; // three back (OSA rotation only)
    std::uint8_t* d4 = s.diag[4] + kPad; // four back (OSA transposition)

    d2[0] = 0; // diagonal 0: D[0][0]
    d1[0] = 1; // diagonal 1: D[0][1], D[1][0]
    d1[1] = 1;

    const __m256i ones = _mm256_set1_epi8(1);
    const __m256i ramp = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
                                          17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31);

    for (int d = 2; d <= m + n; ++d) {
        const int lo = std::max(1, d - n);
        const int hi = std::min(d - 1, m);
        if (lo <= hi) {
            // lane k holds cell i = lo + k, j = d - i
            const __m256i va = load(pa + lo - 1);            // a[i-1]
            const __m256i vb = load(pb + (n - d + lo));      // b[j-1]
            const __m256i eq = _mm256_cmpeq_epi8(va, vb);
            const __m256i cost = _mm256_andnot_si256(eq, ones);
            const __m256i sub = _mm256_adds_epu8(load(d2 + lo - 1), cost);
            const __m256i del = _mm256_adds_epu8(load(d1 + lo - 1), ones);
            const __m256i ins = _mm256_adds_epu8(load(d1 + lo), ones);
            __m256i best = _mm256_min_epu8(_mm256_min_epu8(del, ins), sub);

            if constexpr (WithTranspositions) {
                if (d >= 4) {
                    // transposable lanes need i >= 2 and j >= 2
                    const int first = std::max(lo, 2) - lo;
                    const int last = std::min(hi, d - 2) - lo;
                    if (first <= last) {
                        const __m256i swap1 =
                            _mm256_cmpeq_epi8(load(pa + lo - 1), load(pb + (n - d + lo + 1)));
                        const __m256i swap2 =
                            _mm256_cmpeq_epi8(load(pa + lo - 2), load(pb + (n - d + lo)));
                        __m256i lane_ok = _mm256_and_si256(
                            _mm256_cmpgt_epi8(ramp, _mm256_set1_epi8(static_cast<char>(first - 1))),
                            _mm256_cmpgt_epi8(_mm256_set1_epi8(static_cast<char>(last + 1)), ramp));
                        lane_ok = _mm256_and_si256(lane_ok, _mm256_and_si256(swap1, swap2));
                        const __m256i trans = _mm256_adds_epu8(load(d4 + lo - 2), ones);
                        best = _mm256_min_epu8(
                            best, _mm256_blendv_epi8(_mm256_set1_epi8(static_cast<char>(0xFF)),
                                                     trans, lane_ok));
                    }
                }
            }
            store(d0 + lo, best);
        }
        // boundary cells overwrite any store overhang
        if (d <= n) d0[0] = static_cast<std::uint8_t>(d);
        if (d <= m) d0[d] = static_cast<std::uint8_t>(d);

        std::uint8_t* recycled = d4;
        d4 = d3;
        d3 = d2;
        d2 = d1;
        d1 = d0;
        d0 = recycled;
    }
    return d1[m]; // diagonal m+n, cell i = m
}

} // namespace

std::size_t levenshtein_avx2(const std::uint8_t* a, std::size_t na,
                             const std::uint8_t* b, std::size_t nb) {
    if (na == 0) return nb;
    if (nb == 0) return na;
    if (!in_envelope(na, nb)) return levenshtein_scalar(a, na, b, nb);
    return diagonal_edit_distance<false>(a, na, b, nb);
}

std::size_t osa_avx2(const std::uint8_t* a, std::size_t na,
                     const std::uint8_t* b, std::size_t nb) {
    if (na == 0) return nb;
    if (nb == 0) return na;
    if (!in_envelope(na, nb)) return osa_scalar(a, na, b, nb);
    return diagonal_edit_distance<true>(a, na, b, nb);
}

double jaro_winkler_avx2(const std::uint8_t* a, std::size_t na,
                         const std::uint8_t* b, std::size_t nb) {
    if (na == 0 || nb == 0) return na == nb ? 1.0 : 0.0;
    if (std::max(na, nb) > 32) return jaro_winkler_scalar(a, na, b, nb);
    if (na == nb && std::memcmp(a, b, na) == 0) return 1.0;

    alignas(32) std::uint8_t bbuf[32] = {0};
    std::memcpy(bbuf, b, nb);
    const __m256i vb = _mm256_load_si256(reinterpret_cast<const __m256i*>(bbuf));
    const std::uint32_t b_valid = nb == 32 ? ~0u : (1u << nb) - 1;

    const std::size_t longer = std::max(na, nb);
    const std::size_t window = longer / 2 > 0 ? longer / 2 - 1 : 0;

    // Greedy lowest-index assignment, identical to the scalar scan order.
    std::uint8_t matched_a[32];
    std::uint32_t assigned = 0;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < na; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(nb - 1, i + window);
        const std::size_t width = hi - lo + 1;
        const std::uint32_t window_bits = (width == 32 ? ~0u : (1u << width) - 1) << lo;
        const auto hits = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(_mm256_set1_epi8(static_cast<char>(a[i])), vb)));
        const std::uint32_t usable = hits & window_bits & b_valid & ~assigned;
        if (usable) {
            assigned |= usable & (~usable + 1); // lowest set bit
            matched_a[matches++] = a[i];
        }
    }
    if (matches == 0) return 0.0;

    std::size_t half_transpositions = 0;
    std::size_t k = 0;
    for (std::uint32_t bits = assigned; bits; bits &= bits - 1) {
        const int j = __builtin_ctz(bits);
        if (b[j] != matched_a[k++]) ++half_transpositions;
    }

    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(half_transpositions / 2);
    const double jaro = (m / static_cast<double>(na) + m / static_cast<double>(nb) + (m - t) / m) / 3.0;

    std::size_t prefix = 0;
    const std::size_t prefix_limit = std::min<std::size_t>(4, std::min(na, nb));
    while (prefix < prefix_limit && a[prefix] == b[prefix]) ++prefix;

    return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

const KernelTable kAvx2Kernels = {
    &levenshtein_avx2,
    &osa_avx2,
    &jaro_winkler_avx2,
    "avx2",
};

} // namespace linkage::metrics::detail

#endif // LINKAGE_HAVE_AVX2_KERNELS
