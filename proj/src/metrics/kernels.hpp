// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

// Internal kernel table shared by the dispatcher and the equivalence tests.

#pragma once

#include <cstddef>
#include <cstdint>

namespace linkage::metrics::detail {

using EditDistanceFn = std::size_t (*)(const std::uint8_t* a, std::size_t na,
                                       const std::uint8_t* b, std::size_t nb);
using SimilarityFn = double (*)(const std::uint8_t* a, std::size_t na,
                                const std::uint8_t* b, std::size_t nb);

struct KernelTable {
    EditDistanceFn levenshtein;
    EditDistanceFn osa; // Damerau, optimal string alignment
    SimilarityFn jaro_winkler;
    const char* name;
};

std::size_t levenshtein_scalar(const std::uint8_t* a, std::size_t na,
                               const std::uint8_t* b, std::size_t nb);
std::size_t osa_scalar(const std::uint8_t* a, std::size_t na,
                       const std::uint8_t* b, std::size_t nb);
double jaro_winkler_scalar(const std::uint8_t* a, std::size_t na,
                           const std::uint8_t* b, std::size_t nb);

extern const KernelTable kScalarKernels;

#if defined(__x86_64__) || defined(_M_X64)
#define LINKAGE_HAVE_AVX2_KERNELS 1

// The AVX2 variants cover the short-string envelope the pipeline actually
// hits (see kernels_avx2.cpp) and defer to the scalar kernels outside it.
std::size_t levenshtein_avx2(const std::uint8_t* a, std::size_t na,
                             const std::uint8_t* b, std::size_t nb);
std::size_t osa_avx2(const std::uint8_t* a, std::size_t na,
                     const std::uint8_t* b, std::size_t nb);
double jaro_winkler_avx2(const std::uint8_t* a, std::size_t na,
                         const std::uint8_t* b, std::size_t nb);

extern const KernelTable kAvx2Kernels;

bool host_has_avx2();
#else
#define LINKAGE_HAVE_AVX2_KERNELS 0
#endif

} // namespace linkage::metrics::detail
