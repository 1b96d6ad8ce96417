// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

// Portable reference kernels. The AVX2 lane is equivalence-tested against
// these; keep them straightforward.

#include "kernels.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace linkage::metrics::detail {

namespace {

// Grow-only per-thread scratch keeps the row buffers off the heap's fast
// path without any locking.
std::vector<std::size_t>& row_scratch(std::size_t need) {
    thread_local std::vector<std::size_t> rows;
    if (rows.size() < need) rows.resize(need);
    return rows;
}

std::vector<std::uint8_t>& flag_scratch(std::size_t need) {
    thread_local std::vector<std::uint8_t> flags;
    if (flags.size() < need) flags.resize(need);
    return flags;
}

} // namespace

std::size_t levenshtein_scalar(const std::uint8_t* a, std::size_t na,
                               const std::uint8_t* b, std::size_t nb) {
    if (na == 0) return nb;
    if (nb == 0) return na;
    auto& rows = row_scratch(2 * (nb + 1));
    std::size_t* prev = rows.data();
    std::size_t* curr = rows.data() + nb + 1;
    for (std::size_t j = 0; j <= nb; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= na; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= nb; ++j) {
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + cost});
        }
        std::swap(prev, curr);
    }
    return prev[nb];
}

std::size_t osa_scalar(const std::uint8_t* a, std::size_t na,
                       const std::uint8_t* b, std::size_t nb) {
    if (na == 0) return nb;
    if (nb == 0) return na;
    auto& rows = row_scratch(3 * (nb + 1));
    std::size_t* prev2 = rows.data();
    std::size_t* prev = rows.data() + nb + 1;
    std::size_t* curr = rows.data() + 2 * (nb + 1);
    for (std::size_t j = 0; j <= nb; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= na; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= nb; ++j) {
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            std::size_t best = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
                best = std::min(best, prev2[j - 2] + 1);
            }
            curr[j] = best;
        }
        std::size_t* tmp = prev2;
        prev2 = prev;
        prev = curr;
        curr = tmp;
    }
    return prev[nb];
}

double jaro_winkler_scalar(const std::uint8_t* a, std::size_t na,
                           const std::uint8_t* b, std::size_t nb) {
    if (na == 0 || nb == 0) return na == nb ? 1.0 : 0.0;
    if (na == nb && std::memcmp(a, b, na) == 0) return 1.0;

    const std::size_t longer = std::max(na, nb);
    const std::size_t window = longer / 2 > 0 ? longer / 2 - 1 : 0;

    auto& flags = flag_scratch(na + nb);
    std::uint8_t* a_matched = flags.data();
    std::uint8_t* b_matched = flags.data() + na;
    std::fill(a_matched, a_matched + na, 0);
    std::fill(b_matched, b_matched + nb, 0);

    std::size_t matches = 0;
    for (std::size_t i = 0; i < na; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(nb - 1, i + window);
        for (std::size_t j = lo; j <= hi; ++j) {
            if (!b_matched[j] && a[i] == b[j]) {
                a_matched[i] = 1;
                b_matched[j] = 1;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;

    // Count out-of-order matched characters; each transposition involves two.
    std::size_t half_transpositions = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < na; ++i) {
        if (!a_matched[i]) continue;
        while (!b_matched[k]) ++k;
        if (a[i] != b[k]) ++half_transpositions;
        ++k;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(half_transpositions / 2);
    const double jaro = (m / static_cast<double>(na) + m / static_cast<double>(nb) + (m - t) / m) / 3.0;

    std::size_t prefix = 0;
    const std::size_t prefix_limit = std::min<std::size_t>(4, std::min(na, nb));
    while (prefix < prefix_limit && a[prefix] == b[prefix]) ++prefix;

    return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

const KernelTable kScalarKernels = {
    &levenshtein_scalar,
    &osa_scalar,
    &jaro_winkler_scalar,
    "scalar",
};

} // namespace linkage::metrics::detail
