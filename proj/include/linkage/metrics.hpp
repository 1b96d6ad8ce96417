// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

namespace linkage::metrics {

/// Minimum number of single-character insertions, deletions, and
/// substitutions turning a into b. Byte-oriented; callers pass normalized
/// (ASCII) text.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Edit distance where an adjacent transposition also counts as one edit.
/// This is the optimal-string-alignment variant: no substring is edited
/// twice, so e.g. ("ca","abc") costs 3, not the unrestricted Damerau 2.
std::size_t damerau_levenshtein(std::string_view a, std::string_view b);

/// Jaro similarity with the Winkler boost (common prefix capped at 4,
/// scaling 0.1). Two empty strings compare as 1.0, one empty as 0.0.
double jaro_winkler(std::string_view a, std::string_view b);

/// 1 - levenshtein(a,b) / max(|a|,|b|); both empty compare as 1.0.
double normalized_edit_similarity(std::string_view a, std::string_view b);

/// Kernel backends. The scalar kernels are the portable reference; the AVX2
/// variants are selected automatically on hosts that support them and are
/// value-identical (equivalence-tested against the scalar lane).
enum class Backend { scalar, avx2 };

/// Backend currently in use. Honors the LINKAGE_KERNEL environment variable
/// ("scalar" or "avx2") on first use.
Backend active_backend();

/// Forces a backend. Returns false (and changes nothing) if the host cannot
/// run it.
bool set_backend(Backend backend);

bool backend_supported(Backend backend);

const char* backend_name(Backend backend);

} // namespace linkage::metrics
