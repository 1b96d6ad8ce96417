// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace linkage {

/// Malformed value in a single field (dates, numbers, labels).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable/invalid input file: missing columns, bad alias table, etc.
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration: bad ruleset, infeasible generator parameters.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace linkage
