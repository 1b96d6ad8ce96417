// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "linkage/errors.hpp"

namespace linkage {

/// Event date at whatever precision the source supplies. Year is always
/// present; a day is only stored together with its month.
struct EventDate {
    int year = 0;
    std::optional<int> month;
    std::optional<int> day;

    friend bool operator==(const EventDate&, const EventDate&) = default;
};

/// (year, month-or-0, day-or-0) sort key.
inline auto date_sort_key(const EventDate& d) {
    return std::tuple<int, int, int>(d.year, d.month.value_or(0), d.day.value_or(0));
}

/// Canonical text form used everywhere downstream: lowercase ASCII letters
/// and digits separated by single spaces. Accented Latin letters fold to
/// their base letters (É→e, œ→oe, ß→ss, ...); punctuation acts as a
/// separator; anything unfoldable is dropped as a separator too.
/// Idempotent: normalize_text(normalize_text(x)) == normalize_text(x).
std::string normalize_text(std::string_view raw);

/// Name cleaning is plain text normalization.
inline std::string normalize_name(std::string_view raw) { return normalize_text(raw); }

/// One-step alias resolution for location strings. Keys and values are kept
/// normalized; a canonical value may never itself be an alias key (checked
/// at load, so resolution never needs to chain).
class AliasTable {
public:
    AliasTable() = default;

    /// CSV with header `alias,canonical`. Throws LoadError on unreadable
    /// file, missing column, or a canonical value that is also an alias.
    static AliasTable load_csv(const std::filesystem::path& file);

    /// Adds one mapping; both sides are normalized first. Throws ConfigError
    /// if the table would violate the single-step property.
    void add(std::string_view alias, std::string_view canonical);

    /// Maps a normalized value to its canonical form, or returns it unchanged.
    const std::string& resolve(const std::string& normalized) const;

    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }

private:
    std::unordered_map<std::string, std::string> map_;
    std::unordered_set<std::string> canonicals_;
};

/// Text normalization plus alias resolution.
std::string normalize_location(std::string_view raw, const AliasTable& aliases);

/// Accepts "YYYY", "YYYY-MM", "YYYY-MM-DD". Throws ParseError naming the
/// offending field (month out of range, day invalid for the month, ...).
EventDate parse_date(std::string_view raw);

/// Inverse of parse_date for valid dates: parse_date(format_date(d)) == d.
std::string format_date(const EventDate& d);

} // namespace linkage
