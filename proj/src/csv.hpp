// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace linkage::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column position by header name, or -1.
    int column(std::string_view name) const;
};

/// RFC-4180-ish reader: comma separator, double-quote quoting with doubled
/// escapes, LF or CRLF row ends, optional trailing newline. Rows may be
/// ragged; callers validate width. Throws LoadError on unreadable files or
/// an unterminated quote.
Table read_file(const std::filesystem::path& file);

/// Parses one in-memory document (used by tests and read_file).
Table parse(std::string_view text, const std::string& origin);

/// Quotes a field iff it contains a comma, quote, or newline.
std::string escape(std::string_view field);

/// Serializes one row, no trailing newline.
std::string format_row(const std::vector<std::string>& fields);

} // namespace linkage::csv
