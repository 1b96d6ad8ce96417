// Copyright 2026 the linkage authors
// SPDX-License-Identifier: Apache-2.0

#include "linkage/normalize.hpp"

#include <array>
#include <cstdint>
#include <cstdio>

#include "csv.hpp"

namespace linkage {

namespace {

// Decodes the codepoint starting at s[i] and advances i past it. Malformed
// sequences decode one byte at a time as U+FFFD (which folds to a separator).
uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

// Latin-1 Supplement letters, U+00C0..U+00FF. Empty string = separator.
constexpr std::array<const char*, 64> kLatin1Fold = {
    "a",  "a", "a", "a", "a", "a", "ae", "c",  // À Á Â Ã Ä Å Æ Ç
    "e",  "e", "e", "e", "i", "i", "i",  "i",  // È É Ê Ë Ì Í Î Ï
    "d",  "n", "o", "o", "o", "o", "o",  "",   // Ð Ñ Ò Ó Ô Õ Ö ×
    "o",  "u", "u", "u", "u", "y", "th", "ss", // Ø Ù Ú Û Ü Ý Þ ß
    "a",  "a", "a", "a", "a", "a", "ae", "c",  // à á â ã ä å æ ç
    "e",  "e", "e", "e", "i", "i", "i",  "i",  // è é ê ë ì í î ï
    "d",  "n", "o", "o", "o", "o", "o",  "",   // ð ñ ò ó ô õ ö ÷
    "o",  "u", "u", "u", "u", "y", "th", "y",  // ø ù ú û ü ý þ ÿ
};

// Latin Extended-A, U+0100..U+017F.
constexpr std::array<const char*, 128> kLatinExtAFold = {
    "a",  "a",  "a", "a", "a", "a", "c", "c", // Ā ā Ă ă Ą ą Ć ć
    "c",  "c",  "c", "c", "c", "c", "d", "d", // Ĉ ĉ Ċ ċ Č č Ď ď
    "d",  "d",  "e", "e", "e", "e", "e", "e", // Đ đ Ē ē Ĕ ĕ Ė ė
    "e",  "e",  "e", "e", "g", "g", "g", "g", // Ę ę Ě ě Ĝ ĝ Ğ ğ
    "g",  "g",  "g", "g", "h", "h", "h", "h", // Ġ ġ Ģ ģ Ĥ ĥ Ħ ħ
    "i",  "i",  "i", "i", "i", "i", "i", "i", // Ĩ ĩ Ī ī Ĭ ĭ Į į
    "i",  "i",  "ij", "ij", "j", "j", "k", "k", // İ ı Ĳ ĳ Ĵ ĵ Ķ ķ
    "k",  "l",  "l", "l", "l", "l", "l", "l", // ĸ Ĺ ĺ Ļ ļ Ľ ľ Ŀ
    "l",  "l",  "l", "n", "n", "n", "n", "n", // ŀ Ł ł Ń ń Ņ ņ Ň
    "n",  "n",  "n", "n", "o", "o", "o", "o", // ň ŉ Ŋ ŋ Ō ō Ŏ ŏ
    "o",  "o",  "oe", "oe", "r", "r", "r", "r", // Ő ő Œ œ Ŕ ŕ Ŗ ŗ
    "r",  "r",  "s", "s", "s", "s", "s", "s", // Ř ř Ś ś Ŝ ŝ Ş ş
    "s",  "s",  "t", "t", "t", "t", "t", "t", // Š š Ţ ţ Ť ť Ŧ ŧ
    "u",  "u",  "u", "u", "u", "u", "u", "u", // Ũ ũ Ū ū Ŭ ŭ Ů ů
    "u",  "u",  "u", "u", "w", "w", "y", "y", // Ű ű Ų ų Ŵ ŵ Ŷ ŷ
    "y",  "z",  "z", "z", "z", "z", "z", "s", // Ÿ Ź ź Ż ż Ž ž ſ
};

// Appends the folded ASCII form of cp, or nothing if cp is a separator.
void fold_codepoint(uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        char c = static_cast<char>(cp);
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out.push_back(c);
        return;
    }
    if (cp >= 0xC0 && cp <= 0xFF) {
        out += kLatin1Fold[cp - 0xC0];
        return;
    }
    if (cp >= 0x100 && cp <= 0x17F) {
        out += kLatinExtAFold[cp - 0x100];
        return;
    }
    // Everything else (combining marks, symbols, other scripts) separates.
}

int days_in_month(int year, int month) {
    static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        const bool leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
        return leap ? 29 : 28;
    }
    return kDays[month - 1];
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

} // namespace

std::string normalize_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::string chunk;
    std::size_t i = 0;
    bool pending_space = false;
    while (i < raw.size()) {
        chunk.clear();
        fold_codepoint(decode_utf8(raw, i), chunk);
        if (chunk.empty()) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out += chunk;
    }
    return out;
}

void AliasTable::add(std::string_view alias, std::string_view canonical) {
    std::string key = normalize_text(alias);
    std::string value = normalize_text(canonical);
    if (key.empty()) throw ConfigError("alias table: empty alias");
    if (key == value) throw ConfigError("alias table: '" + key + "' maps to itself");
    if (auto it = map_.find(key); it != map_.end() && it->second != value) {
        throw ConfigError("alias table: duplicate alias '" + key + "'");
    }
    // Resolution must finish in one step: a canonical value can never also
    // be an alias key, in either insertion order.
    if (map_.count(value)) {
        throw ConfigError("alias table: canonical '" + value + "' is itself an alias");
    }
    if (canonicals_.count(key)) {
        throw ConfigError("alias table: alias '" + key + "' is already a canonical value");
    }
    map_.emplace(std::move(key), value);
    canonicals_.insert(std::move(value));
}

const std::string& AliasTable::resolve(const std::string& normalized) const {
    auto it = map_.find(normalized);
    return it == map_.end() ? normalized : it->second;
}

AliasTable AliasTable::load_csv(const std::filesystem::path& file) {
    const csv::Table table = csv::read_file(file);
    const int alias_col = table.column("alias");
    const int canon_col = table.column("canonical");
    if (alias_col < 0) throw LoadError(file.string() + ": missing column 'alias'");
    if (canon_col < 0) throw LoadError(file.string() + ": missing column 'canonical'");
    AliasTable out;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const auto width = static_cast<std::size_t>(std::max(alias_col, canon_col)) + 1;
        if (row.size() < width) {
            throw LoadError(file.string() + " row " + std::to_string(r + 2) + ": too few fields");
        }
        try {
            out.add(row[alias_col], row[canon_col]);
        } catch (const ConfigError& e) {
            throw LoadError(file.string() + " row " + std::to_string(r + 2) + ": " + e.what());
        }
    }
    return out;
}

std::string normalize_location(std::string_view raw, const AliasTable& aliases) {
    return aliases.resolve(normalize_text(raw));
}

EventDate parse_date(std::string_view raw) {
    auto fail = [&](const char* msg) {
        return ParseError("invalid date '" + std::string(raw) + "': " + msg);
    };
    std::array<std::string_view, 3> parts{};
    std::size_t n_parts = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= raw.size(); ++i) {
        if (i == raw.size() || raw[i] == '-') {
            if (n_parts == 3) throw fail("expected YYYY, YYYY-MM, or YYYY-MM-DD");
            parts[n_parts++] = raw.substr(start, i - start);
            start = i + 1;
        }
    }
    if (parts[0].size() != 4 || !all_digits(parts[0])) throw fail("year must be four digits");
    EventDate d;
    d.year = std::stoi(std::string(parts[0]));
    if (n_parts >= 2) {
        if (parts[1].empty() || parts[1].size() > 2 || !all_digits(parts[1])) {
            throw fail("month must be one or two digits");
        }
        const int month = std::stoi(std::string(parts[1]));
        if (month < 1 || month > 12) throw fail("month out of range");
        d.month = month;
    }
    if (n_parts == 3) {
        if (parts[2].empty() || parts[2].size() > 2 || !all_digits(parts[2])) {
            throw fail("day must be one or two digits");
        }
        const int day = std::stoi(std::string(parts[2]));
        if (day < 1 || day > days_in_month(d.year, *d.month)) throw fail("day out of range for month");
        d.day = day;
    }
    return d;
}

std::string format_date(const EventDate& d) {
    char buf[16];
    if (d.day) {
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, *d.month, *d.day);
    } else if (d.month) {
        std::snprintf(buf, sizeof buf, "%04d-%02d", d.year, *d.month);
    } else {
        std::snprintf(buf, sizeof buf, "%04d", d.year);
    }
    return buf;
}

} // namespace linkage
