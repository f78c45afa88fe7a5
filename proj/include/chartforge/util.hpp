#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace chartforge {

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v, int digits = 16) {
    static const char* k = "0123456789abcdef";
    std::string out(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = k[v & 0xf];
        v >>= 4;
    }
    return out;
}

// Locale-free fixed-point formatting. All rendered coordinates and data
// values go through here so output is byte-stable across platforms.
inline std::string fmt_fixed(double v, int decimals) {
    if (!std::isfinite(v)) return "0";
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    long long units = std::llround(v * scale);
    bool neg = units < 0;
    unsigned long long mag = neg ? static_cast<unsigned long long>(-units)
                                 : static_cast<unsigned long long>(units);
    std::string digits = std::to_string(mag);
    std::string out;
    if (decimals == 0) {
        out = digits;
    } else {
        if (digits.size() <= static_cast<std::size_t>(decimals))
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    }
    if (neg && out.find_first_not_of("0.") != std::string::npos) out.insert(0, 1, '-');
    return out;
}

// Coordinate formatting for SVG: two decimals with trailing zeros trimmed.
inline std::string fmt_coord(double v) {
    std::string s = fmt_fixed(v, 2);
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    if (s.empty() || s == "-0") s = "0";
    return s;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::string collapse_spaces(std::string_view s) {
    std::string out;
    bool prev_space = false;
    for (char c : s) {
        bool sp = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (sp && prev_space) continue;
        out += sp ? ' ' : c;
        prev_space = sp;
    }
    return trim(out);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline bool replace_first(std::string& s, std::string_view from, std::string_view to) {
    auto pos = s.find(from);
    if (pos == std::string::npos) return false;
    s.replace(pos, from.size(), to);
    return true;
}

inline void replace_all(std::string& s, std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
}

inline double round_to_precision(double v, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    return std::llround(v * scale) / scale;
}

} // namespace chartforge
