#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "chartforge/answer.hpp"
#include "chartforge/color.hpp"
#include "chartforge/util.hpp"

namespace chartforge {

// Result of normalizing a raw model answer against an expected kind.
struct Normalized {
    std::string text;          // canonical text form
    bool has_number = false;
    double number = 0;
    std::vector<double> numbers; // list kinds
    bool parse_failed = false;   // expected a number, none found
};

namespace norm_detail {

inline std::string num_text(double v) {
    char buf[48];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

inline std::string strip_outer(const std::string& in) {
    std::string s = trim(in);
    while (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                             (s.front() == '\'' && s.back() == '\'')))
        s = trim(s.substr(1, s.size() - 2));
    while (!s.empty() && (s.back() == '.' || s.back() == '?' || s.back() == '!' ||
                          s.back() == ';' || s.back() == ':' || s.back() == ','))
        s.pop_back();
    return trim(s);
}

inline std::string strip_qualifiers(const std::string& in) {
    std::string s = in;
    static const char* prefixes[] = {"the answer is", "answer:", "it is", "it's",
                                     "approximately", "approx.", "approx", "about",
                                     "around", "roughly", "nearly", "almost", "~"};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const char* p : prefixes) {
            std::string pref(p);
            if (s.size() > pref.size() && s.compare(0, pref.size(), pref) == 0 &&
                (s[pref.size()] == ' ' || pref.back() == '~' || pref.back() == ':')) {
                s = trim(s.substr(pref.size()));
                changed = true;
            }
        }
    }
    return s;
}

// The documented unit suffix list stripped from numeric answers.
inline const std::vector<std::string>& unit_suffixes() {
    static const std::vector<std::string> units = {
        "%",       "percent", "percentage points", "pp",      "usd",    "dollars", "dollar",
        "eur",     "euros",   "gbp",     "pounds",  "yen",     "points", "pts",
        "kg",      "g",       "tons",    "tonnes",  "km",      "miles",  "mi",
        "m",       "cm",      "mm",      "liters",  "litres",  "l",      "gallons",
        "hours",   "hrs",     "minutes", "mins",    "seconds", "secs",   "days",
        "weeks",   "months",  "years",   "people",  "units",   "items",  "degrees",
        "celsius", "fahrenheit", "c",    "f",       "gw",      "gwh",    "twh",
        "mbps",    "gb",      "teu",     "ppm",
    };
    return units;
}

// Parses a numeric token at position i (after currency/sign handling),
// honoring thousands separators and magnitude words.
inline bool extract_number(const std::string& s, double& out) {
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if ((c >= '0' && c <= '9') || c == '-' || c == '+' ||
            (c == '.' && i + 1 < s.size() && s[i + 1] >= '0' && s[i + 1] <= '9')) {
            // Candidate start; also allow a currency symbol directly before.
            std::string token;
            std::size_t j = i;
            if (s[j] == '-' || s[j] == '+') {
                token += s[j];
                ++j;
            }
            bool any_digit = false;
            while (j < s.size()) {
                char d = s[j];
                if (d >= '0' && d <= '9') {
                    token += d;
                    any_digit = true;
                    ++j;
                } else if (d == ',' && j + 3 < s.size() + 1 && j + 1 < s.size() &&
                           s[j + 1] >= '0' && s[j + 1] <= '9') {
                    ++j; // thousands separator
                } else if (d == '.') {
                    token += d;
                    ++j;
                } else if ((d == 'e' || d == 'E') && j + 1 < s.size() &&
                           (std::isdigit(static_cast<unsigned char>(s[j + 1])) ||
                            s[j + 1] == '-' || s[j + 1] == '+')) {
                    token += d;
                    ++j;
                    if (s[j] == '-' || s[j] == '+') {
                        token += s[j];
                        ++j;
                    }
                } else {
                    break;
                }
            }
            if (!any_digit) {
                ++i;
                continue;
            }
            out = std::strtod(token.c_str(), nullptr);
            // Magnitude suffix directly after the token or as the next word.
            std::string rest = trim(s.substr(j));
            if (!rest.empty()) {
                if (rest[0] == 'k' && (rest.size() == 1 || !std::isalpha(static_cast<unsigned char>(rest[1]))))
                    out *= 1e3;
                else if (rest.rfind("thousand", 0) == 0)
                    out *= 1e3;
                else if (rest.rfind("million", 0) == 0)
                    out *= 1e6;
                else if (rest.rfind("billion", 0) == 0 || rest.rfind("bn", 0) == 0)
                    out *= 1e9;
            }
            return true;
        }
        ++i;
    }
    // Word numbers cover small counts.
    static const std::map<std::string, double> words = {
        {"zero", 0}, {"one", 1}, {"two", 2},   {"three", 3}, {"four", 4},
        {"five", 5}, {"six", 6}, {"seven", 7}, {"eight", 8}, {"nine", 9},
        {"ten", 10}, {"eleven", 11}, {"twelve", 12}, {"none", 0}};
    std::string first = s.substr(0, s.find(' '));
    auto it = words.find(first);
    if (it != words.end()) {
        out = it->second;
        return true;
    }
    return false;
}

inline std::string canonical_color(const std::string& in) {
    std::string s = collapse_spaces(in);
    // Drop filler suffixes.
    for (const char* suffix : {" color", " colored", " colour", " shade"}) {
        std::string suf(suffix);
        if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0)
            s = trim(s.substr(0, s.size() - suf.size()));
    }
    replace_all(s, "grey", "gray");
    replace_all(s, "lightblue", "light blue");
    replace_all(s, "lightgreen", "light green");
    replace_all(s, "lightred", "light red");
    replace_all(s, "lightgray", "light gray");
    replace_all(s, "darkblue", "dark blue");
    replace_all(s, "darkgreen", "dark green");
    replace_all(s, "darkred", "dark red");
    replace_all(s, "darkgray", "dark gray");
    static const std::map<std::string, std::string> synonyms = {
        {"navy blue", "navy"},     {"dark navy", "navy"},   {"cyan", "aqua"},
        {"turquoise", "aqua"},     {"magenta", "fuchsia"},  {"pink", "fuchsia"},
        {"violet", "purple"},      {"golden", "yellow"},    {"gold", "yellow"},
        {"orange red", "red"},     {"crimson", "red"},      {"scarlet", "red"},
        {"forest green", "dark green"}, {"sky blue", "light blue"},
        {"light grey", "light gray"},   {"charcoal", "dark gray"},
    };
    auto it = synonyms.find(s);
    if (it != synonyms.end()) return it->second;
    return s;
}

inline std::string canonical_style(const std::string& in) {
    std::string s = collapse_spaces(in);
    for (const char* suffix : {" line", " lines", " border", " style", " stroke"}) {
        std::string suf(suffix);
        if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0)
            s = trim(s.substr(0, s.size() - suf.size()));
    }
    if (s == "dash" || s == "dashes") return "dashed";
    if (s == "a solid" || s == "solidly") return "solid";
    return s;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::string work = s;
    replace_all(work, " and ", ",");
    replace_all(work, ";", ",");
    std::vector<std::string> parts;
    for (auto& piece : split(work, ',')) {
        std::string t = trim(piece);
        if (!t.empty()) parts.push_back(t);
    }
    return parts;
}

} // namespace norm_detail

// Normalizes a raw answer toward the expected kind: trims and case-folds,
// strips qualifiers, currency and unit suffixes, parses numbers with
// thousands separators, resolves color synonyms onto the canonical
// vocabulary and splits list answers. Idempotent.
inline Normalized normalize_answer(const std::string& raw, AnswerKind expected) {
    using namespace norm_detail;
    Normalized out;
    std::string s = to_lower(strip_outer(raw));
    s = strip_qualifiers(s);
    s = strip_outer(s);

    switch (expected) {
    case AnswerKind::Number:
    case AnswerKind::Count: {
        double v = 0;
        if (extract_number(s, v)) {
            out.has_number = true;
            out.number = v;
            out.text = num_text(v);
        } else {
            out.parse_failed = true;
            out.text = s;
        }
        break;
    }
    case AnswerKind::NumberList: {
        bool all_ok = true;
        std::vector<std::string> texts;
        for (const auto& piece : split_list(s)) {
            double v = 0;
            if (extract_number(piece, v)) {
                out.numbers.push_back(v);
                texts.push_back(num_text(v));
            } else {
                all_ok = false;
            }
        }
        if (out.numbers.empty() || !all_ok) out.parse_failed = out.numbers.empty();
        out.text = join(texts, ", ");
        break;
    }
    case AnswerKind::ColorName:
        out.text = canonical_color(s);
        break;
    case AnswerKind::StyleName:
        out.text = canonical_style(s);
        break;
    case AnswerKind::YesNo: {
        std::string first = s.substr(0, s.find(' '));
        if (first == "yes" || first == "y" || first == "yeah" || first == "true" ||
            first == "correct")
            out.text = "yes";
        else if (first == "no" || first == "n" || first == "false" || first == "incorrect")
            out.text = "no";
        else
            out.text = s;
        break;
    }
    default:
        out.text = collapse_spaces(s);
        break;
    }
    return out;
}

} // namespace chartforge
