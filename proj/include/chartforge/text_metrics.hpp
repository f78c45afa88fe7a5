#pragma once

#include <string>
#include <string_view>

namespace chartforge {

// Bundled font metrics. Text is never measured through system fonts; these
// two advance-width tables are the whole type system, which keeps layout
// and therefore rendered bytes identical across machines.
//
// Widths are in 1/1000 em. "sans" approximates a Helvetica-class face,
// "serif" a slightly wider Times-class face.
inline int glyph_advance_sans(char c) {
    switch (c) {
    case ' ': return 278;
    case 'i': case 'j': case 'l': return 222;
    case 'f': case 't': case 'r': case 'I': return 333;
    case '.': case ',': case ':': case ';': case '\'': case '|': return 250;
    case '(': case ')': case '[': case ']': case '-': return 333;
    case 'm': case 'M': case 'W': return 833;
    case 'w': return 722;
    case '%': return 889;
    case '0': case '1': case '2': case '3': case '4':
    case '5': case '6': case '7': case '8': case '9': return 556;
    case '$': case '#': case '+': case '=': return 556;
    case '/': case '\\': return 278;
    case 'A': case 'B': case 'D': case 'E': case 'H': case 'K': case 'N':
    case 'P': case 'R': case 'S': case 'U': case 'V': case 'X': case 'Y': case 'Z':
        return 667;
    case 'C': case 'G': case 'O': case 'Q': return 722;
    case 'F': case 'J': case 'L': case 'T': return 556;
    default:
        if (c >= 'a' && c <= 'z') return 500;
        return 556;
    }
}

inline int glyph_advance_serif(char c) {
    // Serif face reads a touch wider in the lowercase range.
    int w = glyph_advance_sans(c);
    return w + w / 12;
}

inline double text_width(std::string_view s, double font_size, const std::string& family) {
    long total = 0;
    bool serif = family == "serif";
    for (char c : s) total += serif ? glyph_advance_serif(c) : glyph_advance_sans(c);
    return static_cast<double>(total) * font_size / 1000.0;
}

inline double text_height(double font_size) { return font_size * 1.2; }

} // namespace chartforge
