#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include <zlib.h>

#include "chartforge/chart.hpp"
#include "chartforge/layout.hpp"
#include "chartforge/text_metrics.hpp"

namespace chartforge {

// Thin raster adapter behind the SVG core: paints the LayoutModel into an
// RGB buffer and encodes a PNG. Text uses a built-in segment-stroke font
// (blocky but legible), so no system font is ever touched.

namespace raster_detail {

class Canvas {
public:
    Canvas(int w, int h, Rgb bg) : w_(w), h_(h), px_(static_cast<std::size_t>(w * h) * 3) {
        for (int i = 0; i < w * h; ++i) set_index(i, bg);
    }

    int width() const { return w_; }
    int height() const { return h_; }
    const std::vector<std::uint8_t>& pixels() const { return px_; }

    void set(int x, int y, Rgb c) {
        if (x < 0 || y < 0 || x >= w_ || y >= h_) return;
        set_index(y * w_ + x, c);
    }

    void fill_rect(double x0, double y0, double w, double h, Rgb c) {
        int xa = static_cast<int>(std::floor(x0)), xb = static_cast<int>(std::ceil(x0 + w));
        int ya = static_cast<int>(std::floor(y0)), yb = static_cast<int>(std::ceil(y0 + h));
        for (int y = ya; y < yb; ++y)
            for (int x = xa; x < xb; ++x) set(x, y, c);
    }

    void line(double x1, double y1, double x2, double y2, double width, Rgb c) {
        double half = width / 2.0;
        int xa = static_cast<int>(std::floor(std::min(x1, x2) - half - 1));
        int xb = static_cast<int>(std::ceil(std::max(x1, x2) + half + 1));
        int ya = static_cast<int>(std::floor(std::min(y1, y2) - half - 1));
        int yb = static_cast<int>(std::ceil(std::max(y1, y2) + half + 1));
        double dx = x2 - x1, dy = y2 - y1;
        double len2 = dx * dx + dy * dy;
        for (int y = ya; y <= yb; ++y)
            for (int x = xa; x <= xb; ++x) {
                double t = len2 == 0 ? 0
                                     : ((x - x1) * dx + (y - y1) * dy) / len2;
                t = std::min(1.0, std::max(0.0, t));
                double px = x1 + t * dx, py = y1 + t * dy;
                double d2 = (x - px) * (x - px) + (y - py) * (y - py);
                if (d2 <= half * half) set(x, y, c);
            }
    }

    void dashed_line(double x1, double y1, double x2, double y2, double width, Rgb c) {
        double dx = x2 - x1, dy = y2 - y1;
        double len = std::sqrt(dx * dx + dy * dy);
        if (len < 1e-9) return;
        double on = 7, off = 5, pos = 0;
        while (pos < len) {
            double end = std::min(len, pos + on);
            line(x1 + dx * pos / len, y1 + dy * pos / len, x1 + dx * end / len,
                 y1 + dy * end / len, width, c);
            pos = end + off;
        }
    }

    void fill_circle(double cx, double cy, double r, Rgb c) {
        int xa = static_cast<int>(cx - r - 1), xb = static_cast<int>(cx + r + 1);
        int ya = static_cast<int>(cy - r - 1), yb = static_cast<int>(cy + r + 1);
        for (int y = ya; y <= yb; ++y)
            for (int x = xa; x <= xb; ++x)
                if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) set(x, y, c);
    }

    void fill_sector(double cx, double cy, double r, double start_deg, double end_deg, Rgb c) {
        int xa = static_cast<int>(cx - r - 1), xb = static_cast<int>(cx + r + 1);
        int ya = static_cast<int>(cy - r - 1), yb = static_cast<int>(cy + r + 1);
        for (int y = ya; y <= yb; ++y)
            for (int x = xa; x <= xb; ++x) {
                double dx = x - cx, dy = y - cy;
                if (dx * dx + dy * dy > r * r) continue;
                double a = std::atan2(dx, -dy) * 180.0 / M_PI; // 0 = 12 o'clock, cw
                if (a < 0) a += 360.0;
                if (a >= start_deg && a < end_deg) set(x, y, c);
            }
    }

private:
    void set_index(int i, Rgb c) {
        px_[static_cast<std::size_t>(i) * 3] = c.r;
        px_[static_cast<std::size_t>(i) * 3 + 1] = c.g;
        px_[static_cast<std::size_t>(i) * 3 + 2] = c.b;
    }

    int w_, h_;
    std::vector<std::uint8_t> px_;
};

// Segment-stroke font: each glyph is a set of strokes in a unit cell
// (x right, y down). Enough for titles, labels and numbers.
struct Stroke {
    double x1, y1, x2, y2;
};

inline const std::vector<Stroke>& glyph_strokes(char ch) {
    static const Stroke A{0, 0, 1, 0}, B{1, 0, 1, 0.5}, C{1, 0.5, 1, 1}, D{0, 1, 1, 1},
        E{0, 0.5, 0, 1}, F{0, 0, 0, 0.5}, G1{0, 0.5, 0.5, 0.5}, G2{0.5, 0.5, 1, 0.5},
        H{0, 0, 0.5, 0.5}, I{0.5, 0, 0.5, 0.5}, J{1, 0, 0.5, 0.5}, K{0.5, 0.5, 0, 1},
        L{0.5, 0.5, 0.5, 1}, M{0.5, 0.5, 1, 1}, V1{0, 0, 0.5, 1}, V2{1, 0, 0.5, 1};
    static const std::vector<Stroke> empty;
    static const std::vector<std::vector<Stroke>> digits = {
        {A, B, C, D, E, F},        // 0
        {B, C},                    // 1
        {A, B, G1, G2, E, D},      // 2
        {A, B, C, D, G2},          // 3
        {F, G1, G2, B, C},         // 4
        {A, F, G1, G2, C, D},      // 5
        {A, F, E, D, C, G1, G2},   // 6
        {A, B, C},                 // 7
        {A, B, C, D, E, F, G1, G2},// 8
        {A, B, C, D, F, G1, G2},   // 9
    };
    static const std::vector<std::vector<Stroke>> letters = {
        {A, B, C, E, F, G1, G2},    // A
        {A, B, C, D, I, L, G2},     // B
        {A, D, E, F},               // C
        {A, B, C, D, I, L},         // D
        {A, D, E, F, G1, G2},       // E
        {A, E, F, G1},              // F
        {A, C, D, E, F, G2},        // G
        {B, C, E, F, G1, G2},       // H
        {A, D, I, L},               // I
        {B, C, D, E},               // J
        {E, F, G1, J, M},           // K
        {D, E, F},                  // L
        {B, C, E, F, H, J},         // M
        {B, C, E, F, H, M},         // N
        {A, B, C, D, E, F},         // O
        {A, B, E, F, G1, G2},       // P
        {A, B, C, D, E, F, M},      // Q
        {A, B, E, F, G1, G2, M},    // R
        {A, C, D, F, G1, G2},       // S
        {A, I, L},                  // T
        {B, C, D, E, F},            // U
        {V1, V2},                   // V
        {B, C, E, F, K, M},         // W
        {H, J, K, M},               // X
        {H, J, L},                  // Y
        {A, D, J, K},               // Z
    };
    static const std::vector<Stroke> dash = {G1, G2};
    static const std::vector<Stroke> dot = {{0.4, 0.9, 0.6, 0.9}, {0.4, 1.0, 0.6, 1.0}};
    static const std::vector<Stroke> comma = {{0.5, 0.85, 0.4, 1.1}};
    static const std::vector<Stroke> slash = {J, K};
    static const std::vector<Stroke> percent = {
        J, K, {0.1, 0.05, 0.3, 0.2}, {0.7, 0.8, 0.9, 0.95}};
    static const std::vector<Stroke> lparen = {{0.7, 0, 0.4, 0.3}, {0.4, 0.3, 0.4, 0.7},
                                               {0.4, 0.7, 0.7, 1}};
    static const std::vector<Stroke> rparen = {{0.3, 0, 0.6, 0.3}, {0.6, 0.3, 0.6, 0.7},
                                               {0.6, 0.7, 0.3, 1}};
    static const std::vector<Stroke> quote = {{0.5, 0, 0.5, 0.2}};
    static const std::vector<Stroke> colon = {{0.45, 0.3, 0.55, 0.3}, {0.45, 0.8, 0.55, 0.8}};
    static const std::vector<Stroke> plus = {G1, G2, I, L};
    static const std::vector<Stroke> amp = {A, D, E, F, G1, M}; // crude
    static const std::vector<Stroke> unknown = {G1, G2};

    if (ch >= '0' && ch <= '9') return digits[static_cast<std::size_t>(ch - '0')];
    if (ch >= 'A' && ch <= 'Z') return letters[static_cast<std::size_t>(ch - 'A')];
    if (ch >= 'a' && ch <= 'z') return letters[static_cast<std::size_t>(ch - 'a')];
    switch (ch) {
    case ' ': return empty;
    case '-': return dash;
    case '.': return dot;
    case ',': return comma;
    case '/': return slash;
    case '%': return percent;
    case '(': return lparen;
    case ')': return rparen;
    case '\'': return quote;
    case ':': return colon;
    case '+': return plus;
    case '&': return amp;
    default: return unknown;
    }
}

enum class Anchor { Start, Middle, End };

inline void draw_text(Canvas& canvas, double x, double y_baseline, const std::string& text,
                      double size, Anchor anchor, Rgb color, const std::string& family) {
    double total = text_width(text, size, family);
    double cursor = x;
    if (anchor == Anchor::Middle) cursor -= total / 2;
    if (anchor == Anchor::End) cursor -= total;
    double cap = size * 0.66;
    double stroke_w = std::max(1.0, size / 9.0);
    bool serif = family == "serif";
    for (char ch : text) {
        double advance =
            (serif ? glyph_advance_serif(ch) : glyph_advance_sans(ch)) * size / 1000.0;
        double cell_w = advance * 0.72;
        double gx = cursor + (advance - cell_w) / 2;
        double gy = y_baseline - cap;
        for (const Stroke& s : glyph_strokes(ch))
            canvas.line(gx + s.x1 * cell_w, gy + s.y1 * cap, gx + s.x2 * cell_w,
                        gy + s.y2 * cap, stroke_w, color);
        cursor += advance;
    }
}

inline void push_u32(std::string& out, std::uint32_t v) {
    out += static_cast<char>((v >> 24) & 0xff);
    out += static_cast<char>((v >> 16) & 0xff);
    out += static_cast<char>((v >> 8) & 0xff);
    out += static_cast<char>(v & 0xff);
}

inline void push_chunk(std::string& out, const char type[4], const std::string& data) {
    push_u32(out, static_cast<std::uint32_t>(data.size()));
    std::string body(type, 4);
    body += data;
    out += body;
    push_u32(out, static_cast<std::uint32_t>(
                      crc32(0, reinterpret_cast<const Bytef*>(body.data()),
                            static_cast<uInt>(body.size()))));
}

inline std::string encode_png(const Canvas& canvas) {
    const int w = canvas.width(), h = canvas.height();
    std::string raw;
    raw.reserve(static_cast<std::size_t>(h) * (static_cast<std::size_t>(w) * 3 + 1));
    for (int y = 0; y < h; ++y) {
        raw += '\0'; // filter type 0
        raw.append(reinterpret_cast<const char*>(canvas.pixels().data() +
                                                 static_cast<std::size_t>(y) * w * 3),
                   static_cast<std::size_t>(w) * 3);
    }
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<Bytef> compressed(bound);
    if (compress2(compressed.data(), &bound, reinterpret_cast<const Bytef*>(raw.data()),
                  static_cast<uLong>(raw.size()), 6) != Z_OK)
        fail(Errc::io, "png compression failed");

    std::string out("\x89PNG\r\n\x1a\n", 8);
    std::string ihdr;
    push_u32(ihdr, static_cast<std::uint32_t>(w));
    push_u32(ihdr, static_cast<std::uint32_t>(h));
    ihdr += static_cast<char>(8); // bit depth
    ihdr += static_cast<char>(2); // color type: truecolor
    ihdr += '\0';
    ihdr += '\0';
    ihdr += '\0';
    push_chunk(out, "IHDR", ihdr);
    push_chunk(out, "IDAT",
               std::string(reinterpret_cast<const char*>(compressed.data()), bound));
    push_chunk(out, "IEND", "");
    return out;
}

} // namespace raster_detail

inline std::string render_png(const ChartSpec& spec) {
    using namespace raster_detail;
    LayoutModel m = layout(spec);

    const Rgb ink{40, 40, 40};
    const Rgb axis{64, 64, 64};
    const Rgb grid{214, 214, 214};
    Canvas canvas(spec.canvas_w, spec.canvas_h, spec.background);

    const bool pie = spec.chart_type == ChartType::Pie;
    const bool hbar = spec.chart_type == ChartType::HorizontalBar;
    double tick_font = std::min(11.0, static_cast<double>(spec.font_size));
    const std::string& family = spec.font_family;

    if (!pie && spec.grid_lines) {
        for (const auto& t : m.y_ticks) {
            if (hbar)
                canvas.line(t.px, m.plot.y, t.px, m.plot.bottom(), 1, grid);
            else
                canvas.line(m.plot.x, t.px, m.plot.right(), t.px, 1, grid);
        }
    }

    if (!pie) {
        if (spec.x_axis_visible)
            canvas.line(m.plot.x, m.plot.bottom(), m.plot.right(), m.plot.bottom(), 1.4, axis);
        if (spec.y_axis_visible)
            canvas.line(m.plot.x, m.plot.y, m.plot.x, m.plot.bottom(), 1.4, axis);
        for (const auto& t : hbar ? m.y_ticks : m.x_ticks)
            draw_text(canvas, t.px, m.plot.bottom() + 4 + tick_font, t.label, tick_font,
                      Anchor::Middle, ink, family);
        for (const auto& t : hbar ? m.x_ticks : m.y_ticks)
            draw_text(canvas, m.plot.x - 8, t.px + tick_font * 0.3, t.label, tick_font,
                      Anchor::End, ink, family);
    }

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const auto& s = spec.series[si];
        const auto& g = m.series[si];
        switch (spec.chart_type) {
        case ChartType::Line:
            for (std::size_t i = 1; i < g.points.size(); ++i) {
                if (s.line_style == LineStyle::Dashed)
                    canvas.dashed_line(g.points[i - 1].x, g.points[i - 1].y, g.points[i].x,
                                       g.points[i].y, spec.line_width, s.rgb);
                else
                    canvas.line(g.points[i - 1].x, g.points[i - 1].y, g.points[i].x,
                                g.points[i].y, spec.line_width, s.rgb);
            }
            for (const auto& p : g.points)
                canvas.fill_circle(p.x, p.y, 1.6 + spec.line_width, s.rgb);
            break;
        case ChartType::Bar:
        case ChartType::HorizontalBar:
            for (const auto& b : g.bars) {
                canvas.fill_rect(b.x, b.y, b.w, b.h, s.rgb);
                if (s.border == BorderType::Solid) {
                    canvas.line(b.x, b.y, b.right(), b.y, 1, Rgb{32, 32, 32});
                    canvas.line(b.x, b.bottom(), b.right(), b.bottom(), 1, Rgb{32, 32, 32});
                    canvas.line(b.x, b.y, b.x, b.bottom(), 1, Rgb{32, 32, 32});
                    canvas.line(b.right(), b.y, b.right(), b.bottom(), 1, Rgb{32, 32, 32});
                } else if (s.border == BorderType::Dashed) {
                    canvas.dashed_line(b.x, b.y, b.right(), b.y, 1, Rgb{32, 32, 32});
                    canvas.dashed_line(b.x, b.bottom(), b.right(), b.bottom(), 1,
                                       Rgb{32, 32, 32});
                    canvas.dashed_line(b.x, b.y, b.x, b.bottom(), 1, Rgb{32, 32, 32});
                    canvas.dashed_line(b.right(), b.y, b.right(), b.bottom(), 1,
                                       Rgb{32, 32, 32});
                }
            }
            break;
        case ChartType::Pie:
            canvas.fill_sector(m.pie_cx, m.pie_cy, m.pie_r, g.sector_start_deg,
                               g.sector_end_deg, s.rgb);
            break;
        case ChartType::Scatter: {
            double r = 3.0 + spec.line_width;
            for (const auto& p : g.points) {
                switch (s.marker) {
                case Marker::Circle: canvas.fill_circle(p.x, p.y, r, s.rgb); break;
                case Marker::Square: canvas.fill_rect(p.x - r, p.y - r, 2 * r, 2 * r, s.rgb); break;
                case Marker::Triangle:
                    for (double row = -r; row <= r; row += 0.5) {
                        double frac = (row + r) / (2 * r);
                        canvas.line(p.x - frac * r, p.y + row, p.x + frac * r, p.y + row, 1,
                                    s.rgb);
                    }
                    break;
                case Marker::Diamond:
                    for (double row = -r; row <= r; row += 0.5) {
                        double frac = 1.0 - std::fabs(row) / r;
                        canvas.line(p.x - frac * r, p.y + row, p.x + frac * r, p.y + row, 1,
                                    s.rgb);
                    }
                    break;
                }
            }
            break;
        }
        }
    }

    if (spec.value_labels_visible) {
        for (std::size_t si = 0; si < spec.series.size(); ++si) {
            const auto& g = m.series[si];
            const auto& vals = spec.values.at(spec.series[si].label);
            switch (spec.chart_type) {
            case ChartType::Line:
            case ChartType::Scatter:
                for (std::size_t i = 0; i < g.points.size(); ++i)
                    draw_text(canvas, g.points[i].x, g.points[i].y - 7,
                              canonical_number(vals[i], spec.precision), tick_font,
                              Anchor::Middle, ink, family);
                break;
            case ChartType::Bar:
                for (std::size_t i = 0; i < g.bars.size(); ++i)
                    draw_text(canvas, g.bars[i].x + g.bars[i].w / 2, g.bars[i].y - 4,
                              canonical_number(vals[i], spec.precision), tick_font,
                              Anchor::Middle, ink, family);
                break;
            case ChartType::HorizontalBar:
                for (std::size_t i = 0; i < g.bars.size(); ++i)
                    draw_text(canvas, g.bars[i].right() + 4,
                              g.bars[i].y + g.bars[i].h / 2 + tick_font * 0.3,
                              canonical_number(vals[i], spec.precision), tick_font,
                              Anchor::Start, ink, family);
                break;
            case ChartType::Pie: {
                double mid = (g.sector_start_deg + g.sector_end_deg) / 2;
                double lr = m.pie_r * 0.68;
                draw_text(canvas, m.pie_cx + lr * std::sin(mid * M_PI / 180.0),
                          m.pie_cy - lr * std::cos(mid * M_PI / 180.0),
                          canonical_number(vals[0], spec.precision) + "%", tick_font,
                          Anchor::Middle, Rgb{255, 255, 255}, family);
                break;
            }
            }
        }
    }

    double legend_font = spec.font_size - 1;
    for (std::size_t i = 0; i < m.legend.size(); ++i) {
        const auto& e = m.legend[i];
        canvas.fill_rect(e.box.x, e.box.y + (e.box.h - 10) / 2, 14, 10, spec.series[i].rgb);
        draw_text(canvas, e.box.x + 19, e.box.y + e.box.h / 2 + legend_font * 0.3, e.label,
                  legend_font, Anchor::Start, ink, family);
    }

    if (m.title_drawn)
        draw_text(canvas, spec.canvas_w / 2.0,
                  m.title_box.y + text_height(spec.font_size + 4) * 0.78, spec.title,
                  spec.font_size + 4, Anchor::Middle, ink, family);

    return encode_png(canvas);
}

} // namespace chartforge
