#pragma once

#include <cmath>
#include <string>

#include "chartforge/chart.hpp"
#include "chartforge/layout.hpp"
#include "chartforge/util.hpp"

namespace chartforge {

namespace svg_detail {

inline std::string esc(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c; break;
        }
    }
    return out;
}

inline std::string font_stack(const std::string& family) {
    return family == "serif" ? "Georgia,Times,serif" : "Helvetica,Arial,sans-serif";
}

inline void text_el(std::string& out, double x, double y, const std::string& body,
                    double size, const std::string& family, const std::string& anchor,
                    const std::string& extra = "") {
    out += "<text x=\"" + fmt_coord(x) + "\" y=\"" + fmt_coord(y) + "\" font-family=\"" +
           font_stack(family) + "\" font-size=\"" + fmt_coord(size) + "\" text-anchor=\"" +
           anchor + "\"" + extra + ">" + esc(body) + "</text>\n";
}

inline void line_el(std::string& out, double x1, double y1, double x2, double y2,
                    const std::string& stroke, double width, const std::string& extra = "") {
    out += "<line x1=\"" + fmt_coord(x1) + "\" y1=\"" + fmt_coord(y1) + "\" x2=\"" +
           fmt_coord(x2) + "\" y2=\"" + fmt_coord(y2) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"" + fmt_coord(width) + "\"" + extra + "/>\n";
}

inline std::string sector_path(double cx, double cy, double r, double a0, double a1) {
    auto px = [&](double a) { return cx + r * std::sin(a * M_PI / 180.0); };
    auto py = [&](double a) { return cy - r * std::cos(a * M_PI / 180.0); };
    std::string d = "M" + fmt_coord(cx) + " " + fmt_coord(cy) + " L" + fmt_coord(px(a0)) + " " +
                    fmt_coord(py(a0));
    d += " A" + fmt_coord(r) + " " + fmt_coord(r) + " 0 " + ((a1 - a0) > 180.0 ? "1" : "0") +
         " 1 " + fmt_coord(px(a1)) + " " + fmt_coord(py(a1)) + " Z";
    return d;
}

inline std::string marker_el(Marker m, double x, double y, double r, const std::string& fill) {
    switch (m) {
    case Marker::Circle:
        return "<circle cx=\"" + fmt_coord(x) + "\" cy=\"" + fmt_coord(y) + "\" r=\"" +
               fmt_coord(r) + "\" fill=\"" + fill + "\"/>\n";
    case Marker::Square:
        return "<rect x=\"" + fmt_coord(x - r) + "\" y=\"" + fmt_coord(y - r) + "\" width=\"" +
               fmt_coord(2 * r) + "\" height=\"" + fmt_coord(2 * r) + "\" fill=\"" + fill +
               "\"/>\n";
    case Marker::Triangle:
        return "<polygon points=\"" + fmt_coord(x) + "," + fmt_coord(y - r) + " " +
               fmt_coord(x - r) + "," + fmt_coord(y + r) + " " + fmt_coord(x + r) + "," +
               fmt_coord(y + r) + "\" fill=\"" + fill + "\"/>\n";
    default:
        return "<polygon points=\"" + fmt_coord(x) + "," + fmt_coord(y - r) + " " +
               fmt_coord(x + r) + "," + fmt_coord(y) + " " + fmt_coord(x) + "," +
               fmt_coord(y + r) + " " + fmt_coord(x - r) + "," + fmt_coord(y) + "\" fill=\"" +
               fill + "\"/>\n";
    }
}

} // namespace svg_detail

// Deterministic SVG 1.1 writer: element order, attribute order and number
// formatting are all fixed, so the same spec always yields the same bytes.
// Each series group carries data-series="<label>" for machine consumption.
inline std::string render_svg(const ChartSpec& spec) {
    using namespace svg_detail;
    LayoutModel m = layout(spec);

    const std::string axis_color = "rgb(64,64,64)";
    const std::string grid_color = "rgb(210,210,210)";
    double tick_font = std::min(11.0, static_cast<double>(spec.font_size));
    const std::string& family = spec.font_family;
    bool pie = spec.chart_type == ChartType::Pie;
    bool hbar = spec.chart_type == ChartType::HorizontalBar;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.canvas_w) +
           "\" height=\"" + std::to_string(spec.canvas_h) + "\" viewBox=\"0 0 " +
           std::to_string(spec.canvas_w) + " " + std::to_string(spec.canvas_h) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.canvas_w) + "\" height=\"" +
           std::to_string(spec.canvas_h) + "\" fill=\"" + spec.background.css() + "\"/>\n";

    if (!pie && spec.grid_lines) {
        out += "<g class=\"grid\">\n";
        for (const auto& t : m.y_ticks) {
            if (hbar)
                line_el(out, t.px, m.plot.y, t.px, m.plot.bottom(), grid_color, 1);
            else
                line_el(out, m.plot.x, t.px, m.plot.right(), t.px, grid_color, 1);
        }
        out += "</g>\n";
    }

    if (!pie) {
        out += "<g class=\"axes\">\n";
        if (spec.x_axis_visible) {
            line_el(out, m.plot.x, m.plot.bottom(), m.plot.right(), m.plot.bottom(), axis_color,
                    1.2);
            for (const auto& t : hbar ? m.y_ticks : m.x_ticks)
                line_el(out, t.px, m.plot.bottom(), t.px, m.plot.bottom() + 4, axis_color, 1);
        }
        if (spec.y_axis_visible) {
            line_el(out, m.plot.x, m.plot.y, m.plot.x, m.plot.bottom(), axis_color, 1.2);
            for (const auto& t : hbar ? m.x_ticks : m.y_ticks) {
                double py = hbar ? t.px : t.px;
                line_el(out, m.plot.x - 4, py, m.plot.x, py, axis_color, 1);
            }
        }
        out += "</g>\n";

        out += "<g class=\"x-tick-labels\">\n";
        const auto& bottom_ticks = hbar ? m.y_ticks : m.x_ticks;
        for (const auto& t : bottom_ticks)
            text_el(out, t.px, m.plot.bottom() + 4 + text_height(tick_font) * 0.8, t.label,
                    tick_font, family, "middle");
        out += "</g>\n";

        out += "<g class=\"y-tick-labels\">\n";
        const auto& left_ticks = hbar ? m.x_ticks : m.y_ticks;
        for (const auto& t : left_ticks)
            text_el(out, m.plot.x - 8, t.px + tick_font * 0.35, t.label, tick_font, family,
                    "end");
        out += "</g>\n";

        std::string x_caption = hbar ? spec.y_topic : spec.x_topic;
        std::string x_cu = hbar ? spec.y_unit : spec.x_unit;
        if (!x_cu.empty()) x_caption += " (" + x_cu + ")";
        std::string y_caption = hbar ? spec.x_topic : spec.y_topic;
        std::string y_cu = hbar ? spec.x_unit : spec.y_unit;
        if (!y_cu.empty()) y_caption += " (" + y_cu + ")";
        text_el(out, m.plot.x + m.plot.w / 2,
                static_cast<double>(spec.canvas_h) - 6 -
                    (spec.legend_position == LegendPos::Bottom ? m.legend_box.h + 6 : 0),
                x_caption, spec.font_size, family, "middle", " class=\"x-caption\"");
        double ycap_x = 14 + (spec.legend_position == LegendPos::Left ? m.legend_box.w + 8 : 0);
        out += "<text x=\"" + fmt_coord(ycap_x) + "\" y=\"" +
               fmt_coord(m.plot.y + m.plot.h / 2) + "\" font-family=\"" + font_stack(family) +
               "\" font-size=\"" + fmt_coord(spec.font_size) +
               "\" text-anchor=\"middle\" class=\"y-caption\" transform=\"rotate(-90 " +
               fmt_coord(ycap_x) + " " + fmt_coord(m.plot.y + m.plot.h / 2) + ")\">" +
               esc(y_caption) + "</text>\n";
    }

    // Series geometry, in legend order.
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const auto& s = spec.series[si];
        const auto& g = m.series[si];
        out += "<g class=\"series\" data-series=\"" + esc(s.label) + "\">\n";
        switch (spec.chart_type) {
        case ChartType::Line: {
            std::string pts;
            for (const auto& p : g.points) {
                if (!pts.empty()) pts += " ";
                pts += fmt_coord(p.x) + "," + fmt_coord(p.y);
            }
            std::string dash =
                s.line_style == LineStyle::Dashed ? " stroke-dasharray=\"7 5\"" : "";
            out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + s.rgb.css() +
                   "\" stroke-width=\"" + fmt_coord(spec.line_width) + "\"" + dash + "/>\n";
            for (const auto& p : g.points)
                out += "<circle cx=\"" + fmt_coord(p.x) + "\" cy=\"" + fmt_coord(p.y) +
                       "\" r=\"" + fmt_coord(1.6 + spec.line_width) + "\" fill=\"" + s.rgb.css() +
                       "\"/>\n";
            break;
        }
        case ChartType::Bar:
        case ChartType::HorizontalBar: {
            std::string border_attr;
            if (s.border == BorderType::Solid)
                border_attr = " stroke=\"rgb(32,32,32)\" stroke-width=\"1\"";
            else if (s.border == BorderType::Dashed)
                border_attr =
                    " stroke=\"rgb(32,32,32)\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
            for (std::size_t i = 0; i < g.bars.size(); ++i) {
                const Rect& b = g.bars[i];
                out += "<rect x=\"" + fmt_coord(b.x) + "\" y=\"" + fmt_coord(b.y) +
                       "\" width=\"" + fmt_coord(b.w) + "\" height=\"" + fmt_coord(b.h) +
                       "\" fill=\"" + s.rgb.css() + "\"" + border_attr + " data-x=\"" +
                       esc(spec.x_labels[i]) + "\"/>\n";
            }
            break;
        }
        case ChartType::Pie: {
            if (g.sector_end_deg - g.sector_start_deg >= 359.999) {
                out += "<circle cx=\"" + fmt_coord(m.pie_cx) + "\" cy=\"" + fmt_coord(m.pie_cy) +
                       "\" r=\"" + fmt_coord(m.pie_r) + "\" fill=\"" + s.rgb.css() + "\"/>\n";
            } else {
                out += "<path d=\"" +
                       sector_path(m.pie_cx, m.pie_cy, m.pie_r, g.sector_start_deg,
                                   g.sector_end_deg) +
                       "\" fill=\"" + s.rgb.css() +
                       "\" stroke=\"rgb(255,255,255)\" stroke-width=\"1\"/>\n";
            }
            break;
        }
        case ChartType::Scatter: {
            double r = 3.0 + spec.line_width;
            for (const auto& p : g.points) out += marker_el(s.marker, p.x, p.y, r, s.rgb.css());
            break;
        }
        }
        out += "</g>\n";
    }

    if (spec.value_labels_visible) {
        out += "<g class=\"value-labels\">\n";
        double vfont = tick_font;
        for (std::size_t si = 0; si < spec.series.size(); ++si) {
            const auto& s = spec.series[si];
            const auto& g = m.series[si];
            const auto& vals = spec.values.at(s.label);
            switch (spec.chart_type) {
            case ChartType::Line:
            case ChartType::Scatter:
                for (std::size_t i = 0; i < g.points.size(); ++i)
                    text_el(out, g.points[i].x, g.points[i].y - 7,
                            canonical_number(vals[i], spec.precision), vfont, family, "middle");
                break;
            case ChartType::Bar:
                for (std::size_t i = 0; i < g.bars.size(); ++i) {
                    const Rect& b = g.bars[i];
                    double ty = spec.value_label_pos == ValueLabelPos::Above
                                    ? b.y - 4
                                    : b.y + text_height(vfont);
                    text_el(out, b.x + b.w / 2, ty, canonical_number(vals[i], spec.precision),
                            vfont, family, "middle");
                }
                break;
            case ChartType::HorizontalBar:
                for (std::size_t i = 0; i < g.bars.size(); ++i) {
                    const Rect& b = g.bars[i];
                    double tx = spec.value_label_pos == ValueLabelPos::Above
                                    ? b.right() + 4
                                    : std::max(b.x + 2, b.right() - 34);
                    text_el(out, tx, b.y + b.h / 2 + vfont * 0.35,
                            canonical_number(vals[i], spec.precision), vfont, family,
                            spec.value_label_pos == ValueLabelPos::Above ? "start" : "start");
                }
                break;
            case ChartType::Pie: {
                double mid = (g.sector_start_deg + g.sector_end_deg) / 2;
                double lr = m.pie_r * 0.68;
                double tx = m.pie_cx + lr * std::sin(mid * M_PI / 180.0);
                double ty = m.pie_cy - lr * std::cos(mid * M_PI / 180.0);
                text_el(out, tx, ty, canonical_number(vals[0], spec.precision) + "%", vfont,
                        family, "middle");
                break;
            }
            }
        }
        out += "</g>\n";
    }

    out += "<g class=\"legend\">\n";
    double legend_font = spec.font_size - 1;
    for (std::size_t i = 0; i < m.legend.size(); ++i) {
        const auto& e = m.legend[i];
        const auto& s = spec.series[i];
        out += "<g class=\"legend-entry\" data-legend=\"" + esc(e.label) + "\" data-index=\"" +
               std::to_string(i) + "\">\n";
        double sy = e.box.y + (e.box.h - 10) / 2;
        out += "<rect x=\"" + fmt_coord(e.box.x) + "\" y=\"" + fmt_coord(sy) +
               "\" width=\"14\" height=\"10\" fill=\"" + s.rgb.css() + "\"/>\n";
        text_el(out, e.box.x + 19, e.box.y + e.box.h / 2 + legend_font * 0.35, e.label,
                legend_font, family, "start");
        out += "</g>\n";
    }
    out += "</g>\n";

    if (m.title_drawn)
        text_el(out, static_cast<double>(spec.canvas_w) / 2,
                m.title_box.y + text_height(spec.font_size + 4) * 0.78, spec.title,
                spec.font_size + 4, family, "middle", " class=\"title\"");

    out += "</svg>\n";
    return out;
}

} // namespace chartforge
