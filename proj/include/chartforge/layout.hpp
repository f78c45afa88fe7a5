#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "chartforge/chart.hpp"
#include "chartforge/errors.hpp"
#include "chartforge/text_metrics.hpp"

namespace chartforge {

struct Rect {
    double x = 0, y = 0, w = 0, h = 0;

    double right() const { return x + w; }
    double bottom() const { return y + h; }

    bool intersects(const Rect& o) const {
        return x < o.right() && o.x < right() && y < o.bottom() && o.y < bottom();
    }
};

struct TickMark {
    std::string label;
    double px = 0; // center along the axis, pixels
    Rect text_box;
};

struct PointPx {
    double x = 0, y = 0;
};

struct SeriesGeometry {
    std::string label;
    std::vector<PointPx> points; // line / scatter
    std::vector<Rect> bars;      // bar / horizontal bar
    double sector_start_deg = 0; // pie; 0 deg = 12 o'clock, clockwise
    double sector_end_deg = 0;
};

struct LegendEntryBox {
    std::string label;
    Rect box;
};

struct LayoutModel {
    Rect plot;
    std::vector<double> category_pos; // x centers (vertical) or y centers (horizontal bars)
    double unit_scale = 1;            // pixels per data unit along the value axis
    std::vector<SeriesGeometry> series;
    std::vector<TickMark> x_ticks; // shown labels only
    std::vector<TickMark> y_ticks;
    bool title_drawn = false;
    Rect title_box;
    Rect legend_box;
    std::vector<LegendEntryBox> legend;
    double pie_cx = 0, pie_cy = 0, pie_r = 0;

    double value_to_y(const ChartSpec& spec, double v) const {
        return plot.bottom() - (v - spec.axis_min) * unit_scale;
    }

    double value_to_x(const ChartSpec& spec, double v) const {
        return plot.x + (v - spec.axis_min) * unit_scale;
    }
};

namespace detail {

inline std::string tick_text(double v, int precision) {
    std::string s = fmt_fixed(v, precision);
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    return s;
}

inline double legend_entry_width(const std::string& label, double font, const std::string& family) {
    return 14 + 5 + text_width(label, font, family) + 14;
}

} // namespace detail

// Pure function of the spec; every pixel the renderer emits is derived from
// this model, and tests query it directly for geometry assertions.
inline LayoutModel layout(const ChartSpec& spec) {
    ValidationReport valid = validate_spec(spec);
    if (!valid.ok()) fail(Errc::layout, "spec invalid: " + valid.summary());

    LayoutModel m;
    const double W = spec.canvas_w, H = spec.canvas_h;
    const double fs = spec.font_size;
    const std::string& family = spec.font_family;

    double top = 10, bottom_m = 12, left = 14, right = 16;

    if (spec.title_visible) {
        double th = text_height(fs + 4);
        double tw = text_width(spec.title, fs + 4, family);
        m.title_drawn = true;
        m.title_box = Rect{(W - tw) / 2, top, tw, th};
        top += th + 6;
    }

    // Legend block sizing; entries laid out after the plot rect is known.
    double legend_font = fs - 1;
    double entry_h = text_height(legend_font) + 4;
    double legend_w = 0, legend_h = 0;
    bool legend_horizontal =
        spec.legend_position == LegendPos::Top || spec.legend_position == LegendPos::Bottom;
    if (legend_horizontal) {
        for (const auto& s : spec.series)
            legend_w += detail::legend_entry_width(s.label, legend_font, family);
        legend_h = entry_h;
    } else {
        for (const auto& s : spec.series)
            legend_w = std::max(legend_w, detail::legend_entry_width(s.label, legend_font, family));
        legend_h = entry_h * static_cast<double>(spec.series.size());
    }

    switch (spec.legend_position) {
    case LegendPos::Top: top += legend_h + 6; break;
    case LegendPos::Bottom: bottom_m += legend_h + 6; break;
    case LegendPos::Left: left += legend_w + 8; break;
    case LegendPos::Right: right += legend_w + 8; break;
    }

    const bool pie = spec.chart_type == ChartType::Pie;
    const bool hbar = spec.chart_type == ChartType::HorizontalBar;
    double tick_font = std::min(11.0, fs);

    if (!pie) {
        // Room for tick labels and axis captions.
        double y_tick_w = 0;
        for (double v = spec.axis_min; v <= spec.axis_max + 1e-9; v += spec.axis_step)
            y_tick_w = std::max(y_tick_w, text_width(detail::tick_text(v, spec.precision),
                                                     tick_font, family));
        double cat_w = 0;
        for (const auto& x : spec.shown_x_labels)
            cat_w = std::max(cat_w, text_width(x, tick_font, family));
        if (hbar) {
            left += cat_w + 10;
            bottom_m += text_height(tick_font) + 4;
        } else {
            left += y_tick_w + 10;
            bottom_m += text_height(tick_font) + 4;
        }
        bottom_m += text_height(fs) + 2; // x axis caption
        left += text_height(fs) + 2;     // y axis caption (rotated)
    }

    m.plot = Rect{left, top, W - left - right, H - top - bottom_m};
    if (m.plot.w < 80 || m.plot.h < 60)
        fail(Errc::layout, "canvas too small for requested font and legend");

    // Legend entry boxes.
    {
        double lx, ly;
        switch (spec.legend_position) {
        case LegendPos::Top:
            lx = m.plot.x + (m.plot.w - legend_w) / 2;
            ly = m.plot.y - legend_h - 6;
            break;
        case LegendPos::Bottom:
            lx = m.plot.x + (m.plot.w - legend_w) / 2;
            ly = H - 12 - legend_h;
            break;
        case LegendPos::Left:
            lx = 14;
            ly = m.plot.y + (m.plot.h - legend_h) / 2;
            break;
        default:
            lx = m.plot.right() + 8;
            ly = m.plot.y + (m.plot.h - legend_h) / 2;
            break;
        }
        m.legend_box = Rect{lx, ly, legend_w, legend_h};
        double cx = lx, cy = ly;
        for (const auto& s : spec.series) {
            double ew = detail::legend_entry_width(s.label, legend_font, family);
            m.legend.push_back({s.label, Rect{cx, cy, legend_horizontal ? ew : legend_w, entry_h}});
            if (legend_horizontal)
                cx += ew;
            else
                cy += entry_h;
        }
    }

    if (pie) {
        m.pie_cx = m.plot.x + m.plot.w / 2;
        m.pie_cy = m.plot.y + m.plot.h / 2;
        m.pie_r = 0.40 * std::min(m.plot.w, m.plot.h);
        double start = 0; // 12 o'clock, clockwise
        for (std::size_t i = 0; i < spec.series.size(); ++i) {
            const auto& s = spec.series[i];
            double share = spec.values.at(s.label)[0];
            double span = share * 3.6;
            SeriesGeometry g;
            g.label = s.label;
            g.sector_start_deg = start;
            g.sector_end_deg = start + span;
            start += span;
            m.series.push_back(std::move(g));
        }
        return m;
    }

    const std::size_t n = spec.x_labels.size();
    const double span_units = spec.axis_max - spec.axis_min;
    m.unit_scale = (hbar ? m.plot.w : m.plot.h) / span_units;

    // Category positions along the category axis.
    if (spec.chart_type == ChartType::Scatter) {
        std::vector<double> xs;
        for (const auto& lbl : spec.x_labels) xs.push_back(std::strtod(lbl.c_str(), nullptr));
        double lo = xs.front(), hi = xs.back();
        double pad = (hi - lo) * 0.07 + 1e-12;
        double scale = m.plot.w / (hi - lo + 2 * pad);
        for (double v : xs) m.category_pos.push_back(m.plot.x + (v - lo + pad) * scale);
    } else {
        double band = (hbar ? m.plot.h : m.plot.w) / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            double c = band * (static_cast<double>(i) + 0.5);
            m.category_pos.push_back(hbar ? m.plot.y + c : m.plot.x + c);
        }
    }

    // Ticks: category labels only where the tick plan kept them.
    for (std::size_t i = 0; i < n; ++i) {
        bool shown = false;
        for (const auto& s : spec.shown_x_labels) shown = shown || s == spec.x_labels[i];
        if (!shown) continue;
        TickMark t;
        t.label = spec.x_labels[i];
        t.px = m.category_pos[i];
        double tw = text_width(t.label, tick_font, family);
        double th = text_height(tick_font);
        if (hbar)
            t.text_box = Rect{m.plot.x - 10 - tw, t.px - th / 2, tw, th};
        else
            t.text_box = Rect{t.px - tw / 2, m.plot.bottom() + 4, tw, th};
        m.x_ticks.push_back(std::move(t));
    }
    for (double v = spec.axis_min; v <= spec.axis_max + 1e-9; v += spec.axis_step) {
        TickMark t;
        t.label = detail::tick_text(v, spec.precision);
        double tw = text_width(t.label, tick_font, family);
        double th = text_height(tick_font);
        if (hbar) {
            t.px = m.value_to_x(spec, v);
            t.text_box = Rect{t.px - tw / 2, m.plot.bottom() + 4, tw, th};
        } else {
            t.px = m.value_to_y(spec, v);
            t.text_box = Rect{m.plot.x - 10 - tw, t.px - th / 2, tw, th};
        }
        m.y_ticks.push_back(std::move(t));
    }

    // Series geometry.
    const std::size_t n_series = spec.series.size();
    std::vector<double> stack_base(n, 0.0);
    for (std::size_t si = 0; si < n_series; ++si) {
        const auto& s = spec.series[si];
        const auto& vals = spec.values.at(s.label);
        SeriesGeometry g;
        g.label = s.label;
        switch (spec.chart_type) {
        case ChartType::Line:
        case ChartType::Scatter:
            for (std::size_t i = 0; i < n; ++i)
                g.points.push_back({m.category_pos[i], m.value_to_y(spec, vals[i])});
            break;
        case ChartType::Bar: {
            double band = m.plot.w / static_cast<double>(n);
            if (spec.stacked) {
                double bw = band * 0.55;
                for (std::size_t i = 0; i < n; ++i) {
                    double y0 = m.value_to_y(spec, stack_base[i]);
                    double y1 = m.value_to_y(spec, stack_base[i] + vals[i]);
                    g.bars.push_back(Rect{m.category_pos[i] - bw / 2, y1, bw, y0 - y1});
                    stack_base[i] += vals[i];
                }
            } else {
                double group = band * 0.72;
                double slot = group / static_cast<double>(n_series);
                double bw = slot * 0.86;
                for (std::size_t i = 0; i < n; ++i) {
                    double x0 = m.category_pos[i] - group / 2 +
                                slot * static_cast<double>(si) + (slot - bw) / 2;
                    double y1 = m.value_to_y(spec, vals[i]);
                    g.bars.push_back(Rect{x0, y1, bw, m.plot.bottom() - y1});
                }
            }
            break;
        }
        case ChartType::HorizontalBar: {
            double band = m.plot.h / static_cast<double>(n);
            double group = band * 0.72;
            double slot = group / static_cast<double>(n_series);
            double bh = slot * 0.86;
            for (std::size_t i = 0; i < n; ++i) {
                double y0 = m.category_pos[i] - group / 2 + slot * static_cast<double>(si) +
                            (slot - bh) / 2;
                double x1 = m.value_to_x(spec, vals[i]);
                g.bars.push_back(Rect{m.plot.x, y0, x1 - m.plot.x, bh});
            }
            break;
        }
        case ChartType::Pie:
            break;
        }
        m.series.push_back(std::move(g));
    }
    return m;
}

// Derives the ground-truth sidecar from a spec. By construction data_table,
// visual_map and extrema cannot drift from the spec they were derived from.
inline GroundTruth ground_truth_from_spec(const ChartSpec& spec) {
    GroundTruth gt;
    gt.chart_id = spec.chart_id;
    gt.chart_type = spec.chart_type;
    gt.title = spec.title;
    gt.title_visible = spec.title_visible;
    gt.x_order = spec.x_labels;
    gt.shown_x_labels = spec.shown_x_labels;
    gt.values_labeled = spec.value_labels_visible;
    gt.stacked = spec.stacked;
    gt.x_topic = spec.x_topic;
    gt.x_unit = spec.x_unit;
    gt.y_topic = spec.y_topic;
    gt.y_unit = spec.y_unit;
    gt.precision = spec.precision;

    for (const auto& x : spec.x_labels) {
        bool shown = false;
        for (const auto& s : spec.shown_x_labels) shown = shown || s == x;
        if (!shown) gt.omitted_x_labels.push_back(x);
    }

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const auto& s = spec.series[si];
        gt.series_order.push_back(s.label);
        VisualAttrs vis;
        vis.color_name = s.color_name;
        vis.legend_index = static_cast<int>(si);
        switch (spec.chart_type) {
        case ChartType::Line: vis.style_name = to_string(s.line_style); break;
        case ChartType::Bar:
        case ChartType::HorizontalBar: vis.style_name = to_string(s.border); break;
        case ChartType::Scatter: vis.style_name = to_string(s.marker); break;
        case ChartType::Pie: vis.style_name = "sector"; break;
        }
        gt.visual_map[s.label] = vis;

        const auto& vals = spec.values.at(s.label);
        if (spec.chart_type == ChartType::Pie) {
            gt.data_table[s.label][s.label] = vals[0];
        } else {
            for (std::size_t i = 0; i < spec.x_labels.size(); ++i)
                gt.data_table[s.label][spec.x_labels[i]] = vals[i];
            SeriesExtremum ext;
            std::size_t arg_max = 0, arg_min = 0;
            for (std::size_t i = 1; i < vals.size(); ++i) {
                if (vals[i] > vals[arg_max]) arg_max = i;
                if (vals[i] < vals[arg_min]) arg_min = i;
            }
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (i != arg_max && vals[i] == vals[arg_max]) ext.max_tied = true;
                if (i != arg_min && vals[i] == vals[arg_min]) ext.min_tied = true;
            }
            ext.max_label = spec.x_labels[arg_max];
            ext.min_label = spec.x_labels[arg_min];
            gt.extrema[s.label] = ext;
        }
    }

    LayoutModel m = layout(spec);
    gt.title_clear = m.title_drawn && !m.title_box.intersects(m.plot);
    return gt;
}

} // namespace chartforge
