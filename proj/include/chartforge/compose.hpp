#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "chartforge/chart.hpp"
#include "chartforge/layout.hpp"
#include "chartforge/rng.hpp"
#include "chartforge/seed.hpp"

namespace chartforge {

// Consecutive samples of the bounded walk move at most this fraction of the
// seed's range span, which keeps line and bar data plausibly smooth.
inline constexpr double kSmoothnessBound = 0.35;

struct SampledSeries {
    std::string label;
    std::vector<double> values;
};

// Bounded random walk emitted on the precision grid: consecutive raw steps
// move at most kSmoothnessBound of the range span, and every emitted value
// sits on a grid point inside [lo, hi] exactly.
inline std::vector<double> bounded_walk(int n, double lo, double hi, int precision, Rng& rng) {
    double scale = 1.0;
    for (int i = 0; i < precision; ++i) scale *= 10.0;
    const long long k_lo = static_cast<long long>(std::ceil(lo * scale - 1e-9));
    const long long k_hi = static_cast<long long>(std::floor(hi * scale + 1e-9));
    if (k_hi < k_lo) fail(Errc::capacity, "value_range narrower than the precision grid");

    std::vector<double> out;
    double span = hi - lo;
    double v = rng.uniform(lo, hi);
    for (int i = 0; i < n; ++i) {
        v = std::min(hi, std::max(lo, v));
        long long k = std::llround(v * scale);
        k = std::max(k_lo, std::min(k_hi, k));
        out.push_back(static_cast<double>(k) / scale);
        v += rng.uniform(-kSmoothnessBound, kSmoothnessBound) * span;
    }
    return out;
}

// Largest-remainder share allocation on a 10^-precision grid: n shares that
// sum to exactly 100 grid units, each within [lo, hi].
inline std::vector<double> allocate_pie_shares(int n, double lo, double hi, int precision,
                                               Rng& rng) {
    long long grid = 1;
    for (int i = 0; i < precision; ++i) grid *= 10;
    const long long total_units = 100 * grid;
    const long long min_units =
        static_cast<long long>(std::ceil(std::max(0.0, lo) * static_cast<double>(grid)));
    const long long cap_units = static_cast<long long>(std::floor(hi * static_cast<double>(grid)));
    if (min_units * n > total_units || cap_units * n < total_units)
        fail(Errc::capacity, "pie share bounds infeasible for sector count");

    std::vector<double> weights(static_cast<std::size_t>(n));
    double wsum = 0;
    for (auto& w : weights) {
        w = rng.uniform(1.0, 10.0);
        wsum += w;
    }
    std::vector<long long> units(weights.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    long long assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double exact = weights[i] / wsum * static_cast<double>(total_units);
        long long base = static_cast<long long>(std::floor(exact));
        base = std::max(min_units, std::min(cap_units, base));
        units[i] = base;
        assigned += base;
        remainders.push_back({exact - std::floor(exact), i});
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    long long leftover = total_units - assigned;
    std::size_t ri = 0, stall = 0;
    while (leftover != 0 && stall < weights.size()) {
        std::size_t idx = remainders[ri % remainders.size()].second;
        ++ri;
        if (leftover > 0 && units[idx] < cap_units) {
            ++units[idx];
            --leftover;
            stall = 0;
        } else if (leftover < 0 && units[idx] > min_units) {
            --units[idx];
            ++leftover;
            stall = 0;
        } else {
            ++stall;
        }
    }
    std::vector<double> out;
    for (long long u : units) out.push_back(static_cast<double>(u) / static_cast<double>(grid));
    return out;
}

// Draws series labels and values for a seed. Values honor the seed's range
// exactly; pie output is normalized to sum to 100 on the precision grid.
inline std::vector<SampledSeries> sample_data(const ChartSeed& seed, int n_points, Rng& rng) {
    if (n_points < (seed.chart_type == ChartType::Pie ? 3 : 2))
        fail(Errc::capacity, "n_points too small");

    const double lo = seed.value_lo, hi = seed.value_hi;
    const int prec = seed.precision;

    if (seed.chart_type == ChartType::Pie) {
        if (static_cast<std::size_t>(n_points) > seed.series_vocabulary.size())
            fail(Errc::capacity, "more sectors than vocabulary entries");
        std::vector<std::string> sectors = seed.series_vocabulary;
        rng.shuffle(sectors);
        sectors.resize(static_cast<std::size_t>(n_points));
        std::vector<double> shares = allocate_pie_shares(n_points, lo, hi, prec, rng);
        std::vector<SampledSeries> out;
        for (std::size_t i = 0; i < sectors.size(); ++i)
            out.push_back({sectors[i], {shares[i]}});
        return out;
    }

    if (static_cast<std::size_t>(n_points) > seed.x_axis.labels.size())
        fail(Errc::capacity, "n_points exceeds x label vocabulary");

    int n_series_max = seed.chart_type == ChartType::Line ? 4 : 3;
    int n_series = rng.range(1, std::min<int>(n_series_max,
                                              static_cast<int>(seed.series_vocabulary.size())));
    std::vector<std::string> labels = seed.series_vocabulary;
    rng.shuffle(labels);
    labels.resize(static_cast<std::size_t>(n_series));

    std::vector<SampledSeries> out;
    for (const auto& label : labels)
        out.push_back({label, bounded_walk(n_points, lo, hi, prec, rng)});
    return out;
}

struct TickPlan {
    std::vector<std::string> shown;
    std::vector<std::string> omitted;
    int branch = 0; // 0 = keep all, 1 = omit 1-of-3, 2 = omit 2-of-4
};

// Axis label omission. Continuous axes keep all labels with p=0.25, drop the
// last of every three with p=0.50, and drop the 2nd and 4th of every four
// with p=0.25; endpoints are always kept so first/last stay answerable.
// Categorical axes never omit.
inline TickPlan sample_tick_omission(const std::vector<std::string>& x_labels, LabelKind kind,
                                     Rng& rng) {
    if (x_labels.empty()) fail(Errc::capacity, "no x labels");
    TickPlan plan;
    if (kind == LabelKind::Categorical) {
        plan.shown = x_labels;
        return plan;
    }
    double u = rng.unit();
    plan.branch = u < 0.25 ? 0 : (u < 0.75 ? 1 : 2);
    for (std::size_t i = 0; i < x_labels.size(); ++i) {
        bool endpoint = i == 0 || i + 1 == x_labels.size();
        bool omit = false;
        if (plan.branch == 1) omit = i % 3 == 2;
        if (plan.branch == 2) omit = i % 4 == 1 || i % 4 == 3;
        if (omit && !endpoint)
            plan.omitted.push_back(x_labels[i]);
        else
            plan.shown.push_back(x_labels[i]);
    }
    return plan;
}

// The style configuration space. Every field is drawn from the documented
// finite option set below; colors come from the seed's palette without
// replacement.
//
//   font_family          {sans, serif}
//   font_size            {12, 13, 14, 16}
//   line_width           {1.0, 1.5, 2.0, 3.0}
//   line_style           {solid, dashed}            per line series
//   border               {solid, dashed, none}      per bar series
//   marker               {circle, square, triangle, diamond} per scatter series
//   legend_position      {top, bottom, left, right}
//   stacked              {false, true}              vertical bars only
//   value_labels_visible {false, true}
//   value_label_pos      {above, inside}
//   title_visible        {true:0.85, false:0.15}
//   x/y axis visible     {true:0.9, false:0.1}
//   grid_lines           {false, true}
//   canvas               {800x600, 880x640, 960x680}
struct StyleConfig {
    std::vector<Rgb> colors;
    std::vector<std::string> color_names;
    std::vector<LineStyle> line_styles;
    std::vector<BorderType> borders;
    std::vector<Marker> markers;
    LegendPos legend_position = LegendPos::Top;
    bool stacked = false;
    bool value_labels_visible = false;
    ValueLabelPos value_label_pos = ValueLabelPos::Above;
    bool title_visible = true;
    bool x_axis_visible = true, y_axis_visible = true;
    bool grid_lines = false;
    std::string font_family = "sans";
    int font_size = 12;
    double line_width = 2.0;
    int canvas_w = 800, canvas_h = 600;
    Rgb background{255, 255, 255};
};

inline StyleConfig sample_style(const ChartSeed& seed, int n_series, const PaletteTable& palettes,
                                Rng& rng) {
    const Palette& palette = palettes.get(seed.palette_id);
    if (static_cast<std::size_t>(n_series) > palette.entries.size())
        fail(Errc::capacity, "palette smaller than series count");

    StyleConfig style;
    std::vector<std::size_t> order(palette.entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (int i = 0; i < n_series; ++i) {
        const PaletteEntry& e = palette.entries[order[static_cast<std::size_t>(i)]];
        style.colors.push_back(e.rgb);
        style.color_names.push_back(e.name);
    }
    for (int i = 0; i < n_series; ++i) {
        style.line_styles.push_back(rng.bernoulli(0.5) ? LineStyle::Dashed : LineStyle::Solid);
        switch (rng.below(3)) {
        case 0: style.borders.push_back(BorderType::Solid); break;
        case 1: style.borders.push_back(BorderType::Dashed); break;
        default: style.borders.push_back(BorderType::None); break;
        }
        static const Marker markers[] = {Marker::Circle, Marker::Square, Marker::Triangle,
                                         Marker::Diamond};
        style.markers.push_back(markers[rng.below(4)]);
    }

    static const LegendPos positions[] = {LegendPos::Top, LegendPos::Bottom, LegendPos::Left,
                                          LegendPos::Right};
    style.legend_position = positions[rng.below(4)];
    style.stacked = seed.chart_type == ChartType::Bar && rng.bernoulli(0.35);
    style.value_labels_visible = rng.bernoulli(0.5);
    style.value_label_pos = rng.bernoulli(0.8) ? ValueLabelPos::Above : ValueLabelPos::Inside;
    style.title_visible = rng.bernoulli(0.85);
    style.x_axis_visible = rng.bernoulli(0.9);
    style.y_axis_visible = rng.bernoulli(0.9);
    style.grid_lines = rng.bernoulli(0.5);

    style.font_family = rng.bernoulli(0.7) ? "sans" : "serif";
    static const int sizes[] = {12, 13, 14, 16};
    style.font_size = sizes[rng.below(4)];
    static const double widths[] = {1.0, 1.5, 2.0, 3.0};
    style.line_width = widths[rng.below(4)];
    static const int canvases[][2] = {{800, 600}, {880, 640}, {960, 680}};
    int ci = static_cast<int>(rng.below(3));
    style.canvas_w = canvases[ci][0];
    style.canvas_h = canvases[ci][1];
    style.background = palette.background;
    return style;
}

// 1/2/5-progression step targeting 4..8 intervals.
inline double nice_step(double span, int target_intervals = 6) {
    double raw = span / target_intervals;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= mult * mag + 1e-12) return mult * mag;
    }
    return 10.0 * mag;
}

struct AxisRange {
    double min, max, step;
};

inline AxisRange nice_axis(double data_min, double data_max, ChartType type, int precision,
                           int target_intervals = 6) {
    bool zero_based = type == ChartType::Bar || type == ChartType::HorizontalBar;
    double lo = zero_based ? 0.0 : data_min;
    double hi = data_max;
    if (hi - lo < std::pow(10.0, -precision)) hi = lo + std::pow(10.0, -precision);
    double step = nice_step(hi - lo, target_intervals);
    double min_ticks = std::pow(10.0, -precision);
    if (step < min_ticks) step = min_ticks;
    double amin = zero_based ? 0.0 : std::floor(lo / step) * step;
    double amax = std::ceil(hi / step - 1e-12) * step;
    if (amax <= amin) amax = amin + step;
    return {amin, amax, step};
}

inline std::string derive_chart_id(const std::string& seed_id, std::uint64_t chart_stream) {
    return seed_id + "-" + to_hex(chart_stream, 12);
}

// Recomputes axis bounds from the spec's current values (used after data
// mutations). Stacked bars scale to the largest column total.
inline void recompute_axis(ChartSpec& spec, int target_intervals = 6) {
    if (spec.chart_type == ChartType::Pie) return;
    double vmin = 1e300, vmax = -1e300;
    for (const auto& [label, vals] : spec.values)
        for (double v : vals) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    if (spec.stacked) {
        vmax = 0;
        for (std::size_t i = 0; i < spec.x_labels.size(); ++i) {
            double col = 0;
            for (const auto& [label, vals] : spec.values) col += vals[i];
            vmax = std::max(vmax, col);
        }
    }
    AxisRange axis = nice_axis(vmin, vmax, spec.chart_type, spec.precision, target_intervals);
    spec.axis_min = axis.min;
    spec.axis_max = axis.max;
    spec.axis_step = axis.step;
}

// Composes one fully specified chart from a seed. Pure function of
// (seed, chart_stream): the stream seeds every internal draw, so the same
// pair always yields byte-identical spec and ground truth.
inline ChartPair compose_chart(const ChartSeed& seed, const PaletteTable& palettes,
                               std::uint64_t chart_stream) {
    ValidationReport seed_report = validate_seed(seed, palettes);
    if (!seed_report.ok()) fail(Errc::config, "invalid seed: " + seed_report.summary());

    Rng data_rng = stream_rng(chart_stream, "data");
    Rng tick_rng = stream_rng(chart_stream, "ticks");
    Rng style_rng = stream_rng(chart_stream, "style");
    Rng shape_rng = stream_rng(chart_stream, "shape");

    int n_points;
    switch (seed.chart_type) {
    case ChartType::Pie: n_points = shape_rng.range(3, 6); break;
    case ChartType::Bar:
    case ChartType::HorizontalBar: n_points = shape_rng.range(4, 7); break;
    default: n_points = shape_rng.range(5, 8); break;
    }
    if (seed.chart_type == ChartType::Pie)
        n_points = std::min<int>(n_points, static_cast<int>(seed.series_vocabulary.size()));
    else
        n_points = std::min<int>(n_points, static_cast<int>(seed.x_axis.labels.size()));

    std::vector<SampledSeries> data = sample_data(seed, n_points, data_rng);

    ChartSpec spec;
    spec.chart_id = derive_chart_id(seed.seed_id, chart_stream);
    spec.chart_type = seed.chart_type;
    spec.title = seed.title;
    spec.seed_id = seed.seed_id;
    spec.domain_tag = seed.domain_tag;
    spec.x_topic = seed.x_axis.topic;
    spec.x_unit = seed.x_axis.unit;
    spec.y_topic = seed.y_axis.topic;
    spec.y_unit = seed.y_axis.unit;
    spec.x_kind = seed.x_axis.kind;
    spec.value_lo = seed.value_lo;
    spec.value_hi = seed.value_hi;
    spec.precision = seed.precision;
    spec.palette_id = seed.palette_id;

    if (seed.chart_type == ChartType::Pie) {
        for (const auto& s : data) spec.x_labels.push_back(s.label);
    } else {
        // Contiguous window keeps temporal/numeric labels consecutive.
        std::size_t avail = seed.x_axis.labels.size();
        std::size_t start = 0;
        if (seed.x_axis.kind == LabelKind::Categorical) {
            std::vector<std::string> cats = seed.x_axis.labels;
            shape_rng.shuffle(cats);
            cats.resize(static_cast<std::size_t>(n_points));
            spec.x_labels = cats;
        } else {
            start = shape_rng.below(static_cast<std::uint32_t>(
                avail - static_cast<std::size_t>(n_points) + 1));
            for (int i = 0; i < n_points; ++i)
                spec.x_labels.push_back(seed.x_axis.labels[start + static_cast<std::size_t>(i)]);
        }
    }

    TickPlan ticks = sample_tick_omission(spec.x_labels, seed.x_axis.kind, tick_rng);
    spec.shown_x_labels = ticks.shown;
    spec.tick_branch = ticks.branch;

    StyleConfig style = sample_style(seed, static_cast<int>(data.size()), palettes, style_rng);
    for (std::size_t i = 0; i < data.size(); ++i) {
        SeriesSpec s;
        s.label = data[i].label;
        s.rgb = style.colors[i];
        s.color_name = style.color_names[i];
        s.line_style = style.line_styles[i];
        s.border = style.borders[i];
        s.marker = style.markers[i];
        spec.series.push_back(std::move(s));
        spec.values[data[i].label] = data[i].values;
    }

    spec.legend_position = style.legend_position;
    spec.stacked = style.stacked;
    spec.value_labels_visible = style.value_labels_visible;
    spec.value_label_pos = style.value_label_pos;
    spec.title_visible = style.title_visible;
    spec.x_axis_visible = style.x_axis_visible;
    spec.y_axis_visible = style.y_axis_visible;
    spec.grid_lines = style.grid_lines;
    spec.font_family = style.font_family;
    spec.font_size = style.font_size;
    spec.line_width = style.line_width;
    spec.canvas_w = style.canvas_w;
    spec.canvas_h = style.canvas_h;
    spec.background = style.background;

    recompute_axis(spec);

    GroundTruth gt = ground_truth_from_spec(spec);
    ValidationReport pair_report = validate_pair(spec, gt);
    if (!pair_report.ok())
        fail(Errc::integrity, "composed chart failed validation: " + pair_report.summary());
    return {std::move(spec), std::move(gt)};
}

} // namespace chartforge
