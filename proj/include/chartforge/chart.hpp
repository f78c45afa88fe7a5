#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/color.hpp"
#include "chartforge/seed.hpp"
#include "chartforge/util.hpp"

namespace chartforge {

enum class LineStyle { Solid, Dashed };
enum class BorderType { Solid, Dashed, None };
enum class Marker { Circle, Square, Triangle, Diamond };
enum class LegendPos { Top, Bottom, Left, Right };
enum class ValueLabelPos { Above, Inside };

inline std::string to_string(LineStyle s) { return s == LineStyle::Solid ? "solid" : "dashed"; }

inline LineStyle line_style_from_string(const std::string& s) {
    if (s == "solid") return LineStyle::Solid;
    if (s == "dashed") return LineStyle::Dashed;
    fail(Errc::config, "unknown line style: " + s);
}

inline std::string to_string(BorderType b) {
    switch (b) {
    case BorderType::Solid: return "solid";
    case BorderType::Dashed: return "dashed";
    case BorderType::None: return "none";
    }
    return "none";
}

inline BorderType border_type_from_string(const std::string& s) {
    if (s == "solid") return BorderType::Solid;
    if (s == "dashed") return BorderType::Dashed;
    if (s == "none") return BorderType::None;
    fail(Errc::config, "unknown border type: " + s);
}

inline std::string to_string(Marker m) {
    switch (m) {
    case Marker::Circle: return "circle";
    case Marker::Square: return "square";
    case Marker::Triangle: return "triangle";
    case Marker::Diamond: return "diamond";
    }
    return "circle";
}

inline Marker marker_from_string(const std::string& s) {
    if (s == "circle") return Marker::Circle;
    if (s == "square") return Marker::Square;
    if (s == "triangle") return Marker::Triangle;
    if (s == "diamond") return Marker::Diamond;
    fail(Errc::config, "unknown marker: " + s);
}

inline std::string to_string(LegendPos p) {
    switch (p) {
    case LegendPos::Top: return "top";
    case LegendPos::Bottom: return "bottom";
    case LegendPos::Left: return "left";
    case LegendPos::Right: return "right";
    }
    return "top";
}

inline LegendPos legend_pos_from_string(const std::string& s) {
    if (s == "top") return LegendPos::Top;
    if (s == "bottom") return LegendPos::Bottom;
    if (s == "left") return LegendPos::Left;
    if (s == "right") return LegendPos::Right;
    fail(Errc::config, "unknown legend position: " + s);
}

struct SeriesSpec {
    std::string label;
    Rgb rgb;
    std::string color_name;                 // canonical, from color_vocabulary()
    LineStyle line_style = LineStyle::Solid; // line charts
    BorderType border = BorderType::None;    // bar charts
    Marker marker = Marker::Circle;          // scatter charts
};

// A fully specified chart. For pie charts every sector is one series with a
// single value (its percentage share) and x_labels mirrors the sector order.
struct ChartSpec {
    std::string chart_id;
    ChartType chart_type = ChartType::Line;
    std::string title;
    bool title_visible = true;

    std::vector<SeriesSpec> series;
    std::vector<std::string> x_labels;
    std::vector<std::string> shown_x_labels;
    std::map<std::string, std::vector<double>> values;

    bool value_labels_visible = false;
    ValueLabelPos value_label_pos = ValueLabelPos::Above;

    double axis_min = 0, axis_max = 1, axis_step = 0.2;
    bool x_axis_visible = true, y_axis_visible = true;
    bool grid_lines = false;

    LegendPos legend_position = LegendPos::Top;
    bool stacked = false;

    std::string font_family = "sans";
    int font_size = 12;
    double line_width = 2.0;
    int canvas_w = 800, canvas_h = 600;
    Rgb background{255, 255, 255};

    // Provenance carried from the seed; refinement actions keep these
    // self-consistent (ChangeNumScale rescales the bounds with the data).
    std::string seed_id;
    std::string domain_tag;
    std::string x_topic, x_unit, y_topic, y_unit;
    LabelKind x_kind = LabelKind::Categorical;
    double value_lo = 0, value_hi = 1;
    int precision = 1;
    std::string palette_id;
    int tick_branch = 0; // 0 = keep all, 1 = omit 1-of-3, 2 = omit 2-of-4
};

struct SeriesExtremum {
    std::string max_label, min_label;
    bool max_tied = false, min_tied = false;
};

struct VisualAttrs {
    std::string color_name;
    std::string style_name; // line style, bar border, or marker shape
    int legend_index = 0;
};

// The oracle substrate: everything needed to answer any question about the
// chart without re-reading the spec.
struct GroundTruth {
    std::string chart_id;
    ChartType chart_type = ChartType::Line;
    bool title_visible = true;
    bool title_clear = true; // visible and not intersecting the plot area
    std::string title;

    std::map<std::string, std::map<std::string, double>> data_table;
    std::map<std::string, VisualAttrs> visual_map;
    std::map<std::string, SeriesExtremum> extrema;

    std::vector<std::string> x_order;      // x labels in drawing order
    std::vector<std::string> series_order; // legend order
    std::vector<std::string> shown_x_labels;
    std::vector<std::string> omitted_x_labels;

    bool values_labeled = false; // value_label_mode: labeled (strict) vs unlabeled (flex)
    bool stacked = false;
    std::string x_topic, x_unit, y_topic, y_unit;
    int precision = 1;

    double value(const std::string& series, const std::string& x) const {
        auto s = data_table.find(series);
        if (s == data_table.end()) fail(Errc::not_found, "unknown series: " + series);
        auto v = s->second.find(x);
        if (v == s->second.end()) fail(Errc::not_found, "unknown x label: " + x);
        return v->second;
    }

    bool is_pie() const { return chart_type == ChartType::Pie; }

    double pie_share(const std::string& sector) const { return value(sector, sector); }
};

inline std::string canonical_number(double v, int precision) { return fmt_fixed(v, precision); }

// --- invariant validation -------------------------------------------------

inline ValidationReport validate_spec(const ChartSpec& spec) {
    ValidationReport r;
    auto bad = [&](const std::string& m) { r.violations.push_back(m); };

    if (spec.chart_id.empty()) bad("chart_id empty");
    if (spec.series.empty()) bad("no series");
    if (spec.x_labels.empty()) bad("no x labels");

    std::map<std::string, int> label_seen, color_seen;
    for (const auto& s : spec.series) {
        if (s.label.empty()) bad("empty series label");
        if (++label_seen[s.label] == 2) bad("duplicate series label: " + s.label);
        if (++color_seen[s.color_name] == 2) bad("duplicate series color: " + s.color_name);
        if (!is_canonical_color(s.color_name)) bad("non-canonical color name: " + s.color_name);
        if (spec.values.find(s.label) == spec.values.end()) bad("series without values: " + s.label);
    }

    for (const auto& shown : spec.shown_x_labels) {
        bool found = false;
        for (const auto& x : spec.x_labels) found = found || x == shown;
        if (!found) bad("shown label not in x_labels: " + shown);
    }

    double vmin = 1e300, vmax = -1e300, sum = 0;
    for (const auto& [label, vals] : spec.values) {
        std::size_t expect = spec.chart_type == ChartType::Pie ? 1 : spec.x_labels.size();
        if (vals.size() != expect) bad("value count mismatch for " + label);
        for (double v : vals) {
            if (!std::isfinite(v)) bad("non-finite value in " + label);
            if (v < spec.value_lo - 1e-9 || v > spec.value_hi + 1e-9)
                bad("value outside range in " + label);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
            sum += v;
        }
    }

    if (spec.chart_type == ChartType::Pie) {
        if (std::fabs(sum - 100.0) > 1e-6) bad("pie shares do not sum to 100");
        if (vmin <= 0) bad("pie share not positive");
        if (spec.series.size() != spec.x_labels.size()) bad("pie sectors misaligned with x_labels");
    } else if (!spec.values.empty()) {
        if (spec.axis_min > vmin + 1e-9) bad("axis_min above data minimum");
        if (spec.axis_max < vmax - 1e-9) bad("axis_max below data maximum");
        if (!(spec.axis_step > 0)) bad("axis_step not positive");
    }

    if (spec.stacked && spec.chart_type != ChartType::Bar) bad("stacked set on non-bar chart");
    if (spec.font_family != "sans" && spec.font_family != "serif")
        bad("unknown font family: " + spec.font_family);
    if (spec.canvas_w < 320 || spec.canvas_h < 240) bad("canvas below minimum 320x240");
    return r;
}

inline ValidationReport validate_pair(const ChartSpec& spec, const GroundTruth& gt) {
    ValidationReport r = validate_spec(spec);
    auto bad = [&](const std::string& m) { r.violations.push_back(m); };

    if (gt.chart_id != spec.chart_id) bad("ground truth chart_id mismatch");
    if (gt.chart_type != spec.chart_type) bad("ground truth chart_type mismatch");
    if (gt.data_table.size() != spec.series.size()) bad("data_table series count mismatch");

    for (const auto& s : spec.series) {
        auto row = gt.data_table.find(s.label);
        if (row == gt.data_table.end()) {
            bad("data_table missing series: " + s.label);
            continue;
        }
        const auto& vals = spec.values.at(s.label);
        if (spec.chart_type == ChartType::Pie) {
            auto cell = row->second.find(s.label);
            if (cell == row->second.end() || cell->second != vals[0])
                bad("pie data_table mismatch for " + s.label);
        } else {
            for (std::size_t i = 0; i < spec.x_labels.size(); ++i) {
                auto cell = row->second.find(spec.x_labels[i]);
                if (cell == row->second.end() || cell->second != vals[i]) {
                    bad("data_table mismatch at " + s.label + "/" + spec.x_labels[i]);
                    break;
                }
            }
        }
        auto vis = gt.visual_map.find(s.label);
        if (vis == gt.visual_map.end() || vis->second.color_name != s.color_name)
            bad("visual_map mismatch for " + s.label);
    }

    // Extrema must be recomputable from the data table.
    for (const auto& [label, ext] : gt.extrema) {
        auto row = gt.data_table.find(label);
        if (row == gt.data_table.end()) {
            bad("extrema for unknown series: " + label);
            continue;
        }
        double best_max = -1e300, best_min = 1e300;
        for (const auto& x : gt.x_order) {
            auto cell = row->second.find(spec.chart_type == ChartType::Pie ? label : x);
            if (cell == row->second.end()) continue;
            best_max = std::max(best_max, cell->second);
            best_min = std::min(best_min, cell->second);
            if (spec.chart_type == ChartType::Pie) break;
        }
        if (spec.chart_type != ChartType::Pie) {
            if (row->second.at(ext.max_label) != best_max) bad("stale argmax for " + label);
            if (row->second.at(ext.min_label) != best_min) bad("stale argmin for " + label);
        }
    }
    return r;
}

// --- serialization ----------------------------------------------------------

inline void to_json(nlohmann::json& j, const Rgb& c) { j = nlohmann::json{c.r, c.g, c.b}; }

inline void from_json(const nlohmann::json& j, Rgb& c) {
    c.r = j.at(0).get<std::uint8_t>();
    c.g = j.at(1).get<std::uint8_t>();
    c.b = j.at(2).get<std::uint8_t>();
}

inline void to_json(nlohmann::json& j, const SeriesSpec& s) {
    j = nlohmann::json{{"label", s.label},
                       {"rgb", s.rgb},
                       {"color_name", s.color_name},
                       {"line_style", to_string(s.line_style)},
                       {"border", to_string(s.border)},
                       {"marker", to_string(s.marker)}};
}

inline void from_json(const nlohmann::json& j, SeriesSpec& s) {
    s.label = j.at("label").get<std::string>();
    s.rgb = j.at("rgb").get<Rgb>();
    s.color_name = j.at("color_name").get<std::string>();
    s.line_style = line_style_from_string(j.at("line_style").get<std::string>());
    s.border = border_type_from_string(j.at("border").get<std::string>());
    s.marker = marker_from_string(j.at("marker").get<std::string>());
}

inline void to_json(nlohmann::json& j, const ChartSpec& s) {
    j = nlohmann::json{
        {"chart_id", s.chart_id},
        {"chart_type", to_string(s.chart_type)},
        {"title", s.title},
        {"title_visible", s.title_visible},
        {"series", s.series},
        {"x_labels", s.x_labels},
        {"shown_x_labels", s.shown_x_labels},
        {"values", s.values},
        {"value_labels_visible", s.value_labels_visible},
        {"value_label_pos", s.value_label_pos == ValueLabelPos::Above ? "above" : "inside"},
        {"axis", {{"min", s.axis_min}, {"max", s.axis_max}, {"step", s.axis_step},
                  {"x_visible", s.x_axis_visible}, {"y_visible", s.y_axis_visible}}},
        {"grid_lines", s.grid_lines},
        {"legend_position", to_string(s.legend_position)},
        {"stacked", s.stacked},
        {"font_family", s.font_family},
        {"font_size", s.font_size},
        {"line_width", s.line_width},
        {"canvas", {s.canvas_w, s.canvas_h}},
        {"background", s.background},
        {"seed_id", s.seed_id},
        {"domain_tag", s.domain_tag},
        {"x_topic", s.x_topic},
        {"x_unit", s.x_unit},
        {"y_topic", s.y_topic},
        {"y_unit", s.y_unit},
        {"x_kind", to_string(s.x_kind)},
        {"value_range", {s.value_lo, s.value_hi}},
        {"precision", s.precision},
        {"palette_id", s.palette_id},
        {"tick_branch", s.tick_branch}};
}

inline void from_json(const nlohmann::json& j, ChartSpec& s) {
    s.chart_id = j.at("chart_id").get<std::string>();
    s.chart_type = chart_type_from_string(j.at("chart_type").get<std::string>());
    s.title = j.at("title").get<std::string>();
    s.title_visible = j.at("title_visible").get<bool>();
    s.series = j.at("series").get<std::vector<SeriesSpec>>();
    s.x_labels = j.at("x_labels").get<std::vector<std::string>>();
    s.shown_x_labels = j.at("shown_x_labels").get<std::vector<std::string>>();
    s.values = j.at("values").get<std::map<std::string, std::vector<double>>>();
    s.value_labels_visible = j.at("value_labels_visible").get<bool>();
    s.value_label_pos = j.at("value_label_pos").get<std::string>() == "above"
                            ? ValueLabelPos::Above
                            : ValueLabelPos::Inside;
    const auto& axis = j.at("axis");
    s.axis_min = axis.at("min").get<double>();
    s.axis_max = axis.at("max").get<double>();
    s.axis_step = axis.at("step").get<double>();
    s.x_axis_visible = axis.at("x_visible").get<bool>();
    s.y_axis_visible = axis.at("y_visible").get<bool>();
    s.grid_lines = j.at("grid_lines").get<bool>();
    s.legend_position = legend_pos_from_string(j.at("legend_position").get<std::string>());
    s.stacked = j.at("stacked").get<bool>();
    s.font_family = j.at("font_family").get<std::string>();
    s.font_size = j.at("font_size").get<int>();
    s.line_width = j.at("line_width").get<double>();
    s.canvas_w = j.at("canvas").at(0).get<int>();
    s.canvas_h = j.at("canvas").at(1).get<int>();
    s.background = j.at("background").get<Rgb>();
    s.seed_id = j.at("seed_id").get<std::string>();
    s.domain_tag = j.at("domain_tag").get<std::string>();
    s.x_topic = j.at("x_topic").get<std::string>();
    s.x_unit = j.at("x_unit").get<std::string>();
    s.y_topic = j.at("y_topic").get<std::string>();
    s.y_unit = j.at("y_unit").get<std::string>();
    s.x_kind = label_kind_from_string(j.at("x_kind").get<std::string>());
    s.value_lo = j.at("value_range").at(0).get<double>();
    s.value_hi = j.at("value_range").at(1).get<double>();
    s.precision = j.at("precision").get<int>();
    s.palette_id = j.at("palette_id").get<std::string>();
    s.tick_branch = j.at("tick_branch").get<int>();
}

inline void to_json(nlohmann::json& j, const SeriesExtremum& e) {
    j = nlohmann::json{{"max_label", e.max_label},
                       {"min_label", e.min_label},
                       {"max_tied", e.max_tied},
                       {"min_tied", e.min_tied}};
}

inline void from_json(const nlohmann::json& j, SeriesExtremum& e) {
    e.max_label = j.at("max_label").get<std::string>();
    e.min_label = j.at("min_label").get<std::string>();
    e.max_tied = j.at("max_tied").get<bool>();
    e.min_tied = j.at("min_tied").get<bool>();
}

inline void to_json(nlohmann::json& j, const VisualAttrs& v) {
    j = nlohmann::json{{"color_name", v.color_name},
                       {"style_name", v.style_name},
                       {"legend_index", v.legend_index}};
}

inline void from_json(const nlohmann::json& j, VisualAttrs& v) {
    v.color_name = j.at("color_name").get<std::string>();
    v.style_name = j.at("style_name").get<std::string>();
    v.legend_index = j.at("legend_index").get<int>();
}

inline void to_json(nlohmann::json& j, const GroundTruth& g) {
    j = nlohmann::json{{"chart_id", g.chart_id},
                       {"chart_type", to_string(g.chart_type)},
                       {"title_visible", g.title_visible},
                       {"title_clear", g.title_clear},
                       {"title", g.title},
                       {"data_table", g.data_table},
                       {"visual_map", g.visual_map},
                       {"extrema", g.extrema},
                       {"x_order", g.x_order},
                       {"series_order", g.series_order},
                       {"shown_x_labels", g.shown_x_labels},
                       {"omitted_x_labels", g.omitted_x_labels},
                       {"values_labeled", g.values_labeled},
                       {"stacked", g.stacked},
                       {"x_topic", g.x_topic},
                       {"x_unit", g.x_unit},
                       {"y_topic", g.y_topic},
                       {"y_unit", g.y_unit},
                       {"precision", g.precision}};
}

inline void from_json(const nlohmann::json& j, GroundTruth& g) {
    g.chart_id = j.at("chart_id").get<std::string>();
    g.chart_type = chart_type_from_string(j.at("chart_type").get<std::string>());
    g.title_visible = j.at("title_visible").get<bool>();
    g.title_clear = j.at("title_clear").get<bool>();
    g.title = j.at("title").get<std::string>();
    g.data_table = j.at("data_table").get<std::map<std::string, std::map<std::string, double>>>();
    g.visual_map = j.at("visual_map").get<std::map<std::string, VisualAttrs>>();
    g.extrema = j.at("extrema").get<std::map<std::string, SeriesExtremum>>();
    g.x_order = j.at("x_order").get<std::vector<std::string>>();
    g.series_order = j.at("series_order").get<std::vector<std::string>>();
    g.shown_x_labels = j.at("shown_x_labels").get<std::vector<std::string>>();
    g.omitted_x_labels = j.at("omitted_x_labels").get<std::vector<std::string>>();
    g.values_labeled = j.at("values_labeled").get<bool>();
    g.stacked = j.at("stacked").get<bool>();
    g.x_topic = j.at("x_topic").get<std::string>();
    g.x_unit = j.at("x_unit").get<std::string>();
    g.y_topic = j.at("y_topic").get<std::string>();
    g.y_unit = j.at("y_unit").get<std::string>();
    g.precision = j.at("precision").get<int>();
}

struct ChartPair {
    ChartSpec spec;
    GroundTruth gt;
};

inline void to_json(nlohmann::json& j, const ChartPair& p) {
    j = nlohmann::json{{"spec", p.spec}, {"ground_truth", p.gt}};
}

inline void from_json(const nlohmann::json& j, ChartPair& p) {
    p.spec = j.at("spec").get<ChartSpec>();
    p.gt = j.at("ground_truth").get<GroundTruth>();
}

} // namespace chartforge
