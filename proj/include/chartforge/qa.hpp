#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/answer.hpp"
#include "chartforge/chart.hpp"
#include "chartforge/qa_templates.hpp"
#include "chartforge/rng.hpp"

namespace chartforge {

enum class QAForm { Direct, VCot };

inline std::string to_string(QAForm f) { return f == QAForm::Direct ? "direct-answer" : "vcot"; }

inline QAForm qa_form_from_string(const std::string& s) {
    if (s == "direct-answer") return QAForm::Direct;
    if (s == "vcot") return QAForm::VCot;
    fail(Errc::config, "unknown qa form: " + s);
}

struct QAPair {
    std::string qa_id;
    std::string chart_id;
    std::string template_id;
    std::string question;
    Answer gold;
    Tolerance tolerance = Tolerance::Strict;
    Retrieval retrieval_class = Retrieval::Direct;
    QAForm form = QAForm::Direct;
    std::string cot_text; // vCoT form only
    std::map<std::string, std::string> bindings;
    std::string chart_type;
};

inline void to_json(nlohmann::json& j, const QAPair& p) {
    j = nlohmann::json{{"qa_id", p.qa_id},
                       {"chart_id", p.chart_id},
                       {"template_id", p.template_id},
                       {"question", p.question},
                       {"gold", p.gold},
                       {"gold_text", p.gold.canonical()},
                       {"tolerance", to_string(p.tolerance)},
                       {"retrieval_class", to_string(p.retrieval_class)},
                       {"form", to_string(p.form)},
                       {"cot_text", p.cot_text},
                       {"bindings", p.bindings},
                       {"chart_type", p.chart_type}};
}

inline void from_json(const nlohmann::json& j, QAPair& p) {
    p.qa_id = j.at("qa_id").get<std::string>();
    p.chart_id = j.at("chart_id").get<std::string>();
    p.template_id = j.at("template_id").get<std::string>();
    p.question = j.at("question").get<std::string>();
    p.gold = j.at("gold").get<Answer>();
    p.tolerance = tolerance_from_string(j.at("tolerance").get<std::string>());
    p.retrieval_class = retrieval_from_string(j.at("retrieval_class").get<std::string>());
    p.form = qa_form_from_string(j.at("form").get<std::string>());
    p.cot_text = j.value("cot_text", std::string());
    p.bindings = j.at("bindings").get<std::map<std::string, std::string>>();
    p.chart_type = j.value("chart_type", std::string());
}

namespace qa_detail {

inline std::string ordinal(int n) {
    int mod100 = n % 100;
    if (mod100 >= 11 && mod100 <= 13) return std::to_string(n) + "th";
    switch (n % 10) {
    case 1: return std::to_string(n) + "st";
    case 2: return std::to_string(n) + "nd";
    case 3: return std::to_string(n) + "rd";
    default: return std::to_string(n) + "th";
    }
}

inline double parse_num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

inline const std::string& require(const std::map<std::string, std::string>& bindings,
                                  const std::string& slot) {
    auto it = bindings.find(slot);
    if (it == bindings.end()) fail(Errc::binding, "unbound slot: " + slot);
    return it->second;
}

inline std::string series_by_visual(const GroundTruth& gt, const std::string& color,
                                    const std::string& style, bool check_style) {
    std::string found;
    for (const auto& [label, vis] : gt.visual_map) {
        if (vis.color_name != color) continue;
        if (check_style && vis.style_name != style) continue;
        if (!found.empty()) fail(Errc::ambiguity, "visual description not unique: " + color);
        found = label;
    }
    if (found.empty()) fail(Errc::not_found, "no series with color " + color);
    return found;
}

inline std::vector<double> values_at(const GroundTruth& gt, const std::string& x) {
    std::vector<double> out;
    for (const auto& label : gt.series_order) out.push_back(gt.value(label, x));
    return out;
}

inline bool is_shown(const GroundTruth& gt, const std::string& x) {
    for (const auto& s : gt.shown_x_labels)
        if (s == x) return true;
    return false;
}

inline bool year_like(const std::string& s) {
    if (s.size() != 4) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    int v = std::atoi(s.c_str());
    return v >= 1500 && v <= 2100;
}

inline const SeriesExtremum& extremum(const GroundTruth& gt, const std::string& label) {
    auto it = gt.extrema.find(label);
    if (it == gt.extrema.end()) fail(Errc::not_found, "no extrema for series: " + label);
    return it->second;
}

// Pie helpers: sector shares in drawing order.
inline std::vector<std::pair<std::string, double>> pie_shares(const GroundTruth& gt) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& label : gt.series_order) out.push_back({label, gt.pie_share(label)});
    return out;
}

} // namespace qa_detail

// Computes the gold answer for a template family purely from ground truth.
// Throws Errc::binding when a slot is missing and Errc::ambiguity when an
// inverse lookup has no unique answer.
inline Answer derive_answer(const QATemplate& tmpl,
                            const std::map<std::string, std::string>& bindings,
                            const GroundTruth& gt) {
    using namespace qa_detail;
    const int prec = gt.precision;

    switch (tmpl.family) {
    case Family::ValueAtLabel:
        return Answer::number(gt.value(require(bindings, "legend_label"),
                                       require(bindings, "xlabel")),
                              prec);

    case Family::LegendForValueAtX: {
        const std::string& x = require(bindings, "xlabel");
        double target = parse_num(require(bindings, "value_label"));
        std::string found;
        for (const auto& label : gt.series_order) {
            if (gt.value(label, x) == target) {
                if (!found.empty()) fail(Errc::ambiguity, "duplicate value at " + x);
                found = label;
            }
        }
        if (found.empty()) fail(Errc::not_found, "no series with that value at " + x);
        return Answer::label(found);
    }

    case Family::ValuesAtXBottomToTop:
    case Family::ValuesAtXAscending: {
        std::vector<double> vals = values_at(gt, require(bindings, "xlabel"));
        std::sort(vals.begin(), vals.end());
        return Answer::numbers(std::move(vals), prec);
    }

    case Family::ValuesAscendingAtTickLeftOf: {
        const std::string& x = require(bindings, "xlabel");
        std::size_t pos = gt.x_order.size();
        for (std::size_t i = 0; i < gt.x_order.size(); ++i)
            if (gt.x_order[i] == x) pos = i;
        if (pos == gt.x_order.size()) fail(Errc::not_found, "unknown x label: " + x);
        std::string prev;
        for (std::size_t i = pos; i-- > 0;) {
            if (is_shown(gt, gt.x_order[i])) {
                prev = gt.x_order[i];
                break;
            }
        }
        if (prev.empty()) fail(Errc::binding, "no shown tick left of " + x);
        std::vector<double> vals = values_at(gt, prev);
        std::sort(vals.begin(), vals.end());
        return Answer::numbers(std::move(vals), prec);
    }

    case Family::LegendWithLineVisual:
        return Answer::label(series_by_visual(gt, require(bindings, "line_color"),
                                              require(bindings, "line_style"), true));

    case Family::LineStyleOfLegend: {
        auto it = gt.visual_map.find(require(bindings, "legend_label"));
        if (it == gt.visual_map.end()) fail(Errc::not_found, "unknown legend label");
        return Answer::style(it->second.style_name);
    }

    case Family::NthPointOnLineByVisual: {
        std::string label = series_by_visual(gt, require(bindings, "line_color"),
                                             require(bindings, "line_style"), true);
        int n = std::atoi(require(bindings, "n").c_str());
        if (n < 1 || static_cast<std::size_t>(n) > gt.x_order.size())
            fail(Errc::binding, "point index out of range");
        return Answer::number(gt.value(label, gt.x_order[static_cast<std::size_t>(n - 1)]), prec);
    }

    case Family::LinesBelowCount: {
        const std::string& label = require(bindings, "legend_label");
        const std::string& x = require(bindings, "xlabel");
        double v = gt.value(label, x);
        long long below = 0;
        for (const auto& other : gt.series_order) {
            if (other == label) continue;
            double ov = gt.value(other, x);
            if (ov == v) fail(Errc::ambiguity, "tie at " + x);
            if (ov < v) ++below;
        }
        return Answer::count(below);
    }

    case Family::PeakXOfLegend:
    case Family::PeakXByVisual: {
        std::string label = tmpl.family == Family::PeakXOfLegend
                                ? require(bindings, "legend_label")
                                : series_by_visual(gt, require(bindings, "line_color"),
                                                   require(bindings, "line_style"), true);
        const SeriesExtremum& ext = qa_detail::extremum(gt, label);
        if (ext.max_tied) fail(Errc::ambiguity, "tied maximum for " + label);
        return Answer::label(ext.max_label);
    }

    case Family::TroughXOfLegend:
    case Family::TroughXByVisual: {
        std::string label = tmpl.family == Family::TroughXOfLegend
                                ? require(bindings, "legend_label")
                                : series_by_visual(gt, require(bindings, "line_color"),
                                                   require(bindings, "line_style"), true);
        const SeriesExtremum& ext = qa_detail::extremum(gt, label);
        if (ext.min_tied) fail(Errc::ambiguity, "tied minimum for " + label);
        return Answer::label(ext.min_label);
    }

    case Family::NthBarFromLeftByVisual:
    case Family::NthBarFromBottomByVisual: {
        std::string label = series_by_visual(gt, require(bindings, "line_color"),
                                             require(bindings, "border_type"), true);
        int n = std::atoi(require(bindings, "n").c_str());
        std::size_t count = gt.x_order.size();
        if (n < 1 || static_cast<std::size_t>(n) > count)
            fail(Errc::binding, "bar index out of range");
        // Horizontal bars draw the first category topmost, so counting from
        // the bottom walks the category order backwards.
        std::size_t idx = tmpl.family == Family::NthBarFromLeftByVisual
                              ? static_cast<std::size_t>(n - 1)
                              : count - static_cast<std::size_t>(n);
        return Answer::number(gt.value(label, gt.x_order[idx]), prec);
    }

    case Family::LongestBarOfColor:
    case Family::ShortestBarOfColor: {
        std::string label = series_by_visual(gt, require(bindings, "line_color"), "", false);
        const SeriesExtremum& ext = qa_detail::extremum(gt, label);
        bool longest = tmpl.family == Family::LongestBarOfColor;
        if (longest && ext.max_tied) fail(Errc::ambiguity, "tied maximum for " + label);
        if (!longest && ext.min_tied) fail(Errc::ambiguity, "tied minimum for " + label);
        return Answer::number(gt.value(label, longest ? ext.max_label : ext.min_label), prec);
    }

    case Family::SectorCount:
        return Answer::count(static_cast<long long>(gt.series_order.size()));

    case Family::SectorShareByLabel:
        return Answer::number(gt.pie_share(require(bindings, "sector_label")), prec);

    case Family::SectorShareByColor: {
        std::string label = series_by_visual(gt, require(bindings, "name_color"), "", false);
        return Answer::number(gt.pie_share(label), prec);
    }

    case Family::LargestSectorShare:
    case Family::SmallestSectorShare: {
        auto shares = qa_detail::pie_shares(gt);
        bool largest = tmpl.family == Family::LargestSectorShare;
        double best = shares.front().second;
        for (const auto& [label, share] : shares)
            best = largest ? std::max(best, share) : std::min(best, share);
        int hits = 0;
        for (const auto& [label, share] : shares)
            if (share == best) ++hits;
        if (hits > 1) fail(Errc::ambiguity, "tied sector extremum");
        return Answer::number(best, prec);
    }

    case Family::ScatterYAtX:
        return Answer::number(gt.value(require(bindings, "legend_name"),
                                       require(bindings, "x_value")),
                              prec);

    case Family::ScatterXAtY: {
        const std::string& label = require(bindings, "legend_name");
        double target = qa_detail::parse_num(require(bindings, "y_value"));
        std::string found;
        for (const auto& x : gt.x_order) {
            if (gt.value(label, x) == target) {
                if (!found.empty()) fail(Errc::ambiguity, "duplicate y value in " + label);
                found = x;
            }
        }
        if (found.empty()) fail(Errc::not_found, "no point with that y value");
        return Answer::number(qa_detail::parse_num(found), 0);
    }

    case Family::LegendCount:
        return Answer::count(static_cast<long long>(gt.series_order.size()));

    case Family::DistinctColorCount: {
        std::set<std::string> colors;
        for (const auto& [label, vis] : gt.visual_map) colors.insert(vis.color_name);
        return Answer::count(static_cast<long long>(colors.size()));
    }

    case Family::ScatterPeakXOfLegend:
    case Family::ScatterTroughXOfLegend: {
        const std::string& label = require(bindings, "legend_name");
        const SeriesExtremum& ext = qa_detail::extremum(gt, label);
        bool peak = tmpl.family == Family::ScatterPeakXOfLegend;
        if (peak && ext.max_tied) fail(Errc::ambiguity, "tied maximum for " + label);
        if (!peak && ext.min_tied) fail(Errc::ambiguity, "tied minimum for " + label);
        return Answer::number(qa_detail::parse_num(peak ? ext.max_label : ext.min_label), 0);
    }

    case Family::ScatterLegendForXY: {
        const std::string& x = require(bindings, "x_value");
        double target = qa_detail::parse_num(require(bindings, "y_value"));
        std::string found;
        for (const auto& label : gt.series_order) {
            if (gt.value(label, x) == target) {
                if (!found.empty()) fail(Errc::ambiguity, "duplicate value at x");
                found = label;
            }
        }
        if (found.empty()) fail(Errc::not_found, "no series with that point");
        return Answer::label(found);
    }
    }
    fail(Errc::config, "unhandled template family");
}

namespace qa_detail {

inline std::vector<std::string> untied_series(const GroundTruth& gt, bool for_max) {
    std::vector<std::string> out;
    for (const auto& label : gt.series_order) {
        auto it = gt.extrema.find(label);
        if (it == gt.extrema.end()) continue;
        if (for_max ? !it->second.max_tied : !it->second.min_tied) out.push_back(label);
    }
    return out;
}

inline bool pie_extremum_untied(const GroundTruth& gt, bool largest) {
    auto shares = pie_shares(gt);
    double best = shares.front().second;
    for (const auto& [l, s] : shares) best = largest ? std::max(best, s) : std::min(best, s);
    int hits = 0;
    for (const auto& [l, s] : shares)
        if (s == best) ++hits;
    return hits == 1;
}

inline bool has_unique_value_at_some_x(const GroundTruth& gt) {
    for (const auto& x : gt.x_order) {
        std::map<double, int> counts;
        for (const auto& label : gt.series_order) ++counts[gt.value(label, x)];
        for (const auto& [v, c] : counts)
            if (c == 1) return true;
    }
    return false;
}

inline bool has_tie_free_x(const GroundTruth& gt) {
    for (const auto& x : gt.x_order) {
        std::set<double> seen;
        bool tie = false;
        for (const auto& label : gt.series_order)
            if (!seen.insert(gt.value(label, x)).second) tie = true;
        if (!tie) return true;
    }
    return false;
}

inline bool has_shown_with_shown_predecessor(const GroundTruth& gt) {
    bool seen_shown = false;
    for (const auto& x : gt.x_order) {
        bool shown = is_shown(gt, x);
        if (shown && seen_shown) return true;
        seen_shown = seen_shown || shown;
    }
    return false;
}

inline bool has_series_with_unique_y(const GroundTruth& gt) {
    for (const auto& label : gt.series_order) {
        std::map<double, int> counts;
        for (const auto& x : gt.x_order) ++counts[gt.value(label, x)];
        for (const auto& [v, c] : counts)
            if (c == 1) return true;
    }
    return false;
}

} // namespace qa_detail

// Returns the templates whose chart type matches and whose slots are
// satisfiable on this chart (extremum families are excluded when the
// relevant extrema are tied, inverse lookups when no unique value exists).
inline std::vector<const QATemplate*> applicable_templates(const GroundTruth& gt,
                                                           const ChartSpec& spec) {
    using namespace qa_detail;
    std::vector<const QATemplate*> out;
    std::size_t n_series = gt.series_order.size();

    for (const auto& t : builtin_templates()) {
        if (!template_applies_to(t, spec.chart_type)) continue;
        bool ok = true;
        switch (t.family) {
        case Family::ValuesAtXBottomToTop:
        case Family::ValuesAtXAscending: ok = n_series >= 2; break;
        case Family::ValuesAscendingAtTickLeftOf:
            ok = n_series >= 2 && has_shown_with_shown_predecessor(gt);
            break;
        case Family::LinesBelowCount: ok = n_series >= 2 && has_tie_free_x(gt); break;
        case Family::LegendForValueAtX:
        case Family::ScatterLegendForXY: ok = has_unique_value_at_some_x(gt); break;
        case Family::PeakXOfLegend:
        case Family::PeakXByVisual:
        case Family::LongestBarOfColor:
        case Family::ScatterPeakXOfLegend: ok = !untied_series(gt, true).empty(); break;
        case Family::TroughXOfLegend:
        case Family::TroughXByVisual:
        case Family::ShortestBarOfColor:
        case Family::ScatterTroughXOfLegend: ok = !untied_series(gt, false).empty(); break;
        case Family::LargestSectorShare: ok = pie_extremum_untied(gt, true); break;
        case Family::SmallestSectorShare: ok = pie_extremum_untied(gt, false); break;
        case Family::ScatterXAtY: ok = has_series_with_unique_y(gt); break;
        default: break;
        }
        if (ok) out.push_back(&t);
    }
    return out;
}

namespace qa_detail {

inline std::string pick_label(const GroundTruth& gt, Rng& rng) {
    return gt.series_order[rng.below(static_cast<std::uint32_t>(gt.series_order.size()))];
}

inline std::string pick_x(const GroundTruth& gt, Rng& rng) {
    return gt.x_order[rng.below(static_cast<std::uint32_t>(gt.x_order.size()))];
}

inline std::string pick_untied(const GroundTruth& gt, bool for_max, Rng& rng) {
    auto candidates = untied_series(gt, for_max);
    if (candidates.empty()) fail(Errc::ambiguity, "no untied series");
    return candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
}

// Draws one candidate slot assignment for a template. May produce bindings
// that later fail derivation (e.g. ambiguous inverse); callers retry.
inline std::map<std::string, std::string> draw_bindings(const QATemplate& tmpl,
                                                        const GroundTruth& gt, Rng& rng) {
    std::map<std::string, std::string> b;
    auto visual_of = [&](const std::string& label) -> const VisualAttrs& {
        return gt.visual_map.at(label);
    };

    switch (tmpl.family) {
    case Family::ValueAtLabel:
        b["legend_label"] = pick_label(gt, rng);
        b["xlabel"] = pick_x(gt, rng);
        break;
    case Family::LegendForValueAtX: {
        std::string x = pick_x(gt, rng);
        std::string label = pick_label(gt, rng);
        b["xlabel"] = x;
        b["value_label"] = Answer::number(gt.value(label, x), gt.precision).canonical();
        break;
    }
    case Family::ValuesAtXBottomToTop:
    case Family::ValuesAtXAscending:
        b["xlabel"] = pick_x(gt, rng);
        break;
    case Family::ValuesAscendingAtTickLeftOf: {
        std::vector<std::string> candidates;
        bool seen_shown = false;
        for (const auto& x : gt.x_order) {
            bool shown = is_shown(gt, x);
            if (shown && seen_shown) candidates.push_back(x);
            seen_shown = seen_shown || shown;
        }
        if (candidates.empty()) fail(Errc::binding, "no shown tick with predecessor");
        b["xlabel"] = candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
        break;
    }
    case Family::LegendWithLineVisual:
    case Family::NthPointOnLineByVisual:
    case Family::PeakXByVisual:
    case Family::TroughXByVisual: {
        std::string label;
        if (tmpl.family == Family::PeakXByVisual)
            label = pick_untied(gt, true, rng);
        else if (tmpl.family == Family::TroughXByVisual)
            label = pick_untied(gt, false, rng);
        else
            label = pick_label(gt, rng);
        b["line_color"] = visual_of(label).color_name;
        b["line_style"] = visual_of(label).style_name;
        if (tmpl.family == Family::NthPointOnLineByVisual)
            b["n"] = std::to_string(rng.range(1, static_cast<int>(gt.x_order.size())));
        break;
    }
    case Family::LineStyleOfLegend:
        b["legend_label"] = pick_label(gt, rng);
        break;
    case Family::LinesBelowCount: {
        std::vector<std::pair<std::string, std::string>> candidates;
        for (const auto& x : gt.x_order) {
            std::set<double> seen;
            bool tie = false;
            for (const auto& label : gt.series_order)
                if (!seen.insert(gt.value(label, x)).second) tie = true;
            if (!tie)
                for (const auto& label : gt.series_order) candidates.push_back({label, x});
        }
        if (candidates.empty()) fail(Errc::binding, "all x positions have ties");
        auto& [label, x] = candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
        b["legend_label"] = label;
        b["xlabel"] = x;
        b["value_label"] = Answer::number(gt.value(label, x), gt.precision).canonical();
        break;
    }
    case Family::PeakXOfLegend:
        b["legend_label"] = pick_untied(gt, true, rng);
        break;
    case Family::TroughXOfLegend:
        b["legend_label"] = pick_untied(gt, false, rng);
        break;
    case Family::NthBarFromLeftByVisual:
    case Family::NthBarFromBottomByVisual: {
        std::string label = pick_label(gt, rng);
        b["line_color"] = visual_of(label).color_name;
        b["border_type"] = visual_of(label).style_name;
        b["n"] = std::to_string(rng.range(1, static_cast<int>(gt.x_order.size())));
        break;
    }
    case Family::LongestBarOfColor:
        b["line_color"] = visual_of(pick_untied(gt, true, rng)).color_name;
        break;
    case Family::ShortestBarOfColor:
        b["line_color"] = visual_of(pick_untied(gt, false, rng)).color_name;
        break;
    case Family::SectorCount:
    case Family::LegendCount:
    case Family::DistinctColorCount:
        break;
    case Family::SectorShareByLabel:
        b["sector_label"] = pick_label(gt, rng);
        b["series_label"] = gt.title;
        break;
    case Family::SectorShareByColor:
        b["name_color"] = visual_of(pick_label(gt, rng)).color_name;
        break;
    case Family::LargestSectorShare:
    case Family::SmallestSectorShare:
        b["series_label"] = gt.title;
        break;
    case Family::ScatterYAtX:
        b["legend_name"] = pick_label(gt, rng);
        b["x_value"] = pick_x(gt, rng);
        b["x_axis_topic"] = gt.x_topic;
        b["y_axis_topic"] = gt.y_topic;
        break;
    case Family::ScatterXAtY: {
        std::vector<std::pair<std::string, double>> candidates;
        for (const auto& label : gt.series_order) {
            std::map<double, int> counts;
            for (const auto& x : gt.x_order) ++counts[gt.value(label, x)];
            for (const auto& [v, c] : counts)
                if (c == 1) candidates.push_back({label, v});
        }
        if (candidates.empty()) fail(Errc::binding, "no unique y value");
        auto& [label, y] = candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
        b["legend_name"] = label;
        b["y_value"] = Answer::number(y, gt.precision).canonical();
        b["x_axis_topic"] = gt.x_topic;
        b["y_axis_topic"] = gt.y_topic;
        break;
    }
    case Family::ScatterPeakXOfLegend:
        b["legend_name"] = pick_untied(gt, true, rng);
        b["x_axis_topic"] = gt.x_topic;
        b["y_axis_topic"] = gt.y_topic;
        break;
    case Family::ScatterTroughXOfLegend:
        b["legend_name"] = pick_untied(gt, false, rng);
        b["x_axis_topic"] = gt.x_topic;
        b["y_axis_topic"] = gt.y_topic;
        break;
    case Family::ScatterLegendForXY: {
        std::vector<std::pair<std::string, std::string>> candidates;
        for (const auto& x : gt.x_order) {
            std::map<double, int> counts;
            for (const auto& label : gt.series_order) ++counts[gt.value(label, x)];
            for (const auto& label : gt.series_order)
                if (counts[gt.value(label, x)] == 1) candidates.push_back({label, x});
        }
        if (candidates.empty()) fail(Errc::binding, "no unique point");
        auto& [label, x] = candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
        b["x_value"] = x;
        b["y_value"] = Answer::number(gt.value(label, x), gt.precision).canonical();
        b["x_axis_topic"] = gt.x_topic;
        b["y_axis_topic"] = gt.y_topic;
        break;
    }
    }
    return b;
}

inline std::string substitute(const std::string& pattern,
                              const std::map<std::string, std::string>& bindings) {
    std::string out = pattern;
    auto n_it = bindings.find("n");
    if (n_it != bindings.end())
        replace_all(out, "{n}th", ordinal(std::atoi(n_it->second.c_str())));
    for (const auto& [slot, value] : bindings) replace_all(out, "{" + slot + "}", value);
    return out;
}

inline Tolerance resolve_tolerance(const QATemplate& tmpl,
                                   const std::map<std::string, std::string>&,
                                   const GroundTruth& gt, const Answer& answer) {
    switch (tmpl.tolerance) {
    case ToleranceRule::AlwaysStrict: return Tolerance::Strict;
    case ToleranceRule::ValueDependent:
        return gt.values_labeled ? Tolerance::Strict : Tolerance::Flex;
    case ToleranceRule::XLabelNumeric: {
        // The answer is an axis tick value: strict when printed on the axis
        // or unmistakable (year-like), flex when its tick was omitted.
        std::string as_label = fmt_fixed(answer.num, 0);
        if (year_like(as_label)) return Tolerance::Strict;
        for (const auto& s : gt.shown_x_labels)
            if (s == as_label) return Tolerance::Strict;
        return Tolerance::Flex;
    }
    }
    return Tolerance::Strict;
}

// A short extraction narrative assembled from the same ground-truth lookups
// the answer came from; attached to vCoT-form pairs.
inline std::string compose_cot(const QATemplate& tmpl,
                               const std::map<std::string, std::string>& b,
                               const GroundTruth& gt, const Answer& answer) {
    auto get = [&](const char* k) {
        auto it = b.find(k);
        return it == b.end() ? std::string() : it->second;
    };
    std::string gold = answer.canonical();
    std::vector<std::string> steps;
    switch (tmpl.family) {
    case Family::ValueAtLabel: {
        const auto& vis = gt.visual_map.at(get("legend_label"));
        steps = {"Locate '" + get("legend_label") + "' in the legend; it is drawn in " +
                     vis.color_name + ".",
                 "Follow that series to the position labeled '" + get("xlabel") + "'.",
                 "Read the value there: " + gold + "."};
        break;
    }
    case Family::LegendForValueAtX:
        steps = {"Find the position labeled '" + get("xlabel") + "' on the x-axis.",
                 "Compare the series values at that position with " + get("value_label") + ".",
                 "The matching series is '" + gold + "'; check its legend entry."};
        break;
    case Family::ValuesAtXBottomToTop:
    case Family::ValuesAtXAscending:
        steps = {"Find the position labeled '" + get("xlabel") + "'.",
                 "Read every series value at that position.",
                 "Order them from smallest to largest: " + gold + "."};
        break;
    case Family::ValuesAscendingAtTickLeftOf:
        steps = {"Find the tick immediately left of '" + get("xlabel") + "'.",
                 "Read every series value at that tick.",
                 "Sort them ascending: " + gold + "."};
        break;
    case Family::LegendWithLineVisual:
    case Family::PeakXByVisual:
    case Family::TroughXByVisual:
        steps = {"Look for the " + get("line_color") + " " + get("line_style") + " line.",
                 "Match it to its legend entry.",
                 tmpl.family == Family::LegendWithLineVisual
                     ? "That entry reads '" + gold + "'."
                     : "Scan that line for its extreme point; it sits at '" + gold + "'."};
        break;
    case Family::LineStyleOfLegend:
        steps = {"Locate '" + get("legend_label") + "' in the legend.",
                 "Inspect how its line is drawn.", "The stroke is " + gold + "."};
        break;
    case Family::NthPointOnLineByVisual:
        steps = {"Identify the " + get("line_color") + " " + get("line_style") + " line.",
                 "Count " + get("n") + " data points from the left on it.",
                 "Read that point's value: " + gold + "."};
        break;
    case Family::LinesBelowCount:
        steps = {"Locate the '" + get("legend_label") + "' line at '" + get("xlabel") + "'.",
                 "It sits at " + get("value_label") + " there.",
                 "Count the lines strictly below that point: " + gold + "."};
        break;
    case Family::PeakXOfLegend:
    case Family::TroughXOfLegend:
        steps = {"Locate '" + get("legend_label") + "' in the legend and follow its line.",
                 "Scan it for the extreme point.",
                 "That point is above the x-label '" + gold + "'."};
        break;
    case Family::NthBarFromLeftByVisual:
    case Family::NthBarFromBottomByVisual:
        steps = {"Identify the " + get("line_color") + " bars with " + get("border_type") +
                     " border.",
                 "Count " + get("n") + " bars " +
                     (tmpl.family == Family::NthBarFromLeftByVisual ? "from the left."
                                                                    : "from the bottom."),
                 "Read that bar's value: " + gold + "."};
        break;
    case Family::LongestBarOfColor:
    case Family::ShortestBarOfColor:
        steps = {"Collect the " + get("line_color") + " bars.",
                 tmpl.family == Family::LongestBarOfColor
                     ? "Pick the longest one among them."
                     : "Pick the shortest one among them.",
                 "Its value reads " + gold + "."};
        break;
    case Family::SectorCount:
        steps = {"Walk around the pie once.", "Count each distinct sector.",
                 "There are " + gold + " sectors."};
        break;
    case Family::SectorShareByLabel:
        steps = {"Find the sector labeled '" + get("sector_label") + "' via the legend.",
                 "Read its share of the pie.", "It is " + gold + " percent."};
        break;
    case Family::SectorShareByColor:
        steps = {"Find the " + get("name_color") + " sector.", "Read its share of the pie.",
                 "It is " + gold + " percent."};
        break;
    case Family::LargestSectorShare:
    case Family::SmallestSectorShare:
        steps = {"Compare the sector sizes.",
                 tmpl.family == Family::LargestSectorShare ? "Pick the largest sector."
                                                           : "Pick the smallest sector.",
                 "Its share is " + gold + " percent."};
        break;
    case Family::ScatterYAtX:
        steps = {"Locate '" + get("legend_name") + "' points by their legend color.",
                 "Find the point at " + get("x_value") + " on the x-axis.",
                 "Its y value is " + gold + "."};
        break;
    case Family::ScatterXAtY:
        steps = {"Locate '" + get("legend_name") + "' points by their legend color.",
                 "Find the point at height " + get("y_value") + ".",
                 "Its x value is " + gold + "."};
        break;
    case Family::LegendCount:
        steps = {"Open the legend box.", "Count its entries.", "There are " + gold + "."};
        break;
    case Family::DistinctColorCount:
        steps = {"Look at the data point colors.", "Count the distinct ones.",
                 "There are " + gold + "."};
        break;
    case Family::ScatterPeakXOfLegend:
    case Family::ScatterTroughXOfLegend:
        steps = {"Locate '" + get("legend_name") + "' points by their legend color.",
                 tmpl.family == Family::ScatterPeakXOfLegend
                     ? "Find the highest of those points."
                     : "Find the lowest of those points.",
                 "Its x value is " + gold + "."};
        break;
    case Family::ScatterLegendForXY:
        steps = {"Find x = " + get("x_value") + " on the x-axis.",
                 "Pick the point there at height " + get("y_value") + ".",
                 "Its legend entry reads '" + gold + "'."};
        break;
    }
    steps.push_back("Answer: " + gold);
    return join(steps, " ");
}

} // namespace qa_detail

// Instantiates one QA pair from a template by seeded slot binding. Retries
// a bounded number of times when a draw lands on an ambiguous lookup, then
// gives up (the caller skips the template).
inline std::optional<QAPair> instantiate(const QATemplate& tmpl, const GroundTruth& gt,
                                         const ChartSpec& spec, Rng& rng) {
    constexpr int kMaxAttempts = 8;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        try {
            auto bindings = qa_detail::draw_bindings(tmpl, gt, rng);
            Answer gold = derive_answer(tmpl, bindings, gt);
            QAPair pair;
            pair.chart_id = gt.chart_id;
            pair.template_id = tmpl.template_id;
            pair.question = qa_detail::substitute(
                tmpl.paraphrases[rng.below(static_cast<std::uint32_t>(tmpl.paraphrases.size()))],
                bindings);
            pair.gold = gold;
            pair.tolerance = qa_detail::resolve_tolerance(tmpl, bindings, gt, gold);
            pair.retrieval_class = tmpl.retrieval;
            pair.form = QAForm::Direct;
            pair.bindings = std::move(bindings);
            pair.chart_type = to_string(spec.chart_type);
            return pair;
        } catch (const Error& e) {
            if (e.code() != Errc::ambiguity && e.code() != Errc::binding &&
                e.code() != Errc::not_found)
                throw;
        }
    }
    return std::nullopt;
}

struct QABatch {
    std::vector<QAPair> pairs;
    bool shortfall = false;
};

// Generates up to `count` unique QA pairs for one chart and marks a
// round(count * vcot_ratio) subset as vCoT form with populated narratives.
inline QABatch generate_qa_batch(const GroundTruth& gt, const ChartSpec& spec, int count,
                                 double vcot_ratio, Rng& rng) {
    if (count < 1) fail(Errc::config, "qa count must be >= 1");
    if (vcot_ratio < 0 || vcot_ratio > 1) fail(Errc::config, "vcot_ratio outside [0,1]");

    QABatch batch;
    auto templates = applicable_templates(gt, spec);
    if (templates.empty()) {
        batch.shortfall = true;
        return batch;
    }

    std::set<std::string> seen;
    int attempts = 0;
    const int max_attempts = count * 50;
    while (static_cast<int>(batch.pairs.size()) < count && attempts < max_attempts) {
        ++attempts;
        const QATemplate& tmpl =
            *templates[rng.below(static_cast<std::uint32_t>(templates.size()))];
        auto pair = instantiate(tmpl, gt, spec, rng);
        if (!pair) continue;
        std::string key = pair->template_id;
        for (const auto& [k, v] : pair->bindings) key += "|" + k + "=" + v;
        if (!seen.insert(key).second) continue;
        batch.pairs.push_back(std::move(*pair));
    }
    batch.shortfall = static_cast<int>(batch.pairs.size()) < count;

    for (std::size_t i = 0; i < batch.pairs.size(); ++i)
        batch.pairs[i].qa_id = gt.chart_id + "-q" + std::to_string(i);

    // Seeded vCoT subset of round(n * ratio) pairs.
    long long want = std::llround(static_cast<double>(batch.pairs.size()) * vcot_ratio);
    std::vector<std::size_t> order(batch.pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (long long i = 0; i < want; ++i) {
        QAPair& p = batch.pairs[order[static_cast<std::size_t>(i)]];
        p.form = QAForm::VCot;
        p.cot_text =
            qa_detail::compose_cot(find_template(p.template_id), p.bindings, gt, p.gold);
    }
    return batch;
}

} // namespace chartforge
