#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/battery.hpp"
#include "chartforge/compose.hpp"
#include "chartforge/grade.hpp"
#include "chartforge/normalize.hpp"

namespace chartforge {

enum class ActionKind {
    Drop,
    None,
    VaRandNum,
    VaMoreLegends,
    VaChangeNumScale,
    ViShuffleColor,
    ViChangeAxisScale,
    ViChangeColorSchemes,
    ViSwitchLegendPosition,
};

inline std::string to_string(ActionKind a) {
    switch (a) {
    case ActionKind::Drop: return "drop";
    case ActionKind::None: return "none";
    case ActionKind::VaRandNum: return "vaem-rand-num";
    case ActionKind::VaMoreLegends: return "vaem-more-legends";
    case ActionKind::VaChangeNumScale: return "vaem-change-num-scale";
    case ActionKind::ViShuffleColor: return "viem-shuffle-color";
    case ActionKind::ViChangeAxisScale: return "viem-change-axis-scale";
    case ActionKind::ViChangeColorSchemes: return "viem-change-color-schemes";
    case ActionKind::ViSwitchLegendPosition: return "viem-switch-legend-position";
    }
    return "none";
}

inline ActionKind action_from_string(const std::string& s) {
    static const ActionKind kinds[] = {
        ActionKind::Drop,          ActionKind::None,
        ActionKind::VaRandNum,     ActionKind::VaMoreLegends,
        ActionKind::VaChangeNumScale, ActionKind::ViShuffleColor,
        ActionKind::ViChangeAxisScale, ActionKind::ViChangeColorSchemes,
        ActionKind::ViSwitchLegendPosition};
    for (ActionKind k : kinds)
        if (to_string(k) == s) return k;
    fail(Errc::config, "unknown action: " + s);
}

inline bool is_vaem(ActionKind a) {
    return a == ActionKind::VaRandNum || a == ActionKind::VaMoreLegends ||
           a == ActionKind::VaChangeNumScale;
}

inline bool is_viem(ActionKind a) {
    return a == ActionKind::ViShuffleColor || a == ActionKind::ViChangeAxisScale ||
           a == ActionKind::ViChangeColorSchemes || a == ActionKind::ViSwitchLegendPosition;
}

// Per-dimension evaluator accuracies for one chart at one stage. With ten
// items per dimension both accuracies are multiples of 0.1.
struct EvalScore {
    std::string chart_id;
    int stage_k = 1;
    bool identity_pass = true;
    double e_value = 0;
    double e_visual = 0;
};

inline void to_json(nlohmann::json& j, const EvalScore& s) {
    j = nlohmann::json{{"chart_id", s.chart_id},
                       {"stage_k", s.stage_k},
                       {"identity_pass", s.identity_pass},
                       {"e_value", s.e_value},
                       {"e_visual", s.e_visual}};
}

inline void from_json(const nlohmann::json& j, EvalScore& s) {
    s.chart_id = j.at("chart_id").get<std::string>();
    s.stage_k = j.at("stage_k").get<int>();
    s.identity_pass = j.at("identity_pass").get<bool>();
    s.e_value = j.at("e_value").get<double>();
    s.e_visual = j.at("e_visual").get<double>();
}

// Grades raw evaluator answers against the battery: strict for text and
// labeled values, flex for unlabeled value reads (the same rule the QA
// grader uses).
inline EvalScore score_chart(const EvalBattery& battery, const std::vector<std::string>& answers,
                             int stage_k) {
    if (answers.size() != battery.items.size())
        fail(Errc::alignment, "answer count does not match battery size");
    EvalScore score;
    score.chart_id = battery.chart_id;
    score.stage_k = stage_k;
    int value_n = 0, value_ok = 0, visual_n = 0, visual_ok = 0;
    for (std::size_t i = 0; i < battery.items.size(); ++i) {
        const BatteryItem& item = battery.items[i];
        bool ok = grade_raw(answers[i], item.gold, item.tolerance);
        switch (item.dim) {
        case BatteryDim::Identity:
            score.identity_pass = score.identity_pass && ok;
            break;
        case BatteryDim::Value:
            ++value_n;
            value_ok += ok ? 1 : 0;
            break;
        case BatteryDim::Visual:
            ++visual_n;
            visual_ok += ok ? 1 : 0;
            break;
        }
    }
    score.e_value = value_n == 0 ? 0.0 : static_cast<double>(value_ok) / value_n;
    score.e_visual = visual_n == 0 ? 0.0 : static_cast<double>(visual_ok) / visual_n;
    return score;
}

struct Thresholds {
    double up = 0.2;
    double down = 0.2;
};

namespace refine_detail {

// Exponents in {-2,-1,1,2} that keep every value representable on the
// chart's decimal grid after scaling.
inline std::vector<int> representable_scales(const ChartSpec& spec) {
    std::vector<int> out;
    double grid = std::pow(10.0, spec.precision);
    for (int m : {-2, -1, 1, 2}) {
        bool ok = true;
        if (m < 0) {
            long long divisor = m == -1 ? 10 : 100;
            for (const auto& [label, vals] : spec.values)
                for (double v : vals) {
                    long long k = std::llround(v * grid);
                    if (k % divisor != 0) ok = false;
                }
        }
        if (ok) out.push_back(m);
    }
    return out;
}

inline std::vector<std::string> unused_vocabulary(const ChartSpec& spec, const ChartSeed& seed) {
    std::set<std::string> used;
    for (const auto& s : spec.series) used.insert(s.label);
    std::vector<std::string> out;
    for (const auto& label : seed.series_vocabulary)
        if (!used.count(label)) out.push_back(label);
    return out;
}

inline std::vector<PaletteEntry> unused_palette_entries(const ChartSpec& spec,
                                                        const PaletteTable& palettes) {
    std::set<std::string> used;
    for (const auto& s : spec.series) used.insert(s.color_name);
    std::vector<PaletteEntry> out;
    for (const auto& e : palettes.get(spec.palette_id).entries)
        if (!used.count(e.name)) out.push_back(e);
    return out;
}

inline bool has_alternative_palette(const ChartSpec& spec, const PaletteTable& palettes) {
    for (const auto& p : palettes.all())
        if (p.palette_id != spec.palette_id && p.entries.size() >= spec.series.size())
            return true;
    return false;
}

} // namespace refine_detail

// Actions that can legally apply to this chart. Value-enhancement set.
inline std::vector<ActionKind> applicable_vaem(const ChartSpec& spec, const ChartSeed& seed,
                                               const PaletteTable& palettes) {
    std::vector<ActionKind> out = {ActionKind::VaRandNum};
    if (!refine_detail::unused_vocabulary(spec, seed).empty() &&
        !refine_detail::unused_palette_entries(spec, palettes).empty())
        out.push_back(ActionKind::VaMoreLegends);
    if (spec.chart_type != ChartType::Pie && !refine_detail::representable_scales(spec).empty())
        out.push_back(ActionKind::VaChangeNumScale);
    return out;
}

// Visual-enhancement set. Axis actions never apply to pie charts.
inline std::vector<ActionKind> applicable_viem(const ChartSpec& spec,
                                               const PaletteTable& palettes) {
    std::vector<ActionKind> out;
    if (spec.series.size() >= 2) out.push_back(ActionKind::ViShuffleColor);
    if (spec.chart_type != ChartType::Pie) out.push_back(ActionKind::ViChangeAxisScale);
    if (refine_detail::has_alternative_palette(spec, palettes))
        out.push_back(ActionKind::ViChangeColorSchemes);
    out.push_back(ActionKind::ViSwitchLegendPosition);
    return out;
}

// Action selection from the score delta. Identity failure always drops; a
// significant drop in either dimension drops; a significant gain picks a
// value enhancement first, then a visual one; otherwise no action.
inline ActionKind select_action(const EvalScore& curr, double prev_e_value, double prev_e_visual,
                                const Thresholds& thresholds,
                                const std::vector<ActionKind>& vaem,
                                const std::vector<ActionKind>& viem, Rng& rng) {
    // Accuracies sit on a 0.1 grid; the epsilon absorbs float noise in the
    // subtraction so grid-exact deltas compare as intended.
    constexpr double eps = 1e-9;
    if (!curr.identity_pass) return ActionKind::Drop;
    double dv = curr.e_value - prev_e_value;
    double dvis = curr.e_visual - prev_e_visual;
    if (dv <= -(thresholds.down - eps) || dvis <= -(thresholds.down - eps))
        return ActionKind::Drop;
    if (dv >= thresholds.up - eps && !vaem.empty())
        return vaem[rng.below(static_cast<std::uint32_t>(vaem.size()))];
    if (dvis >= thresholds.up - eps && !viem.empty())
        return viem[rng.below(static_cast<std::uint32_t>(viem.size()))];
    return ActionKind::None;
}

// Applies a refinement action. Returns the refined pair, the input pair for
// None, and nullopt for Drop. The ground truth is re-derived from the
// mutated spec, so every output re-validates by construction.
inline std::optional<ChartPair> apply_action(const ChartSpec& spec_in, const GroundTruth& gt_in,
                                             ActionKind action, const ChartSeed& seed,
                                             const PaletteTable& palettes, Rng& rng) {
    if (action == ActionKind::Drop) return std::nullopt;
    if (action == ActionKind::None) return ChartPair{spec_in, gt_in};

    ChartSpec spec = spec_in;
    const bool pie = spec.chart_type == ChartType::Pie;

    switch (action) {
    case ActionKind::VaRandNum: {
        if (pie) {
            std::vector<double> shares =
                allocate_pie_shares(static_cast<int>(spec.series.size()), spec.value_lo,
                                    spec.value_hi, spec.precision, rng);
            for (std::size_t i = 0; i < spec.series.size(); ++i)
                spec.values[spec.series[i].label] = {shares[i]};
        } else {
            for (const auto& s : spec.series)
                spec.values[s.label] =
                    bounded_walk(static_cast<int>(spec.x_labels.size()), spec.value_lo,
                                 spec.value_hi, spec.precision, rng);
            recompute_axis(spec);
        }
        break;
    }
    case ActionKind::VaMoreLegends: {
        auto vocab = refine_detail::unused_vocabulary(spec, seed);
        auto colors = refine_detail::unused_palette_entries(spec, palettes);
        if (vocab.empty() || colors.empty())
            fail(Errc::config, "more-legends action inapplicable: no spare vocabulary or colors");
        rng.shuffle(vocab);
        rng.shuffle(colors);
        int add = std::min<int>(rng.range(1, 2),
                                static_cast<int>(std::min(vocab.size(), colors.size())));
        for (int i = 0; i < add; ++i) {
            SeriesSpec s;
            s.label = vocab[static_cast<std::size_t>(i)];
            s.rgb = colors[static_cast<std::size_t>(i)].rgb;
            s.color_name = colors[static_cast<std::size_t>(i)].name;
            s.line_style = rng.bernoulli(0.5) ? LineStyle::Dashed : LineStyle::Solid;
            switch (rng.below(3)) {
            case 0: s.border = BorderType::Solid; break;
            case 1: s.border = BorderType::Dashed; break;
            default: s.border = BorderType::None; break;
            }
            static const Marker markers[] = {Marker::Circle, Marker::Square, Marker::Triangle,
                                             Marker::Diamond};
            s.marker = markers[rng.below(4)];
            spec.series.push_back(s);
            if (pie)
                spec.x_labels.push_back(s.label);
            else
                spec.values[s.label] =
                    bounded_walk(static_cast<int>(spec.x_labels.size()), spec.value_lo,
                                 spec.value_hi, spec.precision, rng);
        }
        if (pie) {
            std::vector<double> shares =
                allocate_pie_shares(static_cast<int>(spec.series.size()), spec.value_lo,
                                    spec.value_hi, spec.precision, rng);
            for (std::size_t i = 0; i < spec.series.size(); ++i)
                spec.values[spec.series[i].label] = {shares[i]};
            spec.shown_x_labels = spec.x_labels;
        } else {
            recompute_axis(spec);
        }
        break;
    }
    case ActionKind::VaChangeNumScale: {
        auto scales = refine_detail::representable_scales(spec);
        if (pie || scales.empty())
            fail(Errc::config, "num-scale action inapplicable for this chart");
        int m = scales[rng.below(static_cast<std::uint32_t>(scales.size()))];
        double factor = std::pow(10.0, m);
        for (auto& [label, vals] : spec.values)
            for (auto& v : vals) v = round_to_precision(v * factor, spec.precision);
        spec.axis_min = spec.axis_min * factor;
        spec.axis_max = spec.axis_max * factor;
        spec.axis_step = spec.axis_step * factor;
        spec.value_lo *= factor;
        spec.value_hi *= factor;
        break;
    }
    case ActionKind::ViShuffleColor: {
        if (spec.series.size() < 2)
            fail(Errc::config, "shuffle-color action needs at least two series");
        std::vector<std::size_t> perm(spec.series.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        // Derangement preferred; settle for any non-identity permutation.
        for (int attempt = 0; attempt < 10; ++attempt) {
            rng.shuffle(perm);
            bool derangement = true;
            for (std::size_t i = 0; i < perm.size(); ++i) derangement &= perm[i] != i;
            if (derangement) break;
        }
        bool identity = true;
        for (std::size_t i = 0; i < perm.size(); ++i) identity &= perm[i] == i;
        if (identity) std::swap(perm[0], perm[1]);
        std::vector<std::pair<Rgb, std::string>> colors;
        for (const auto& s : spec.series) colors.push_back({s.rgb, s.color_name});
        for (std::size_t i = 0; i < spec.series.size(); ++i) {
            spec.series[i].rgb = colors[perm[i]].first;
            spec.series[i].color_name = colors[perm[i]].second;
        }
        break;
    }
    case ActionKind::ViChangeAxisScale: {
        if (pie) fail(Errc::config, "axis-scale action inapplicable for pie charts");
        double old_min = spec.axis_min, old_max = spec.axis_max, old_step = spec.axis_step;
        std::vector<int> targets = {4, 5, 8, 10, 3};
        rng.shuffle(targets);
        for (int t : targets) {
            recompute_axis(spec, t);
            if (spec.axis_min != old_min || spec.axis_max != old_max ||
                spec.axis_step != old_step)
                break;
        }
        if (spec.axis_min == old_min && spec.axis_max == old_max && spec.axis_step == old_step)
            spec.axis_max = old_max + old_step; // widen headroom as a last resort
        break;
    }
    case ActionKind::ViChangeColorSchemes: {
        std::vector<const Palette*> candidates;
        for (const auto& p : palettes.all())
            if (p.palette_id != spec.palette_id && p.entries.size() >= spec.series.size())
                candidates.push_back(&p);
        if (candidates.empty())
            fail(Errc::config, "color-scheme action inapplicable: no alternative palette");
        const Palette& next =
            *candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
        std::vector<std::size_t> order(next.entries.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);
        for (std::size_t i = 0; i < spec.series.size(); ++i) {
            spec.series[i].rgb = next.entries[order[i]].rgb;
            spec.series[i].color_name = next.entries[order[i]].name;
        }
        spec.palette_id = next.palette_id;
        spec.background = next.background;
        break;
    }
    case ActionKind::ViSwitchLegendPosition: {
        static const LegendPos all[] = {LegendPos::Top, LegendPos::Bottom, LegendPos::Left,
                                        LegendPos::Right};
        std::vector<LegendPos> others;
        for (LegendPos p : all)
            if (p != spec.legend_position) others.push_back(p);
        spec.legend_position = others[rng.below(static_cast<std::uint32_t>(others.size()))];
        break;
    }
    default:
        break;
    }

    GroundTruth gt = ground_truth_from_spec(spec);
    ValidationReport report = validate_pair(spec, gt);
    if (!report.ok())
        fail(Errc::integrity,
             "action " + to_string(action) + " produced invalid chart: " + report.summary());
    return ChartPair{std::move(spec), std::move(gt)};
}

} // namespace chartforge
