#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/answer.hpp"
#include "chartforge/chart.hpp"
#include "chartforge/rng.hpp"

namespace chartforge {

enum class BatteryDim { Identity, Value, Visual };
enum class BatteryForm {
    IsChart,
    IsTitleClear,
    LabelValue,  // series + x -> value
    ValueLabel,  // value + x -> series
    LabelColor,  // series -> color name
    LabelStyle,  // series -> line/border/marker style
    VisualLabel, // color -> series
};

inline std::string to_string(BatteryDim d) {
    switch (d) {
    case BatteryDim::Identity: return "identity";
    case BatteryDim::Value: return "value";
    case BatteryDim::Visual: return "visual";
    }
    return "identity";
}

inline BatteryDim battery_dim_from_string(const std::string& s) {
    if (s == "identity") return BatteryDim::Identity;
    if (s == "value") return BatteryDim::Value;
    if (s == "visual") return BatteryDim::Visual;
    fail(Errc::config, "unknown battery dimension: " + s);
}

inline std::string to_string(BatteryForm f) {
    switch (f) {
    case BatteryForm::IsChart: return "is-chart";
    case BatteryForm::IsTitleClear: return "is-title-clear";
    case BatteryForm::LabelValue: return "label-value";
    case BatteryForm::ValueLabel: return "value-label";
    case BatteryForm::LabelColor: return "label-color";
    case BatteryForm::LabelStyle: return "label-style";
    case BatteryForm::VisualLabel: return "visual-label";
    }
    return "is-chart";
}

inline BatteryForm battery_form_from_string(const std::string& s) {
    if (s == "is-chart") return BatteryForm::IsChart;
    if (s == "is-title-clear") return BatteryForm::IsTitleClear;
    if (s == "label-value") return BatteryForm::LabelValue;
    if (s == "value-label") return BatteryForm::ValueLabel;
    if (s == "label-color") return BatteryForm::LabelColor;
    if (s == "label-style") return BatteryForm::LabelStyle;
    if (s == "visual-label") return BatteryForm::VisualLabel;
    fail(Errc::config, "unknown battery form: " + s);
}

struct BatteryItem {
    std::string item_id;
    BatteryDim dim = BatteryDim::Identity;
    BatteryForm form = BatteryForm::IsChart;
    std::string question;
    Answer gold;
    Tolerance tolerance = Tolerance::Strict;
    std::map<std::string, std::string> bindings;
};

inline void to_json(nlohmann::json& j, const BatteryItem& item) {
    j = nlohmann::json{{"item_id", item.item_id},
                       {"dim", to_string(item.dim)},
                       {"form", to_string(item.form)},
                       {"question", item.question},
                       {"gold", item.gold},
                       {"gold_text", item.gold.canonical()},
                       {"tolerance", to_string(item.tolerance)},
                       {"bindings", item.bindings}};
}

inline void from_json(const nlohmann::json& j, BatteryItem& item) {
    item.item_id = j.at("item_id").get<std::string>();
    item.dim = battery_dim_from_string(j.at("dim").get<std::string>());
    item.form = battery_form_from_string(j.at("form").get<std::string>());
    item.question = j.at("question").get<std::string>();
    item.gold = j.at("gold").get<Answer>();
    item.tolerance = tolerance_from_string(j.at("tolerance").get<std::string>());
    item.bindings = j.at("bindings").get<std::map<std::string, std::string>>();
}

// The 22-item evaluator questionnaire: 2 identity checks, 10 label/value
// items and 10 label/visual items, golds derived from ground truth.
struct EvalBattery {
    std::string chart_id;
    std::vector<BatteryItem> items;
    bool sampled_with_replacement = false;

    std::vector<const BatteryItem*> in_dim(BatteryDim d) const {
        std::vector<const BatteryItem*> out;
        for (const auto& item : items)
            if (item.dim == d) out.push_back(&item);
        return out;
    }
};

inline void to_json(nlohmann::json& j, const EvalBattery& b) {
    j = nlohmann::json{{"chart_id", b.chart_id},
                       {"items", b.items},
                       {"sampled_with_replacement", b.sampled_with_replacement}};
}

inline void from_json(const nlohmann::json& j, EvalBattery& b) {
    b.chart_id = j.at("chart_id").get<std::string>();
    b.items = j.at("items").get<std::vector<BatteryItem>>();
    b.sampled_with_replacement = j.at("sampled_with_replacement").get<bool>();
}

namespace battery_detail {

inline BatteryItem value_item(const GroundTruth& gt, const std::string& label,
                              const std::string& x, bool inverse) {
    BatteryItem item;
    item.dim = BatteryDim::Value;
    double v = gt.value(label, x);
    std::string vtext = Answer::number(v, gt.precision).canonical();
    if (inverse) {
        item.form = BatteryForm::ValueLabel;
        item.question = gt.is_pie()
                            ? "Which sector makes up " + vtext + "% of this pie chart?"
                            : "Which legend label has a value of " + vtext + " at " + x + "?";
        item.gold = Answer::label(label);
        item.tolerance = Tolerance::Strict;
        item.bindings = {{"value_label", vtext}, {"xlabel", x}};
    } else {
        item.form = BatteryForm::LabelValue;
        item.question = gt.is_pie()
                            ? "What is the percentage of the '" + label + "' sector?"
                            : "What is the value of " + label + " in " + x + "?";
        item.gold = Answer::number(v, gt.precision);
        item.tolerance = gt.values_labeled ? Tolerance::Strict : Tolerance::Flex;
        item.bindings = {{"legend_label", label}, {"xlabel", x}};
    }
    return item;
}

inline BatteryItem visual_item(const GroundTruth& gt, const std::string& label, int which) {
    BatteryItem item;
    item.dim = BatteryDim::Visual;
    const VisualAttrs& vis = gt.visual_map.at(label);
    std::string noun;
    switch (gt.chart_type) {
    case ChartType::Line: noun = "line"; break;
    case ChartType::Bar:
    case ChartType::HorizontalBar: noun = "bar"; break;
    case ChartType::Pie: noun = "sector"; break;
    case ChartType::Scatter: noun = "marker"; break;
    }
    if (which == 0) {
        item.form = BatteryForm::LabelColor;
        item.question = "What is the " + noun + " color of " + label + "?";
        item.gold = Answer::color(vis.color_name);
        item.bindings = {{"legend_label", label}};
    } else if (which == 1 && gt.chart_type != ChartType::Pie) {
        item.form = BatteryForm::LabelStyle;
        std::string what = gt.chart_type == ChartType::Line
                               ? "line style"
                               : (gt.chart_type == ChartType::Scatter ? "marker shape"
                                                                      : "bar border type");
        item.question = "What is the " + what + " of " + label + "?";
        item.gold = Answer::style(vis.style_name);
        item.bindings = {{"legend_label", label}};
    } else {
        item.form = BatteryForm::VisualLabel;
        item.question = "Which legend label is drawn in " + vis.color_name + "?";
        item.gold = Answer::label(label);
        item.bindings = {{"name_color", vis.color_name}};
    }
    item.tolerance = Tolerance::Strict;
    return item;
}

} // namespace battery_detail

// Builds the evaluation battery for one chart. Sampling prefers unique
// bindings; when a chart offers fewer than ten distinct lookups per
// dimension the battery is filled with replacement and flagged.
inline EvalBattery build_battery(const GroundTruth& gt, const ChartSpec& spec, Rng& rng) {
    EvalBattery battery;
    battery.chart_id = gt.chart_id;

    BatteryItem is_chart;
    is_chart.dim = BatteryDim::Identity;
    is_chart.form = BatteryForm::IsChart;
    is_chart.question = "Is the image a " + chart_type_phrase(spec.chart_type) + " chart?";
    is_chart.gold = Answer::yes_no(true);
    is_chart.bindings = {{"chart_type", to_string(spec.chart_type)}};
    battery.items.push_back(std::move(is_chart));

    BatteryItem title_clear;
    title_clear.dim = BatteryDim::Identity;
    title_clear.form = BatteryForm::IsTitleClear;
    title_clear.question = "Is the chart title clearly visible?";
    title_clear.gold = Answer::yes_no(gt.title_clear);
    battery.items.push_back(std::move(title_clear));

    // Candidate pools per dimension.
    struct ValueCand {
        std::string label, x;
        bool inverse;
    };
    std::vector<ValueCand> value_pool;
    for (const auto& label : gt.series_order)
        for (const auto& x : gt.x_order) {
            if (gt.is_pie() && x != label) continue;
            value_pool.push_back({label, x, false});
            // Inverse items only where the value is unique at that x.
            int same = 0;
            double v = gt.value(label, x);
            for (const auto& other : gt.series_order) {
                if (gt.is_pie() && other != x && gt.pie_share(other) == v) ++same;
                if (!gt.is_pie() && gt.value(other, x) == v) ++same;
            }
            if (gt.is_pie()) ++same; // the sector itself
            if (same == 1) value_pool.push_back({label, x, true});
        }

    std::vector<std::pair<std::string, int>> visual_pool;
    for (const auto& label : gt.series_order) {
        visual_pool.push_back({label, 0});
        if (gt.chart_type != ChartType::Pie) visual_pool.push_back({label, 1});
        visual_pool.push_back({label, 2});
    }

    constexpr int kPerDim = 10;
    auto fill = [&](auto& pool, auto make) {
        std::vector<std::size_t> order(pool.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);
        if (pool.size() < kPerDim) battery.sampled_with_replacement = true;
        for (int i = 0; i < kPerDim; ++i) {
            std::size_t idx = static_cast<std::size_t>(i) < order.size()
                                  ? order[static_cast<std::size_t>(i)]
                                  : order[rng.below(static_cast<std::uint32_t>(order.size()))];
            battery.items.push_back(make(pool[idx]));
        }
    };
    fill(value_pool, [&](const ValueCand& c) {
        return battery_detail::value_item(gt, c.label, c.x, c.inverse);
    });
    fill(visual_pool, [&](const std::pair<std::string, int>& c) {
        return battery_detail::visual_item(gt, c.first, c.second);
    });

    for (std::size_t i = 0; i < battery.items.size(); ++i)
        battery.items[i].item_id = gt.chart_id + "-b" + std::to_string(i);
    return battery;
}

} // namespace chartforge
