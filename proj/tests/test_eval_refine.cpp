#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "chartforge/battery.hpp"
#include "chartforge/compose.hpp"
#include "chartforge/gateway.hpp"
#include "chartforge/refine.hpp"
#include "chartforge/svg.hpp"
#include "chartforge/seed_synth.hpp"
#include "testutil.hpp"

using namespace chartforge;

namespace {

ChartPair composed(ChartType type, const std::string& domain, std::uint64_t stream,
                   std::uint64_t seed_draw = 77) {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(seed_draw, type, domain);
    return compose_chart(seed, palettes, stream);
}

std::vector<std::string> oracle_answers(const EvalBattery& battery, const GroundTruth& gt) {
    std::vector<std::string> out;
    for (const auto& item : battery.items) out.push_back(oracle_answer(gt, item));
    return out;
}

} // namespace

TEST_CASE("batteries hold 2 identity, 10 value and 10 visual items") {
    ChartPair pair = composed(ChartType::Line, "economics", 1);
    Rng rng(1);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    REQUIRE(battery.items.size() == 22);
    REQUIRE(battery.in_dim(BatteryDim::Identity).size() == 2);
    REQUIRE(battery.in_dim(BatteryDim::Value).size() == 10);
    REQUIRE(battery.in_dim(BatteryDim::Visual).size() == 10);
}

TEST_CASE("identity question names the true chart type") {
    ChartPair pair = composed(ChartType::HorizontalBar, "finance", 2);
    Rng rng(2);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    const BatteryItem& is_chart = battery.items[0];
    REQUIRE(is_chart.question == "Is the image a horizontal bar chart?");
    REQUIRE(is_chart.gold.canonical() == "yes");
}

TEST_CASE("value item golds equal data-table lookups") {
    ChartPair pair = composed(ChartType::Bar, "agriculture", 3);
    Rng rng(3);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    for (const auto& item : battery.items) {
        if (item.form != BatteryForm::LabelValue) continue;
        double v = pair.gt.value(item.bindings.at("legend_label"), item.bindings.at("xlabel"));
        REQUIRE(item.gold.num == v);
    }
}

TEST_CASE("battery construction is deterministic") {
    ChartPair pair = composed(ChartType::Scatter, "technology", 4);
    Rng a(9), b(9);
    nlohmann::json ja = build_battery(pair.gt, pair.spec, a);
    nlohmann::json jb = build_battery(pair.gt, pair.spec, b);
    REQUIRE(ja.dump() == jb.dump());
}

TEST_CASE("small charts set the replacement flag") {
    ChartPair pair = composed(ChartType::Pie, "retail", 5);
    Rng rng(5);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    // A pie with <= 6 sectors offers fewer than 10 distinct visual lookups.
    if (pair.spec.series.size() <= 4) REQUIRE(battery.sampled_with_replacement);
    REQUIRE(battery.items.size() == 22);
}

TEST_CASE("perfect answers score 1.0 on both dimensions") {
    ChartPair pair = composed(ChartType::Line, "climate", 6);
    Rng rng(6);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    EvalScore score = score_chart(battery, oracle_answers(battery, pair.gt), 1);
    REQUIRE(score.identity_pass);
    REQUIRE(score.e_value == 1.0);
    REQUIRE(score.e_visual == 1.0);
}

TEST_CASE("a wrong identity answer fails the identity gate regardless of the rest") {
    ChartPair pair = composed(ChartType::Line, "climate", 7);
    Rng rng(7);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    auto answers = oracle_answers(battery, pair.gt);
    answers[0] = answers[0] == "yes" ? "no" : "yes";
    EvalScore score = score_chart(battery, answers, 1);
    REQUIRE_FALSE(score.identity_pass);
    REQUIRE(score.e_value == 1.0);
}

TEST_CASE("seven of ten value items scores 0.7") {
    ChartPair pair = composed(ChartType::Bar, "energy", 8);
    Rng rng(8);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    auto answers = oracle_answers(battery, pair.gt);
    int spoiled = 0;
    for (std::size_t i = 0; i < battery.items.size() && spoiled < 3; ++i) {
        if (battery.items[i].dim == BatteryDim::Value) {
            answers[i] = "wrong-" + answers[i] + "-9999999";
            ++spoiled;
        }
    }
    EvalScore score = score_chart(battery, answers, 1);
    REQUIRE(score.e_value == Catch::Approx(0.7));
    REQUIRE(score.e_visual == 1.0);
}

TEST_CASE("misaligned answers raise an alignment error") {
    ChartPair pair = composed(ChartType::Line, "sports", 9);
    Rng rng(9);
    EvalBattery battery = build_battery(pair.gt, pair.spec, rng);
    std::vector<std::string> answers(3, "x");
    try {
        score_chart(battery, answers, 1);
        FAIL("expected alignment error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::alignment);
    }
}

TEST_CASE("select_action implements the delta rules") {
    Rng rng(1);
    std::vector<ActionKind> vaem = {ActionKind::VaRandNum, ActionKind::VaMoreLegends,
                                    ActionKind::VaChangeNumScale};
    std::vector<ActionKind> viem = {ActionKind::ViShuffleColor, ActionKind::ViChangeAxisScale,
                                    ActionKind::ViChangeColorSchemes,
                                    ActionKind::ViSwitchLegendPosition};
    Thresholds t; // 0.2 / 0.2
    EvalScore s;
    s.e_value = 0.8;
    s.e_visual = 0.8;

    SECTION("identity failure drops") {
        s.identity_pass = false;
        REQUIRE(select_action(s, 0.8, 0.8, t, vaem, viem, rng) == ActionKind::Drop);
    }
    SECTION("significant positive value delta picks a value enhancement") {
        for (int i = 0; i < 50; ++i) {
            ActionKind a = select_action(s, 0.5, 0.8, t, vaem, viem, rng);
            REQUIRE(is_vaem(a));
        }
    }
    SECTION("significant positive visual delta picks a visual enhancement") {
        for (int i = 0; i < 50; ++i) {
            ActionKind a = select_action(s, 0.8, 0.5, t, vaem, viem, rng);
            REQUIRE(is_viem(a));
        }
    }
    SECTION("value precedence when both deltas are significant") {
        for (int i = 0; i < 50; ++i)
            REQUIRE(is_vaem(select_action(s, 0.5, 0.5, t, vaem, viem, rng)));
    }
    SECTION("significant negative delta drops") {
        REQUIRE(select_action(s, 1.0, 0.8, t, vaem, viem, rng) == ActionKind::Drop);
    }
    SECTION("small deltas do nothing") {
        REQUIRE(select_action(s, 0.7, 0.9, t, vaem, viem, rng) == ActionKind::None);
    }
    SECTION("grid-exact deltas survive float noise") {
        s.e_value = 0.3;
        REQUIRE(is_vaem(select_action(s, 0.1, 0.8, t, vaem, viem, rng)));
        s.e_value = 0.1;
        REQUIRE(select_action(s, 0.3, 0.8, t, vaem, viem, rng) == ActionKind::Drop);
    }
}

TEST_CASE("viem actions never change the data table") {
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(41, 40);
    int applied = 0;
    for (std::uint64_t i = 0; i < 120; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(20).tag("vi").tag(i).seed());
        for (ActionKind action : applicable_viem(pair.spec, palettes)) {
            Rng rng(i * 31 + static_cast<std::uint64_t>(action));
            auto out = apply_action(pair.spec, pair.gt, action, seed, palettes, rng);
            REQUIRE(out.has_value());
            REQUIRE(out->gt.data_table == pair.gt.data_table);
            REQUIRE(validate_pair(out->spec, out->gt).ok());
            ++applied;
        }
    }
    REQUIRE(applied > 200);
}

TEST_CASE("change-num-scale multiplies values and bounds and keeps argmax labels") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(51, ChartType::Line, "economics");
    ChartPair pair = compose_chart(seed, palettes, 1234);
    Rng rng(3);
    auto out = apply_action(pair.spec, pair.gt, ActionKind::VaChangeNumScale, seed, palettes, rng);
    REQUIRE(out.has_value());
    // Find the factor from the value bounds.
    double factor = out->spec.value_hi / pair.spec.value_hi;
    REQUIRE((factor == Catch::Approx(10.0) || factor == Catch::Approx(100.0) ||
             factor == Catch::Approx(0.1) || factor == Catch::Approx(0.01)));
    REQUIRE(out->spec.axis_max == Catch::Approx(pair.spec.axis_max * factor));
    REQUIRE(out->spec.axis_step == Catch::Approx(pair.spec.axis_step * factor));
    for (const auto& [label, vals] : pair.spec.values) {
        const auto& scaled = out->spec.values.at(label);
        for (std::size_t k = 0; k < vals.size(); ++k)
            REQUIRE(scaled[k] == Catch::Approx(vals[k] * factor));
    }
    for (const auto& [label, ext] : pair.gt.extrema) {
        REQUIRE(out->gt.extrema.at(label).max_label == ext.max_label);
        REQUIRE(out->gt.extrema.at(label).min_label == ext.min_label);
    }
}

TEST_CASE("shuffle-color permutes the visual map only") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(52, ChartType::Line, "transport");
    ChartPair pair = compose_chart(seed, palettes, 777);
    if (pair.spec.series.size() < 2) return; // needs two series to permute
    Rng rng(5);
    auto out = apply_action(pair.spec, pair.gt, ActionKind::ViShuffleColor, seed, palettes, rng);
    REQUIRE(out.has_value());
    REQUIRE(out->gt.data_table == pair.gt.data_table);
    std::multiset<std::string> before, after;
    for (const auto& s : pair.spec.series) before.insert(s.color_name);
    for (const auto& s : out->spec.series) after.insert(s.color_name);
    REQUIRE(before == after); // same colors, reassigned
    bool changed = false;
    for (std::size_t i = 0; i < pair.spec.series.size(); ++i)
        changed = changed || pair.spec.series[i].color_name != out->spec.series[i].color_name;
    REQUIRE(changed);
    // Re-rendered SVG carries the new assignment.
    std::string svg = render_svg(out->spec);
    auto groups = testutil::parse_series_groups(svg);
    for (std::size_t i = 0; i < groups.size(); ++i)
        REQUIRE(groups[i].color == out->spec.series[i].rgb.css());
}

TEST_CASE("more-legends adds series with sampled values") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(53, ChartType::Bar, "education");
    ChartPair pair = compose_chart(seed, palettes, 888);
    Rng rng(7);
    auto out = apply_action(pair.spec, pair.gt, ActionKind::VaMoreLegends, seed, palettes, rng);
    REQUIRE(out.has_value());
    REQUIRE(out->spec.series.size() > pair.spec.series.size());
    REQUIRE(out->spec.series.size() <= pair.spec.series.size() + 2);
    REQUIRE(validate_pair(out->spec, out->gt).ok());
}

TEST_CASE("switch-legend-position always moves the legend") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(54, ChartType::Pie, "tourism");
    ChartPair pair = compose_chart(seed, palettes, 999);
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng(i);
        auto out = apply_action(pair.spec, pair.gt, ActionKind::ViSwitchLegendPosition, seed,
                                palettes, rng);
        REQUIRE(out.has_value());
        REQUIRE(out->spec.legend_position != pair.spec.legend_position);
    }
}

TEST_CASE("drop returns empty and none returns the input") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(55, ChartType::Line, "finance");
    ChartPair pair = compose_chart(seed, palettes, 1111);
    Rng rng(1);
    REQUIRE_FALSE(apply_action(pair.spec, pair.gt, ActionKind::Drop, seed, palettes, rng));
    auto same = apply_action(pair.spec, pair.gt, ActionKind::None, seed, palettes, rng);
    REQUIRE(same.has_value());
    nlohmann::json a = same->spec, b = pair.spec;
    REQUIRE(a.dump() == b.dump());
}

TEST_CASE("axis actions are inapplicable for pie charts") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(56, ChartType::Pie, "healthcare");
    ChartPair pair = compose_chart(seed, palettes, 2222);
    auto viem = applicable_viem(pair.spec, palettes);
    for (ActionKind a : viem) REQUIRE(a != ActionKind::ViChangeAxisScale);
    auto vaem = applicable_vaem(pair.spec, seed, palettes);
    for (ActionKind a : vaem) REQUIRE(a != ActionKind::VaChangeNumScale);
    Rng rng(1);
    try {
        apply_action(pair.spec, pair.gt, ActionKind::ViChangeAxisScale, seed, palettes, rng);
        FAIL("expected inapplicability error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::config);
    }
}

TEST_CASE("perfect oracle with equal previous scores selects none") {
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(61, 30);
    Thresholds t;
    for (std::uint64_t i = 0; i < 60; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(30).tag("fx").tag(i).seed());
        Rng brng(i);
        EvalBattery battery = build_battery(pair.gt, pair.spec, brng);
        EvalScore score = score_chart(battery, oracle_answers(battery, pair.gt), 2);
        Rng arng(i);
        ActionKind action =
            select_action(score, score.e_value, score.e_visual, t,
                          applicable_vaem(pair.spec, seed, palettes),
                          applicable_viem(pair.spec, palettes), arng);
        REQUIRE(score.identity_pass);
        REQUIRE(action == ActionKind::None);
    }
}
