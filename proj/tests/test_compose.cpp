#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include <json.hpp>

#include "chartforge/compose.hpp"
#include "chartforge/seed_synth.hpp"
#include "testutil.hpp"

using namespace chartforge;

namespace {

ChartSeed range_seed(double lo, double hi, ChartType type = ChartType::Line) {
    ChartSeed seed = synthesize_seed(21, type, "economics");
    seed.value_lo = lo;
    seed.value_hi = hi;
    seed.y_axis.lo = lo;
    seed.y_axis.hi = hi;
    return seed;
}

} // namespace

TEST_CASE("sample_data respects the seed range") {
    ChartSeed seed = range_seed(50, 100);
    Rng rng(123);
    auto data = sample_data(seed, 6, rng);
    REQUIRE_FALSE(data.empty());
    for (const auto& s : data) {
        REQUIRE(s.values.size() == 6);
        for (double v : s.values) {
            REQUIRE(v >= 50.0);
            REQUIRE(v <= 100.0);
        }
    }
}

TEST_CASE("pie shares are positive and sum to 100") {
    ChartSeed seed = synthesize_seed(33, ChartType::Pie, "healthcare");
    Rng rng(5);
    auto data = sample_data(seed, 4, rng);
    REQUIRE(data.size() == 4);
    double sum = 0;
    for (const auto& s : data) {
        REQUIRE(s.values.size() == 1);
        REQUIRE(s.values[0] > 0);
        sum += s.values[0];
    }
    REQUIRE(std::fabs(sum - 100.0) <= 1e-6);
}

TEST_CASE("sample_data is deterministic in the rng seed") {
    ChartSeed seed = range_seed(10, 40);
    Rng a(99), b(99);
    auto da = sample_data(seed, 5, a);
    auto db = sample_data(seed, 5, b);
    REQUIRE(da.size() == db.size());
    for (std::size_t i = 0; i < da.size(); ++i) {
        REQUIRE(da[i].label == db[i].label);
        REQUIRE(da[i].values == db[i].values);
    }
}

TEST_CASE("sample_data honors the smoothness bound") {
    ChartSeed seed = range_seed(0, 100);
    double grid = std::pow(10.0, -seed.precision);
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        Rng rng(trial);
        auto data = sample_data(seed, 8, rng);
        for (const auto& s : data)
            for (std::size_t i = 1; i < s.values.size(); ++i)
                REQUIRE(std::fabs(s.values[i] - s.values[i - 1]) <=
                        kSmoothnessBound * 100.0 + grid + 1e-9);
    }
}

TEST_CASE("sample_data capacity errors") {
    ChartSeed seed = range_seed(0, 10);
    Rng rng(1);
    try {
        sample_data(seed, static_cast<int>(seed.x_axis.labels.size()) + 1, rng);
        FAIL("expected capacity error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::capacity);
    }
}

TEST_CASE("categorical axes never omit labels") {
    std::vector<std::string> labels = {"USA", "China"};
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(i);
        TickPlan plan = sample_tick_omission(labels, LabelKind::Categorical, rng);
        REQUIRE(plan.shown == labels);
        REQUIRE(plan.omitted.empty());
        REQUIRE(plan.branch == 0);
    }
}

TEST_CASE("the omit-one-of-three branch drops the third of each block, endpoints kept") {
    std::vector<std::string> years;
    for (int y = 2010; y <= 2017; ++y) years.push_back(std::to_string(y));
    // Find a draw landing in branch 1.
    for (std::uint64_t i = 0;; ++i) {
        Rng rng(i);
        TickPlan plan = sample_tick_omission(years, LabelKind::ContinuousTemporal, rng);
        if (plan.branch != 1) continue;
        REQUIRE(plan.omitted == std::vector<std::string>{"2012", "2015"});
        REQUIRE(plan.shown ==
                std::vector<std::string>{"2010", "2011", "2013", "2014", "2016", "2017"});
        break;
    }
}

TEST_CASE("the omit-two-of-four branch keeps alternating labels, endpoints kept") {
    std::vector<std::string> years;
    for (int y = 2010; y <= 2017; ++y) years.push_back(std::to_string(y));
    for (std::uint64_t i = 0;; ++i) {
        Rng rng(i);
        TickPlan plan = sample_tick_omission(years, LabelKind::ContinuousNumeric, rng);
        if (plan.branch != 2) continue;
        // Indices 1,3,5 omitted; index 7 is the endpoint and stays.
        REQUIRE(plan.omitted == std::vector<std::string>{"2011", "2013", "2015"});
        REQUIRE(plan.shown ==
                std::vector<std::string>{"2010", "2012", "2014", "2016", "2017"});
        break;
    }
}

TEST_CASE("tick omission branch frequencies are 25/50/25") {
    std::vector<std::string> labels;
    for (int i = 0; i < 8; ++i) labels.push_back(std::to_string(2000 + i));
    int counts[3] = {0, 0, 0};
    const int n = 10000;
    for (std::uint64_t i = 0; i < n; ++i) {
        Rng rng = stream_rng(4242, "tick-freq", i);
        TickPlan plan = sample_tick_omission(labels, LabelKind::ContinuousTemporal, rng);
        counts[plan.branch]++;
    }
    double f0 = counts[0] / double(n), f1 = counts[1] / double(n), f2 = counts[2] / double(n);
    REQUIRE(std::fabs(f0 - 0.25) <= 0.02);
    REQUIRE(std::fabs(f1 - 0.50) <= 0.02);
    REQUIRE(std::fabs(f2 - 0.25) <= 0.02);
    // Chi-square goodness of fit, df = 2, alpha = 0.01 -> critical 9.21034.
    double expected[3] = {0.25 * n, 0.5 * n, 0.25 * n};
    double chi2 = 0;
    for (int b = 0; b < 3; ++b)
        chi2 += (counts[b] - expected[b]) * (counts[b] - expected[b]) / expected[b];
    REQUIRE(chi2 < 9.21034);
}

TEST_CASE("styles draw distinct colors without replacement") {
    PaletteTable palettes;
    ChartSeed seed = range_seed(0, 10);
    Rng rng(7);
    StyleConfig style = sample_style(seed, 3, palettes, rng);
    std::set<std::string> names(style.color_names.begin(), style.color_names.end());
    REQUIRE(names.size() == 3);
}

TEST_CASE("style space produces both line styles") {
    PaletteTable palettes;
    ChartSeed seed = range_seed(0, 10);
    bool solid = false, dashed = false;
    for (std::uint64_t i = 0; i < 1000 && !(solid && dashed); ++i) {
        Rng rng(i);
        StyleConfig style = sample_style(seed, 2, palettes, rng);
        for (LineStyle ls : style.line_styles) {
            solid = solid || ls == LineStyle::Solid;
            dashed = dashed || ls == LineStyle::Dashed;
        }
    }
    REQUIRE(solid);
    REQUIRE(dashed);
}

TEST_CASE("stacking is a bar-only option") {
    PaletteTable palettes;
    ChartSeed bar = synthesize_seed(3, ChartType::Bar, "retail");
    bool stacked_seen = false, grouped_seen = false;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(i);
        StyleConfig style = sample_style(bar, 2, palettes, rng);
        stacked_seen = stacked_seen || style.stacked;
        grouped_seen = grouped_seen || !style.stacked;
    }
    REQUIRE(stacked_seen);
    REQUIRE(grouped_seen);

    ChartSeed pie = synthesize_seed(3, ChartType::Pie, "retail");
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng(i);
        REQUIRE_FALSE(sample_style(pie, 3, palettes, rng).stacked);
    }
}

TEST_CASE("style sampling errors when the palette is too small") {
    PaletteTable palettes;
    ChartSeed seed = range_seed(0, 10);
    Rng rng(1);
    try {
        sample_style(seed, 100, palettes, rng);
        FAIL("expected capacity error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::capacity);
    }
}

TEST_CASE("compose_chart output validates and is deterministic") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(5, ChartType::Line, "climate");
    ChartPair a = compose_chart(seed, palettes, 4242);
    ChartPair b = compose_chart(seed, palettes, 4242);
    REQUIRE(validate_pair(a.spec, a.gt).ok());
    nlohmann::json ja = nlohmann::json{{"spec", a.spec}, {"gt", a.gt}};
    nlohmann::json jb = nlohmann::json{{"spec", b.spec}, {"gt", b.gt}};
    REQUIRE(ja.dump() == jb.dump());
}

TEST_CASE("composition space stays diverse across streams") {
    // 1000 compositions from 100 seeds; near-duplicates would indicate a
    // collapsed configuration space. Threshold frozen from the oracle run.
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(77, 100);
    std::set<std::string> serialized;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(31).tag("div").tag(i).seed());
        nlohmann::json j = nlohmann::json{{"spec", pair.spec}, {"gt", pair.gt}};
        serialized.insert(j.dump());
    }
    REQUIRE(serialized.size() >= 990);
}

TEST_CASE("ground-truth extrema match a brute-force recomputation") {
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(13, 40);
    for (std::uint64_t i = 0; i < 120; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(8).tag("ext").tag(i).seed());
        if (pair.spec.chart_type == ChartType::Pie) continue;
        for (const auto& [label, ext] : pair.gt.extrema) {
            const auto& vals = pair.spec.values.at(label);
            double vmax = *std::max_element(vals.begin(), vals.end());
            double vmin = *std::min_element(vals.begin(), vals.end());
            REQUIRE(pair.gt.value(label, ext.max_label) == vmax);
            REQUIRE(pair.gt.value(label, ext.min_label) == vmin);
            // Leftmost tie-break.
            for (std::size_t k = 0; k < vals.size(); ++k) {
                if (vals[k] == vmax) {
                    REQUIRE(pair.spec.x_labels[k] == ext.max_label);
                    break;
                }
            }
        }
    }
}

TEST_CASE("composed values always sit inside the seed range") {
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(17, 60);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(55).tag("rng").tag(i).seed());
        for (const auto& [label, vals] : pair.spec.values)
            for (double v : vals) {
                REQUIRE(v >= seed.value_lo - 1e-12);
                REQUIRE(v <= seed.value_hi + 1e-12);
            }
        if (pair.spec.chart_type == ChartType::Pie) {
            double sum = 0;
            for (const auto& [label, vals] : pair.spec.values) sum += vals[0];
            REQUIRE(std::fabs(sum - 100.0) <= 1e-6);
        }
    }
}
