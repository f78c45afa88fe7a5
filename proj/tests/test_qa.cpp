#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "chartforge/compose.hpp"
#include "chartforge/qa.hpp"
#include "chartforge/seed_synth.hpp"
#include "testutil.hpp"

using namespace chartforge;

namespace {

ChartPair composed(ChartType type, const std::string& domain, std::uint64_t stream) {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(1234, type, domain);
    return compose_chart(seed, palettes, stream);
}

const QATemplate& tmpl(const std::string& id) { return find_template(id); }

} // namespace

TEST_CASE("pie charts receive no line-style templates") {
    ChartPair pair = composed(ChartType::Pie, "economics", 7);
    for (const QATemplate* t : applicable_templates(pair.gt, pair.spec)) {
        REQUIRE(t->family != Family::LineStyleOfLegend);
        REQUIRE(t->family != Family::LegendWithLineVisual);
        REQUIRE(t->family != Family::NthPointOnLineByVisual);
    }
}

TEST_CASE("extremum templates are excluded when every series maximum is tied") {
    GroundTruth gt = testutil::make_gt({"A", "B"}, {"Jan", "Feb", "Mar"},
                                       {{3.0, 3.0, 1.0}, {5.0, 2.0, 5.0}});
    ChartSpec spec = testutil::golden_line_spec();
    spec.chart_type = ChartType::Line;
    gt.chart_type = ChartType::Line;
    bool has_peak = false;
    for (const QATemplate* t : applicable_templates(gt, spec))
        has_peak = has_peak || t->family == Family::PeakXOfLegend;
    REQUIRE_FALSE(has_peak); // both series have tied maxima

    // Untie one series and the family comes back.
    gt = testutil::make_gt({"A", "B"}, {"Jan", "Feb", "Mar"},
                           {{3.0, 4.0, 1.0}, {5.0, 2.0, 5.0}});
    gt.chart_type = ChartType::Line;
    has_peak = false;
    for (const QATemplate* t : applicable_templates(gt, spec))
        has_peak = has_peak || t->family == Family::PeakXOfLegend;
    REQUIRE(has_peak);
}

TEST_CASE("bar charts include the longest-bar-of-color family") {
    ChartPair pair = composed(ChartType::Bar, "retail", 13);
    bool found = false;
    for (const QATemplate* t : applicable_templates(pair.gt, pair.spec))
        found = found || t->family == Family::LongestBarOfColor;
    // Applicable whenever some series has an untied maximum.
    bool untied = false;
    for (const auto& [label, ext] : pair.gt.extrema) untied = untied || !ext.max_tied;
    REQUIRE(found == untied);
}

TEST_CASE("value-at-label answers come straight from the data table") {
    GroundTruth gt = testutil::make_gt({"Medication"}, {"Apr", "May"}, {{9.5, 12.0}});
    Answer a = derive_answer(tmpl("value-at-label"),
                             {{"legend_label", "Medication"}, {"xlabel", "May"}}, gt);
    REQUIRE(a.kind == AnswerKind::Number);
    REQUIRE(a.num == 12.0);
    REQUIRE(a.canonical() == "12.0");
}

TEST_CASE("peak template answers the argmax x label") {
    GroundTruth gt = testutil::make_gt({"S"}, {"A", "B", "C"}, {{1.0, 3.0, 2.0}});
    Answer a = derive_answer(tmpl("peak-x-of-legend"), {{"legend_label", "S"}}, gt);
    REQUIRE(a.kind == AnswerKind::LabelText);
    REQUIRE(a.text == "B");
}

TEST_CASE("sector count is the sector cardinality") {
    GroundTruth gt;
    gt.chart_id = "pie-hand";
    gt.chart_type = ChartType::Pie;
    gt.title = "Shares";
    gt.precision = 1;
    for (int i = 0; i < 5; ++i) {
        std::string label = "S" + std::to_string(i);
        gt.series_order.push_back(label);
        gt.x_order.push_back(label);
        gt.data_table[label][label] = 20.0;
        gt.visual_map[label] = {color_vocabulary()[static_cast<std::size_t>(i)], "sector", i};
    }
    Answer a = derive_answer(tmpl("sector-count"), {}, gt);
    REQUIRE(a.kind == AnswerKind::Count);
    REQUIRE(a.canonical() == "5");
}

TEST_CASE("inverse lookups with duplicate values raise ambiguity") {
    GroundTruth gt = testutil::make_gt({"A", "B"}, {"Jan"}, {{4.0}, {4.0}});
    try {
        derive_answer(tmpl("legend-for-value-at-x"),
                      {{"xlabel", "Jan"}, {"value_label", "4.0"}}, gt);
        FAIL("expected ambiguity");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::ambiguity);
    }
}

TEST_CASE("unbound slots raise binding errors") {
    GroundTruth gt = testutil::make_gt({"A"}, {"Jan"}, {{4.0}});
    try {
        derive_answer(tmpl("value-at-label"), {{"xlabel", "Jan"}}, gt);
        FAIL("expected binding error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::binding);
    }
}

TEST_CASE("lines-below-count ranks strictly below") {
    GroundTruth gt = testutil::make_gt({"A", "B", "C"}, {"Jan", "Feb"},
                                       {{5.0, 1.0}, {3.0, 2.0}, {1.0, 3.0}});
    Answer a = derive_answer(tmpl("lines-below-count"),
                             {{"legend_label", "A"}, {"xlabel", "Jan"}, {"value_label", "5.0"}},
                             gt);
    REQUIRE(a.canonical() == "2");
    Answer b = derive_answer(tmpl("lines-below-count"),
                             {{"legend_label", "B"}, {"xlabel", "Jan"}, {"value_label", "3.0"}},
                             gt);
    REQUIRE(b.canonical() == "1");
}

TEST_CASE("values-ascending-left-of uses the previous shown tick") {
    GroundTruth gt = testutil::make_gt({"A", "B"}, {"Q1", "Q2", "Q3"},
                                       {{5.0, 7.0, 9.0}, {2.0, 1.0, 3.0}});
    gt.shown_x_labels = {"Q1", "Q3"}; // Q2 omitted
    Answer a = derive_answer(tmpl("values-ascending-left-of"), {{"xlabel", "Q3"}}, gt);
    REQUIRE(a.kind == AnswerKind::NumberList);
    REQUIRE(a.list == std::vector<double>{2.0, 5.0}); // values at Q1, not Q2
}

TEST_CASE("nth-bar-from-bottom counts categories upward on horizontal bars") {
    GroundTruth gt = testutil::make_gt({"S"}, {"Top", "Mid", "Low"}, {{10.0, 20.0, 30.0}});
    gt.chart_type = ChartType::HorizontalBar;
    gt.visual_map["S"].style_name = "solid";
    Answer a = derive_answer(
        tmpl("nth-bar-from-bottom"),
        {{"line_color", gt.visual_map["S"].color_name}, {"border_type", "solid"}, {"n", "1"}},
        gt);
    // First label renders topmost, so the 1st bar from the bottom is "Low".
    REQUIRE(a.num == 30.0);
}

TEST_CASE("instantiate is deterministic in the rng seed") {
    ChartPair pair = composed(ChartType::Line, "climate", 99);
    auto templates = applicable_templates(pair.gt, pair.spec);
    REQUIRE_FALSE(templates.empty());
    Rng a(4321), b(4321);
    auto qa = instantiate(*templates[0], pair.gt, pair.spec, a);
    auto qb = instantiate(*templates[0], pair.gt, pair.spec, b);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    nlohmann::json ja = *qa, jb = *qb;
    REQUIRE(ja.dump() == jb.dump());
}

TEST_CASE("value questions are strict when labels are printed, flex otherwise") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(5, ChartType::Line, "healthcare");
    ChartPair pair = compose_chart(seed, palettes, 31);

    pair.spec.value_labels_visible = true;
    GroundTruth gt_labeled = ground_truth_from_spec(pair.spec);
    pair.spec.value_labels_visible = false;
    GroundTruth gt_unlabeled = ground_truth_from_spec(pair.spec);

    const QATemplate& t = tmpl("value-at-label");
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng(i);
        auto qa = instantiate(t, gt_labeled, pair.spec, rng);
        REQUIRE(qa.has_value());
        REQUIRE(qa->tolerance == Tolerance::Strict);
    }
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng(i);
        auto qa = instantiate(t, gt_unlabeled, pair.spec, rng);
        REQUIRE(qa.has_value());
        REQUIRE(qa->tolerance == Tolerance::Flex);
    }
}

TEST_CASE("question text substitutes every slot") {
    ChartPair pair = composed(ChartType::Line, "economics", 17);
    Rng rng(6);
    QABatch batch = generate_qa_batch(pair.gt, pair.spec, 10, 0.2, rng);
    for (const auto& qa : batch.pairs) {
        INFO(qa.question);
        REQUIRE(qa.question.find('{') == std::string::npos);
        REQUIRE(qa.question.find('}') == std::string::npos);
    }
}

TEST_CASE("batch vCoT counts follow round(count * ratio)") {
    ChartPair pair = composed(ChartType::Line, "transport", 55);
    Rng rng(8);
    QABatch batch = generate_qa_batch(pair.gt, pair.spec, 10, 0.2, rng);
    REQUIRE(batch.pairs.size() == 10);
    int vcot = 0;
    for (const auto& qa : batch.pairs)
        if (qa.form == QAForm::VCot) {
            ++vcot;
            REQUIRE_FALSE(qa.cot_text.empty());
        } else {
            REQUIRE(qa.cot_text.empty());
        }
    REQUIRE(vcot == 2);

    Rng rng0(8);
    QABatch none = generate_qa_batch(pair.gt, pair.spec, 10, 0.0, rng0);
    for (const auto& qa : none.pairs) REQUIRE(qa.form == QAForm::Direct);
}

TEST_CASE("batches contain no duplicate template and binding combinations") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        ChartPair pair = composed(ChartType::Bar, "sports", 2000 + i);
        Rng rng(i);
        QABatch batch = generate_qa_batch(pair.gt, pair.spec, 12, 0.2, rng);
        std::set<std::string> keys;
        for (const auto& qa : batch.pairs) {
            std::string key = qa.template_id;
            for (const auto& [k, v] : qa.bindings) key += "|" + k + "=" + v;
            REQUIRE(keys.insert(key).second);
        }
    }
}

TEST_CASE("oracle closure: derived answers reproduce stored gold") {
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(3, 40);
    for (std::uint64_t i = 0; i < 60; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(9).tag("cl").tag(i).seed());
        Rng rng(i);
        QABatch batch = generate_qa_batch(pair.gt, pair.spec, 8, 0.25, rng);
        for (const auto& qa : batch.pairs) {
            Answer again = derive_answer(find_template(qa.template_id), qa.bindings, pair.gt);
            REQUIRE(again.canonical() == qa.gold.canonical());
        }
    }
}

TEST_CASE("vCoT fraction converges at corpus scale") {
    PaletteTable palettes;
    SeedCatalog catalog = synthesize_catalog(31, 60);
    long long total = 0, vcot = 0;
    for (std::uint64_t i = 0; total < 10000; ++i) {
        const ChartSeed& seed = catalog.seeds[i % catalog.seeds.size()];
        ChartPair pair = compose_chart(seed, palettes, StreamPath(6).tag("vc").tag(i).seed());
        Rng rng(i);
        QABatch batch = generate_qa_batch(pair.gt, pair.spec, 10, 0.2, rng);
        for (const auto& qa : batch.pairs) {
            ++total;
            if (qa.form == QAForm::VCot) ++vcot;
        }
    }
    double fraction = static_cast<double>(vcot) / static_cast<double>(total);
    REQUIRE(std::fabs(fraction - 0.20) <= 0.01);
}

TEST_CASE("the paper-count claim holds: families expand to many surface forms") {
    std::size_t surfaces = 0;
    for (const auto& t : builtin_templates()) surfaces += t.paraphrases.size();
    REQUIRE(builtin_templates().size() >= 20);
    REQUIRE(surfaces >= 150);
}
