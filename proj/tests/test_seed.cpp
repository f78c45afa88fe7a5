#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "chartforge/seed.hpp"
#include "chartforge/seed_synth.hpp"
#include "testutil.hpp"

using namespace chartforge;

namespace {

ChartSeed valid_seed() {
    return synthesize_seed(7, ChartType::Line, "economics");
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    for (const auto& l : lines) out << l << "\n";
}

} // namespace

TEST_CASE("validate_seed flags inverted value ranges") {
    PaletteTable palettes;
    ChartSeed seed = valid_seed();
    seed.value_lo = 100;
    seed.value_hi = 50;
    ValidationReport report = validate_seed(seed, palettes);
    REQUIRE_FALSE(report.ok());
    REQUIRE(report.summary().find("inverted") != std::string::npos);
}

TEST_CASE("validate_seed flags short pie vocabularies") {
    PaletteTable palettes;
    ChartSeed seed = synthesize_seed(7, ChartType::Pie, "economics");
    seed.series_vocabulary = {"A", "B"};
    ValidationReport report = validate_seed(seed, palettes);
    REQUIRE_FALSE(report.ok());
    REQUIRE(report.summary().find("vocabulary") != std::string::npos);
}

TEST_CASE("validate_seed accepts a conforming seed") {
    PaletteTable palettes;
    REQUIRE(validate_seed(valid_seed(), palettes).ok());
}

TEST_CASE("load_seeds ingests valid records") {
    PaletteTable palettes;
    auto dir = testutil::temp_dir("seed_load");
    std::vector<std::string> lines;
    for (std::uint64_t i = 0; i < 3; ++i) {
        nlohmann::json j = synthesize_seed(100 + i, ChartType::Bar, "retail");
        lines.push_back(j.dump());
    }
    write_lines(dir / "seeds.jsonl", lines);
    SeedLoadResult result = load_seeds((dir / "seeds.jsonl").string(), palettes);
    REQUIRE(result.catalog.seeds.size() == 3);
    REQUIRE(result.rejected == 0);
}

TEST_CASE("load_seeds rejects invalid records and reports them") {
    PaletteTable palettes;
    auto dir = testutil::temp_dir("seed_reject");
    nlohmann::json good1 = synthesize_seed(1, ChartType::Line, "energy");
    nlohmann::json good2 = synthesize_seed(2, ChartType::Line, "energy");
    nlohmann::json bad = synthesize_seed(3, ChartType::Line, "energy");
    bad.erase("value_range");
    write_lines(dir / "seeds.jsonl", {good1.dump(), bad.dump(), good2.dump()});
    SeedLoadResult result = load_seeds((dir / "seeds.jsonl").string(), palettes);
    REQUIRE(result.catalog.seeds.size() == 2);
    REQUIRE(result.rejected == 1);
    REQUIRE(result.rejection_log.size() == 1);
}

TEST_CASE("load_seeds on an empty file is an error") {
    PaletteTable palettes;
    auto dir = testutil::temp_dir("seed_empty");
    write_lines(dir / "seeds.jsonl", {});
    REQUIRE_THROWS_AS(load_seeds((dir / "seeds.jsonl").string(), palettes), Error);
}

TEST_CASE("load_seeds on a missing file is an io error") {
    PaletteTable palettes;
    try {
        load_seeds("/nonexistent/seeds.jsonl", palettes);
        FAIL("expected an error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::io);
    }
}

TEST_CASE("seed catalogs round-trip through save and load") {
    PaletteTable palettes;
    auto dir = testutil::temp_dir("seed_roundtrip");
    SeedCatalog catalog = synthesize_catalog(11, 40);
    save_seeds(catalog, (dir / "seeds.jsonl").string());
    SeedLoadResult result = load_seeds((dir / "seeds.jsonl").string(), palettes);
    REQUIRE(result.rejected == 0);
    REQUIRE(result.catalog.seeds.size() == catalog.seeds.size());
    for (std::size_t i = 0; i < catalog.seeds.size(); ++i) {
        nlohmann::json a = catalog.seeds[i];
        nlohmann::json b = result.catalog.seeds[i];
        REQUIRE(a.dump() == b.dump());
    }
}

TEST_CASE("synthesize_seed is a pure function of its inputs") {
    nlohmann::json a = synthesize_seed(42, ChartType::Line, "economics");
    nlohmann::json b = synthesize_seed(42, ChartType::Line, "economics");
    REQUIRE(a.dump() == b.dump());
}

TEST_CASE("synthesize_seed honors the requested chart type") {
    ChartSeed seed = synthesize_seed(42, ChartType::Pie, "economics");
    PaletteTable palettes;
    REQUIRE(seed.chart_type == ChartType::Pie);
    REQUIRE(validate_seed(seed, palettes).ok());
}

TEST_CASE("synthesize_seed rejects unknown domains") {
    try {
        synthesize_seed(1, ChartType::Line, "astrology");
        FAIL("expected an error");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::not_found);
    }
}

TEST_CASE("synthesized seeds always validate") {
    PaletteTable palettes;
    static const ChartType types[] = {ChartType::Line, ChartType::Bar, ChartType::HorizontalBar,
                                      ChartType::Pie, ChartType::Scatter};
    for (std::uint64_t i = 0; i < 200; ++i) {
        for (const auto& tag : builtin_domain_tags()) {
            ChartSeed seed = synthesize_seed(i * 31 + 5, types[i % 5], tag);
            INFO(seed.seed_id);
            REQUIRE(validate_seed(seed, palettes).ok());
        }
    }
}

TEST_CASE("1000 seed draws cover at least 50 distinct titles") {
    // Oracle run over the built-in tables; the threshold is frozen at 50.
    std::set<std::string> titles;
    const auto tags = builtin_domain_tags();
    static const ChartType types[] = {ChartType::Line, ChartType::Bar, ChartType::HorizontalBar,
                                      ChartType::Pie, ChartType::Scatter};
    for (std::uint64_t i = 0; i < 1000; ++i) {
        ChartSeed seed = synthesize_seed(9000 + i, types[i % 5], tags[i % tags.size()]);
        titles.insert(seed.title);
    }
    REQUIRE(titles.size() >= 50);
}

TEST_CASE("built-in tables meet the documented floor") {
    REQUIRE(builtin_domains().size() >= 10);
    for (const auto& d : builtin_domains()) {
        REQUIRE(d.themes.size() >= 20);
        for (const auto& pool : d.series_pools) REQUIRE(pool.size() >= 4);
    }
    REQUIRE(color_vocabulary().size() == 24);
    for (const auto& p : builtin_palettes()) {
        REQUIRE(p.entries.size() >= 6);
        std::set<std::string> names;
        for (const auto& e : p.entries) {
            REQUIRE(is_canonical_color(e.name));
            REQUIRE(names.insert(e.name).second); // unique within the palette
        }
    }
}
