#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/color.hpp"
#include "chartforge/errors.hpp"
#include "chartforge/util.hpp"

namespace chartforge {

enum class ChartType { Line, Bar, HorizontalBar, Pie, Scatter };
enum class LabelKind { ContinuousNumeric, ContinuousTemporal, Categorical };

inline std::string to_string(ChartType t) {
    switch (t) {
    case ChartType::Line: return "line";
    case ChartType::Bar: return "bar";
    case ChartType::HorizontalBar: return "horizontal_bar";
    case ChartType::Pie: return "pie";
    case ChartType::Scatter: return "scatter";
    }
    return "line";
}

inline ChartType chart_type_from_string(const std::string& s) {
    if (s == "line") return ChartType::Line;
    if (s == "bar") return ChartType::Bar;
    if (s == "horizontal_bar") return ChartType::HorizontalBar;
    if (s == "pie") return ChartType::Pie;
    if (s == "scatter") return ChartType::Scatter;
    fail(Errc::config, "unknown chart_type: " + s);
}

// Human phrasing used in identity questions ("Is the image a ... chart?").
inline std::string chart_type_phrase(ChartType t) {
    switch (t) {
    case ChartType::Line: return "line";
    case ChartType::Bar: return "bar";
    case ChartType::HorizontalBar: return "horizontal bar";
    case ChartType::Pie: return "pie";
    case ChartType::Scatter: return "scatter";
    }
    return "line";
}

inline std::string to_string(LabelKind k) {
    switch (k) {
    case LabelKind::ContinuousNumeric: return "continuous-numeric";
    case LabelKind::ContinuousTemporal: return "continuous-temporal";
    case LabelKind::Categorical: return "categorical";
    }
    return "categorical";
}

inline LabelKind label_kind_from_string(const std::string& s) {
    if (s == "continuous-numeric") return LabelKind::ContinuousNumeric;
    if (s == "continuous-temporal") return LabelKind::ContinuousTemporal;
    if (s == "categorical") return LabelKind::Categorical;
    fail(Errc::config, "unknown label kind: " + s);
}

struct AxisDescriptor {
    std::string topic;
    std::string unit;
    LabelKind kind = LabelKind::Categorical;
    std::vector<std::string> labels; // candidate label vocabulary (x axis)
    double lo = 0.0, hi = 0.0;       // numeric range in data units (y axis)
};

// A chart code seed: the theme, units, ranges and palette a whole family of
// concrete charts is composed from.
struct ChartSeed {
    std::string seed_id;
    ChartType chart_type = ChartType::Line;
    std::string title;
    std::string domain_tag;
    AxisDescriptor x_axis;
    AxisDescriptor y_axis;
    std::vector<std::string> series_vocabulary;
    double value_lo = 0.0;
    double value_hi = 0.0;
    std::string palette_id;
    int precision = 1; // decimal places of the value grid
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    std::string summary() const { return join(violations, "; "); }
};

inline bool is_cartesian(ChartType t) { return t != ChartType::Pie; }

inline ValidationReport validate_seed(const ChartSeed& seed, const PaletteTable& palettes) {
    ValidationReport r;
    auto bad = [&](const std::string& msg) { r.violations.push_back(msg); };

    if (seed.seed_id.empty()) bad("seed_id empty");
    if (seed.title.empty()) bad("title empty");
    if (seed.domain_tag.empty()) bad("domain_tag empty");
    if (seed.x_axis.topic.empty()) bad("x_axis.topic empty");
    if (seed.y_axis.topic.empty()) bad("y_axis.topic empty");
    if (!std::isfinite(seed.value_lo) || !std::isfinite(seed.value_hi))
        bad("value_range not finite");
    else if (!(seed.value_lo < seed.value_hi))
        bad("value_range inverted");
    if (seed.series_vocabulary.size() < 4) bad("series vocabulary < 4");
    for (const auto& s : seed.series_vocabulary)
        if (s.empty()) bad("empty series vocabulary entry");
    if (seed.chart_type != ChartType::Scatter && seed.chart_type != ChartType::Pie &&
        seed.x_axis.labels.empty())
        bad("x_axis label vocabulary empty");
    if (seed.chart_type == ChartType::Scatter && seed.x_axis.kind != LabelKind::ContinuousNumeric)
        bad("scatter requires continuous-numeric x axis");
    if (seed.chart_type == ChartType::Scatter && seed.x_axis.labels.size() < 4)
        bad("scatter x grid vocabulary < 4");
    // Bars are drawn from a zero baseline so their pixel extent stays
    // proportional to the value; negative ranges would break that.
    if ((seed.chart_type == ChartType::Bar || seed.chart_type == ChartType::HorizontalBar) &&
        seed.value_lo < 0.0)
        bad("bar value_range must be non-negative");
    if (seed.palette_id.empty() || !palettes.has(seed.palette_id))
        bad("unknown palette_id: " + seed.palette_id);
    if (seed.precision < 0 || seed.precision > 3) bad("precision outside [0,3]");
    return r;
}

inline void to_json(nlohmann::json& j, const AxisDescriptor& a) {
    j = nlohmann::json{{"topic", a.topic},
                       {"unit", a.unit},
                       {"kind", to_string(a.kind)},
                       {"labels", a.labels},
                       {"lo", a.lo},
                       {"hi", a.hi}};
}

inline void from_json(const nlohmann::json& j, AxisDescriptor& a) {
    a.topic = j.at("topic").get<std::string>();
    a.unit = j.value("unit", std::string());
    a.kind = label_kind_from_string(j.at("kind").get<std::string>());
    a.labels = j.value("labels", std::vector<std::string>{});
    a.lo = j.value("lo", 0.0);
    a.hi = j.value("hi", 0.0);
}

inline void to_json(nlohmann::json& j, const ChartSeed& s) {
    j = nlohmann::json{{"seed_id", s.seed_id},
                       {"chart_type", to_string(s.chart_type)},
                       {"title", s.title},
                       {"domain_tag", s.domain_tag},
                       {"x_axis", s.x_axis},
                       {"y_axis", s.y_axis},
                       {"series_vocabulary", s.series_vocabulary},
                       {"value_range", {s.value_lo, s.value_hi}},
                       {"palette_id", s.palette_id},
                       {"precision", s.precision}};
}

inline void from_json(const nlohmann::json& j, ChartSeed& s) {
    s.seed_id = j.at("seed_id").get<std::string>();
    s.chart_type = chart_type_from_string(j.at("chart_type").get<std::string>());
    s.title = j.at("title").get<std::string>();
    s.domain_tag = j.at("domain_tag").get<std::string>();
    s.x_axis = j.at("x_axis").get<AxisDescriptor>();
    s.y_axis = j.at("y_axis").get<AxisDescriptor>();
    s.series_vocabulary = j.at("series_vocabulary").get<std::vector<std::string>>();
    const auto& vr = j.at("value_range");
    if (!vr.is_array() || vr.size() != 2) fail(Errc::config, "value_range must be [lo, hi]");
    s.value_lo = vr[0].get<double>();
    s.value_hi = vr[1].get<double>();
    s.palette_id = j.at("palette_id").get<std::string>();
    s.precision = j.value("precision", 1);
}

struct SeedCatalog {
    std::vector<ChartSeed> seeds;
    std::map<std::string, std::size_t> by_id;

    void add(ChartSeed seed) {
        by_id[seed.seed_id] = seeds.size();
        seeds.push_back(std::move(seed));
    }

    bool has(const std::string& id) const { return by_id.count(id) != 0; }

    const ChartSeed& get(const std::string& id) const {
        auto it = by_id.find(id);
        if (it == by_id.end()) fail(Errc::not_found, "unknown seed: " + id);
        return seeds[it->second];
    }
};

struct SeedLoadResult {
    SeedCatalog catalog;
    int rejected = 0;
    std::vector<std::string> rejection_log;
};

// Seed files are line-delimited JSON, one seed per line; records that fail
// validation are dropped and reported, never silently kept.
inline SeedLoadResult load_seeds(const std::string& path, const PaletteTable& palettes) {
    std::ifstream in(path);
    if (!in) fail(Errc::io, "cannot open seed file: " + path);
    SeedLoadResult result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::string reason;
        try {
            ChartSeed seed = nlohmann::json::parse(line).get<ChartSeed>();
            ValidationReport report = validate_seed(seed, palettes);
            if (report.ok() && result.catalog.has(seed.seed_id))
                report.violations.push_back("duplicate seed_id: " + seed.seed_id);
            if (report.ok()) {
                result.catalog.add(std::move(seed));
                continue;
            }
            reason = report.summary();
        } catch (const nlohmann::json::exception& e) {
            reason = e.what();
        } catch (const Error& e) {
            reason = e.what();
        }
        ++result.rejected;
        result.rejection_log.push_back("line " + std::to_string(line_no) + ": " + reason);
    }
    if (result.catalog.seeds.empty())
        fail(Errc::config, "seed catalog is empty: " + path +
                               " (" + std::to_string(result.rejected) + " rejected)");
    return result;
}

inline void save_seeds(const SeedCatalog& catalog, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io, "cannot write seed file: " + path);
    for (const auto& seed : catalog.seeds) {
        nlohmann::json j = seed;
        out << j.dump() << "\n";
    }
}

} // namespace chartforge
