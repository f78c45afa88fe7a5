#pragma once

#include <string>
#include <vector>

#include "chartforge/rng.hpp"
#include "chartforge/seed.hpp"
#include "chartforge/seed_tables.hpp"

namespace chartforge {

namespace detail {

inline std::vector<std::string> temporal_vocabulary(Rng& rng) {
    static const std::vector<std::string> months = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    switch (rng.below(3)) {
    case 0: { // year window
        int start = 1998 + rng.range(0, 18);
        int len = rng.range(6, 10);
        std::vector<std::string> out;
        for (int i = 0; i < len; ++i) out.push_back(std::to_string(start + i));
        return out;
    }
    case 1: { // month window starting in January
        int len = rng.range(6, 12);
        return std::vector<std::string>(months.begin(), months.begin() + len);
    }
    default: { // quarter window
        int year = 2017 + rng.range(0, 6);
        int len = rng.range(6, 8);
        std::vector<std::string> out;
        int q = 0;
        for (int i = 0; i < len; ++i) {
            out.push_back("Q" + std::to_string(q + 1) + " " + std::to_string(year));
            if (++q == 4) {
                q = 0;
                ++year;
            }
        }
        return out;
    }
    }
}

inline std::vector<std::string> numeric_vocabulary(const ScatterXRow& row, int x_precision) {
    std::vector<std::string> out;
    for (double v = row.lo; v <= row.hi + 1e-9; v += row.step)
        out.push_back(fmt_fixed(v, x_precision));
    return out;
}

} // namespace detail

// Deterministic stand-in for one-time LLM seed authoring: a pure function of
// (rng seed, chart_type, domain_tag) over the built-in theme tables.
inline ChartSeed synthesize_seed(std::uint64_t rng_seed, ChartType chart_type,
                                 const std::string& domain_tag) {
    const DomainTable& domain = find_domain(domain_tag);
    const PaletteTable palettes; // builtin table
    Rng rng(rng_seed, fnv1a64(domain_tag) | 1);

    const ThemeRow& theme = domain.themes[rng.below(static_cast<std::uint32_t>(domain.themes.size()))];

    ChartSeed seed;
    seed.chart_type = chart_type;
    seed.title = theme.title;
    seed.domain_tag = domain_tag;
    seed.series_vocabulary =
        domain.series_pools[rng.below(static_cast<std::uint32_t>(domain.series_pools.size()))];
    seed.palette_id = builtin_palettes()[rng.below(
        static_cast<std::uint32_t>(builtin_palettes().size()))].palette_id;

    // Tighten the theme range to a sub-window so seeds from one theme differ.
    double span = theme.hi - theme.lo;
    double lo = theme.lo + rng.uniform(0.0, 0.25) * span;
    double hi = theme.hi - rng.uniform(0.0, 0.25) * span;
    if (hi - lo < span * 0.3) {
        lo = theme.lo;
        hi = theme.hi;
    }

    seed.y_axis.topic = theme.y_topic;
    seed.y_axis.unit = theme.y_unit;

    switch (chart_type) {
    case ChartType::Pie: {
        // Pie values are percentage shares, not theme units.
        seed.y_axis.topic = "share";
        seed.y_axis.unit = "%";
        seed.x_axis.topic = "category";
        seed.x_axis.kind = LabelKind::Categorical;
        seed.value_lo = 1.0;
        seed.value_hi = 80.0;
        seed.precision = 1;
        break;
    }
    case ChartType::Scatter: {
        const ScatterXRow& sx =
            domain.scatter_x[rng.below(static_cast<std::uint32_t>(domain.scatter_x.size()))];
        seed.x_axis.topic = sx.topic;
        seed.x_axis.unit = sx.unit;
        seed.x_axis.kind = LabelKind::ContinuousNumeric;
        seed.x_axis.labels = detail::numeric_vocabulary(sx, 0);
        seed.value_lo = lo;
        seed.value_hi = hi;
        break;
    }
    default: {
        bool temporal = chart_type == ChartType::Line ? rng.bernoulli(0.7) : rng.bernoulli(0.35);
        if (chart_type == ChartType::HorizontalBar) temporal = false;
        if (temporal) {
            seed.x_axis.topic = "period";
            seed.x_axis.unit = "";
            seed.x_axis.kind = LabelKind::ContinuousTemporal;
            seed.x_axis.labels = detail::temporal_vocabulary(rng);
        } else {
            seed.x_axis.topic = "category";
            seed.x_axis.unit = "";
            seed.x_axis.kind = LabelKind::Categorical;
            seed.x_axis.labels = domain.category_pools[rng.below(
                static_cast<std::uint32_t>(domain.category_pools.size()))];
        }
        seed.value_lo = lo;
        seed.value_hi = hi;
        break;
    }
    }

    if ((chart_type == ChartType::Bar || chart_type == ChartType::HorizontalBar) &&
        seed.value_lo < 0.0)
        seed.value_lo = 0.0;

    if (chart_type != ChartType::Pie)
        seed.precision = (seed.value_hi - seed.value_lo) >= 200.0 ? 0 : 1;

    seed.y_axis.lo = seed.value_lo;
    seed.y_axis.hi = seed.value_hi;
    seed.seed_id = domain_tag + "-" + to_string(chart_type) + "-" +
                   to_hex(splitmix64(rng_seed ^ fnv1a64(seed.title)), 8);

    ValidationReport report = validate_seed(seed, palettes);
    if (!report.ok())
        fail(Errc::integrity, "synthesized seed failed validation: " + report.summary());
    return seed;
}

// Builds a catalog of `count` synthesized seeds spread across chart types and
// the built-in domains. Pure function of (master_seed, count).
inline SeedCatalog synthesize_catalog(std::uint64_t master_seed, int count,
                                      const std::vector<std::string>& domains = {}) {
    const std::vector<std::string> tags = domains.empty() ? builtin_domain_tags() : domains;
    static const ChartType types[] = {ChartType::Line, ChartType::Bar, ChartType::HorizontalBar,
                                      ChartType::Pie, ChartType::Scatter};
    SeedCatalog catalog;
    int emitted = 0;
    for (std::uint64_t i = 0; emitted < count; ++i) {
        Rng pick = stream_rng(master_seed, "seed-synth", i);
        const std::string& tag = tags[pick.below(static_cast<std::uint32_t>(tags.size()))];
        ChartType type = types[pick.below(5)];
        ChartSeed seed = synthesize_seed(stream_rng(master_seed, "seed-body", i).next_u64(), type, tag);
        if (catalog.has(seed.seed_id)) continue; // rare content collision, draw again
        catalog.add(std::move(seed));
        ++emitted;
    }
    return catalog;
}

} // namespace chartforge
