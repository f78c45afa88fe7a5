#pragma once

#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/answer.hpp"
#include "chartforge/normalize.hpp"
#include "chartforge/qa.hpp"

namespace chartforge {

// Numeric strict comparison tolerance: values live on a decimal grid, so
// anything beyond float noise is a different value. Flex at gold == 0
// degenerates, so the same epsilon doubles as the absolute fallback.
inline constexpr double kStrictEps = 1e-9;

inline bool grade_number(double pred, double gold, Tolerance tol) {
    if (tol == Tolerance::Strict) return std::fabs(pred - gold) <= kStrictEps;
    if (gold == 0.0) return std::fabs(pred) <= kStrictEps;
    return std::fabs(pred - gold) <= 0.05 * std::fabs(gold);
}

// The strict/flex grading rule. Strict is exact equality after
// normalization; flex allows 5% relative error on numeric answers and falls
// back to strict for everything non-numeric.
inline bool grade(const Normalized& predicted, const Answer& gold, Tolerance tolerance) {
    switch (gold.kind) {
    case AnswerKind::Number:
    case AnswerKind::Count:
        if (!predicted.has_number || predicted.parse_failed) return false;
        return grade_number(predicted.number, gold.num, tolerance);
    case AnswerKind::NumberList: {
        if (predicted.numbers.size() != gold.list.size()) return false;
        for (std::size_t i = 0; i < gold.list.size(); ++i)
            if (!grade_number(predicted.numbers[i], gold.list[i], tolerance)) return false;
        return true;
    }
    default:
        return predicted.text == to_lower(gold.canonical());
    }
}

inline bool grade_raw(const std::string& raw, const Answer& gold, Tolerance tolerance) {
    return grade(normalize_answer(raw, gold.kind), gold, tolerance);
}

struct GradeRecord {
    std::string qa_id;
    std::string chart_id;
    std::string chart_type;
    Retrieval retrieval = Retrieval::Direct;
    Tolerance tolerance = Tolerance::Strict;
    std::string raw;
    std::string predicted; // normalized text
    Answer gold;
    bool correct = false;
};

inline void to_json(nlohmann::json& j, const GradeRecord& r) {
    j = nlohmann::json{{"qa_id", r.qa_id},
                       {"chart_id", r.chart_id},
                       {"chart_type", r.chart_type},
                       {"retrieval_class", to_string(r.retrieval)},
                       {"tolerance", to_string(r.tolerance)},
                       {"raw", r.raw},
                       {"predicted", r.predicted},
                       {"gold", r.gold},
                       {"correct", r.correct}};
}

inline void from_json(const nlohmann::json& j, GradeRecord& r) {
    r.qa_id = j.at("qa_id").get<std::string>();
    r.chart_id = j.at("chart_id").get<std::string>();
    r.chart_type = j.at("chart_type").get<std::string>();
    r.retrieval = retrieval_from_string(j.at("retrieval_class").get<std::string>());
    r.tolerance = tolerance_from_string(j.at("tolerance").get<std::string>());
    r.raw = j.at("raw").get<std::string>();
    r.predicted = j.at("predicted").get<std::string>();
    r.gold = j.at("gold").get<Answer>();
    r.correct = j.at("correct").get<bool>();
}

inline GradeRecord grade_pair(const QAPair& pair, const std::string& raw_answer) {
    GradeRecord r;
    r.qa_id = pair.qa_id;
    r.chart_id = pair.chart_id;
    r.chart_type = pair.chart_type;
    r.retrieval = pair.retrieval_class;
    r.tolerance = pair.tolerance;
    r.raw = raw_answer;
    Normalized n = normalize_answer(raw_answer, pair.gold.kind);
    r.predicted = n.text;
    r.gold = pair.gold;
    r.correct = grade(n, pair.gold, pair.tolerance);
    return r;
}

struct CellStats {
    int n = 0;
    int correct = 0;

    double accuracy() const { return n == 0 ? 0.0 : static_cast<double>(correct) / n; }
};

// Accuracy broken down by chart type x retrieval class. Cells with no
// records stay absent rather than reading as 0%.
struct Report {
    CellStats overall;
    std::map<std::string, std::array<CellStats, 3>> by_type; // {direct, complex, all}

    static constexpr int kDirect = 0, kComplex = 1, kAll = 2;
};

inline Report aggregate(const std::vector<GradeRecord>& records) {
    Report rep;
    for (const auto& r : records) {
        rep.overall.n++;
        rep.overall.correct += r.correct ? 1 : 0;
        auto& cells = rep.by_type[r.chart_type];
        int idx = r.retrieval == Retrieval::Direct ? Report::kDirect : Report::kComplex;
        cells[static_cast<std::size_t>(idx)].n++;
        cells[static_cast<std::size_t>(idx)].correct += r.correct ? 1 : 0;
        cells[Report::kAll].n++;
        cells[Report::kAll].correct += r.correct ? 1 : 0;
    }
    return rep;
}

inline void to_json(nlohmann::json& j, const Report& rep) {
    j = nlohmann::json::object();
    j["overall"] = {{"n", rep.overall.n}, {"correct", rep.overall.correct},
                    {"accuracy", rep.overall.accuracy()}};
    nlohmann::json types = nlohmann::json::object();
    static const char* names[3] = {"direct", "complex", "all"};
    for (const auto& [type, cells] : rep.by_type) {
        nlohmann::json row = nlohmann::json::object();
        for (int i = 0; i < 3; ++i) {
            const CellStats& c = cells[static_cast<std::size_t>(i)];
            if (c.n == 0) continue; // absent, never 0%
            row[names[i]] = {{"n", c.n}, {"correct", c.correct}, {"accuracy", c.accuracy()}};
        }
        types[type] = row;
    }
    j["by_chart_type"] = types;
}

inline void print_report(const Report& rep, std::ostream& os) {
    auto pct = [](const CellStats& c) {
        if (c.n == 0) return std::string("   -  ");
        std::string s = fmt_fixed(c.accuracy() * 100.0, 1) + "%";
        while (s.size() < 6) s.insert(0, " ");
        return s;
    };
    os << "chart type       direct  complex      all\n";
    for (const auto& [type, cells] : rep.by_type) {
        std::string name = type;
        name.resize(16, ' ');
        os << name << " " << pct(cells[0]) << "  " << pct(cells[1]) << "   " << pct(cells[2])
           << "\n";
    }
    os << "overall accuracy: " << fmt_fixed(rep.overall.accuracy() * 100.0, 1) << "% ("
       << rep.overall.correct << "/" << rep.overall.n << ")\n";
}

} // namespace chartforge
