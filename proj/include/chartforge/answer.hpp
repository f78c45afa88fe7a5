#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chartforge/errors.hpp"
#include "chartforge/util.hpp"

namespace chartforge {

enum class AnswerKind { Number, LabelText, NumberList, ColorName, StyleName, Count, YesNo };
enum class Tolerance { Strict, Flex };
enum class Retrieval { Direct, Complex };

inline std::string to_string(AnswerKind k) {
    switch (k) {
    case AnswerKind::Number: return "number";
    case AnswerKind::LabelText: return "label-text";
    case AnswerKind::NumberList: return "number-list";
    case AnswerKind::ColorName: return "color-name";
    case AnswerKind::StyleName: return "style-name";
    case AnswerKind::Count: return "count";
    case AnswerKind::YesNo: return "yes-no";
    }
    return "number";
}

inline AnswerKind answer_kind_from_string(const std::string& s) {
    if (s == "number") return AnswerKind::Number;
    if (s == "label-text") return AnswerKind::LabelText;
    if (s == "number-list") return AnswerKind::NumberList;
    if (s == "color-name") return AnswerKind::ColorName;
    if (s == "style-name") return AnswerKind::StyleName;
    if (s == "count") return AnswerKind::Count;
    if (s == "yes-no") return AnswerKind::YesNo;
    fail(Errc::config, "unknown answer kind: " + s);
}

inline std::string to_string(Tolerance t) { return t == Tolerance::Strict ? "strict" : "flex"; }

inline Tolerance tolerance_from_string(const std::string& s) {
    if (s == "strict") return Tolerance::Strict;
    if (s == "flex") return Tolerance::Flex;
    fail(Errc::config, "unknown tolerance: " + s);
}

inline std::string to_string(Retrieval r) { return r == Retrieval::Direct ? "direct" : "complex"; }

inline Retrieval retrieval_from_string(const std::string& s) {
    if (s == "direct") return Retrieval::Direct;
    if (s == "complex") return Retrieval::Complex;
    fail(Errc::config, "unknown retrieval class: " + s);
}

// A typed gold answer. `precision` controls the canonical text form of
// numeric payloads (the same grid the chart data lives on).
struct Answer {
    AnswerKind kind = AnswerKind::Number;
    double num = 0;
    std::vector<double> list;
    std::string text;
    int precision = 1;

    static Answer number(double v, int precision) {
        Answer a;
        a.kind = AnswerKind::Number;
        a.num = v;
        a.precision = precision;
        return a;
    }

    static Answer count(long long v) {
        Answer a;
        a.kind = AnswerKind::Count;
        a.num = static_cast<double>(v);
        a.precision = 0;
        return a;
    }

    static Answer label(std::string t) {
        Answer a;
        a.kind = AnswerKind::LabelText;
        a.text = std::move(t);
        return a;
    }

    static Answer color(std::string t) {
        Answer a;
        a.kind = AnswerKind::ColorName;
        a.text = std::move(t);
        return a;
    }

    static Answer style(std::string t) {
        Answer a;
        a.kind = AnswerKind::StyleName;
        a.text = std::move(t);
        return a;
    }

    static Answer numbers(std::vector<double> vs, int precision) {
        Answer a;
        a.kind = AnswerKind::NumberList;
        a.list = std::move(vs);
        a.precision = precision;
        return a;
    }

    static Answer yes_no(bool yes) {
        Answer a;
        a.kind = AnswerKind::YesNo;
        a.text = yes ? "yes" : "no";
        return a;
    }

    // Canonical text form: what the oracle answers and what gold looks like
    // in serialized corpora. No units.
    std::string canonical() const {
        switch (kind) {
        case AnswerKind::Number: return fmt_fixed(num, precision);
        case AnswerKind::Count: return std::to_string(static_cast<long long>(num));
        case AnswerKind::NumberList: {
            std::vector<std::string> parts;
            for (double v : list) parts.push_back(fmt_fixed(v, precision));
            return join(parts, ", ");
        }
        default: return text;
        }
    }
};

inline void to_json(nlohmann::json& j, const Answer& a) {
    j = nlohmann::json{{"kind", to_string(a.kind)}, {"precision", a.precision}};
    switch (a.kind) {
    case AnswerKind::Number:
    case AnswerKind::Count: j["num"] = a.num; break;
    case AnswerKind::NumberList: j["list"] = a.list; break;
    default: j["text"] = a.text; break;
    }
}

inline void from_json(const nlohmann::json& j, Answer& a) {
    a.kind = answer_kind_from_string(j.at("kind").get<std::string>());
    a.precision = j.value("precision", 1);
    a.num = j.value("num", 0.0);
    a.list = j.value("list", std::vector<double>{});
    a.text = j.value("text", std::string());
}

} // namespace chartforge
