#pragma once

// Hand-graded fixture for the strict/flex metric: every expected verdict was
// assigned by hand before the grader existed. Shared by the unit suite and
// the acceptance suite.

#include <string>
#include <vector>

#include "chartforge/answer.hpp"

namespace grade_fixture {

using chartforge::Answer;
using chartforge::Tolerance;

struct Row {
    std::string raw;     // model output
    Answer gold;
    Tolerance tolerance;
    bool expect_correct;
    const char* note;
};

inline std::vector<Row> rows() {
    using A = Answer;
    const Tolerance S = Tolerance::Strict, F = Tolerance::Flex;
    std::vector<Row> r;
    auto num = [](double v, int p) { return A::number(v, p); };

    // numeric, strict
    r.push_back({"2008", num(2008, 0), S, true, "exact year"});
    r.push_back({"1995", num(2008, 0), S, false, "wrong year, zero tolerance"});
    r.push_back({"12", num(12.0, 1), S, true, "integer form of 12.0"});
    r.push_back({"12.0", num(12.0, 1), S, true, "canonical form"});
    r.push_back({"12.04", num(12.0, 1), S, false, "off-grid value"});
    r.push_back({"$1,234.50", num(1234.5, 1), S, true, "currency and separator stripped"});
    r.push_back({" 850 ", num(850, 0), S, true, "whitespace"});
    r.push_back({"8.5e2", num(850, 0), S, true, "scientific notation"});
    r.push_back({"approximately 77", num(77, 0), S, true, "qualifier stripped"});
    r.push_back({"76.9", num(77, 0), S, false, "near miss is still a miss"});
    r.push_back({"48 units", num(48, 0), S, true, "unit suffix stripped"});
    r.push_back({"3.2k", num(3200, 0), S, true, "k multiplier"});

    // numeric, flex (5% relative)
    r.push_back({"104", num(100, 0), F, true, "4% off"});
    r.push_back({"106", num(100, 0), F, false, "6% off"});
    r.push_back({"1e-12", num(0, 1), F, true, "zero gold, epsilon rule"});
    r.push_back({"0.02", num(0, 1), F, false, "zero gold, outside epsilon"});
    r.push_back({"95", num(100, 0), F, true, "exactly on the 5% boundary"});
    r.push_back({"94.9", num(100, 0), F, false, "just past the boundary"});
    r.push_back({"-104", num(-100, 0), F, true, "negative values"});
    r.push_back({"21", num(20, 1), F, true, "5% of 20 is 1"});
    r.push_back({"21.1", num(20, 1), F, false, "past 5% of 20"});
    r.push_back({"about 12%", num(12, 0), F, true, "qualifier and percent"});
    r.push_back({"no idea", num(5, 0), S, false, "no numeric token parses"});

    // counts
    r.push_back({"5", A::count(5), S, true, "count digits"});
    r.push_back({"five", A::count(5), S, true, "count word"});
    r.push_back({"6", A::count(5), S, false, "off by one"});
    r.push_back({"none", A::count(0), S, true, "zero word"});

    // label text
    r.push_back({"Medication", A::label("Medication"), S, true, "exact"});
    r.push_back({" medication ", A::label("Medication"), S, true, "case fold"});
    r.push_back({"Medications", A::label("Medication"), S, false, "different token"});
    r.push_back({"'China'", A::label("China"), S, true, "quotes stripped"});
    r.push_back({"USA.", A::label("USA"), S, true, "trailing period"});
    r.push_back({"United States", A::label("USA"), S, false, "synonyms not accepted"});

    // color names
    r.push_back({"blue", A::color("blue"), S, true, "exact"});
    r.push_back({"Blue", A::color("blue"), S, true, "case fold"});
    r.push_back({" Dark Blue.", A::color("dark blue"), S, true, "trim and fold"});
    r.push_back({"dark grey", A::color("dark gray"), S, true, "grey to gray"});
    r.push_back({"navy blue", A::color("navy"), S, true, "synonym map"});
    r.push_back({"cyan", A::color("aqua"), S, true, "synonym map"});
    r.push_back({"red", A::color("dark red"), S, false, "wrong shade"});
    r.push_back({"lightblue", A::color("light blue"), S, true, "compound split"});

    // style names
    r.push_back({"dashed", A::style("dashed"), S, true, "exact"});
    r.push_back({"dashed line", A::style("dashed"), S, true, "noun stripped"});
    r.push_back({"dash", A::style("dashed"), S, true, "variant"});
    r.push_back({"solid", A::style("dashed"), S, false, "wrong style"});

    // yes/no
    r.push_back({"Yes", A::yes_no(true), S, true, "case fold"});
    r.push_back({"yes.", A::yes_no(true), S, true, "punctuation"});
    r.push_back({"no", A::yes_no(true), S, false, "flip"});
    r.push_back({"true", A::yes_no(true), S, true, "boolean synonym"});

    // ordered number lists
    Answer list_gold = A::numbers({2.0, 5.0, 7.5}, 1);
    r.push_back({"2, 5, 7.5", list_gold, S, true, "integer surface forms"});
    r.push_back({"2.0, 5.0 and 7.5", list_gold, S, true, "and-separated"});
    r.push_back({"5, 2, 7.5", list_gold, S, false, "order matters"});
    r.push_back({"2, 5", list_gold, S, false, "length matters"});
    r.push_back({"2.05, 5.1, 7.6", list_gold, F, true, "all within 5%"});

    return r;
}

} // namespace grade_fixture
