#pragma once

#include <string>
#include <vector>

#include "chartforge/answer.hpp"
#include "chartforge/seed.hpp"

namespace chartforge {

enum class Family {
    ValueAtLabel,
    LegendForValueAtX,
    ValuesAtXBottomToTop,
    ValuesAtXAscending,
    ValuesAscendingAtTickLeftOf,
    LegendWithLineVisual,
    LineStyleOfLegend,
    NthPointOnLineByVisual,
    LinesBelowCount,
    PeakXOfLegend,
    TroughXOfLegend,
    PeakXByVisual,
    TroughXByVisual,
    NthBarFromLeftByVisual,
    NthBarFromBottomByVisual,
    LongestBarOfColor,
    ShortestBarOfColor,
    SectorCount,
    SectorShareByLabel,
    SectorShareByColor,
    LargestSectorShare,
    SmallestSectorShare,
    ScatterYAtX,
    ScatterXAtY,
    LegendCount,
    DistinctColorCount,
    ScatterPeakXOfLegend,
    ScatterTroughXOfLegend,
    ScatterLegendForXY,
};

// Tolerance assignment rule for a family's answers.
//   AlwaysStrict  - text, color, style, count and x-label text answers
//   ValueDependent- numeric answers read off the value axis: strict when the
//                   chart prints value labels, flex when estimated
//   XLabelNumeric - numeric answers that are axis tick labels: strict when
//                   that label is printed (or is year-like), flex when the
//                   tick was omitted
enum class ToleranceRule { AlwaysStrict, ValueDependent, XLabelNumeric };

struct QATemplate {
    std::string template_id;
    Family family;
    std::vector<ChartType> chart_types;
    std::vector<std::string> paraphrases;
    AnswerKind answer_kind;
    Retrieval retrieval;
    ToleranceRule tolerance;
};

inline const std::vector<QATemplate>& builtin_templates() {
    static const std::vector<QATemplate> templates = [] {
        std::vector<QATemplate> t;
        const std::vector<ChartType> line = {ChartType::Line};
        const std::vector<ChartType> bar = {ChartType::Bar};
        const std::vector<ChartType> hbar = {ChartType::HorizontalBar};
        const std::vector<ChartType> bars = {ChartType::Bar, ChartType::HorizontalBar};
        const std::vector<ChartType> pie = {ChartType::Pie};
        const std::vector<ChartType> scatter = {ChartType::Scatter};
        const std::vector<ChartType> cart_lbh = {ChartType::Line, ChartType::Bar,
                                                 ChartType::HorizontalBar};
        const std::vector<ChartType> all = {ChartType::Line, ChartType::Bar,
                                            ChartType::HorizontalBar, ChartType::Pie,
                                            ChartType::Scatter};

        t.push_back({"value-at-label", Family::ValueAtLabel, cart_lbh,
                     {"Can you tell me the value of {legend_label} in {xlabel}?",
                      "I'd like to know the value of {legend_label} within {xlabel}.",
                      "Could you provide the value of {legend_label} found in {xlabel}?",
                      "What amount does {legend_label} have in {xlabel}?",
                      "Please specify the value of {legend_label} in the context of {xlabel}.",
                      "What is the value of {legend_label} in {xlabel} ?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::ValueDependent});

        t.push_back({"legend-for-value-at-x", Family::LegendForValueAtX, cart_lbh,
                     {"Can you identify the legend label with a value of {value_label} at the position marked by {xlabel}?",
                      "What legend label shows a value of {value_label} at the point {xlabel}?",
                      "Could you tell me which legend label corresponds to the value {value_label} at {xlabel}?",
                      "Which label in the legend has the value {value_label} at the {xlabel} position?",
                      "Identify the legend label with a value of {value_label} at {xlabel}, please.",
                      "Which legend label has a value of {value_label} at the position of {xlabel} ?",
                      "What is the legend label for the value {value_label} on the {xlabel} axis?",
                      "Identify the legend label that corresponds to the value {value_label} in {xlabel}.",
                      "Which legend label matches the value {value_label} in {xlabel}?",
                      "Find the legend label associated with the value {value_label} in {xlabel}.",
                      "Can you tell me the legend label that has the value {value_label} in {xlabel}?",
                      "Which legend label have value of {value_label} in {xlabel} ?"},
                     AnswerKind::LabelText, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"values-bottom-to-top", Family::ValuesAtXBottomToTop, line,
                     {"List the values at {xlabel} from bottom to top.",
                      "Give me the values at {xlabel} arranged in a list from bottom to top.",
                      "Could you provide the values at {xlabel} in a list, starting from the bottom and going to the top?",
                      "Please provide a list of the values at {xlabel} in order from bottom to top.",
                      "I'd like the values at {xlabel} in a list format, ordered from bottom to top.",
                      "Provide the values at {xlabel} in a list format from bottom to top."},
                     AnswerKind::NumberList, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"values-ascending", Family::ValuesAtXAscending, bars,
                     {"Provide the values at {xlabel} in a list format rating from small to large.",
                      "Can you list the values at {xlabel} from small to large?",
                      "Please arrange the values at {xlabel} in a list from small to large.",
                      "List the values at {xlabel} in ascending order.",
                      "I'd like to see the values at {xlabel} rated from small to large in a list.",
                      "Can you provide a list of the values at {xlabel} from the smallest to the largest?",
                      "Could you please give the values at {xlabel} in a list format, ordered from small to large?"},
                     AnswerKind::NumberList, Retrieval::Direct, ToleranceRule::ValueDependent});

        t.push_back({"values-ascending-left-of", Family::ValuesAscendingAtTickLeftOf, line,
                     {"What are the data values in ascending order on the x-axis tick right before {xlabel}?",
                      "Can you list the data values from smallest to largest on the x-axis tick just to the left of {xlabel}?",
                      "Please provide the data values sorted from smallest to largest for the x-axis tick immediately preceding {xlabel}.",
                      "Could you tell me the data values from smallest to largest at the x-axis tick just before {xlabel}?",
                      "What are the data values, ordered from smallest to largest, on the x-axis tick directly left of {xlabel}?",
                      "On the x-axis tick immediately to the left of {xlabel}, what are the data values from smallest to largest?"},
                     AnswerKind::NumberList, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"legend-by-line-visual", Family::LegendWithLineVisual, line,
                     {"What legend label features a {line_color} {line_style} line?",
                      "Which legend key shows a {line_color} {line_style} line?",
                      "Can you identify the legend label with a {line_color} {line_style} line?",
                      "Which label in the legend corresponds to a {line_color} {line_style} line?",
                      "Could you tell me which legend label has a {line_color} {line_style} line?",
                      "Which legend label has a {line_color} {line_style} line?"},
                     AnswerKind::LabelText, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"line-style-of-legend", Family::LineStyleOfLegend, line,
                     {"Can you tell me the line style for {legend_label}?",
                      "What kind of line style does {legend_label} use?",
                      "Please specify the line style associated with {legend_label}.",
                      "How is the line style defined for {legend_label}?",
                      "What's the type of line style for {legend_label}?",
                      "What is the line style of {legend_label}?"},
                     AnswerKind::StyleName, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"nth-point-on-line", Family::NthPointOnLineByVisual, line,
                     {"Can you tell me the value of the {n}th data point from the left on the {line_color} line that is {line_style}?",
                      "What is the value of the {n}th point from the left on the {line_style} line that is colored {line_color}?",
                      "Please provide the value of the {n}th data point from the left on the {line_color} {line_style} line.",
                      "Could you specify the value of the {n}th point from the left on the {line_style} line in {line_color}?",
                      "What value does the {n}th point from the left have on the {line_color} line with {line_style}?",
                      "What is the value of the {n}th data point from left to right on the {line_style} line of {line_color} color?"},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"lines-below-count", Family::LinesBelowCount, line,
                     {"When the line labeled {legend_label} hits the {value_label} mark at {xlabel}, how many lines is it positioned above?",
                      "At {xlabel}, when the {legend_label} line reaches the {value_label} level, how many other lines is it above?",
                      "How many lines are beneath the {legend_label} line when it reaches {value_label} at {xlabel}?",
                      "When {legend_label} hits the value {value_label} at {xlabel}, how many lines are below it?",
                      "How many lines does the line labeled {legend_label} surpass at {xlabel} when it attains the {value_label} value?",
                      "When the line represented by {legend_label} reaches the value {value_label} at {xlabel}, how many lines is this line above?"},
                     AnswerKind::Count, Retrieval::Complex, ToleranceRule::AlwaysStrict});

        t.push_back({"peak-x-of-legend", Family::PeakXOfLegend, line,
                     {"At which x-label does the line represented by {legend_label} reach its highest point?",
                      "Where does the line indicated by {legend_label} peak on the x-axis?",
                      "Can you identify the x-label where the line for {legend_label} reaches its maximum value?",
                      "Which x-label corresponds to the highest point of the line denoted by {legend_label}?",
                      "At what x-label is the peak of the line marked by {legend_label}?",
                      "The highest point of the line represented by {legend_label} is at which x-label?"},
                     AnswerKind::LabelText, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"trough-x-of-legend", Family::TroughXOfLegend, line,
                     {"Where on the x-axis does the line labeled {legend_label} dip to its lowest value?",
                      "Can you tell me the x-label where the {legend_label} line hits its minimum?",
                      "At which point on the x-axis does the {legend_label} line bottom out?",
                      "What's the x-label where the line for {legend_label} reaches its lowest point?",
                      "Where along the x-axis does the {legend_label} line find its lowest value?",
                      "At which x-label does the line represented by {legend_label} reach its lowest point?"},
                     AnswerKind::LabelText, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"peak-x-by-visual", Family::PeakXByVisual, line,
                     {"At which xlabel does the {line_color} colored line with {line_style} reach its peak?",
                      "Which x-label marks the highest point of the {line_color} line that's styled as {line_style}?"},
                     AnswerKind::LabelText, Retrieval::Complex, ToleranceRule::AlwaysStrict});

        t.push_back({"trough-x-by-visual", Family::TroughXByVisual, line,
                     {"At which x-label does the line with color {line_color} and style {line_style} reach its lowest point?",
                      "Where along the x-axis does the {line_color} line, with its {line_style} style, hit the bottom?",
                      "Can you tell me the x-label where the {line_color} line, designed in {line_style}, drops to its lowest?",
                      "Which x-label marks the lowest point of the {line_color} line that's styled as {line_style}?",
                      "What's the x-label where the {line_color} line, styled in {line_style}, touches its lowest point?",
                      "Which xlabel does the {line_color} line, styled as {line_style}, reach its bottom?"},
                     AnswerKind::LabelText, Retrieval::Complex, ToleranceRule::AlwaysStrict});

        t.push_back({"nth-bar-from-left", Family::NthBarFromLeftByVisual, bar,
                     {"What is the value of the {n}th data point from left on the {border_type} border bar of {line_color} color?",
                      "Could you tell me the value of the {n}th data point from left on the {border_type} border bar in {line_color}?",
                      "Please provide the value of the {n}th data point from left on the {line_color} {border_type} border bar.",
                      "What's the value of the {n}th data point from left on the {line_color} {border_type} border bar?",
                      "I need the value of the {n}th data point from left on the {border_type} border bar of {line_color}.",
                      "Can you find the value of the {n}th data point from left on the {line_color} border bar of {border_type} type?",
                      "Please tell me the value of the {n}th data point from left on the {border_type} border bar that is {line_color}."},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"nth-bar-from-bottom", Family::NthBarFromBottomByVisual, hbar,
                     {"What is the value of the {n}th data point from bottom to top on the {border_type} border bar of {line_color} color?",
                      "Could you tell me the value of the {n}th data point from the bottom to top on the {border_type} border bar in {line_color}?",
                      "Please provide the value of the {n}th data point from bottom to top on the {line_color} {border_type} border bar.",
                      "What's the value of the {n}th data point from bottom to top on the {line_color} {border_type} border bar?",
                      "I need the value of the {n}th data point from the bottom to the top on the {border_type} border bar of {line_color}.",
                      "Can you find the value of the {n}th data point from bottom to top on the {line_color} border bar of {border_type} type?",
                      "Please tell me the value of the {n}th data point from bottom to top on the {border_type} border bar that is {line_color}."},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"longest-bar-of-color", Family::LongestBarOfColor, bars,
                     {"What is the value of the longest {line_color} bar?",
                      "Can you tell me the value of the tallest {line_color} bar?",
                      "I need to know the value of the highest {line_color} bar.",
                      "What is the value of the {line_color} bar with the maximum height?",
                      "Please provide the value of the largest {line_color} bar.",
                      "Could you find out the value of the highest {line_color} bar?"},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"shortest-bar-of-color", Family::ShortestBarOfColor, bars,
                     {"What is the value of the shortest {line_color} bar?",
                      "Can you tell me the value of the smallest {line_color} bar?",
                      "I need to know the value of the least tall {line_color} bar.",
                      "What is the value of the {line_color} bar with the minimum height?",
                      "Please provide the value of the {line_color} bar that is the shortest.",
                      "Could you find out the value of the shortest {line_color} bar for me?"},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"sector-count", Family::SectorCount, pie,
                     {"How many sectors are there in total in this pie chart?",
                      "How many segments are there in total in this pie chart?",
                      "What is the total number of sectors in this pie chart?",
                      "How many segments in total are present in this pie chart?",
                      "What is the total count of sectors in this pie chart?",
                      "How many segments does this pie chart have in total?"},
                     AnswerKind::Count, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"sector-share-by-label", Family::SectorShareByLabel, pie,
                     {"What is the percentage of '{sector_label}' in '{series_label}' on this chart?",
                      "How much percent does '{sector_label}' make up in '{series_label}' on this chart?",
                      "Can you tell me the percentage of '{sector_label}' within '{series_label}' in this chart?",
                      "What proportion of '{series_label}' does '{sector_label}' represent in this chart?",
                      "How large is the percentage of '{sector_label}' in the '{series_label}' shown on this chart?",
                      "In this chart, what percentage does '{sector_label}' constitute in '{series_label}'?",
                      "What percentage of '{series_label}' is made up by '{sector_label}' in this chart?",
                      "What is the proportion of '{sector_label}' in '{series_label}' on this chart?",
                      "Could you specify the fraction of '{sector_label}' within '{series_label}' depicted in this chart?",
                      "What ratio does '{sector_label}' contribute to '{series_label}' as shown in this chart?",
                      "How large is the share of '{sector_label}' in '{series_label}' on this chart?",
                      "In this chart, what part of {series_label} does '{sector_label}' represent?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::ValueDependent});

        t.push_back({"sector-share-by-color", Family::SectorShareByColor, pie,
                     {"What is the percentage of the sector with the {name_color} color?",
                      "How much percent does the sector with the {name_color} color represent?",
                      "Can you tell me the proportion of the sector with the {name_color} color?",
                      "What fraction does the sector with the {name_color} color make up?",
                      "How large is the percentage of the sector with the {name_color} color?",
                      "In this chart, what percentage does the sector with the {name_color} color constitute?",
                      "How much of the sector is represented by the {name_color} color in percentage?",
                      "Can you tell me the percentage of the sector that is {name_color}?",
                      "What portion of the sector does the {name_color} color represent in percentage?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::ValueDependent});

        t.push_back({"largest-sector-share", Family::LargestSectorShare, pie,
                     {"What is the percentage of the largest sector in '{series_label}' in the pie chart?",
                      "In the pie chart, what percentage does the largest sector in '{series_label}' represent?",
                      "What proportion does the largest sector in '{series_label}' hold in the pie chart?",
                      "How much percentage does the largest sector in '{series_label}' account for in the pie chart?",
                      "Can you tell me the percentage of the largest sector in '{series_label}' on the pie chart?",
                      "What is the share of the largest sector in '{series_label}' in the pie chart?"},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"smallest-sector-share", Family::SmallestSectorShare, pie,
                     {"What percentage of the pie chart does the smallest sector in '{series_label}' occupy?",
                      "In '{series_label}', what is the percentage of the smallest sector in the pie chart?",
                      "What is the fractional representation of the smallest sector in '{series_label}' within the pie chart?",
                      "How much does the smallest sector in '{series_label}' contribute to the pie chart as a percentage?",
                      "What is the smallest sector's percentage in the pie chart under '{series_label}'?",
                      "Within '{series_label}', what is the percentage value of the smallest sector in the pie chart?"},
                     AnswerKind::Number, Retrieval::Complex, ToleranceRule::ValueDependent});

        t.push_back({"scatter-y-at-x", Family::ScatterYAtX, scatter,
                     {"Can you tell me the {y_axis_topic} of {x_value} {x_axis_topic} in {legend_name}?",
                      "What is the {y_axis_topic} of {x_value} {x_axis_topic} in {legend_name}?",
                      "Please provide the {y_axis_topic} for {x_value} {x_axis_topic} in {legend_name}.",
                      "Could you tell me the {y_axis_topic} for {x_value} {x_axis_topic} in {legend_name}?",
                      "What {y_axis_topic} corresponds to {x_value} {x_axis_topic} in {legend_name}?",
                      "Can you provide the {y_axis_topic} of {x_value} {x_axis_topic} in {legend_name}?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::ValueDependent});

        t.push_back({"scatter-x-at-y", Family::ScatterXAtY, scatter,
                     {"Could you provide the {x_axis_topic} for a {y_value} {y_axis_topic} in {legend_name}?",
                      "What is the {x_axis_topic} for a {y_value} {y_axis_topic} in {legend_name}?",
                      "Can you give the {x_axis_topic} for a {y_value} {y_axis_topic} in {legend_name}?",
                      "Please provide the {x_axis_topic} corresponding to a {y_value} {y_axis_topic} in {legend_name}.",
                      "Could you tell me the {x_axis_topic} for a {y_value} {y_axis_topic} in {legend_name}?",
                      "What {x_axis_topic} corresponds to a {y_value} {y_axis_topic} in {legend_name}?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::XLabelNumeric});

        t.push_back({"legend-count", Family::LegendCount, all,
                     {"How many legend labels are there in the chart?",
                      "What is the number of legend labels in the chart?",
                      "In the chart, how many legend labels are present?",
                      "How many labels are there in the chart's legend?",
                      "What count of legend labels is shown in the chart?",
                      "Can you tell how many legend labels are included in the chart?"},
                     AnswerKind::Count, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"distinct-color-count", Family::DistinctColorCount, scatter,
                     {"How many different colors of data points are there in the chart?",
                      "What is the number of different colors of data points in the chart?",
                      "In the chart, how many different colors of data points can be observed?",
                      "How many unique colors of data points are present in the chart?",
                      "What count of different colored data points is shown in the chart?",
                      "Can you tell how many different colors of data points are in the chart?"},
                     AnswerKind::Count, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        t.push_back({"scatter-peak-x", Family::ScatterPeakXOfLegend, scatter,
                     {"What is the {x_axis_topic} value of the {legend_name} at the peak {y_axis_topic} in this chart?",
                      "What {x_axis_topic} value corresponds to the peak {y_axis_topic} for the {legend_name} in this chart?",
                      "In this chart, what is the {x_axis_topic} value when {legend_name} reaches the peak {y_axis_topic}?",
                      "At the peak {y_axis_topic} for {legend_name} in this chart, what is the {x_axis_topic} value?",
                      "What is the {x_axis_topic} value when {legend_name} has the peak {y_axis_topic} in this chart?",
                      "In this chart, what {x_axis_topic} value aligns with the peak {y_axis_topic} of {legend_name}?",
                      "What is the corresponding {x_axis_topic} value when {legend_name} reaches its highest {y_axis_topic}?",
                      "When {legend_name} reaches its highest {y_axis_topic}, what is the corresponding {x_axis_topic} value?",
                      "What {x_axis_topic} value corresponds to the highest {y_axis_topic} for {legend_name}?",
                      "What is the {x_axis_topic} value at the highest {y_axis_topic} for {legend_name}?",
                      "When {legend_name} reaches its highest point, what is the corresponding {x_axis_topic} value?",
                      "At the highest point of {legend_name}, what is the corresponding {x_axis_topic} value?",
                      "What {x_axis_topic} value corresponds to the highest point of {legend_name}?",
                      "When {legend_name} reaches its peak, what is the corresponding {x_axis_topic} value?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::XLabelNumeric});

        t.push_back({"scatter-trough-x", Family::ScatterTroughXOfLegend, scatter,
                     {"What is the {x_axis_topic} value of the {legend_name} with the lowest {y_axis_topic} in this chart?",
                      "In this chart, what {x_axis_topic} value corresponds to the {legend_name} with the minimum {y_axis_topic}?",
                      "For the {legend_name} with the lowest {y_axis_topic} in this chart, what is the {x_axis_topic} value?",
                      "Which {x_axis_topic} value corresponds to the lowest {y_axis_topic} for the {legend_name} in this chart?",
                      "What is the corresponding {x_axis_topic} value when {legend_name} reaches its lowest {y_axis_topic}?",
                      "When {legend_name} has its lowest {y_axis_topic}, what is the corresponding {x_axis_topic} value?",
                      "What {x_axis_topic} value corresponds to the lowest {y_axis_topic} for {legend_name}?",
                      "For {legend_name} at its minimum {y_axis_topic}, what is the corresponding {x_axis_topic} value?",
                      "When {legend_name} reaches its lowest point, what is the corresponding {x_axis_topic} value?",
                      "What is the {x_axis_topic} value when {legend_name} hits its lowest point?",
                      "At the lowest point of {legend_name}, what is the corresponding {x_axis_topic} value?",
                      "When {legend_name} is at its lowest, what is the {x_axis_topic} value?"},
                     AnswerKind::Number, Retrieval::Direct, ToleranceRule::XLabelNumeric});

        t.push_back({"scatter-legend-for-xy", Family::ScatterLegendForXY, scatter,
                     {"Which legend has a {y_axis_topic} equal to {y_value} when the {x_axis_topic} is {x_value}?",
                      "Which legend shows a {y_axis_topic} of {y_value} when the {x_axis_topic} equals {x_value}?",
                      "When the {x_axis_topic} is {x_value}, which legend corresponds to a {y_axis_topic} of {y_value}?",
                      "At {x_value} on the {x_axis_topic}, which legend has a {y_axis_topic} value of {y_value}?",
                      "What legend's {y_axis_topic} is {y_value} when the {x_axis_topic} reads {x_value}?",
                      "Which legend has a value of {y_value} when the {x_axis_topic} is {x_value}?",
                      "When the {x_axis_topic} is {x_value}, which legend corresponds to a value of {y_value}?",
                      "For an {x_axis_topic} of {x_value}, which legend displays a value of {y_value}?"},
                     AnswerKind::LabelText, Retrieval::Direct, ToleranceRule::AlwaysStrict});

        return t;
    }();
    return templates;
}

inline const QATemplate& find_template(const std::string& template_id) {
    for (const auto& t : builtin_templates())
        if (t.template_id == template_id) return t;
    fail(Errc::not_found, "unknown template: " + template_id);
}

inline bool template_applies_to(const QATemplate& t, ChartType type) {
    for (ChartType c : t.chart_types)
        if (c == type) return true;
    return false;
}

} // namespace chartforge
