#include "cli/format.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace splinequad::cli {

std::string format_decimal(const Extended& value, int digits, DecimalStyle style)
{
    if (value == 0) return "0";

    // d.dddd(digits - 1 fractional digits)e[+-]XX
    const std::string sci = value.str(digits - 1, std::ios_base::scientific);
    const auto e_pos = sci.find('e');
    std::string mantissa = sci.substr(0, e_pos);
    const int exponent = std::stoi(sci.substr(e_pos + 1));

    bool negative = false;
    if (!mantissa.empty() && mantissa.front() == '-') {
        negative = true;
        mantissa.erase(0, 1);
    }
    std::string significand;
    for (char c : mantissa)
        if (c != '.') significand.push_back(c);

    std::string int_part;
    std::string frac_part;
    if (exponent >= 0) {
        const auto split = static_cast<std::size_t>(exponent) + 1;
        if (significand.size() < split) significand.append(split - significand.size(), '0');
        int_part = significand.substr(0, split);
        frac_part = significand.substr(split);
    } else {
        int_part = "0";
        frac_part = std::string(static_cast<std::size_t>(-exponent - 1), '0') + significand;
    }
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();

    std::string text = negative ? "-" : "";
    if (!(style == DecimalStyle::Maple && int_part == "0" && !frac_part.empty())) text += int_part;
    if (!frac_part.empty()) text += "." + frac_part;
    return text;
}

void write_json(std::ostream& out, const RuleDocument& doc)
{
    using nlohmann::ordered_json;
    ordered_json intervals = ordered_json::array();
    for (const auto& interval : doc.rule.intervals) {
        ordered_json nodes = ordered_json::array();
        ordered_json weights = ordered_json::array();
        for (const auto& x : interval.nodes) nodes.push_back(format_decimal(x));
        for (const auto& w : interval.weights) weights.push_back(format_decimal(w));
        intervals.push_back({{"nodes", std::move(nodes)}, {"weights", std::move(weights)}});
    }
    const ordered_json doc_json = {
        {"family", doc.rule.family.name()},
        {"class", doc.rule.family.continuity == Continuity::C0 ? "c0" : "c1"},
        {"degree", doc.rule.degree},
        {"n", doc.rule.n},
        {"period_intervals", doc.rule.period_intervals()},
        {"delta", format_decimal(doc.delta)},
        {"intervals", std::move(intervals)},
    };
    out << doc_json.dump(2) << '\n';
}

void write_csv(std::ostream& out, const RuleDocument& doc)
{
    out << "interval,index,node,weight\n";
    for (std::size_t k = 0; k < doc.rule.intervals.size(); ++k) {
        const auto& interval = doc.rule.intervals[k];
        for (std::size_t i = 0; i < interval.nodes.size(); ++i)
            out << k << ',' << i << ',' << format_decimal(interval.nodes[i]) << ','
                << format_decimal(interval.weights[i]) << '\n';
    }
}

void write_maple(std::ostream& out, const RuleDocument& doc)
{
    out << doc.name << " := [ ";
    bool first = true;
    for (const auto& p : flatten(doc.rule)) {
        if (!first) out << ", ";
        first = false;
        out << '[' << format_decimal(p.node, kOutputDigits, DecimalStyle::Maple) << ", "
            << format_decimal(p.weight, kOutputDigits, DecimalStyle::Maple) << ']';
    }
    out << " ];\n";
}

void write_rule(std::ostream& out, const RuleDocument& doc, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json:
        write_json(out, doc);
        break;
    case OutputFormat::Csv:
        write_csv(out, doc);
        break;
    case OutputFormat::Maple:
        write_maple(out, doc);
        break;
    }
}

namespace {

FamilyId family_from_name(const std::string& name)
{
    for (const auto& id : kAllFamilies)
        if (id.name() == name) return id;
    throw std::runtime_error("unknown family '" + name + "'");
}

double to_double(const std::string& text)
{
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') throw std::runtime_error("bad decimal '" + text + "'");
    return value;
}

} // namespace

ScaledRule<double> parse_rule_json(const std::string& text)
{
    const auto doc = nlohmann::json::parse(text);
    ScaledRule<double> rule;
    rule.family = family_from_name(doc.at("family").get<std::string>());
    rule.degree = doc.at("degree").get<int>();
    rule.n = doc.at("n").get<int>();
    for (const auto& interval : doc.at("intervals")) {
        RuleInterval<double> parsed;
        for (const auto& x : interval.at("nodes")) parsed.nodes.push_back(to_double(x.get<std::string>()));
        for (const auto& w : interval.at("weights")) parsed.weights.push_back(to_double(w.get<std::string>()));
        rule.intervals.push_back(std::move(parsed));
    }
    if (static_cast<int>(rule.intervals.size()) != doc.at("period_intervals").get<int>())
        throw std::runtime_error("period_intervals does not match the interval list");
    return rule;
}

} // namespace splinequad::cli
