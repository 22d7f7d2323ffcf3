#ifndef SPLINEQUAD_CLI_FORMAT_HPP
#define SPLINEQUAD_CLI_FORMAT_HPP

#include <ostream>
#include <string>

#include "splinequad/assembly.hpp"

namespace splinequad::cli {

enum class OutputFormat { Json, Csv, Maple };

enum class DecimalStyle {
    Plain, // 0.4666...
    Maple, // .4666...
};

inline constexpr int kOutputDigits = 25;

/// Fixed-point decimal with `digits` significant digits and trailing zeros removed.
std::string format_decimal(const Extended& value, int digits = kOutputDigits,
                           DecimalStyle style = DecimalStyle::Plain);

/// Everything a writer needs about one generated rule.
struct RuleDocument {
    ScaledRule<Extended> rule; // double-precision rules are widened exactly
    Extended delta;
    std::string name; // C1xD5, C1xD5x2, ...
};

void write_json(std::ostream& out, const RuleDocument& doc);
void write_csv(std::ostream& out, const RuleDocument& doc);
void write_maple(std::ostream& out, const RuleDocument& doc);
void write_rule(std::ostream& out, const RuleDocument& doc, OutputFormat format);

/// Reads back the JSON written by write_json as doubles.
ScaledRule<double> parse_rule_json(const std::string& text);

} // namespace splinequad::cli

#endif // SPLINEQUAD_CLI_FORMAT_HPP
