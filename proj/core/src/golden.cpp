#include "splinequad/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "splinequad/errors.hpp"

namespace splinequad {

extern const char* const kBuiltinGoldenJson;

namespace {

using nlohmann::json;

Variant parse_variant(const std::string& text)
{
    if (text == "default") return Variant::Default;
    if (text == "endpoint") return Variant::Endpoint;
    if (text == "interior") return Variant::Interior;
    throw std::runtime_error("unknown golden variant '" + text + "'");
}

const char* variant_text(Variant v)
{
    switch (v) {
    case Variant::Endpoint:
        return "endpoint";
    case Variant::Interior:
        return "interior";
    case Variant::Default:
    default:
        return "default";
    }
}

template <typename Real>
Real parse_decimal(const std::string& text)
{
    if constexpr (std::is_same_v<Real, double>) {
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0') throw std::runtime_error("bad decimal '" + text + "'");
        return value;
    } else {
        return Real(text);
    }
}

} // namespace

std::vector<GoldenRule> parse_golden(std::string_view json_text)
{
    const json doc = json::parse(json_text);
    std::vector<GoldenRule> rules;
    for (const auto& item : doc.at("rules")) {
        GoldenRule rule;
        rule.id = item.at("id").get<std::string>();
        rule.continuity = item.at("class").get<int>();
        rule.degree = item.at("degree").get<int>();
        rule.variant = parse_variant(item.at("variant").get<std::string>());
        for (const auto& entry : item.at("entries")) {
            if (entry.size() != 2) throw std::runtime_error("golden entry of " + rule.id + " is not a pair");
            rule.entries.push_back({entry[0].get<std::string>(), entry[1].get<std::string>()});
        }
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::string serialize_golden(const std::vector<GoldenRule>& rules)
{
    json items = json::array();
    for (const auto& rule : rules) {
        json entries = json::array();
        for (const auto& e : rule.entries) entries.push_back({e.node, e.weight});
        items.push_back({{"id", rule.id},
                         {"class", rule.continuity},
                         {"degree", rule.degree},
                         {"variant", variant_text(rule.variant)},
                         {"entries", std::move(entries)}});
    }
    return json{{"rules", std::move(items)}}.dump(1);
}

std::vector<GoldenRule> load_golden_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_golden(buffer.str());
}

const std::vector<GoldenRule>& builtin_golden()
{
    static const std::vector<GoldenRule> rules = parse_golden(kBuiltinGoldenJson);
    return rules;
}

FamilyId family_of(const GoldenRule& golden)
{
    const bool odd = golden.degree % 2 != 0;
    if (golden.continuity == 0) return odd ? FamilyId::c0_odd() : FamilyId::c0_even();
    if (golden.continuity == 1) {
        if (!odd) return FamilyId::c1_even();
        return golden.variant == Variant::Interior ? FamilyId::c1_interior() : FamilyId::c1_endpoint();
    }
    throw InvalidFamily("golden rule " + golden.id + " has unsupported continuity class");
}

std::string rule_name(const FamilyId& id, int degree)
{
    std::string name = "C" + std::to_string(id.continuity_order()) + "xD" + std::to_string(degree);
    if (id == FamilyId::c1_interior()) name += "x2";
    return name;
}

template <typename Real>
GoldenComparison compare_golden(const ScaledRule<Real>& rule, const GoldenRule& golden)
{
    using std::abs;
    const auto points = flatten(rule);
    if (points.size() != golden.entries.size()) throw EntryCountMismatch(points.size(), golden.entries.size());

    GoldenComparison result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Real dx = abs(points[i].node - parse_decimal<Real>(golden.entries[i].node));
        const Real dw = abs(points[i].weight - parse_decimal<Real>(golden.entries[i].weight));
        const double deviation = static_cast<double>(dx > dw ? dx : dw);
        if (result.worst_entry < 0 || deviation > result.max_deviation) {
            result.max_deviation = deviation;
            result.worst_entry = static_cast<int>(i);
        }
    }
    return result;
}

template GoldenComparison compare_golden<double>(const ScaledRule<double>&, const GoldenRule&);
template GoldenComparison compare_golden<Extended>(const ScaledRule<Extended>&, const GoldenRule&);

} // namespace splinequad
