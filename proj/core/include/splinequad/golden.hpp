#ifndef SPLINEQUAD_GOLDEN_HPP
#define SPLINEQUAD_GOLDEN_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "splinequad/assembly.hpp"

namespace splinequad {

/// Decimal strings exactly as published (25 significant digits).
struct GoldenEntry {
    std::string node;
    std::string weight;

    friend bool operator==(const GoldenEntry&, const GoldenEntry&) = default;
};

struct GoldenRule {
    std::string id; // e.g. "C1xD5x2"
    int continuity = 0;
    int degree = 0;
    Variant variant = Variant::Default;
    std::vector<GoldenEntry> entries;

    friend bool operator==(const GoldenRule&, const GoldenRule&) = default;
};

/// JSON layout: {"rules": [{"id", "class", "degree", "variant", "entries": [[x, w], ...]}, ...]}
std::vector<GoldenRule> parse_golden(std::string_view json_text);
std::string serialize_golden(const std::vector<GoldenRule>& rules);
std::vector<GoldenRule> load_golden_file(const std::filesystem::path& path);

/// The published tables compiled into the library.
const std::vector<GoldenRule>& builtin_golden();

FamilyId family_of(const GoldenRule& golden);

/// Table name for a family and degree: C<c>xD<D>, with suffix "x2" for the C1 odd interior rule.
std::string rule_name(const FamilyId& id, int degree);

struct GoldenComparison {
    double max_deviation = 0.0;
    int worst_entry = -1;
};

/// Positional comparison; max over entries of max(|dx|, |dw|). Throws EntryCountMismatch.
template <typename Real>
GoldenComparison compare_golden(const ScaledRule<Real>& rule, const GoldenRule& golden);

extern template GoldenComparison compare_golden<double>(const ScaledRule<double>&, const GoldenRule&);
extern template GoldenComparison compare_golden<Extended>(const ScaledRule<Extended>&, const GoldenRule&);

} // namespace splinequad

#endif // SPLINEQUAD_GOLDEN_HPP
