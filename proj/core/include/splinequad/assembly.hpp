#ifndef SPLINEQUAD_ASSEMBLY_HPP
#define SPLINEQUAD_ASSEMBLY_HPP

#include <span>
#include <vector>

#include "splinequad/families.hpp"

namespace splinequad {

template <typename Real>
struct RuleInterval {
    std::vector<Real> nodes; // ascending
    std::vector<Real> weights;
};

/// Nodes and weights on the reference interval [-1, 1], one RuleInterval per interval of the period.
template <typename Real>
struct ReferenceRule {
    FamilyId family;
    int n = 0;
    int degree = 0;
    std::vector<RuleInterval<Real>> intervals;

    int period_intervals() const noexcept { return static_cast<int>(intervals.size()); }
};

/// Interval k of the period mapped to [k, k + 1]; weights scaled by 1/2.
template <typename Real>
struct ScaledRule {
    FamilyId family;
    int n = 0;
    int degree = 0;
    std::vector<RuleInterval<Real>> intervals;

    int period_intervals() const noexcept { return static_cast<int>(intervals.size()); }
    std::size_t size() const noexcept;
};

template <typename Real>
struct QuadraturePoint {
    Real node;
    Real weight;
};

/// Free nodes from the roots of R, weights from A / (R'(x) S(x) f(x)) with the family's
/// extra factor f, fixed endpoint node prepended. The reflected second interval of the C1
/// even-degree family reuses the first interval's free nodes negated.
///
/// Throws CountMismatch from root isolation and DegenerateWeight if a denominator vanishes.
template <typename Real>
ReferenceRule<Real> assemble(const FamilySpec<Real>& spec);

template <typename Real>
ScaledRule<Real> scale_to_unit_intervals(const ReferenceRule<Real>& rule);

/// The scaled rule translated by k * period for k = 0 .. copies - 1, sorted by node.
template <typename Real>
std::vector<QuadraturePoint<Real>> replicate_periodically(const ScaledRule<Real>& rule, int copies);

/// Entries in positional order: interval 0 ascending, then interval 1 ascending.
template <typename Real>
std::vector<QuadraturePoint<Real>> flatten(const ScaledRule<Real>& rule);

template <typename Real>
ScaledRule<double> to_double(const ScaledRule<Real>& rule);

/// build_family + assemble + scale_to_unit_intervals.
template <typename Real>
ScaledRule<Real> make_scaled_rule(const FamilyId& id, int n, DeltaSign sign = DeltaSign::Plus);

/// Symmetric Hausdorff distance between two finite point sets (0 if both are empty).
double hausdorff_distance(std::span<const double> a, std::span<const double> b);

#define SPLINEQUAD_EXTERN_ASSEMBLY(Real)                                                                    \
    extern template struct ScaledRule<Real>;                                                                \
    extern template ReferenceRule<Real> assemble<Real>(const FamilySpec<Real>&);                            \
    extern template ScaledRule<Real> scale_to_unit_intervals<Real>(const ReferenceRule<Real>&);             \
    extern template std::vector<QuadraturePoint<Real>> replicate_periodically<Real>(const ScaledRule<Real>&, \
                                                                                    int);                   \
    extern template std::vector<QuadraturePoint<Real>> flatten<Real>(const ScaledRule<Real>&);              \
    extern template ScaledRule<double> to_double<Real>(const ScaledRule<Real>&);                             \
    extern template ScaledRule<Real> make_scaled_rule<Real>(const FamilyId&, int, DeltaSign);

SPLINEQUAD_EXTERN_ASSEMBLY(double)
SPLINEQUAD_EXTERN_ASSEMBLY(Extended)
#undef SPLINEQUAD_EXTERN_ASSEMBLY

} // namespace splinequad

#endif // SPLINEQUAD_ASSEMBLY_HPP
