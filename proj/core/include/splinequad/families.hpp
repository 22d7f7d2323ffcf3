#ifndef SPLINEQUAD_FAMILIES_HPP
#define SPLINEQUAD_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splinequad/gegenbauer.hpp"

namespace splinequad {

enum class Continuity { C0, C1 };
enum class Parity { Odd, Even };
enum class Variant { Default, Endpoint, Interior };
enum class DeltaSign { Plus, Minus };

/// One of the five rule families. Only the five combinations exposed as constants are valid.
struct FamilyId {
    Continuity continuity = Continuity::C0;
    Parity parity = Parity::Odd;
    Variant variant = Variant::Default;

    static constexpr FamilyId c0_odd() { return {Continuity::C0, Parity::Odd, Variant::Default}; }
    static constexpr FamilyId c0_even() { return {Continuity::C0, Parity::Even, Variant::Default}; }
    static constexpr FamilyId c1_endpoint() { return {Continuity::C1, Parity::Odd, Variant::Endpoint}; }
    static constexpr FamilyId c1_interior() { return {Continuity::C1, Parity::Odd, Variant::Interior}; }
    static constexpr FamilyId c1_even() { return {Continuity::C1, Parity::Even, Variant::Default}; }

    int continuity_order() const noexcept { return continuity == Continuity::C0 ? 0 : 1; }

    /// "c0-odd", "c0-even", "c1-odd-endpoint", "c1-odd-interior", "c1-even".
    std::string name() const;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline constexpr FamilyId kAllFamilies[] = {FamilyId::c0_odd(), FamilyId::c0_even(), FamilyId::c1_endpoint(),
                                            FamilyId::c1_interior(), FamilyId::c1_even()};

bool is_valid(const FamilyId& id) noexcept;

/// Polynomial degree of exactness D for family index n.
int degree_for(const FamilyId& id, int n);

/// Family index n for a degree D of the family's parity; throws InvalidFamily otherwise.
int index_for_degree(const FamilyId& id, int degree);

/// Smallest admissible family index.
int min_index(const FamilyId& id) noexcept;

/// Factor multiplying R'(x) S(x) in the free-node weight denominator.
enum class WeightFactor { One, OneMinusXSquaredSquared, OnePlusXTimesOneMinusXSquared };

template <typename Real>
Real weight_factor_value(WeightFactor factor, const Real& x)
{
    switch (factor) {
    case WeightFactor::OneMinusXSquaredSquared: {
        const Real t = 1 - x * x;
        return t * t;
    }
    case WeightFactor::OnePlusXTimesOneMinusXSquared: {
        const Real t = 1 - x;
        return (1 + x) * t * t;
    }
    case WeightFactor::One:
    default:
        return Real(1);
    }
}

template <typename Real>
struct FixedNode {
    Real node;
    Real weight;
};

template <typename Real>
struct IntervalSpec {
    GegenbauerCombo<Real> R;
    GegenbauerCombo<Real> S;
    Real A;
    std::optional<FixedNode<Real>> fixed_node;
    WeightFactor extra_weight_factor = WeightFactor::One;
    int expected_free_nodes = 0;
};

/// delta^2 = numerator / denominator, both exact integers.
struct DeltaRadicand {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
};

template <typename Real>
struct FamilySpec {
    FamilyId id;
    int n = 0;
    int degree = 0;
    Real delta{};                 // 0 when the family has no delta
    DeltaRadicand delta_radicand; // 0/1 when unused
    int period_intervals = 1;
    std::vector<IntervalSpec<Real>> intervals; // one per interval of the period
    bool second_interval_by_reflection = false;
};

template <typename Real>
FamilySpec<Real> build_c0_odd(int n);

template <typename Real>
FamilySpec<Real> build_c0_even(int n, DeltaSign sign = DeltaSign::Plus);

template <typename Real>
FamilySpec<Real> build_c1_endpoint(int n);

/// DeltaSign::Minus is a diagnostic mode; it does not produce a quadrature rule.
template <typename Real>
FamilySpec<Real> build_c1_interior(int n, DeltaSign sign = DeltaSign::Plus);

template <typename Real>
FamilySpec<Real> build_c1_even(int n);

/// Dispatch on family id. delta_sign applies to C0-even (and C1-interior diagnostics).
template <typename Real>
FamilySpec<Real> build_family(const FamilyId& id, int n, DeltaSign sign = DeltaSign::Plus);

#define SPLINEQUAD_EXTERN_FAMILIES(Real)                                                                    \
    extern template FamilySpec<Real> build_c0_odd<Real>(int);                                               \
    extern template FamilySpec<Real> build_c0_even<Real>(int, DeltaSign);                                   \
    extern template FamilySpec<Real> build_c1_endpoint<Real>(int);                                          \
    extern template FamilySpec<Real> build_c1_interior<Real>(int, DeltaSign);                               \
    extern template FamilySpec<Real> build_c1_even<Real>(int);                                              \
    extern template FamilySpec<Real> build_family<Real>(const FamilyId&, int, DeltaSign);

SPLINEQUAD_EXTERN_FAMILIES(double)
SPLINEQUAD_EXTERN_FAMILIES(Extended)
#undef SPLINEQUAD_EXTERN_FAMILIES

} // namespace splinequad

#endif // SPLINEQUAD_FAMILIES_HPP
