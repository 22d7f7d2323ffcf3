#include "splinequad/families.hpp"

#include <cmath>

#include "splinequad/errors.hpp"

namespace splinequad {

std::string FamilyId::name() const
{
    if (*this == c0_odd()) return "c0-odd";
    if (*this == c0_even()) return "c0-even";
    if (*this == c1_endpoint()) return "c1-odd-endpoint";
    if (*this == c1_interior()) return "c1-odd-interior";
    if (*this == c1_even()) return "c1-even";
    return "invalid";
}

bool is_valid(const FamilyId& id) noexcept
{
    for (const auto& f : kAllFamilies)
        if (f == id) return true;
    return false;
}

int degree_for(const FamilyId& id, int n)
{
    if (id == FamilyId::c0_odd()) return 2 * n - 1;
    if (id == FamilyId::c0_even() || id == FamilyId::c1_even()) return 2 * n;
    if (id == FamilyId::c1_endpoint() || id == FamilyId::c1_interior()) return 2 * n + 1;
    throw InvalidFamily("invalid family id");
}

int index_for_degree(const FamilyId& id, int degree)
{
    if (!is_valid(id)) throw InvalidFamily("invalid family id");
    const bool odd = degree % 2 != 0;
    if (odd != (id.parity == Parity::Odd))
        throw InvalidFamily("degree " + std::to_string(degree) + " has the wrong parity for family " + id.name());
    int n = 0;
    if (id == FamilyId::c0_odd())
        n = (degree + 1) / 2;
    else if (id.parity == Parity::Even)
        n = degree / 2;
    else
        n = (degree - 1) / 2;
    if (n < min_index(id))
        throw InvalidFamily("degree " + std::to_string(degree) + " is below the smallest rule of family " +
                            id.name());
    return n;
}

int min_index(const FamilyId& id) noexcept
{
    return id == FamilyId::c1_even() ? 2 : 1;
}

namespace {

template <typename Real>
Real delta_from(const DeltaRadicand& r, DeltaSign sign)
{
    using std::sqrt;
    Real d = sqrt(Real(r.numerator) / Real(r.denominator));
    return sign == DeltaSign::Plus ? d : Real(-d);
}

void require_index(const FamilyId& id, int n, int minimum)
{
    if (n < minimum)
        throw InvalidFamily("family " + id.name() + " requires n >= " + std::to_string(minimum) + ", got " +
                            std::to_string(n));
}

template <typename Real>
FamilySpec<Real> blank_spec(const FamilyId& id, int n)
{
    FamilySpec<Real> spec;
    spec.id = id;
    spec.n = n;
    spec.degree = degree_for(id, n);
    return spec;
}

template <typename Real>
IntervalSpec<Real> blank_interval(GegenbauerOrder order)
{
    return IntervalSpec<Real>{GegenbauerCombo<Real>(order), GegenbauerCombo<Real>(order), Real(0), std::nullopt,
                              WeightFactor::One, 0};
}

} // namespace

template <typename Real>
FamilySpec<Real> build_c0_odd(int n)
{
    const FamilyId id = FamilyId::c0_odd();
    require_index(id, n, 1);
    const auto order = GegenbauerOrders::three_halves();
    const Real r(n);

    auto spec = blank_spec<Real>(id, n);
    spec.period_intervals = 2;

    // n points: R_n = n^2 C_n - (n+1)^2 C_{n-2},  S_{n-1} = n C_{n-1} - (n+1) x C_{n-2}
    auto first = blank_interval<Real>(order);
    first.R.add(n, r * r).add(n - 2, -(r + 1) * (r + 1));
    first.S.add(n - 1, r).add(n - 2, CoefficientPoly<Real>{Real(0), -(r + 1), Real(0)});
    first.A = 2 * (r + 1) * (2 * r + 1) * r * r;
    first.expected_free_nodes = n;

    // n - 1 points: R_{n-1} = C_{n-1},  S_{n-2} = (2n-1) C_{n-2} - n x C_{n-3}
    auto second = blank_interval<Real>(order);
    second.R.add(n - 1, Real(1));
    second.S.add(n - 2, 2 * r - 1).add(n - 3, CoefficientPoly<Real>{Real(0), -r, Real(0)});
    second.A = 2 * r * (2 * r - 1);
    second.expected_free_nodes = n - 1;

    spec.intervals = {std::move(first), std::move(second)};
    return spec;
}

template <typename Real>
FamilySpec<Real> build_c0_even(int n, DeltaSign sign)
{
    const FamilyId id = FamilyId::c0_even();
    require_index(id, n, 1);
    const auto order = GegenbauerOrders::three_halves();
    const Real r(n);

    auto spec = blank_spec<Real>(id, n);
    spec.delta_radicand = {n + 2, n};
    spec.delta = delta_from<Real>(spec.delta_radicand, sign);
    const Real& delta = spec.delta;

    // R_n = C_n + delta C_{n-1},  S_n = (2n+1 + delta n x) C_{n-1} - (n+1) x C_{n-2}
    auto interval = blank_interval<Real>(order);
    interval.R.add(n, Real(1)).add(n - 1, delta);
    interval.S.add(n - 1, CoefficientPoly<Real>{2 * r + 1, delta * r, Real(0)})
        .add(n - 2, CoefficientPoly<Real>{Real(0), -(r + 1), Real(0)});
    interval.A = 2 * (r + 1) * (2 * r + 1);
    interval.expected_free_nodes = n;

    spec.intervals = {std::move(interval)};
    return spec;
}

template <typename Real>
FamilySpec<Real> build_c1_endpoint(int n)
{
    const FamilyId id = FamilyId::c1_endpoint();
    require_index(id, n, 1);
    const auto order = GegenbauerOrders::five_halves();
    const Real r(n);

    auto spec = blank_spec<Real>(id, n);

    auto interval = blank_interval<Real>(order);
    interval.R.add(n - 1, Real(1));
    interval.S.add(n - 2, Real(1));
    interval.A = 2 * r * (r + 1) * (r + 2) / 9;
    interval.fixed_node = FixedNode<Real>{
        Real(-1), 16 * (2 * r * r + 6 * r + 1) / (3 * r * (r + 1) * (r + 2) * (r + 3))};
    interval.extra_weight_factor = WeightFactor::OneMinusXSquaredSquared;
    interval.expected_free_nodes = n - 1;

    spec.intervals = {std::move(interval)};
    return spec;
}

template <typename Real>
FamilySpec<Real> build_c1_interior(int n, DeltaSign sign)
{
    const FamilyId id = FamilyId::c1_interior();
    require_index(id, n, 1);
    const auto order = GegenbauerOrders::five_halves();
    auto spec = blank_spec<Real>(id, n);

    if (n == 1) {
        // The closed form degenerates to R = 0 here; the rule is the midpoint rule.
        if (sign == DeltaSign::Minus) throw InvalidFamily("c1-odd-interior has no delta at n = 1");
        auto interval = blank_interval<Real>(order);
        interval.R.add(0, Real(1));
        interval.S.add(0, Real(1));
        interval.A = Real(0);
        interval.fixed_node = FixedNode<Real>{Real(0), Real(2)};
        spec.intervals = {std::move(interval)};
        return spec;
    }

    const Real r(n);
    spec.delta_radicand = {3 * (std::int64_t{n} * n + 3 * n - 1), std::int64_t{n} * (n + 3)};
    spec.delta = delta_from<Real>(spec.delta_radicand, sign);
    const Real& delta = spec.delta;

    const Real q1 = 2 * r * r + 2 * r - 3; // 2n^2 + 2n - 3
    const Real q2 = 2 * r * r + 6 * r + 1; // 2n^2 + 6n + 1

    auto interval = blank_interval<Real>(order);
    interval.R.add(n, (r - 1) * q1)
        .add(n - 2, -(r + 3) * (2 * r * r + 6 * r + 7 - 2 * (2 * r + 3) * delta));

    const Real lead = r * (6 * r * r + 6 * r - 3 + 2 * (2 * r + 1) * delta);
    const Real tail = (r + 2) * q2;
    interval.S.add(n - 1, CoefficientPoly<Real>{lead, Real(0), lead})
        .add(n - 2, CoefficientPoly<Real>{Real(0), -4 * (2 * r + 1) * q2, Real(0)})
        .add(n - 3, CoefficientPoly<Real>{tail, Real(0), tail});

    interval.A = 2 * (r - 1) * (r + 1) * (r + 2) * (2 * r + 1) * (2 * r + 3) * q1 * q2 / 9;
    interval.expected_free_nodes = n;

    spec.intervals = {std::move(interval)};
    return spec;
}

template <typename Real>
FamilySpec<Real> build_c1_even(int n)
{
    const FamilyId id = FamilyId::c1_even();
    require_index(id, n, 2);
    const auto order = GegenbauerOrders::five_halves();
    const Real r(n);

    auto spec = blank_spec<Real>(id, n);
    spec.period_intervals = 2;
    spec.second_interval_by_reflection = true;
    const std::int64_t m = n;
    spec.delta_radicand = {3 * m * (m + 2) * (m * m + 2 * m - 2), 1};
    spec.delta = delta_from<Real>(spec.delta_radicand, DeltaSign::Plus);
    const Real& delta = spec.delta;

    const Real q1 = 2 * r * r + 2 * r - 3;

    auto first = blank_interval<Real>(order);
    first.R.add(n - 1, (r - 1) * q1).add(n - 2, 2 * delta + 3 - r - 6 * r * r - 2 * r * r * r);
    first.S.add(n - 2, 3 * (r + 2) * (2 * r * r - 1) - 2 * delta).add(n - 3, (r + 2) * q1);
    first.A = 2 * (r - 1) * r * (r + 1) * (r + 2) * (2 * r + 1) * q1 * q1 / 9;

    const Real w1_num =
        8 * (2 * r * r + 4 * r - 3) * (2 * r * r * r * r + 8 * r * r * r + 4 * r * r - 8 * r - 3 - delta);
    const Real w1_den = 3 * (r - 1) * r * (r + 2) * (r + 3) * (r * r + 2 * r - 2) * (r + 1) * (r + 1);
    first.fixed_node = FixedNode<Real>{Real(-1), w1_num / w1_den};
    first.extra_weight_factor = WeightFactor::OnePlusXTimesOneMinusXSquared;
    first.expected_free_nodes = n - 1;

    // Materialized by reflecting the first interval's free nodes at 0.
    IntervalSpec<Real> second = first;
    second.fixed_node.reset();

    spec.intervals = {std::move(first), std::move(second)};
    return spec;
}

template <typename Real>
FamilySpec<Real> build_family(const FamilyId& id, int n, DeltaSign sign)
{
    if (id == FamilyId::c0_odd()) return build_c0_odd<Real>(n);
    if (id == FamilyId::c0_even()) return build_c0_even<Real>(n, sign);
    if (id == FamilyId::c1_endpoint()) return build_c1_endpoint<Real>(n);
    if (id == FamilyId::c1_interior()) return build_c1_interior<Real>(n, sign);
    if (id == FamilyId::c1_even()) return build_c1_even<Real>(n);
    throw InvalidFamily("invalid family id");
}

#define SPLINEQUAD_INSTANTIATE_FAMILIES(Real)                                                               \
    template FamilySpec<Real> build_c0_odd<Real>(int);                                                      \
    template FamilySpec<Real> build_c0_even<Real>(int, DeltaSign);                                          \
    template FamilySpec<Real> build_c1_endpoint<Real>(int);                                                 \
    template FamilySpec<Real> build_c1_interior<Real>(int, DeltaSign);                                      \
    template FamilySpec<Real> build_c1_even<Real>(int);                                                     \
    template FamilySpec<Real> build_family<Real>(const FamilyId&, int, DeltaSign);

SPLINEQUAD_INSTANTIATE_FAMILIES(double)
SPLINEQUAD_INSTANTIATE_FAMILIES(Extended)

} // namespace splinequad
