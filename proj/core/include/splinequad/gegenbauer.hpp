#ifndef SPLINEQUAD_GEGENBAUER_HPP
#define SPLINEQUAD_GEGENBAUER_HPP

#include <vector>

#include "splinequad/real.hpp"

namespace splinequad {

/// Order alpha of a Gegenbauer (ultraspherical) polynomial, restricted to positive
/// half-integers and stored as 2*alpha so that every recurrence coefficient is an integer.
class GegenbauerOrder {
public:
    /// alpha = twice_alpha / 2; twice_alpha must be a positive odd integer.
    static GegenbauerOrder from_twice_alpha(int twice_alpha);

    int twice_alpha() const noexcept { return twice_alpha_; }

    template <typename Real>
    Real alpha() const
    {
        return Real(twice_alpha_) / 2;
    }

    /// alpha + 1, the order of the derivative polynomials.
    GegenbauerOrder raised() const noexcept { return GegenbauerOrder(twice_alpha_ + 2); }

    friend bool operator==(GegenbauerOrder, GegenbauerOrder) = default;

private:
    explicit constexpr GegenbauerOrder(int twice_alpha) noexcept : twice_alpha_(twice_alpha) {}

    int twice_alpha_;

    friend struct GegenbauerOrders;
};

struct GegenbauerOrders {
    static constexpr GegenbauerOrder three_halves() { return GegenbauerOrder(3); }
    static constexpr GegenbauerOrder five_halves() { return GegenbauerOrder(5); }
};

/// C_n^(alpha)(x) by forward three-term recurrence. Zero for n < 0.
template <typename Real>
Real eval_gegenbauer(GegenbauerOrder order, int n, const Real& x);

/// d/dx C_n^(alpha)(x) = 2 alpha C_{n-1}^(alpha+1)(x). Zero for n <= 0.
template <typename Real>
Real eval_gegenbauer_derivative(GegenbauerOrder order, int n, const Real& x);

/// C_0 .. C_max_n at x in one recurrence pass (empty for max_n < 0).
template <typename Real>
std::vector<Real> gegenbauer_sequence(GegenbauerOrder order, int max_n, const Real& x);

/// Coefficient attached to a Gegenbauer term: c0 + c1 x + c2 x^2.
template <typename Real>
struct CoefficientPoly {
    Real c0{};
    Real c1{};
    Real c2{};

    Real value(const Real& x) const { return c0 + x * (c1 + x * c2); }
    Real slope(const Real& x) const { return c1 + 2 * c2 * x; }

    int degree() const
    {
        if (c2 != 0) return 2;
        if (c1 != 0) return 1;
        if (c0 != 0) return 0;
        return -1;
    }
};

template <typename Real>
struct GegenbauerTerm {
    int degree;
    CoefficientPoly<Real> coefficient;
};

template <typename Real>
struct ValueAndSlope {
    Real value;
    Real derivative;
};

/// Finite sum  sum_k coeff_k(x) C_{deg_k}^(alpha)(x)  at a fixed order alpha.
template <typename Real>
class GegenbauerCombo {
public:
    explicit GegenbauerCombo(GegenbauerOrder order) : order_(order) {}

    /// Terms with negative degree are identically zero and are dropped.
    GegenbauerCombo& add(int degree, const CoefficientPoly<Real>& coefficient)
    {
        if (degree >= 0) terms_.push_back({degree, coefficient});
        return *this;
    }

    GegenbauerCombo& add(int degree, const Real& coefficient)
    {
        return add(degree, CoefficientPoly<Real>{coefficient, Real(0), Real(0)});
    }

    GegenbauerOrder order() const noexcept { return order_; }
    const std::vector<GegenbauerTerm<Real>>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// Degree as an ordinary polynomial in x, -1 for the zero combination.
    int polynomial_degree() const;

    int max_gegenbauer_degree() const;

private:
    GegenbauerOrder order_;
    std::vector<GegenbauerTerm<Real>> terms_;
};

template <typename Real>
ValueAndSlope<Real> eval_combo(const GegenbauerCombo<Real>& combo, const Real& x);

extern template double eval_gegenbauer<double>(GegenbauerOrder, int, const double&);
extern template Extended eval_gegenbauer<Extended>(GegenbauerOrder, int, const Extended&);
extern template double eval_gegenbauer_derivative<double>(GegenbauerOrder, int, const double&);
extern template Extended eval_gegenbauer_derivative<Extended>(GegenbauerOrder, int, const Extended&);
extern template std::vector<double> gegenbauer_sequence<double>(GegenbauerOrder, int, const double&);
extern template std::vector<Extended> gegenbauer_sequence<Extended>(GegenbauerOrder, int, const Extended&);
extern template class GegenbauerCombo<double>;
extern template class GegenbauerCombo<Extended>;
extern template ValueAndSlope<double> eval_combo<double>(const GegenbauerCombo<double>&, const double&);
extern template ValueAndSlope<Extended> eval_combo<Extended>(const GegenbauerCombo<Extended>&,
                                                             const Extended&);

} // namespace splinequad

#endif // SPLINEQUAD_GEGENBAUER_HPP
