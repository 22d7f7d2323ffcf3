#include "splinequad/gegenbauer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace splinequad {

GegenbauerOrder GegenbauerOrder::from_twice_alpha(int twice_alpha)
{
    if (twice_alpha <= 0 || twice_alpha % 2 == 0)
        throw std::invalid_argument("Gegenbauer order must be a positive half-integer, got 2*alpha = " +
                                    std::to_string(twice_alpha));
    return GegenbauerOrder(twice_alpha);
}

template <typename Real>
std::vector<Real> gegenbauer_sequence(GegenbauerOrder order, int max_n, const Real& x)
{
    std::vector<Real> values;
    if (max_n < 0) return values;
    values.reserve(static_cast<std::size_t>(max_n) + 1);
    const int ta = order.twice_alpha();
    values.push_back(Real(1));
    if (max_n >= 1) values.push_back(Real(ta) * x);
    // k C_k = 2(k + alpha - 1) x C_{k-1} - (k + 2 alpha - 2) C_{k-2}
    for (int k = 2; k <= max_n; ++k) {
        const Real& prev = values[k - 1];
        const Real& prev2 = values[k - 2];
        values.push_back((Real(2 * k + ta - 2) * x * prev - Real(k + ta - 2) * prev2) / k);
    }
    return values;
}

template <typename Real>
Real eval_gegenbauer(GegenbauerOrder order, int n, const Real& x)
{
    if (n < 0) return Real(0);
    const int ta = order.twice_alpha();
    Real prev2(1);
    if (n == 0) return prev2;
    Real prev = Real(ta) * x;
    for (int k = 2; k <= n; ++k) {
        Real next = (Real(2 * k + ta - 2) * x * prev - Real(k + ta - 2) * prev2) / k;
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

template <typename Real>
Real eval_gegenbauer_derivative(GegenbauerOrder order, int n, const Real& x)
{
    if (n <= 0) return Real(0);
    return Real(order.twice_alpha()) * eval_gegenbauer(order.raised(), n - 1, x);
}

template <typename Real>
int GegenbauerCombo<Real>::polynomial_degree() const
{
    int degree = -1;
    for (const auto& term : terms_) {
        const int cdeg = term.coefficient.degree();
        if (cdeg >= 0) degree = std::max(degree, term.degree + cdeg);
    }
    return degree;
}

template <typename Real>
int GegenbauerCombo<Real>::max_gegenbauer_degree() const
{
    int degree = -1;
    for (const auto& term : terms_) degree = std::max(degree, term.degree);
    return degree;
}

template <typename Real>
ValueAndSlope<Real> eval_combo(const GegenbauerCombo<Real>& combo, const Real& x)
{
    ValueAndSlope<Real> result{Real(0), Real(0)};
    const int top = combo.max_gegenbauer_degree();
    if (top < 0) return result;

    const auto values = gegenbauer_sequence(combo.order(), top, x);
    const auto raised = gegenbauer_sequence(combo.order().raised(), top - 1, x);
    const Real two_alpha(combo.order().twice_alpha());

    for (const auto& term : combo.terms()) {
        const Real& c = values[term.degree];
        const Real dc = term.degree > 0 ? two_alpha * raised[term.degree - 1] : Real(0);
        const Real coeff = term.coefficient.value(x);
        result.value += coeff * c;
        result.derivative += coeff * dc + term.coefficient.slope(x) * c;
    }
    return result;
}

template double eval_gegenbauer<double>(GegenbauerOrder, int, const double&);
template Extended eval_gegenbauer<Extended>(GegenbauerOrder, int, const Extended&);
template double eval_gegenbauer_derivative<double>(GegenbauerOrder, int, const double&);
template Extended eval_gegenbauer_derivative<Extended>(GegenbauerOrder, int, const Extended&);
template std::vector<double> gegenbauer_sequence<double>(GegenbauerOrder, int, const double&);
template std::vector<Extended> gegenbauer_sequence<Extended>(GegenbauerOrder, int, const Extended&);
template class GegenbauerCombo<double>;
template class GegenbauerCombo<Extended>;
template ValueAndSlope<double> eval_combo<double>(const GegenbauerCombo<double>&, const double&);
template ValueAndSlope<Extended> eval_combo<Extended>(const GegenbauerCombo<Extended>&, const Extended&);

} // namespace splinequad
