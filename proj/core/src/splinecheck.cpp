#include "splinequad/splinecheck.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace splinequad {

KnotVector::KnotVector(int degree, int continuity, int last_breakpoint, EndKnots ends)
    : degree_(degree), continuity_(continuity), last_breakpoint_(last_breakpoint)
{
    if (continuity < 0 || degree - continuity < 1)
        throw std::invalid_argument("knot multiplicity degree - continuity must be >= 1");
    if (last_breakpoint < 1) throw std::invalid_argument("need at least one knot interval");
    const int interior = multiplicity();
    const int end = ends == EndKnots::Clamped ? degree + 1 : interior;
    knots_.reserve(static_cast<std::size_t>(last_breakpoint + 1) * (degree + 1));
    for (int b = 0; b <= last_breakpoint; ++b) {
        const int mult = (b == 0 || b == last_breakpoint) ? end : interior;
        for (int m = 0; m < mult; ++m) knots_.push_back(static_cast<double>(b));
    }
}

namespace {

void check_index(const KnotVector& kv, int i)
{
    if (i < 0 || i >= kv.basis_count())
        throw std::out_of_range("B-spline index " + std::to_string(i) + " outside [0, " +
                                std::to_string(kv.basis_count()) + ")");
}

} // namespace

double eval_bspline(const KnotVector& kv, int i, double x)
{
    check_index(kv, i);
    const auto& t = kv.knots();
    const int degree = kv.degree();
    if (x < t[i] || x >= t[i + degree + 1]) return 0.0;

    std::vector<double> basis(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j) basis[j] = (t[i + j] <= x && x < t[i + j + 1]) ? 1.0 : 0.0;

    for (int p = 1; p <= degree; ++p) {
        for (int j = 0; j + p <= degree; ++j) {
            double value = 0.0;
            const double left_span = t[i + j + p] - t[i + j];
            if (left_span > 0.0) value += (x - t[i + j]) / left_span * basis[j];
            const double right_span = t[i + j + p + 1] - t[i + j + 1];
            if (right_span > 0.0) value += (t[i + j + p + 1] - x) / right_span * basis[j + 1];
            basis[j] = value;
        }
    }
    return basis[0];
}

double exact_bspline_integral(const KnotVector& kv, int i)
{
    check_index(kv, i);
    return (kv.support_end(i) - kv.support_begin(i)) / (kv.degree() + 1);
}

ExactnessReport check_exactness(const ScaledRule<double>& rule, int copies)
{
    return check_exactness_at(rule, copies, rule.degree, rule.family.continuity_order());
}

ExactnessReport check_exactness_at(const ScaledRule<double>& rule, int copies, int degree, int continuity)
{
    ExactnessReport report;
    report.family = rule.family;
    report.n = rule.n;
    report.degree = rule.degree;
    report.tested_degree = degree;
    report.continuity = continuity;

    const auto points = replicate_periodically(rule, copies);
    const int span = copies * rule.period_intervals();
    const KnotVector kv(degree, continuity, span);

    for (int i = 0; i < kv.basis_count(); ++i) {
        const double begin = kv.support_begin(i);
        const double end = kv.support_end(i);
        if (begin < 1.0 || end > span - 1.0) continue;

        double sum = 0.0;
        for (const auto& p : points) {
            if (p.node < begin) continue;
            if (p.node >= end) break;
            sum += p.weight * eval_bspline(kv, i, p.node);
        }
        const double error = std::abs(sum - exact_bspline_integral(kv, i));
        ++report.tested_basis_count;
        if (report.worst_basis_index < 0 || error > report.max_abs_error) {
            report.max_abs_error = error;
            report.worst_basis_index = i;
        }
    }
    return report;
}

} // namespace splinequad
