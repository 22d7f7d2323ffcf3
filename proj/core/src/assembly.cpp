#include "splinequad/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "splinequad/errors.hpp"
#include "splinequad/rootfind.hpp"

namespace splinequad {

template <typename Real>
std::size_t ScaledRule<Real>::size() const noexcept
{
    std::size_t total = 0;
    for (const auto& interval : intervals) total += interval.nodes.size();
    return total;
}

namespace {

template <typename Real>
RuleInterval<Real> assemble_interval(const IntervalSpec<Real>& spec)
{
    using std::abs;
    RuleInterval<Real> out;
    if (spec.fixed_node) {
        out.nodes.push_back(spec.fixed_node->node);
        out.weights.push_back(spec.fixed_node->weight);
    }
    if (spec.expected_free_nodes == 0) return out;

    const auto roots = isolate_and_refine(spec.R, Real(-1), Real(1), spec.expected_free_nodes);
    for (const auto& x : roots.roots) {
        const Real slope = eval_combo(spec.R, x).derivative;
        const Real s = eval_combo(spec.S, x).value;
        const Real denominator = slope * s * weight_factor_value(spec.extra_weight_factor, x);
        if (abs(denominator) <= Real(1e-300))
            throw DegenerateWeight("vanishing weight denominator at node " +
                                   std::to_string(static_cast<double>(x)));
        out.nodes.push_back(x);
        out.weights.push_back(spec.A / denominator);
    }
    return out;
}

// Negate the free nodes (everything but the fixed endpoint) and restore ascending order.
template <typename Real>
RuleInterval<Real> reflect_free_nodes(const RuleInterval<Real>& first, bool has_fixed_node)
{
    RuleInterval<Real> out;
    const std::size_t begin = has_fixed_node ? 1 : 0;
    for (std::size_t i = first.nodes.size(); i > begin; --i) {
        out.nodes.push_back(-first.nodes[i - 1]);
        out.weights.push_back(first.weights[i - 1]);
    }
    return out;
}

} // namespace

template <typename Real>
ReferenceRule<Real> assemble(const FamilySpec<Real>& spec)
{
    ReferenceRule<Real> rule{spec.id, spec.n, spec.degree, {}};
    if (spec.intervals.empty()) throw InvalidFamily("family spec has no intervals");

    rule.intervals.push_back(assemble_interval(spec.intervals.front()));
    for (std::size_t k = 1; k < spec.intervals.size(); ++k) {
        if (spec.second_interval_by_reflection)
            rule.intervals.push_back(
                reflect_free_nodes(rule.intervals.front(), spec.intervals.front().fixed_node.has_value()));
        else
            rule.intervals.push_back(assemble_interval(spec.intervals[k]));
    }
    return rule;
}

template <typename Real>
ScaledRule<Real> scale_to_unit_intervals(const ReferenceRule<Real>& rule)
{
    ScaledRule<Real> scaled{rule.family, rule.n, rule.degree, {}};
    scaled.intervals.reserve(rule.intervals.size());
    for (std::size_t k = 0; k < rule.intervals.size(); ++k) {
        const auto& in = rule.intervals[k];
        RuleInterval<Real> out;
        out.nodes.reserve(in.nodes.size());
        out.weights.reserve(in.weights.size());
        for (std::size_t i = 0; i < in.nodes.size(); ++i) {
            out.nodes.push_back(Real(static_cast<int>(k)) + (in.nodes[i] + 1) / 2);
            out.weights.push_back(in.weights[i] / 2);
        }
        scaled.intervals.push_back(std::move(out));
    }
    return scaled;
}

template <typename Real>
std::vector<QuadraturePoint<Real>> flatten(const ScaledRule<Real>& rule)
{
    std::vector<QuadraturePoint<Real>> points;
    points.reserve(rule.size());
    for (const auto& interval : rule.intervals)
        for (std::size_t i = 0; i < interval.nodes.size(); ++i)
            points.push_back({interval.nodes[i], interval.weights[i]});
    return points;
}

template <typename Real>
std::vector<QuadraturePoint<Real>> replicate_periodically(const ScaledRule<Real>& rule, int copies)
{
    if (copies < 1) throw std::invalid_argument("copies must be >= 1");
    const auto period = flatten(rule);
    const int length = rule.period_intervals();
    std::vector<QuadraturePoint<Real>> points;
    points.reserve(period.size() * static_cast<std::size_t>(copies));
    for (int k = 0; k < copies; ++k)
        for (const auto& p : period) points.push_back({p.node + Real(k * length), p.weight});
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a.node < b.node; });
    return points;
}

template <typename Real>
ScaledRule<double> to_double(const ScaledRule<Real>& rule)
{
    ScaledRule<double> out{rule.family, rule.n, rule.degree, {}};
    for (const auto& interval : rule.intervals) {
        RuleInterval<double> converted;
        for (const auto& x : interval.nodes) converted.nodes.push_back(static_cast<double>(x));
        for (const auto& w : interval.weights) converted.weights.push_back(static_cast<double>(w));
        out.intervals.push_back(std::move(converted));
    }
    return out;
}

template <typename Real>
ScaledRule<Real> make_scaled_rule(const FamilyId& id, int n, DeltaSign sign)
{
    return scale_to_unit_intervals(assemble(build_family<Real>(id, n, sign)));
}

double hausdorff_distance(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    auto directed = [](std::span<const double> from, std::span<const double> to) {
        double worst = 0.0;
        for (double x : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (double y : to) nearest = std::min(nearest, std::abs(x - y));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

#define SPLINEQUAD_INSTANTIATE_ASSEMBLY(Real)                                                               \
    template struct ScaledRule<Real>;                                                                       \
    template ReferenceRule<Real> assemble<Real>(const FamilySpec<Real>&);                                   \
    template ScaledRule<Real> scale_to_unit_intervals<Real>(const ReferenceRule<Real>&);                    \
    template std::vector<QuadraturePoint<Real>> replicate_periodically<Real>(const ScaledRule<Real>&, int);  \
    template std::vector<QuadraturePoint<Real>> flatten<Real>(const ScaledRule<Real>&);                     \
    template ScaledRule<double> to_double<Real>(const ScaledRule<Real>&);                                    \
    template ScaledRule<Real> make_scaled_rule<Real>(const FamilyId&, int, DeltaSign);

SPLINEQUAD_INSTANTIATE_ASSEMBLY(double)
SPLINEQUAD_INSTANTIATE_ASSEMBLY(Extended)

} // namespace splinequad
