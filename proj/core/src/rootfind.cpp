#include "splinequad/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "splinequad/errors.hpp"

namespace splinequad {

namespace {

constexpr int kMaxNewtonIterations = 60;

template <typename Real>
int sign_of(const Real& v)
{
    return (v > 0) - (v < 0);
}

// Chebyshev-Lobatto points on [lo, hi], ascending, endpoints included.
template <typename Real>
std::vector<Real> chebyshev_grid(const Real& lo, const Real& hi, int count)
{
    using std::cos;
    const Real pi = boost::math::constants::pi<Real>();
    const Real mid = (lo + hi) / 2;
    const Real half = (hi - lo) / 2;
    std::vector<Real> grid(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) grid[k] = mid - half * cos(pi * k / (count - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

struct Bracket {
    std::size_t left;
    std::size_t right;
};

// Exact zeros on the grid are reported as degenerate brackets (left == right).
template <typename Real>
std::vector<Bracket> find_brackets(const std::vector<Real>& values)
{
    std::vector<Bracket> brackets;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const int s = sign_of(values[k]);
        if (s == 0) {
            brackets.push_back({k, k});
            continue;
        }
        if (k > 0) {
            const int prev = sign_of(values[k - 1]);
            if (prev != 0 && prev != s) brackets.push_back({k - 1, k});
        }
    }
    return brackets;
}

} // namespace

template <typename Real>
Real refine_root(const GegenbauerCombo<Real>& p, const Real& lo, const Real& hi)
{
    using std::abs;
    Real a = lo;
    Real b = hi;
    const Real fa = eval_combo(p, a).value;
    const Real fb = eval_combo(p, b).value;
    if (fa == 0) return a;
    if (fb == 0) return b;
    if (sign_of(fa) == sign_of(fb)) throw NoSignChange();

    const int sign_a = sign_of(fa);
    const Real tolerance = root_step_tolerance<Real>();

    // Start from the secant point, which is closer than the midpoint for smooth brackets.
    Real x = a - fa * (b - a) / (fb - fa);
    if (!(x > a && x < b)) x = (a + b) / 2;

    for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
        const auto [f, df] = eval_combo(p, x);
        if (f == 0) return x;
        if (sign_of(f) == sign_a)
            a = x;
        else
            b = x;

        if (df != 0) {
            Real next = x - f / df;
            if (next >= a && next <= b) {
                const Real step = abs(next - x);
                x = std::move(next);
                if (step <= tolerance) break;
                continue;
            }
        }
        x = (a + b) / 2;
        if (b - a <= tolerance) break;
    }
    return x;
}

template <typename Real>
RootSet<Real> isolate_and_refine(const GegenbauerCombo<Real>& p, const Real& lo, const Real& hi,
                                 int expected_count)
{
    using std::abs;
    RootSet<Real> result{{}, {}, lo, hi};
    if (expected_count < 0) throw CountMismatch(expected_count, 0);

    int grid_size = std::max(64, 8 * expected_count);
    std::vector<Real> grid;
    std::vector<Bracket> brackets;
    for (int attempt = 0; attempt < 2; ++attempt, grid_size *= 4) {
        grid = chebyshev_grid(lo, hi, grid_size);
        std::vector<Real> values;
        values.reserve(grid.size());
        for (const auto& x : grid) values.push_back(eval_combo(p, x).value);
        brackets = find_brackets(values);
        if (static_cast<int>(brackets.size()) == expected_count) break;
    }
    if (static_cast<int>(brackets.size()) != expected_count)
        throw CountMismatch(expected_count, static_cast<int>(brackets.size()));

    result.roots.reserve(brackets.size());
    result.residuals.reserve(brackets.size());
    for (const auto& bracket : brackets) {
        Real root = bracket.left == bracket.right ? grid[bracket.left]
                                                  : refine_root(p, grid[bracket.left], grid[bracket.right]);
        result.residuals.push_back(abs(eval_combo(p, root).value));
        result.roots.push_back(std::move(root));
    }
    return result;
}

template RootSet<double> isolate_and_refine<double>(const GegenbauerCombo<double>&, const double&, const double&,
                                                    int);
template RootSet<Extended> isolate_and_refine<Extended>(const GegenbauerCombo<Extended>&, const Extended&,
                                                        const Extended&, int);
template double refine_root<double>(const GegenbauerCombo<double>&, const double&, const double&);
template Extended refine_root<Extended>(const GegenbauerCombo<Extended>&, const Extended&, const Extended&);

} // namespace splinequad
