#ifndef SPLINEQUAD_SPLINECHECK_HPP
#define SPLINEQUAD_SPLINECHECK_HPP

#include <vector>

#include "splinequad/assembly.hpp"

namespace splinequad {

enum class EndKnots {
    Clamped,  // end breakpoints repeated degree + 1 times: partition of unity on all of [0, M]
    Repeated, // end breakpoints repeated like interior ones
};

/// Uniform integer breakpoints 0..last_breakpoint, each interior one repeated (degree - continuity)
/// times, so that every interior breakpoint has exactly C^continuity smoothness.
class KnotVector {
public:
    KnotVector(int degree, int continuity, int last_breakpoint, EndKnots ends = EndKnots::Clamped);

    int degree() const noexcept { return degree_; }
    int continuity() const noexcept { return continuity_; }
    int multiplicity() const noexcept { return degree_ - continuity_; }
    int last_breakpoint() const noexcept { return last_breakpoint_; }
    const std::vector<double>& knots() const noexcept { return knots_; }

    /// Number of normalized B-splines of this degree on the knot sequence.
    int basis_count() const noexcept { return static_cast<int>(knots_.size()) - degree_ - 1; }

    double support_begin(int i) const { return knots_.at(i); }
    double support_end(int i) const { return knots_.at(i + degree_ + 1); }

private:
    int degree_;
    int continuity_;
    int last_breakpoint_;
    std::vector<double> knots_;
};

/// i-th normalized B-spline via the Cox-de Boor recursion (half-open knot spans).
double eval_bspline(const KnotVector& kv, int i, double x);

/// (t_{i+D+1} - t_i) / (D + 1).
double exact_bspline_integral(const KnotVector& kv, int i);

struct ExactnessReport {
    FamilyId family;
    int n = 0;
    int degree = 0;        // degree of exactness claimed by the rule
    int tested_degree = 0; // spline degree actually tested
    int continuity = 0;
    double max_abs_error = 0.0;
    int worst_basis_index = -1;
    int tested_basis_count = 0;
};

inline constexpr int kDefaultCopies = 6;

/// Integrates every interior B-spline of the rule's own degree and continuity class over
/// `copies` periods and reports the worst absolute error against the exact integral.
ExactnessReport check_exactness(const ScaledRule<double>& rule, int copies = kDefaultCopies);

/// Same test against splines of an arbitrary degree and continuity (used for negative controls).
ExactnessReport check_exactness_at(const ScaledRule<double>& rule, int copies, int degree, int continuity);

} // namespace splinequad

#endif // SPLINEQUAD_SPLINECHECK_HPP
