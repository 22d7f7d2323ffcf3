#ifndef SPLINEQUAD_ROOTFIND_HPP
#define SPLINEQUAD_ROOTFIND_HPP

#include <vector>

#include "splinequad/gegenbauer.hpp"

namespace splinequad {

template <typename Real>
struct RootSet {
    std::vector<Real> roots;     // strictly increasing
    std::vector<Real> residuals; // |p(root)|, parallel to roots
    Real lo;
    Real hi;
};

/// All simple real roots of `p` in [lo, hi].
///
/// Brackets come from sign changes on a Chebyshev-Lobatto grid of max(64, 8 * expected_count)
/// points (clustered at the interval ends where roots crowd). If the bracket count differs from
/// expected_count the grid is densified 4x once; a persisting difference raises CountMismatch.
/// Each bracket is polished by safeguarded Newton iteration (see refine_root).
template <typename Real>
RootSet<Real> isolate_and_refine(const GegenbauerCombo<Real>& p, const Real& lo, const Real& hi,
                                 int expected_count);

/// Newton iteration kept inside [lo, hi] by bisection. Stops once the Newton step is below
/// root_step_tolerance<Real>() or after 60 iterations. Throws NoSignChange when p(lo) and
/// p(hi) have the same strict sign.
template <typename Real>
Real refine_root(const GegenbauerCombo<Real>& p, const Real& lo, const Real& hi);

extern template RootSet<double> isolate_and_refine<double>(const GegenbauerCombo<double>&, const double&,
                                                           const double&, int);
extern template RootSet<Extended> isolate_and_refine<Extended>(const GegenbauerCombo<Extended>&,
                                                               const Extended&, const Extended&, int);
extern template double refine_root<double>(const GegenbauerCombo<double>&, const double&, const double&);
extern template Extended refine_root<Extended>(const GegenbauerCombo<Extended>&, const Extended&,
                                               const Extended&);

} // namespace splinequad

#endif // SPLINEQUAD_ROOTFIND_HPP
