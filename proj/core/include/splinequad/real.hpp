#ifndef SPLINEQUAD_REAL_HPP
#define SPLINEQUAD_REAL_HPP

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace splinequad {

// 50 significant decimal digits; used for the golden-table and 25-digit output path.
using Extended = boost::multiprecision::cpp_bin_float_50;

enum class Precision { Double, Extended };

// Newton step size at which a root counts as converged.
template <typename Real>
Real root_step_tolerance()
{
    const Real eps = std::numeric_limits<Real>::epsilon();
    return std::min(Real(1e-15), Real(16) * eps);
}

} // namespace splinequad

#endif // SPLINEQUAD_REAL_HPP
