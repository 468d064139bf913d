#pragma once

#include <functional>
#include <vector>

// Generic bracketed scalar root finding: a sign-change scan over a uniform
// grid followed by bisection.  The eigenvalue problems solved here have
// simple, well-separated zeros (spacing >= 1.2 in z), so a fine scan plus
// bisection is both robust and fast enough.

namespace squarewell {

/// A closed interval [lo, hi] known to contain a root (lo == hi for an exact
/// grid zero).
struct Bracket {
    double lo;
    double hi;
};

/// Default scan resolution: three orders of magnitude finer than the
/// smallest eigenvalue spacing encountered in this problem family.
inline constexpr double kDefaultScanStep = 1e-3;

/// Default eigenvalue tolerance: far beyond the 6-decimal reporting
/// precision used in the tabulated results.
inline constexpr double kDefaultRootTol = 1e-12;

/**
 * Walk the grid lo, lo+step, ..., hi and report every consecutive interval
 * with a strict sign change f(a)*f(b) < 0, in ascending order.  A grid point
 * with f(a) exactly zero is reported as the degenerate bracket (a, a).
 *
 * @throws std::invalid_argument unless lo < hi and step > 0
 * @throws std::runtime_error naming the abscissa if f evaluates non-finite
 *         at any grid point
 */
std::vector<Bracket> scan_brackets(const std::function<double(double)>& f,
                                   double lo, double hi, double step);

/**
 * Shrink a sign-change bracket by bisection until its width is at most
 * tol_z and return the midpoint; the result always lies inside the input
 * bracket.  Degenerate brackets (an endpoint with f == 0) return that
 * endpoint immediately.
 *
 * @throws std::invalid_argument if f has the same strict sign at both ends
 *         or tol_z is not positive
 */
double refine_root(const std::function<double(double)>& f, Bracket bracket,
                   double tol_z);

}  // namespace squarewell
