#pragma once

#include <array>
#include <vector>

#include "squarewell/well_domain.hpp"

// Bound states of the fourth-order flexural-shear matter-wave equation in a
// square well.  In dimensionless form the interior equation is
// psi'''' = z^4 psi on |x| < 1 and the exterior admits decaying solutions
// exp(-beta1L x), exp(-beta3L x) with beta1L = sqrt(b^2L^2 + z^2) and
// beta3L = sqrt(b^2L^2 - z^2).  Requiring psi, psi', psi'', psi''' to be
// continuous at the walls decouples by parity into two homogeneous 4x4
// systems; eigenvalues are the zeros of their determinants.

namespace squarewell {

// ---------------------------------------------------------------------------
// Exterior decay rates
// ---------------------------------------------------------------------------

/// The two real exterior decay exponents of a bound state (in units of 1/L).
/// For 0 < z < bL they satisfy beta1L > bL > beta3L >= 0 and
/// beta1L^2 - beta3L^2 = 2 z^2.
struct DecayRates {
    double beta1L;  ///< sqrt(b^2L^2 + z^2), the fast decay
    double beta3L;  ///< sqrt(b^2L^2 - z^2), the slow decay
};

/**
 * Decay rates of the exterior solution at eigenvalue z.
 *
 * @throws std::invalid_argument for z <= 0 (no state) or z >= bL (the slow
 *         radical would turn imaginary: not a bound state)
 */
DecayRates exterior_decay_rates(double bL, double z);

// ---------------------------------------------------------------------------
// Wall-continuity systems
// ---------------------------------------------------------------------------

/// Row-major 4x4 real matrix.
using Matrix4 = std::array<std::array<double, 4>, 4>;

/**
 * The even-parity wall-continuity system in CONDITIONED form.
 *
 * Rows are continuity of value, first, second and third derivative at x = 1,
 * acting on the coefficient vector (c_trig, c_hyp, a_fast, a_slow) of
 *   interior  c_trig cos(z x) + c_hyp cosh(z x),
 *   exterior  a_fast e^{-beta1L x} + a_slow e^{-beta3L x}.
 * The third and fourth columns carry common positive factors e^{-beta1L} and
 * e^{-beta3L} which underflow for deep wells (already ~1e-13 at bL = 30) and
 * destroy sign detection in the determinant; they are divided out here.
 * Column scaling by a positive constant preserves the determinant's zero
 * set, so the conditioned matrix has exactly the same eigenvalues.
 */
Matrix4 even_system_matrix(double bL, double z);

/// Odd-parity counterpart of even_system_matrix (sin/sinh interior basis),
/// with the same column conditioning.
Matrix4 odd_system_matrix(double bL, double z);

/**
 * Determinant of the conditioned wall-continuity system, by Gaussian
 * elimination with partial pivoting (product of pivots, sign tracked per
 * row swap).  Its zeros in (0, bL) are the bound-state eigenvalues.
 */
double parity_determinant(double bL, double z, Parity parity);

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

/**
 * All bound states of one parity: the zeros of parity_determinant in the
 * open interval (epsilon, bL - epsilon), located by a sign-change scan at
 * step 1e-3 and refined by bisection to 1e-12.  Ascending, indices 1..k,
 * model FlexuralShear4th.  An empty list is a valid result for tiny bL.
 */
std::vector<EigenResult> finite_well_eigenvalues(double bL, Parity parity);

/**
 * First `count` eigenvalues of the infinitely deep well.  The limit modes
 * are clamped at both walls (value and slope zero), giving the classic
 * characteristic equation cos(2z) cosh(2z) = 1, solved here in the
 * overflow-safe form cos(2z) - 1/cosh(2z) = 0 (identical zero set for
 * z > 0 since cosh > 0).  Roots are bracketed from the asymptotic seeds
 * 2z ~ (n + 1/2) pi.  Parity alternates Even, Odd, ... with n.
 *
 * @throws std::invalid_argument for count < 1
 */
std::vector<EigenResult> infinite_well_eigenvalues(int count);

// ---------------------------------------------------------------------------
// Eigenfunctions
// ---------------------------------------------------------------------------

/**
 * Null-space solution of the wall-continuity system at an eigenvalue z:
 * one coefficient is fixed to 1 (the interior trig coefficient first; if
 * that 3x3 solve turns out singular, each other unknown is tried before
 * declaring the eigenvalue degenerate) and the remaining three follow by
 * Gaussian elimination with partial pivoting.  Exterior coefficients are
 * rescaled to the unconditioned convention (multiplied by e^{+beta1L},
 * e^{+beta3L}), so the literal exterior formula applies.  The result is
 * un-normalized (norm_factor = 1).
 *
 * @throws std::invalid_argument when z is not an eigenvalue, reporting the
 *         determinant residual (threshold: |det| <= 1e-6 x matrix inf-norm)
 * @throws std::runtime_error if every choice of fixed unknown leaves the
 *         3x3 system singular (degenerate eigenvalue)
 */
EigenFunction eigenfunction_coefficients(double bL, double z, Parity parity);

/**
 * psi(x) anywhere on the real line (x in units of L), scaled by
 * norm_factor: interior formula for |x| < 1, exterior formula for x >= 1,
 * parity reflection psi(-x) = +/- psi(x) for x <= -1.
 */
double evaluate_eigenfunction(const EigenFunction& ef, double x);

/**
 * d^order psi / dx^order, order 0..4, same piecewise rules as
 * evaluate_eigenfunction.  Order 4 exists because the interior basis
 * satisfies psi'''' = z^4 psi exactly, which tests assert.
 *
 * @throws std::invalid_argument for order outside 0..4
 */
double evaluate_eigenfunction_derivative(const EigenFunction& ef, double x,
                                         int order);

/**
 * Return a copy with norm_factor set so that the integral of psi^2 over the
 * whole line equals 1.  The interior integral uses composite Simpson with
 * 4097 points on [-1, 1]; the exterior tails are integrated analytically
 * (the squared exterior is a sum of three exponentials with closed-form
 * integrals on [1, infinity)).
 *
 * @throws std::runtime_error on a zero norm (degenerate coefficients)
 */
EigenFunction normalize(const EigenFunction& ef);

/**
 * The eight wall-continuity residuals (value, first, second, third
 * derivative at x = +1 and x = -1: interior minus exterior branch), each
 * divided by the largest at-wall coefficient magnitude.  For a genuine
 * eigenpair all eight vanish to roundoff; four are enforced by the solve
 * and the mirrored four follow by parity.
 */
std::array<double, 8> wall_continuity_residuals(const EigenFunction& ef);

}  // namespace squarewell
