#pragma once

#include <vector>

// Shared problem-description and result types for the square-well spectral
// solvers.  Everything is dimensionless: the well enters only through the
// strength bL = (L/hbar)*sqrt(2mV), an eigenvalue only through z = kL.

namespace squarewell {

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

/// Which wave equation governs the particle.
enum class ModelKind {
    FlexuralShear4th,  ///< fourth-order flexural-shear matter-wave equation
    Schrodinger2nd,    ///< classical second-order Schroedinger equation
};

/// Symmetry of an eigenfunction about the well centre.
enum class Parity {
    Even,
    Odd,
};

// ---------------------------------------------------------------------------
// Problem specification
// ---------------------------------------------------------------------------

/**
 * The physical problem: a square potential well, either of finite strength
 * bL = (L/hbar)*sqrt(2mV) or the infinitely deep limit V -> infinity.
 *
 * Immutable value object; construct through well_spec_finite() /
 * well_spec_infinite().
 */
class WellSpec {
  public:
    /// True for a finite-strength well, false for the infinite limit.
    bool is_finite() const noexcept { return finite_; }

    /// Dimensionless strength bL.  Only meaningful for a finite well.
    /// @throws std::logic_error when called on an infinite well.
    double strength() const;

    friend WellSpec well_spec_finite(double strength);
    friend WellSpec well_spec_infinite() noexcept;

  private:
    WellSpec(bool finite, double strength) : finite_(finite), strength_(strength) {}

    bool finite_;
    double strength_;
};

/**
 * Build a finite-well specification.
 *
 * @param strength  dimensionless product bL; must be positive and finite
 * @throws std::invalid_argument for non-positive, NaN, or infinite strength
 */
WellSpec well_spec_finite(double strength);

/// Build the infinite-well (V -> infinity) specification.
WellSpec well_spec_infinite() noexcept;

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

/**
 * One bound state.  z = kL = (L/hbar)*sqrt(2mE) is the dimensionless
 * eigenvalue; z_squared = z*z is the normalized energy.  Solvers return
 * lists that are strictly ascending in z with contiguous indices from 1.
 */
struct EigenResult {
    ModelKind model;
    Parity parity;
    int index;         ///< rank within the list it was returned in, >= 1
    double z;          ///< dimensionless eigenvalue, z > 0 (and z < bL when finite)
    double z_squared;  ///< z*z, stored so reports never recompute it
};

/**
 * Piecewise closed-form eigenfunction of the fourth-order model for a finite
 * well, in units where the well occupies |x| <= 1 (x measured in units of L).
 *
 * Interior (|x| < 1):  c_trig * trig(z x) + c_hyp * hyp(z x), where the basis
 * is cos/cosh for even parity and sin/sinh for odd parity.
 *
 * Exterior (x >= 1):   a_fast * exp(-beta1L x) + a_slow * exp(-beta3L x) with
 * decay rates beta1L = sqrt(b^2L^2 + z^2) and beta3L = sqrt(b^2L^2 - z^2);
 * x <= -1 follows by parity reflection.
 *
 * Coefficients are stored un-normalized (the homogeneous system fixes them
 * only up to scale); norm_factor is the separate multiplier that makes
 * integral of psi^2 over the whole line equal 1.
 */
struct EigenFunction {
    Parity parity;
    double z;
    double bL;
    double c_trig;  ///< interior trig coefficient (cos for even, sin for odd)
    double c_hyp;   ///< interior hyperbolic coefficient (cosh / sinh)
    double a_fast;  ///< exterior coefficient on the fast decay exp(-beta1L x)
    double a_slow;  ///< exterior coefficient on the slow decay exp(-beta3L x)
    double norm_factor = 1.0;  ///< scale making integral psi^2 dx = 1
};

/// Per-level energy split: the fourth-order level exceeds the classical one,
/// and the excess is the level's "dark" share.
struct DarkLevel {
    int index;
    double z_squared_flexural;
    double z_squared_classical;
    double z_squared_dark;  ///< z_squared_flexural - z_squared_classical, > 0
};

/**
 * Full two-model spectrum for one well, plus the per-level dark-energy
 * decomposition over the common index prefix
 * (dark_levels.size() == min(flexural.size(), classical.size())).
 */
struct SpectrumReport {
    WellSpec spec;
    std::vector<EigenResult> flexural;
    std::vector<EigenResult> classical;
    std::vector<DarkLevel> dark_levels;
};

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

/**
 * Merge two per-parity spectra of the same model into one ascending list,
 * re-ranking indices 1..N.
 *
 * @throws std::invalid_argument if the inputs mix models or are not strictly
 *         ascending
 * @throws std::runtime_error on a degenerate spectrum (two levels sharing
 *         one z); the data model assumes simple eigenvalues
 */
std::vector<EigenResult> merge_spectra(const std::vector<EigenResult>& a,
                                       const std::vector<EigenResult>& b);

/// Margin excluded at both ends of the bound-state search domain
/// (epsilon, bL - epsilon): z = 0 is the trivial solution and z = bL is the
/// continuum threshold where the slow exterior decay rate vanishes.
inline constexpr double kBoundStateMargin = 1e-6;

}  // namespace squarewell
