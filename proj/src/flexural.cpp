#include "squarewell/flexural.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "squarewell/root_find.hpp"

namespace squarewell {

namespace {

// ---------------------------------------------------------------------------
// Small dense linear algebra (4x4 is all this problem ever needs)
// ---------------------------------------------------------------------------

/// Determinant by Gaussian elimination with partial pivoting: product of
/// pivots, sign flipped per row swap.  Operates on a copy.
double det4(Matrix4 m) {
    double det = 1.0;
    for (int k = 0; k < 4; ++k) {
        int p = k;
        for (int r = k + 1; r < 4; ++r) {
            if (std::abs(m[r][k]) > std::abs(m[p][k])) p = r;
        }
        if (m[p][k] == 0.0) return 0.0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int r = k + 1; r < 4; ++r) {
            const double f = m[r][k] / m[k][k];
            for (int c = k + 1; c < 4; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

/// Max absolute row sum; the scale against which determinant residuals and
/// pivots are judged.
double inf_norm(const Matrix4& m) {
    double best = 0.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (double e : row) s += std::abs(e);
        best = std::max(best, s);
    }
    return best;
}

/**
 * One attempt at the null space of a (numerically) singular 4x4 matrix:
 * unknown `fix` is set to 1 and the other three are solved from the 4x3
 * overdetermined remainder by partial-pivoted elimination across all four
 * rows; the eliminated fourth row is the consistency leftover, which
 * vanishes at an eigenvalue.  Throws std::runtime_error when a pivot
 * collapses (relative to `scale`), signalling the caller to try another
 * fixed unknown.
 */
std::array<double, 4> null_space_attempt(const Matrix4& m, double scale, int fix) {
    // Augmented 4x4: three unknown columns then the right-hand side -m[.][fix].
    std::array<std::array<double, 4>, 4> a{};
    int cols[3];
    int nc = 0;
    for (int c = 0; c < 4; ++c) {
        if (c != fix) cols[nc++] = c;
    }
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = m[r][cols[c]];
        a[r][3] = -m[r][fix];
    }

    for (int k = 0; k < 3; ++k) {
        int p = k;
        for (int r = k + 1; r < 4; ++r) {
            if (std::abs(a[r][k]) > std::abs(a[p][k])) p = r;
        }
        if (std::abs(a[p][k]) <= scale * 1e-250) {
            throw std::runtime_error("singular pivot");
        }
        if (p != k) std::swap(a[p], a[k]);
        for (int r = k + 1; r < 4; ++r) {
            const double f = a[r][k] / a[k][k];
            for (int c = k; c < 4; ++c) a[r][c] -= f * a[k][c];
        }
    }

    std::array<double, 3> x{};
    for (int k = 2; k >= 0; --k) {
        double s = a[k][3];
        for (int c = k + 1; c < 3; ++c) s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }

    std::array<double, 4> v{};
    v[fix] = 1.0;
    for (int c = 0; c < 3; ++c) v[cols[c]] = x[c];
    return v;
}

// ---------------------------------------------------------------------------
// Piecewise evaluation helpers (un-normalized, norm_factor applied by callers)
// ---------------------------------------------------------------------------

/// Exterior amplitudes rewritten at the wall:
///   a_fast e^{-beta1L x} = p_fast e^{-beta1L (x-1)}   with p_fast = a_fast e^{-beta1L},
/// and likewise q_slow.  This form never over- or underflows for x >= 1.
struct WallForm {
    double beta1L;
    double beta3L;
    double p_fast;
    double q_slow;
};

WallForm at_wall(const EigenFunction& ef) {
    const DecayRates d = exterior_decay_rates(ef.bL, ef.z);
    return {d.beta1L, d.beta3L, ef.a_fast * std::exp(-d.beta1L),
            ef.a_slow * std::exp(-d.beta3L)};
}

/// d^order/dx^order of c_trig trig(z x) + c_hyp hyp(z x).  Each derivative
/// pulls down one factor of z and advances the basis through its cycle
/// (cos -> -sin -> -cos -> sin, cosh <-> sinh; sin -> cos -> -sin -> -cos,
/// sinh <-> cosh).
double interior_term(const EigenFunction& ef, double x, int order) {
    const double u = ef.z * x;
    const double zk = std::pow(ef.z, order);
    double trig, hyp;
    if (ef.parity == Parity::Even) {
        switch (order % 4) {
            case 0: trig = std::cos(u); break;
            case 1: trig = -std::sin(u); break;
            case 2: trig = -std::cos(u); break;
            default: trig = std::sin(u); break;
        }
        hyp = (order % 2 == 0) ? std::cosh(u) : std::sinh(u);
    } else {
        switch (order % 4) {
            case 0: trig = std::sin(u); break;
            case 1: trig = std::cos(u); break;
            case 2: trig = -std::sin(u); break;
            default: trig = -std::cos(u); break;
        }
        hyp = (order % 2 == 0) ? std::sinh(u) : std::cosh(u);
    }
    return zk * (ef.c_trig * trig + ef.c_hyp * hyp);
}

/// d^order/dx^order of the exterior branch for x >= 1; each derivative
/// brings down (-beta).
double exterior_term(const WallForm& w, double x, int order) {
    const double s1 = std::pow(-w.beta1L, order);
    const double s3 = std::pow(-w.beta3L, order);
    return w.p_fast * s1 * std::exp(-w.beta1L * (x - 1.0)) +
           w.q_slow * s3 * std::exp(-w.beta3L * (x - 1.0));
}

/// Composite Simpson over [a, b] with npts points (npts odd).
template <typename F>
double simpson(F&& f, double a, double b, int npts) {
    const int n = npts - 1;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        s += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

void check_finite_strength(double bL, const char* who) {
    if (!std::isfinite(bL) || bL <= 0.0) {
        std::ostringstream msg;
        msg << who << ": well strength bL must be positive and finite, got " << bL;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Decay rates and continuity systems
// ---------------------------------------------------------------------------

DecayRates exterior_decay_rates(double bL, double z) {
    check_finite_strength(bL, "exterior_decay_rates");
    if (!(z > 0.0)) {
        std::ostringstream msg;
        msg << "exterior_decay_rates: z must be positive, got " << z;
        throw std::invalid_argument(msg.str());
    }
    if (z >= bL) {
        std::ostringstream msg;
        msg << "exterior_decay_rates: z = " << z << " >= bL = " << bL
            << " is not a bound state (slow decay rate would turn imaginary)";
        throw std::invalid_argument(msg.str());
    }
    return {std::sqrt(bL * bL + z * z), std::sqrt(bL * bL - z * z)};
}

Matrix4 even_system_matrix(double bL, double z) {
    const auto [b1, b3] = exterior_decay_rates(bL, z);
    const double z2 = z * z, z3 = z2 * z;
    const double c = std::cos(z), s = std::sin(z);
    const double ch = std::cosh(z), sh = std::sinh(z);
    return {{
        {c, ch, -1.0, -1.0},
        {-z * s, z * sh, b1, b3},
        {-z2 * c, z2 * ch, -b1 * b1, -b3 * b3},
        {z3 * s, z3 * sh, b1 * b1 * b1, b3 * b3 * b3},
    }};
}

Matrix4 odd_system_matrix(double bL, double z) {
    const auto [b1, b3] = exterior_decay_rates(bL, z);
    const double z2 = z * z, z3 = z2 * z;
    const double c = std::cos(z), s = std::sin(z);
    const double ch = std::cosh(z), sh = std::sinh(z);
    return {{
        {s, sh, -1.0, -1.0},
        {z * c, z * ch, b1, b3},
        {-z2 * s, z2 * sh, -b1 * b1, -b3 * b3},
        {-z3 * c, z3 * ch, b1 * b1 * b1, b3 * b3 * b3},
    }};
}

double parity_determinant(double bL, double z, Parity parity) {
    return det4(parity == Parity::Even ? even_system_matrix(bL, z)
                                       : odd_system_matrix(bL, z));
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

std::vector<EigenResult> finite_well_eigenvalues(double bL, Parity parity) {
    check_finite_strength(bL, "finite_well_eigenvalues");
    const double lo = kBoundStateMargin;
    const double hi = bL - kBoundStateMargin;
    std::vector<EigenResult> out;
    if (hi <= lo) return out;  // well too shallow to hold any state

    const auto f = [bL, parity](double z) { return parity_determinant(bL, z, parity); };
    for (const Bracket& br : scan_brackets(f, lo, hi, kDefaultScanStep)) {
        const double z = refine_root(f, br, kDefaultRootTol);
        // The search domain is open: a zero pinned to an endpoint is the
        // excluded trivial/threshold case, not a bound state.  (For very
        // deep wells the determinant also rounds to exactly zero AT the
        // left edge, where b^2L^2 +/- z^2 collapse to the same double.)
        if (z <= lo || z >= hi) continue;
        const int n = static_cast<int>(out.size()) + 1;
        out.push_back({ModelKind::FlexuralShear4th, parity, n, z, z * z});
    }
    return out;
}

std::vector<EigenResult> infinite_well_eigenvalues(int count) {
    if (count < 1) {
        throw std::invalid_argument("infinite_well_eigenvalues: count must be >= 1");
    }
    // Roots of cos(x) = 1/cosh(x) for x = 2z sit within 0.3 of the
    // asymptotic seeds x_n = (n + 1/2) pi: there |cos| = sin(0.3) ~ 0.295
    // while 1/cosh(x) < 0.03 already at the first seed, so the sign change
    // is guaranteed inside each seeded bracket.
    const auto f = [](double x) { return std::cos(x) - 1.0 / std::cosh(x); };
    std::vector<EigenResult> out;
    out.reserve(count);
    for (int n = 1; n <= count; ++n) {
        const double seed = (n + 0.5) * std::numbers::pi;
        const double x = refine_root(f, {seed - 0.3, seed + 0.3}, kDefaultRootTol);
        const Parity parity = (n % 2 == 1) ? Parity::Even : Parity::Odd;
        const double z = 0.5 * x;
        out.push_back({ModelKind::FlexuralShear4th, parity, n, z, z * z});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eigenfunctions
// ---------------------------------------------------------------------------

EigenFunction eigenfunction_coefficients(double bL, double z, Parity parity) {
    const Matrix4 m = (parity == Parity::Even) ? even_system_matrix(bL, z)
                                               : odd_system_matrix(bL, z);
    const double scale = inf_norm(m);
    const double det = det4(m);
    if (std::abs(det) > 1e-6 * scale) {
        std::ostringstream msg;
        msg << "eigenfunction_coefficients: z = " << z
            << " is not an eigenvalue (|det| = " << std::abs(det)
            << " exceeds 1e-6 x matrix norm " << scale << ")";
        throw std::invalid_argument(msg.str());
    }

    // Fix the interior trig coefficient first; fall back to the other
    // unknowns only if the reduced system is singular for that choice.
    std::array<double, 4> v{};
    bool solved = false;
    for (int fix = 0; fix < 4 && !solved; ++fix) {
        try {
            v = null_space_attempt(m, scale, fix);
            solved = true;
        } catch (const std::runtime_error&) {
            // try the next fixed unknown
        }
    }
    if (!solved) {
        std::ostringstream msg;
        msg << "eigenfunction_coefficients: degenerate eigenvalue at z = " << z
            << " (every reduced 3x3 system is singular)";
        throw std::runtime_error(msg.str());
    }

    // The conditioned system solves for the at-wall exterior amplitudes;
    // scale back to the plain-exponential convention a e^{-beta x}.
    const DecayRates d = exterior_decay_rates(bL, z);
    return {parity, z, bL, v[0], v[1], v[2] * std::exp(d.beta1L),
            v[3] * std::exp(d.beta3L), 1.0};
}

double evaluate_eigenfunction_derivative(const EigenFunction& ef, double x,
                                         int order) {
    if (order < 0 || order > 4) {
        throw std::invalid_argument(
            "evaluate_eigenfunction_derivative: order must be 0..4");
    }
    double v;
    if (x >= 1.0) {
        v = exterior_term(at_wall(ef), x, order);
    } else if (x <= -1.0) {
        // psi(x) = s psi(-x)  =>  psi^(k)(x) = s (-1)^k psi^(k)(-x)
        const double s = (ef.parity == Parity::Even) ? 1.0 : -1.0;
        const double flip = (order % 2 == 0) ? 1.0 : -1.0;
        v = s * flip * exterior_term(at_wall(ef), -x, order);
    } else {
        v = interior_term(ef, x, order);
    }
    return ef.norm_factor * v;
}

double evaluate_eigenfunction(const EigenFunction& ef, double x) {
    return evaluate_eigenfunction_derivative(ef, x, 0);
}

EigenFunction normalize(const EigenFunction& ef) {
    const WallForm w = at_wall(ef);

    // Interior: numerically; 4097 Simpson points resolve the highest mode's
    // oscillations (wavelength >= 2 pi / bL) to far below the 1e-8 budget.
    const double interior = simpson(
        [&ef](double x) {
            const double p = interior_term(ef, x, 0);
            return p * p;
        },
        -1.0, 1.0, 4097);

    // Exterior: the square of p e^{-b1(x-1)} + q e^{-b3(x-1)} integrates in
    // closed form on [1, inf); doubled for the mirrored tail.
    const double tail = w.p_fast * w.p_fast / (2.0 * w.beta1L) +
                        2.0 * w.p_fast * w.q_slow / (w.beta1L + w.beta3L) +
                        w.q_slow * w.q_slow / (2.0 * w.beta3L);

    const double total = interior + 2.0 * tail;
    if (!std::isfinite(total) || total <= 0.0) {
        std::ostringstream msg;
        msg << "normalize: degenerate eigenfunction, integral of psi^2 = " << total;
        throw std::runtime_error(msg.str());
    }
    EigenFunction result = ef;
    result.norm_factor = 1.0 / std::sqrt(total);
    return result;
}

std::array<double, 8> wall_continuity_residuals(const EigenFunction& ef) {
    const WallForm w = at_wall(ef);
    const double scale =
        std::max({std::abs(ef.c_trig), std::abs(ef.c_hyp), std::abs(w.p_fast),
                  std::abs(w.q_slow)});

    std::array<double, 8> r{};
    const double sign = (ef.parity == Parity::Even) ? 1.0 : -1.0;
    for (int order = 0; order < 4; ++order) {
        // x = +1: interior minus exterior branch.
        r[order] = (interior_term(ef, 1.0, order) - exterior_term(w, 1.0, order)) / scale;
        // x = -1: interior minus the reflected exterior branch.
        const double flip = (order % 2 == 0) ? 1.0 : -1.0;
        r[4 + order] = (interior_term(ef, -1.0, order) -
                        sign * flip * exterior_term(w, 1.0, order)) /
                       scale;
    }
    return r;
}

}  // namespace squarewell
