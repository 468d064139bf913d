#include "squarewell/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "squarewell/root_find.hpp"

namespace squarewell {

namespace {

/// Singularity-free characteristic function whose zeros in (0, bL) are the
/// classical bound states of the given parity.
double characteristic(double bL, double z, Parity parity) {
    const double radical = std::sqrt(bL * bL - z * z);
    if (parity == Parity::Even) {
        return z * std::sin(z) - radical * std::cos(z);
    }
    return z * std::cos(z) + radical * std::sin(z);
}

}  // namespace

std::vector<EigenResult> classical_finite_eigenvalues(double bL, Parity parity) {
    if (!std::isfinite(bL) || bL <= 0.0) {
        throw std::invalid_argument(
            "classical_finite_eigenvalues: well strength bL must be positive and finite");
    }
    const double lo = kBoundStateMargin;
    const double hi = bL - kBoundStateMargin;
    std::vector<EigenResult> out;
    if (hi <= lo) return out;

    const auto f = [bL, parity](double z) { return characteristic(bL, z, parity); };
    for (const Bracket& br : scan_brackets(f, lo, hi, kDefaultScanStep)) {
        const double z = refine_root(f, br, kDefaultRootTol);
        if (z <= lo || z >= hi) continue;  // open search domain
        const int n = static_cast<int>(out.size()) + 1;
        out.push_back({ModelKind::Schrodinger2nd, parity, n, z, z * z});
    }
    return out;
}

std::vector<EigenResult> classical_infinite_eigenvalues(int count) {
    if (count < 1) {
        throw std::invalid_argument("classical_infinite_eigenvalues: count must be >= 1");
    }
    std::vector<EigenResult> out;
    out.reserve(count);
    for (int n = 1; n <= count; ++n) {
        const double z = static_cast<double>(n) * (std::numbers::pi / 2.0);
        const Parity parity = (n % 2 == 1) ? Parity::Even : Parity::Odd;
        out.push_back({ModelKind::Schrodinger2nd, parity, n, z, z * z});
    }
    return out;
}

}  // namespace squarewell
