#pragma once

#include <vector>

#include "squarewell/well_domain.hpp"

// Bound states of the classical second-order Schroedinger equation in the
// same wells, used as the comparison baseline for the fourth-order model.

namespace squarewell {

/**
 * All bound states of one parity for the finite well.  The textbook
 * transcendental equations
 *   even:  tan(z) =  sqrt(b^2L^2 - z^2) / z
 *   odd:   cot(z) = -sqrt(b^2L^2 - z^2) / z
 * are solved in singularity-free product form (multiply through by z cos z,
 * respectively z sin z):
 *   even:  g(z) = z sin z - sqrt(b^2L^2 - z^2) cos z
 *   odd:   h(z) = z cos z + sqrt(b^2L^2 - z^2) sin z
 * which have the same zero sets on (0, bL) but no poles, so the uniform
 * scan-and-bisect machinery applies unchanged.  Ascending, indices 1..k,
 * model Schrodinger2nd.
 */
std::vector<EigenResult> classical_finite_eigenvalues(double bL, Parity parity);

/**
 * First `count` eigenvalues of the classical infinitely deep well,
 * z_n = n pi / 2 exactly.  Parity alternates Even, Odd, ... with n.
 *
 * @throws std::invalid_argument for count < 1
 */
std::vector<EigenResult> classical_infinite_eigenvalues(int count);

}  // namespace squarewell
