#pragma once

#include <optional>
#include <string>

#include "squarewell/well_domain.hpp"

// Self-contained SVG emission (no plotting framework, no external assets).

namespace squarewell {

/// What to draw.
enum class PlotKind {
    Eigenfunctions,  ///< stacked normalized mode shapes psi_n(x)
    LevelBars,       ///< per-level energy bars with the dark excess marked
};

/**
 * A plot job.  Eigenfunctions draws up to the first seven normalized modes
 * on x in [-3, 3] (units of L), vertically offset by level, with the well
 * walls marked at x = +/-1; it requires a finite well.  LevelBars draws,
 * per level, the fourth-order bar split into its classical-energy segment
 * plus the stacked dark-energy excess, next to the plain classical bar;
 * bar heights are written in data units (z^2) inside a scaled group so
 * they can be read back from the SVG attributes.
 */
struct PlotRequest {
    PlotKind kind;
    WellSpec spec;
    std::string output_path;
    int samples_per_unit = 400;          ///< curve sampling density, >= 2
    std::optional<int> max_levels = {};  ///< required for infinite LevelBars
};

/**
 * Render the request to its output path as SVG 1.1.
 *
 * @throws std::invalid_argument for samples_per_unit < 2, Eigenfunctions on
 *         an infinite well, or LevelBars on an infinite well without
 *         max_levels
 * @throws std::runtime_error naming the path on I/O failure
 */
void emit_plot(const PlotRequest& req);

}  // namespace squarewell
