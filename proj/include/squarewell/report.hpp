#pragma once

#include <optional>
#include <string>

#include "squarewell/well_domain.hpp"

// Orchestration and serialization: run both models over one well, pair the
// levels, split each level's energy into the classical ("visible") part and
// the fourth-order excess ("dark" part), and export the result.

namespace squarewell {

/// Serialization format for spectrum exports.
enum class ExportFormat {
    Csv,
    Json,
};

/**
 * Run both solvers (both parities, merged ascending) on one well and pair
 * levels by spectral index over the common prefix:
 * z^2_dark = z^2_flexural - z^2_classical per paired level.
 *
 * @param max_levels  how many levels to compute; required for an infinite
 *                    well (its spectrum is unbounded), optional cap for a
 *                    finite well
 * @throws std::invalid_argument for an infinite well without max_levels
 * @throws std::runtime_error if any paired level has z^2_dark <= 0 (the
 *         fourth-order level is expected to exceed the classical one)
 */
SpectrumReport build_report(const WellSpec& spec,
                            std::optional<int> max_levels = std::nullopt);

/**
 * The reference eigenvalue table: both models at bL = 10 (7 levels),
 * bL = 30 and the infinite well (9 levels each), 6-decimal formatting,
 * one row per level index.
 */
std::string table_one();

/// Render a report as CSV: header `model,parity,index,z,z_squared`, one row
/// per eigenvalue (flexural block first), 12 significant digits, LF line
/// endings.  Deterministic: identical reports give byte-identical text.
std::string report_to_csv(const SpectrumReport& report);

/// Render a report as a JSON object mirroring the SpectrumReport field
/// names verbatim (spec, flexural, classical, dark_levels).
std::string report_to_json(const SpectrumReport& report);

/// Parse report_to_json output back into a SpectrumReport (round-trip
/// inverse).  @throws std::invalid_argument on malformed input.
SpectrumReport report_from_json(const std::string& text);

/**
 * Write a report to `path` in the requested format.
 *
 * @throws std::runtime_error naming the path on I/O failure
 */
void export_report(const SpectrumReport& report, ExportFormat format,
                   const std::string& path);

}  // namespace squarewell
