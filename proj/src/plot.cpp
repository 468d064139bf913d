#include "squarewell/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "squarewell/classical.hpp"
#include "squarewell/flexural.hpp"
#include "squarewell/report.hpp"

namespace squarewell {

namespace {

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("emit_plot: cannot open for writing: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("emit_plot: write failed: " + path);
    }
}

std::string svg_open() {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
       << kHeight << "\">\n";
    os << "<style>\n"
          ".bg{fill:#ffffff}\n"
          ".mode{fill:none;stroke:#1f77b4;stroke-width:1.3}\n"
          ".wall{stroke:#888888;stroke-width:1;stroke-dasharray:4 3}\n"
          ".base{stroke:#dddddd;stroke-width:0.8}\n"
          ".axis{stroke:#333333;stroke-width:1}\n"
          ".tick{stroke:#bbbbbb;stroke-width:0.6}\n"
          ".label{font:11px sans-serif;fill:#333333}\n"
          ".title{font:13px sans-serif;fill:#111111}\n"
          ".visible{fill:#5b8db8}\n"
          ".dark{fill:#16263b}\n"
          ".classical{fill:#c9a74e}\n"
          "</style>\n";
    os << "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\"/>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Mode-shape chart: the first (up to) seven normalized eigenfunctions,
// stacked with a vertical offset of 2 per level, walls at x = +/-1.
// ---------------------------------------------------------------------------

void emit_modes(const PlotRequest& req) {
    if (!req.spec.is_finite()) {
        throw std::invalid_argument(
            "emit_plot: eigenfunction charts need a finite well (the infinite-well "
            "modes are clamped and live on |x| <= 1 only)");
    }
    const double bL = req.spec.strength();
    const auto levels = merge_spectra(finite_well_eigenvalues(bL, Parity::Even),
                                      finite_well_eigenvalues(bL, Parity::Odd));
    const int shown = static_cast<int>(std::min<std::size_t>(7, levels.size()));

    // World window: x in [-3.2, 3.2], y in [0, 2(shown+1)].
    const double x_min = -3.2, x_max = 3.2;
    const double y_top = 2.0 * (shown + 1);
    const double ml = 46, mr = 14, mt = 18, mb = 36;
    const double pw = kWidth - ml - mr, ph = kHeight - mt - mb;
    const auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    const auto sy = [&](double y) { return mt + (y_top - y) / y_top * ph; };

    std::ostringstream os;
    os << svg_open();
    os << "<text class=\"title\" x=\"" << fmt(ml) << "\" y=\"13\">Normalized modes, bL = "
       << fmt(bL) << " (well occupies |x| &lt;= 1)</text>\n";

    // Well walls.
    for (double xw : {-1.0, 1.0}) {
        os << "<line class=\"wall\" x1=\"" << fmt(sx(xw)) << "\" y1=\"" << fmt(sy(0.4))
           << "\" x2=\"" << fmt(sx(xw)) << "\" y2=\"" << fmt(sy(y_top - 0.4))
           << "\"/>\n";
    }

    // x-axis with integer ticks.
    os << "<line class=\"axis\" x1=\"" << fmt(sx(x_min)) << "\" y1=\"" << fmt(sy(0.0))
       << "\" x2=\"" << fmt(sx(x_max)) << "\" y2=\"" << fmt(sy(0.0)) << "\"/>\n";
    for (int xi = -3; xi <= 3; ++xi) {
        os << "<line class=\"axis\" x1=\"" << fmt(sx(xi)) << "\" y1=\"" << fmt(sy(0.0))
           << "\" x2=\"" << fmt(sx(xi)) << "\" y2=\"" << fmt(sy(0.0) + 4) << "\"/>\n";
        os << "<text class=\"label\" x=\"" << fmt(sx(xi) - 6) << "\" y=\""
           << fmt(sy(0.0) + 16) << "\">" << xi << "</text>\n";
    }
    os << "<text class=\"label\" x=\"" << fmt(sx(x_max) - 30) << "\" y=\""
       << fmt(sy(0.0) + 30) << "\">x / L</text>\n";

    const int npts = 6 * req.samples_per_unit + 1;
    for (int i = 0; i < shown; ++i) {
        const EigenResult& level = levels[static_cast<std::size_t>(i)];
        const EigenFunction ef =
            normalize(eigenfunction_coefficients(bL, level.z, level.parity));
        const double offset = 2.0 * (i + 1);

        // Faint per-mode zero line, then the curve itself.
        os << "<line class=\"base\" x1=\"" << fmt(sx(-3.0)) << "\" y1=\""
           << fmt(sy(offset)) << "\" x2=\"" << fmt(sx(3.0)) << "\" y2=\""
           << fmt(sy(offset)) << "\"/>\n";
        os << "<polyline class=\"mode\" points=\"";
        for (int j = 0; j < npts; ++j) {
            const double x = -3.0 + 6.0 * j / (npts - 1);
            const double y = evaluate_eigenfunction(ef, x) + offset;
            os << fmt(sx(x), "%.2f") << "," << fmt(sy(y), "%.2f");
            if (j + 1 < npts) os << " ";
        }
        os << "\"/>\n";
        os << "<text class=\"label\" x=\"4\" y=\"" << fmt(sy(offset) + 4) << "\">n="
           << i + 1 << "</text>\n";
    }

    os << "</svg>\n";
    write_file(req.output_path, os.str());
}

// ---------------------------------------------------------------------------
// Level-bar chart: per level, the fourth-order bar drawn as its classical
// ("visible") share with the dark excess stacked on top, next to the plain
// classical bar.  The bars live inside a group scaled so that rect y/height
// attributes are literal z^2 values.
// ---------------------------------------------------------------------------

void emit_bars(const PlotRequest& req) {
    const SpectrumReport report = build_report(req.spec, req.max_levels);
    const std::vector<DarkLevel>& levels = report.dark_levels;
    const int m = static_cast<int>(levels.size());

    double y_max = 1.0;
    for (const DarkLevel& d : levels) {
        y_max = std::max(y_max, d.z_squared_flexural);
    }
    y_max *= 1.06;

    const double ml = 52, mr = 16, mt = 18, mb = 42;
    const double pw = kWidth - ml - mr, ph = kHeight - mt - mb;
    const double sx = pw / (m + 1.0);
    const double sy = ph / y_max;

    std::ostringstream os;
    os << svg_open();
    std::string title = req.spec.is_finite()
                            ? "Normalized energy levels z_n^2, bL = " + fmt(req.spec.strength())
                            : std::string("Normalized energy levels z_n^2, infinite well");
    os << "<text class=\"title\" x=\"" << fmt(ml) << "\" y=\"13\">" << title
       << " (stacked: visible + dark)</text>\n";

    // y grid and tick labels (screen space).
    for (int k = 0; k <= 4; ++k) {
        const double value = y_max * k / 4.0;
        const double y = mt + ph - sy * value;
        os << "<line class=\"tick\" x1=\"" << fmt(ml) << "\" y1=\"" << fmt(y)
           << "\" x2=\"" << fmt(ml + pw) << "\" y2=\"" << fmt(y) << "\"/>\n";
        os << "<text class=\"label\" x=\"6\" y=\"" << fmt(y + 4) << "\">"
           << fmt(value, "%.3g") << "</text>\n";
    }

    // Bars, in data units: world x = level index, world y = z^2.
    os << "<g transform=\"translate(" << fmt(ml) << "," << fmt(mt + ph) << ") scale("
       << fmt(sx, "%.8g") << ",-" << fmt(sy, "%.8g") << ")\">\n";
    for (const DarkLevel& d : levels) {
        const double xf = d.index - 0.38;  // fourth-order stacked bar
        const double xc = d.index + 0.04;  // classical reference bar
        os << "<rect class=\"visible\" x=\"" << fmt(xf) << "\" y=\"0\" width=\"0.34\" height=\""
           << fmt(d.z_squared_classical, "%.10g") << "\"/>\n";
        os << "<rect class=\"dark\" x=\"" << fmt(xf) << "\" y=\""
           << fmt(d.z_squared_classical, "%.10g") << "\" width=\"0.34\" height=\""
           << fmt(d.z_squared_dark, "%.10g") << "\"/>\n";
        os << "<rect class=\"classical\" x=\"" << fmt(xc) << "\" y=\"0\" width=\"0.34\" height=\""
           << fmt(d.z_squared_classical, "%.10g") << "\"/>\n";
    }
    os << "</g>\n";

    // Baseline and level labels (screen space).
    os << "<line class=\"axis\" x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt + ph)
       << "\" x2=\"" << fmt(ml + pw) << "\" y2=\"" << fmt(mt + ph) << "\"/>\n";
    for (const DarkLevel& d : levels) {
        os << "<text class=\"label\" x=\"" << fmt(ml + sx * d.index - 3) << "\" y=\""
           << fmt(mt + ph + 16) << "\">" << d.index << "</text>\n";
    }
    os << "<text class=\"label\" x=\"" << fmt(ml + pw / 2 - 16) << "\" y=\""
       << fmt(kHeight - 8) << "\">level n</text>\n";

    // Legend (inline fills so the bar classes stay unique to actual bars).
    const double lx = ml + 10, ly = mt + 12;
    os << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
       << "\" width=\"12\" height=\"12\" fill=\"#5b8db8\"/>\n"
       << "<text class=\"label\" x=\"" << fmt(lx + 17) << "\" y=\"" << fmt(ly + 10)
       << "\">visible share (= classical z^2)</text>\n";
    os << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 18)
       << "\" width=\"12\" height=\"12\" fill=\"#16263b\"/>\n"
       << "<text class=\"label\" x=\"" << fmt(lx + 17) << "\" y=\"" << fmt(ly + 28)
       << "\">dark excess of the fourth-order level</text>\n";
    os << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 36)
       << "\" width=\"12\" height=\"12\" fill=\"#c9a74e\"/>\n"
       << "<text class=\"label\" x=\"" << fmt(lx + 17) << "\" y=\"" << fmt(ly + 46)
       << "\">classical reference bar</text>\n";

    os << "</svg>\n";
    write_file(req.output_path, os.str());
}

}  // namespace

void emit_plot(const PlotRequest& req) {
    if (req.samples_per_unit < 2) {
        throw std::invalid_argument("emit_plot: samples_per_unit must be >= 2");
    }
    if (req.max_levels && *req.max_levels < 1) {
        throw std::invalid_argument("emit_plot: max_levels must be >= 1");
    }
    switch (req.kind) {
        case PlotKind::Eigenfunctions:
            emit_modes(req);
            break;
        case PlotKind::LevelBars:
            emit_bars(req);
            break;
    }
}

}  // namespace squarewell
