// Acceptance gate for the square-well spectral solver.
//
// Ten end-to-end checks, one line of output each, exit code = number of
// failures.  Reference eigenvalues are the six-decimal regression targets;
// oracles (cofactor determinant, Simpson quadrature) are implemented locally
// and independently of the library so the two sides can disagree.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "squarewell/classical.hpp"
#include "squarewell/flexural.hpp"
#include "squarewell/plot.hpp"
#include "squarewell/report.hpp"
#include "squarewell/well_domain.hpp"

using namespace squarewell;

namespace {

// ---------------------------------------------------------------------------
// Reference values (six decimals)
// ---------------------------------------------------------------------------

constexpr std::array<double, 7> kFlex10 = {1.974707, 3.288725, 4.620365,
                                           5.957359, 7.290139, 8.597635,
                                           9.799891};
constexpr std::array<double, 7> kClassical10 = {1.427552, 2.852342, 4.271095,
                                                5.679208, 7.068891, 8.423204,
                                                9.678884};
constexpr std::array<double, 9> kFlex30 = {2.217448, 3.682318, 5.157210,
                                           6.633016, 8.110346, 9.589274,
                                           11.069782, 12.551741, 14.034918};
constexpr std::array<double, 9> kClassical30 = {1.520104, 3.040082, 4.559804,
                                                6.079134, 7.597929, 9.116028,
                                                10.633257, 12.149413,
                                                13.664261};
constexpr std::array<double, 9> kFlexInfinite = {2.365020, 3.926602, 5.497804,
                                                 7.068583, 8.639380, 10.210176,
                                                 11.780972, 13.351769,
                                                 14.922565};

// ---------------------------------------------------------------------------
// Small local helpers
// ---------------------------------------------------------------------------

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::vector<EigenResult> merged_flexural(double bL) {
    return merge_spectra(finite_well_eigenvalues(bL, Parity::Even),
                         finite_well_eigenvalues(bL, Parity::Odd));
}

std::vector<EigenResult> merged_classical(double bL) {
    return merge_spectra(classical_finite_eigenvalues(bL, Parity::Even),
                         classical_finite_eigenvalues(bL, Parity::Odd));
}

/// Largest |computed - expected| over the pairing of a spectrum against a
/// reference list; infinity when the sizes cannot be paired.
template <std::size_t N>
double worst_deviation(const std::vector<EigenResult>& levels,
                       const std::array<double, N>& expected) {
    if (levels.size() < N) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        worst = std::max(worst, std::abs(levels[i].z - expected[i]));
    return worst;
}

/// 3x3 determinant, rule of Sarrus.
double det3(double a, double b, double c,  //
            double d, double e, double f,  //
            double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

/// Independent 4x4 determinant by Laplace expansion along the first row --
/// deliberately not Gaussian elimination, so it can serve as an oracle.
double cofactor_det4(const Matrix4& m) {
    double det = 0.0;
    double sign = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::array<double, 9> minor{};
        std::size_t k = 0;
        for (std::size_t r = 1; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (c != col) minor[k++] = m[r][c];
        det += sign * m[0][col] *
               det3(minor[0], minor[1], minor[2], minor[3], minor[4],
                    minor[5], minor[6], minor[7], minor[8]);
        sign = -sign;
    }
    return det;
}

/// Composite Simpson with an odd number of points.
template <typename F>
double simpson(F f, double a, double b, int points) {
    const int n = points - 1;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

Outcome flexural_table_bl10() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto levels = merged_flexural(10.0);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (levels.size() != kFlex10.size())
        return {false, fmt("expected 7 levels, got %.0f", double(levels.size()))};
    const double worst = worst_deviation(levels, kFlex10);
    if (worst > 1e-5) return {false, fmt("max |dz| = %.2e > 1e-5", worst)};
    if (seconds >= 1.0) return {false, fmt("solve took %.2f s >= 1 s", seconds)};
    return {true, fmt("max |dz| = %.1e, solved in %.3f s", worst, seconds)};
}

Outcome classical_table_bl10() {
    const auto levels = merged_classical(10.0);
    if (levels.size() != kClassical10.size())
        return {false, fmt("expected 7 levels, got %.0f", double(levels.size()))};
    const double worst = worst_deviation(levels, kClassical10);
    if (worst > 1e-5) return {false, fmt("max |dz| = %.2e > 1e-5", worst)};
    return {true, fmt("max |dz| = %.1e", worst)};
}

Outcome tables_bl30() {
    const auto flex = merged_flexural(30.0);
    const auto classical = merged_classical(30.0);
    if (flex.size() != 19)
        return {false,
                fmt("expected 19 flexural states, got %.0f", double(flex.size()))};
    const double worst = std::max(worst_deviation(flex, kFlex30),
                                  worst_deviation(classical, kClassical30));
    if (worst > 1e-5) return {false, fmt("max |dz| = %.2e > 1e-5", worst)};
    return {true, fmt("19 states, max |dz| = %.1e over 18 values", worst)};
}

Outcome infinite_limits() {
    const auto flex = infinite_well_eigenvalues(9);
    const double worst = worst_deviation(flex, kFlexInfinite);
    if (worst > 1e-5)
        return {false, fmt("flexural max |dz| = %.2e > 1e-5", worst)};
    double worst_classical = 0.0;
    const auto classical = classical_infinite_eigenvalues(9);
    for (std::size_t i = 0; i < classical.size(); ++i)
        worst_classical =
            std::max(worst_classical, std::abs(classical[i].z -
                                               (i + 1) * std::numbers::pi / 2.0));
    if (worst_classical > 1e-13)
        return {false, fmt("classical |z - n pi/2| = %.2e", worst_classical)};
    return {true, fmt("flexural max |dz| = %.1e, classical off n pi/2 by %.1e",
                      worst, worst_classical)};
}

Outcome stiffness_ordering() {
    for (const double bL : {10.0, 30.0}) {
        const auto flex = merged_flexural(bL);
        const auto classical = merged_classical(bL);
        const std::size_t paired = std::min(flex.size(), classical.size());
        for (std::size_t i = 0; i < paired; ++i)
            if (!(flex[i].z > classical[i].z))
                return {false, fmt("level %.0f at bL = %.0f not stiffer",
                                   double(i + 1), bL)};
    }
    // The first finite-well levels even exceed the classical INFINITE well.
    const auto flex10 = merged_flexural(10.0);
    const auto flex30 = merged_flexural(30.0);
    if (flex10.size() < 2 || flex30.size() < 7)
        return {false, "too few states to compare against the infinite well"};
    if (!(flex10[0].z > std::numbers::pi / 2.0 && flex10[1].z > std::numbers::pi))
        return {false, "bL = 10 levels 1-2 do not exceed pi/2, pi"};
    for (std::size_t n = 1; n <= 7; ++n)
        if (!(flex30[n - 1].z > double(n) * std::numbers::pi / 2.0))
            return {false, fmt("bL = 30 level %.0f below n pi/2", double(n))};
    return {true, "flexural > classical at every paired level, "
                  "head levels beat the classical infinite well"};
}

Outcome continuity_residuals() {
    double worst = 0.0;
    int pairs = 0;
    for (const double bL : {10.0, 30.0}) {
        for (const Parity parity : {Parity::Even, Parity::Odd}) {
            for (const auto& level : finite_well_eigenvalues(bL, parity)) {
                const EigenFunction ef =
                    eigenfunction_coefficients(bL, level.z, parity);
                for (const double r : wall_continuity_residuals(ef))
                    worst = std::max(worst, std::abs(r));
                ++pairs;
            }
        }
    }
    if (pairs != 26)
        return {false, fmt("expected 26 eigenpairs, got %.0f", double(pairs))};
    if (worst > 1e-8)
        return {false, fmt("worst residual %.2e > 1e-8", worst)};
    return {true, fmt("worst of 208 residuals = %.1e", worst)};
}

Outcome determinant_oracle() {
    std::mt19937 rng(20260816);
    std::uniform_real_distribution<double> bl_dist(0.5, 15.0);
    std::uniform_real_distribution<double> frac_dist(1e-3, 0.999);
    double worst_cof = 0.0, worst_cond = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double bL = bl_dist(rng);
        const double z = frac_dist(rng) * bL;
        const Parity parity = trial % 2 == 0 ? Parity::Even : Parity::Odd;
        const Matrix4 m = parity == Parity::Even ? even_system_matrix(bL, z)
                                                 : odd_system_matrix(bL, z);

        // Pivoted elimination vs Laplace expansion on the same matrix.
        const double ge = parity_determinant(bL, z, parity);
        const double cof = cofactor_det4(m);
        worst_cof = std::max(
            worst_cof, std::abs(ge - cof) / std::max(std::abs(ge), std::abs(cof)));

        // Undo the column conditioning and compare through the known factors.
        const DecayRates d = exterior_decay_rates(bL, z);
        Matrix4 raw = m;
        for (auto& row : raw) {
            row[2] *= std::exp(-d.beta1L);
            row[3] *= std::exp(-d.beta3L);
        }
        const double unconditioned = cofactor_det4(raw);
        const double rescaled = ge * std::exp(-d.beta1L) * std::exp(-d.beta3L);
        worst_cond = std::max(worst_cond,
                              std::abs(unconditioned - rescaled) /
                                  std::max(std::abs(unconditioned),
                                           std::abs(rescaled)));
    }
    if (worst_cof > 1e-10)
        return {false, fmt("GE vs cofactor rel = %.2e > 1e-10", worst_cof)};
    if (worst_cond > 1e-10)
        return {false, fmt("conditioning rel = %.2e > 1e-10", worst_cond)};
    return {true, fmt("worst rel: %.1e (cofactor), %.1e (conditioning)",
                      worst_cof, worst_cond)};
}

Outcome normalization_and_parity() {
    double worst_norm = 0.0, worst_parity = 0.0;
    for (const double bL : {10.0, 30.0}) {
        for (const Parity parity : {Parity::Even, Parity::Odd}) {
            for (const auto& level : finite_well_eigenvalues(bL, parity)) {
                const EigenFunction ef = normalize(
                    eigenfunction_coefficients(bL, level.z, parity));
                const auto psi2 = [&](double x) {
                    const double v = evaluate_eigenfunction(ef, x);
                    return v * v;
                };
                // Independent quadrature: dense interior Simpson plus a
                // truncated exterior tail (remainder ~ e^-120).
                const double beta3L = exterior_decay_rates(bL, level.z).beta3L;
                const double integral =
                    simpson(psi2, -1.0, 1.0, 24577) +
                    2.0 * simpson(psi2, 1.0, 1.0 + 60.0 / beta3L, 16385);
                worst_norm = std::max(worst_norm, std::abs(integral - 1.0));

                const double sign = parity == Parity::Even ? -1.0 : 1.0;
                for (int i = 1; i <= 1000; ++i) {
                    const double x = 3.0 * i / 1000.0;
                    const double mismatch =
                        evaluate_eigenfunction(ef, x) +
                        sign * evaluate_eigenfunction(ef, -x);
                    worst_parity = std::max(worst_parity, std::abs(mismatch));
                }
            }
        }
    }
    if (worst_norm > 1e-8)
        return {false, fmt("|integral - 1| = %.2e > 1e-8", worst_norm)};
    if (worst_parity > 1e-12)
        return {false, fmt("parity mismatch %.2e > 1e-12", worst_parity)};
    return {true, fmt("worst |integral - 1| = %.1e, parity mismatch = %.1e",
                      worst_norm, worst_parity)};
}

Outcome monotone_depth_limit() {
    std::vector<std::vector<double>> chains;
    for (const double bL : {10.0, 30.0, 100.0, 300.0}) {
        const auto levels = merged_flexural(bL);
        if (levels.size() < 7)
            return {false, fmt("bL = %.0f holds fewer than 7 states", bL)};
        std::vector<double> head;
        for (std::size_t i = 0; i < 7; ++i) head.push_back(levels[i].z);
        chains.push_back(head);
    }
    const auto infinite = infinite_well_eigenvalues(7);
    for (std::size_t n = 0; n < 7; ++n) {
        for (std::size_t d = 1; d < chains.size(); ++d)
            if (!(chains[d - 1][n] < chains[d][n]))
                return {false, fmt("level %.0f not increasing with depth",
                                   double(n + 1))};
        if (!(chains.back()[n] < infinite[n].z))
            return {false,
                    fmt("level %.0f exceeds its infinite-well limit", double(n + 1))};
    }
    return {true, "z(10) < z(30) < z(100) < z(300) < z(infinite) for n = 1..7"};
}

Outcome level_bar_heights() {
    const std::string path = "acceptance_bars.svg";
    emit_plot({PlotKind::LevelBars, well_spec_finite(10.0), path});
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return {false, "bars SVG was not written"};
    std::ostringstream buf;
    buf << in.rdbuf();
    in.close();
    std::remove(path.c_str());
    const std::string svg = buf.str();

    const auto heights = [&](const std::string& cls) {
        const std::regex rect("<rect class=\"" + cls +
                              "\"[^>]*height=\"([^\"]+)\"");
        std::vector<double> out;
        for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect);
             it != std::sregex_iterator(); ++it)
            out.push_back(std::stod((*it)[1].str()));
        return out;
    };
    const auto visible = heights("visible");
    const auto dark = heights("dark");
    const auto classical = heights("classical");
    if (visible.size() != 7 || dark.size() != 7 || classical.size() != 7)
        return {false, fmt("expected 7 bars per class, got %.0f/%.0f visible/dark",
                           double(visible.size()), double(dark.size()))};
    double worst = 0.0;
    for (std::size_t i = 0; i < 7; ++i) {
        const double ref_classical = kClassical10[i] * kClassical10[i];
        const double ref_flexural = kFlex10[i] * kFlex10[i];
        worst = std::max(worst,
                         std::abs(visible[i] - ref_classical) / ref_classical);
        worst = std::max(worst,
                         std::abs(classical[i] - ref_classical) / ref_classical);
        worst = std::max(worst, std::abs(visible[i] + dark[i] - ref_flexural) /
                                    ref_flexural);
    }
    if (worst > 1e-4)
        return {false, fmt("bar height rel error %.2e > 1e-4", worst)};
    return {true, fmt("worst height rel error = %.1e over 21 bars", worst)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::array<Criterion, 10> criteria = {{
        {"flexural bL=10 spectrum matches the 7 reference values", flexural_table_bl10},
        {"classical bL=10 spectrum matches the 7 reference values", classical_table_bl10},
        {"bL=30 spectra match 18 reference values with 19 flexural states", tables_bl30},
        {"infinite-well limits: clamped roots and classical n pi/2", infinite_limits},
        {"fourth-order levels sit above their classical counterparts", stiffness_ordering},
        {"wall-continuity residuals vanish for all 26 eigenpairs", continuity_residuals},
        {"pivoted determinant agrees with cofactor and conditioning oracles", determinant_oracle},
        {"normalized eigenfunctions integrate to one with exact parity", normalization_and_parity},
        {"eigenvalues increase with depth toward the infinite-well limit", monotone_depth_limit},
        {"level-bar SVG heights reproduce the squared reference energies", level_bar_heights},
    }};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome{false, "unhandled exception"};
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("[%s] %2zu. %s (%s)\n", outcome.pass ? "PASS" : "FAIL",
                    i + 1, criteria[i].name, outcome.detail.c_str());
    }
    if (failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d of 10 acceptance criteria FAILED\n", failures);
    return failures;
}
