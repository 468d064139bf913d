#include "squarewell/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "squarewell/plot.hpp"
#include "squarewell/report.hpp"

namespace squarewell {

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    f << text;
    f.flush();
    if (!f) {
        throw std::runtime_error("write failed: " + path);
    }
}

/// Keep only the rows the --model flag asked for.  The dark split needs
/// both models, so it is dropped alongside either one.
SpectrumReport filter_models(SpectrumReport report, const std::string& model) {
    if (model == "flex4") {
        report.classical.clear();
        report.dark_levels.clear();
    } else if (model == "schro2") {
        report.flexural.clear();
        report.dark_levels.clear();
    }
    return report;
}

void emit_report(const SpectrumReport& report, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
    const ExportFormat f =
        (format == "json") ? ExportFormat::Json : ExportFormat::Csv;
    if (!out_path.empty()) {
        export_report(report, f, out_path);
    } else {
        out << (f == ExportFormat::Json ? report_to_json(report)
                                        : report_to_csv(report));
    }
}

const std::vector<std::string> kModelChoices{"both", "flex4", "schro2"};
const std::vector<std::string> kFormatChoices{"csv", "json"};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{
        "Square-well bound states: fourth-order flexural-shear matter-wave model "
        "vs the classical Schrodinger equation, with the per-level dark-energy "
        "split between them"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand(
        "solve", "Spectrum of a finite well (both models unless --model narrows it)");
    double solve_bl = 0.0;
    std::string solve_model = "both", solve_format = "csv", solve_out;
    solve->add_option("--bl", solve_bl, "well strength bL")->required();
    solve->add_option("--model", solve_model, "both|flex4|schro2")
        ->check(CLI::IsMember(kModelChoices));
    solve->add_option("--format", solve_format, "csv|json")
        ->check(CLI::IsMember(kFormatChoices));
    solve->add_option("--out", solve_out, "write to this file instead of stdout");

    auto* table = app.add_subcommand(
        "table1", "Reference eigenvalue table for bL = 10, 30 and the infinite well");
    std::string table_out;
    table->add_option("--out", table_out, "write to this file instead of stdout");

    auto* plot = app.add_subcommand("plot", "Render an SVG chart");
    std::string plot_kind, plot_out;
    double plot_bl = 0.0;
    int plot_samples = 400;
    plot->add_option("--kind", plot_kind, "modes (eigenfunctions) | bars (energy levels)")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"modes", "bars"}));
    plot->add_option("--bl", plot_bl, "well strength bL")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();
    plot->add_option("--samples", plot_samples, "curve samples per unit of x (default 400)");

    auto* infinite = app.add_subcommand(
        "infinite", "First N levels of the infinitely deep well");
    int inf_count = 0;
    std::string inf_model = "both", inf_format = "csv", inf_out;
    infinite->add_option("--count", inf_count, "number of levels")->required();
    infinite->add_option("--model", inf_model, "both|flex4|schro2")
        ->check(CLI::IsMember(kModelChoices));
    infinite->add_option("--format", inf_format, "csv|json")
        ->check(CLI::IsMember(kFormatChoices));
    infinite->add_option("--out", inf_out, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            const SpectrumReport report =
                filter_models(build_report(well_spec_finite(solve_bl)), solve_model);
            emit_report(report, solve_format, solve_out, out);
        } else if (table->parsed()) {
            const std::string text = table_one();
            if (!table_out.empty()) {
                write_text_file(table_out, text);
            } else {
                out << text;
            }
        } else if (plot->parsed()) {
            const PlotRequest req{plot_kind == "modes" ? PlotKind::Eigenfunctions
                                                       : PlotKind::LevelBars,
                                  well_spec_finite(plot_bl), plot_out, plot_samples};
            emit_plot(req);
        } else if (infinite->parsed()) {
            const SpectrumReport report = filter_models(
                build_report(well_spec_infinite(), inf_count), inf_model);
            emit_report(report, inf_format, inf_out, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace squarewell
