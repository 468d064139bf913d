#include "squarewell/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "squarewell/classical.hpp"
#include "squarewell/flexural.hpp"

namespace squarewell {

namespace {

const char* model_token(ModelKind m) {
    return m == ModelKind::FlexuralShear4th ? "flex4" : "schro2";
}

const char* parity_token(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

ModelKind model_from_token(const std::string& t) {
    if (t == "flex4") return ModelKind::FlexuralShear4th;
    if (t == "schro2") return ModelKind::Schrodinger2nd;
    throw std::invalid_argument("unknown model token: " + t);
}

Parity parity_from_token(const std::string& t) {
    if (t == "even") return Parity::Even;
    if (t == "odd") return Parity::Odd;
    throw std::invalid_argument("unknown parity token: " + t);
}

void truncate_levels(std::vector<EigenResult>& list, int max_levels) {
    if (static_cast<int>(list.size()) > max_levels) list.resize(max_levels);
}

}  // namespace

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

SpectrumReport build_report(const WellSpec& spec, std::optional<int> max_levels) {
    if (max_levels && *max_levels < 1) {
        throw std::invalid_argument("build_report: max_levels must be >= 1");
    }

    SpectrumReport report{spec, {}, {}, {}};
    if (spec.is_finite()) {
        const double bL = spec.strength();
        report.flexural = merge_spectra(finite_well_eigenvalues(bL, Parity::Even),
                                        finite_well_eigenvalues(bL, Parity::Odd));
        report.classical =
            merge_spectra(classical_finite_eigenvalues(bL, Parity::Even),
                          classical_finite_eigenvalues(bL, Parity::Odd));
        if (max_levels) {
            truncate_levels(report.flexural, *max_levels);
            truncate_levels(report.classical, *max_levels);
        }
    } else {
        if (!max_levels) {
            throw std::invalid_argument(
                "build_report: an infinite well has unboundedly many levels; max_levels is required");
        }
        report.flexural = infinite_well_eigenvalues(*max_levels);
        report.classical = classical_infinite_eigenvalues(*max_levels);
    }

    const std::size_t paired = std::min(report.flexural.size(), report.classical.size());
    report.dark_levels.reserve(paired);
    for (std::size_t i = 0; i < paired; ++i) {
        const double zf2 = report.flexural[i].z_squared;
        const double zc2 = report.classical[i].z_squared;
        const double dark = zf2 - zc2;
        if (!(dark > 0.0)) {
            std::ostringstream msg;
            msg << "build_report: level " << i + 1
                << " has non-positive dark share (z^2 fourth-order = " << zf2
                << ", classical = " << zc2 << ")";
            throw std::runtime_error(msg.str());
        }
        report.dark_levels.push_back({static_cast<int>(i) + 1, zf2, zc2, dark});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Reference table
// ---------------------------------------------------------------------------

std::string table_one() {
    const SpectrumReport r10 = build_report(well_spec_finite(10.0));
    const SpectrumReport r30 = build_report(well_spec_finite(30.0));
    const std::vector<EigenResult> flex_inf = infinite_well_eigenvalues(9);
    const std::vector<EigenResult> class_inf = classical_infinite_eigenvalues(9);

    const auto cell = [](const std::vector<EigenResult>& list, std::size_t i) {
        char buf[32];
        if (i < list.size()) {
            std::snprintf(buf, sizeof buf, "%15.6f", list[i].z);
        } else {
            std::snprintf(buf, sizeof buf, "%15s", "");
        }
        return std::string(buf);
    };

    std::ostringstream os;
    os << "Bound-state eigenvalues z_n = (L/hbar) sqrt(2 m E_n)\n";
    os << "\n";
    os << " n" << "   flex4 bL=10" << "  schro2 bL=10" << "   flex4 bL=30"
       << "  schro2 bL=30" << "  flex4 bL=inf" << " schro2 bL=inf"
       << "\n";
    for (std::size_t i = 0; i < 9; ++i) {
        char head[8];
        std::snprintf(head, sizeof head, "%2zu", i + 1);
        os << head << cell(r10.flexural, i) << cell(r10.classical, i)
           << cell(r30.flexural, i) << cell(r30.classical, i) << cell(flex_inf, i)
           << cell(class_inf, i) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string report_to_csv(const SpectrumReport& report) {
    std::string out = "model,parity,index,z,z_squared\n";
    const auto append = [&out](const EigenResult& e) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s,%s,%d,%.12g,%.12g\n",
                      model_token(e.model), parity_token(e.parity), e.index, e.z,
                      e.z_squared);
        out += buf;
    };
    for (const EigenResult& e : report.flexural) append(e);
    for (const EigenResult& e : report.classical) append(e);
    return out;
}

namespace {

nlohmann::ordered_json results_to_json(const std::vector<EigenResult>& list) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const EigenResult& e : list) {
        arr.push_back({{"model", model_token(e.model)},
                       {"parity", parity_token(e.parity)},
                       {"index", e.index},
                       {"z", e.z},
                       {"z_squared", e.z_squared}});
    }
    return arr;
}

std::vector<EigenResult> results_from_json(const nlohmann::ordered_json& arr) {
    std::vector<EigenResult> list;
    for (const auto& item : arr) {
        list.push_back({model_from_token(item.at("model").get<std::string>()),
                        parity_from_token(item.at("parity").get<std::string>()),
                        item.at("index").get<int>(), item.at("z").get<double>(),
                        item.at("z_squared").get<double>()});
    }
    return list;
}

}  // namespace

std::string report_to_json(const SpectrumReport& report) {
    nlohmann::ordered_json j;
    j["spec"]["depth"] = report.spec.is_finite() ? "finite" : "infinite";
    if (report.spec.is_finite()) {
        j["spec"]["strength"] = report.spec.strength();
    }
    j["flexural"] = results_to_json(report.flexural);
    j["classical"] = results_to_json(report.classical);
    nlohmann::ordered_json dark = nlohmann::ordered_json::array();
    for (const DarkLevel& d : report.dark_levels) {
        dark.push_back({{"index", d.index},
                        {"z_squared_flexural", d.z_squared_flexural},
                        {"z_squared_classical", d.z_squared_classical},
                        {"z_squared_dark", d.z_squared_dark}});
    }
    j["dark_levels"] = dark;
    return j.dump(2) + "\n";
}

SpectrumReport report_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::ordered_json::parse(text);
        const std::string depth = j.at("spec").at("depth").get<std::string>();
        WellSpec spec = well_spec_infinite();
        if (depth == "finite") {
            spec = well_spec_finite(j.at("spec").at("strength").get<double>());
        } else if (depth != "infinite") {
            throw std::invalid_argument("unknown depth token: " + depth);
        }
        SpectrumReport report{spec, results_from_json(j.at("flexural")),
                              results_from_json(j.at("classical")), {}};
        for (const auto& item : j.at("dark_levels")) {
            report.dark_levels.push_back(
                {item.at("index").get<int>(),
                 item.at("z_squared_flexural").get<double>(),
                 item.at("z_squared_classical").get<double>(),
                 item.at("z_squared_dark").get<double>()});
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: malformed input: ") +
                                    e.what());
    }
}

void export_report(const SpectrumReport& report, ExportFormat format,
                   const std::string& path) {
    const std::string text =
        format == ExportFormat::Csv ? report_to_csv(report) : report_to_json(report);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("export_report: cannot open for writing: " + path);
    }
    out << text;
    out.flush();
    if (!out) {
        throw std::runtime_error("export_report: write failed: " + path);
    }
}

}  // namespace squarewell
