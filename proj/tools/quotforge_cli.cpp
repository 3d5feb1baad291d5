// quotforge -- validation, stability, Jordan frames, companion-pencil checks,
// deformation walks, orbit tests, module-bridge conversions and finite-field
// censuses over JSON files.
//
// Exit codes: 0 success / property true, 1 property false or distinct orbits,
// 2 invalid input, 3 enumeration budget exceeded. JSON payloads go to stdout,
// human-readable logs to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "quotforge/json_io.hpp"

namespace {

using namespace quotforge;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw JsonFormatError(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

void emit(const json& payload) {
    std::cout << payload.dump() << "\n";
}

QuotDatum load_valid_datum(const std::string& path) {
    QuotDatum datum = datum_from_json(load_json(path));
    const ValidationReport report = validate(datum);
    if (!report.ok()) throw std::invalid_argument("invalid datum: " + report.summary());
    return datum;
}

int cmd_validate(const std::string& path) {
    const QuotDatum datum = datum_from_json(load_json(path));
    const ValidationReport report = validate(datum);
    emit(validation_to_json(report));
    if (report.ok()) {
        std::cerr << "valid datum (d=" << datum.d << ", r=" << datum.r << ", "
                  << datum.field.describe() << ")\n";
        return kExitTrue;
    }
    std::cerr << report.summary() << "\n";
    return kExitFalse;
}

int cmd_stable(const std::string& path) {
    const QuotDatum datum = load_valid_datum(path);
    const StabilityCertificate cert = generated_subspace(datum);
    const bool w = cert.stable && in_w_slice(datum);
    emit(stability_to_json(cert, w));
    std::cerr << (cert.stable ? "stable" : "not stable") << ", generated dimension "
              << cert.generated.dim() << " of " << datum.d << "\n";
    return cert.stable ? kExitTrue : kExitFalse;
}

int cmd_jordan(const std::string& path) {
    const QuotDatum datum = load_valid_datum(path);
    const JordanFrame frame = compatible_jordan_frame(datum.b1, datum.b2);
    emit(frame_to_json(frame));
    std::cerr << "frame with " << frame.k << " block(s)\n";
    return kExitTrue;
}

int cmd_lemma23(const std::string& path, std::size_t samples) {
    const QuotDatum datum = load_valid_datum(path);
    const CompanionCheckReport report = verify_companion_pencil(datum.b1, datum.b2, samples);
    emit(companion_checks_to_json(report));
    std::cerr << (report.ok() ? "all companion checks pass" : "companion checks FAILED") << "\n";
    return report.ok() ? kExitTrue : kExitFalse;
}

int cmd_connect(const std::string& path) {
    const QuotDatum datum = load_valid_datum(path);
    const ConnectCertificate cert = connect_to_w(datum);
    emit(certificate_to_json(cert));
    std::cerr << "witness t = " << cert.witness_t.str() << ", " << cert.failures
              << " sample(s) off the slice (bound " << cert.degree_bound << ")\n";
    return kExitTrue;
}

int cmd_orbit(const std::string& path_a, const std::string& path_b) {
    const QuotDatum a = load_valid_datum(path_a);
    const QuotDatum b = load_valid_datum(path_b);
    const auto witness = orbit_witness(a, b);
    if (witness) {
        emit(json{{"equivalent", true}, {"witness", matrix_to_json(*witness)}});
        std::cerr << "orbit-equivalent\n";
        return kExitTrue;
    }
    emit(json{{"equivalent", false}});
    std::cerr << "distinct orbits\n";
    return kExitFalse;
}

int cmd_bridge_to_presentation(const std::string& path) {
    const QuotDatum datum = load_valid_datum(path);
    const SubmodulePresentation presentation = presentation_of_datum(datum);
    emit(presentation_to_json(presentation));
    std::cerr << "presentation with " << presentation.generators.size() << " generator(s), colength "
              << presentation.colength << "\n";
    return kExitTrue;
}

int cmd_bridge_to_datum(const std::string& path) {
    const SubmodulePresentation presentation = presentation_from_json(load_json(path));
    const QuotDatum datum = quotient_datum(presentation);
    emit(datum_to_json(datum));
    std::cerr << "datum of length " << datum.d << " with r = " << datum.r << "\n";
    return kExitTrue;
}

int cmd_census(std::size_t d, std::size_t r, std::uint32_t q, bool factorized, std::size_t jobs) {
    CensusOptions options;
    options.factorized = factorized;
    options.jobs = jobs;
    if (const char* env = std::getenv("QUOTFORGE_BUDGET")) {
        try {
            options.budget = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("QUOTFORGE_BUDGET is not a number");
        }
    }
    const CensusReport report = quot_point_count(d, r, q, options);
    emit(census_to_json(report));

    auto row = [](const char* label, const std::string& value) {
        std::cerr << "  " << label;
        for (std::size_t pad = std::string(label).size(); pad < 22; ++pad) std::cerr << ' ';
        std::cerr << value << "\n";
    };
    row("field", "GF(" + std::to_string(report.q) + ")");
    row("d, r", std::to_string(report.d) + ", " + std::to_string(report.r));
    row("commuting pairs", report.count_pairs.get_str());
    row("stable tuples", report.count_stable.get_str());
    row("W-slice tuples", report.count_w_slice.get_str());
    row("|GL_d|", report.gl_order_value.get_str());
    row("Quot points", report.quot_points.get_str());
    row("W points", report.w_points.get_str());
    row("off-slice fraction", report.w_complement_fraction.get_str());
    row("elapsed", std::to_string(report.elapsed_seconds) + "s");
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix models of punctual Quot schemes: stability, frames, deformations, censuses"};
    app.require_subcommand(1);

    std::string file_a;
    std::string file_b;
    std::size_t samples = 32;
    std::size_t census_d = 0;
    std::size_t census_r = 0;
    std::uint32_t census_q = 0;
    bool factorized = false;
    std::size_t jobs = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check membership of a datum in the pair variety");
    validate_cmd->add_option("file", file_a, "datum JSON")->required();

    auto* stable_cmd = app.add_subcommand("stable", "stability and W-slice membership");
    stable_cmd->add_option("file", file_a, "datum JSON")->required();

    auto* jordan_cmd = app.add_subcommand("jordan", "compatible Jordan frame of the pair");
    jordan_cmd->add_option("file", file_a, "datum JSON")->required();

    auto* lemma_cmd = app.add_subcommand("lemma23", "companion operator checks");
    lemma_cmd->add_option("file", file_a, "datum JSON")->required();
    lemma_cmd->add_option("--samples", samples, "random pencil draws")->capture_default_str();

    auto* connect_cmd = app.add_subcommand("connect", "deformation walk to the W-slice");
    connect_cmd->add_option("file", file_a, "datum JSON")->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit equivalence of two stable data");
    orbit_cmd->add_option("file_a", file_a, "datum JSON")->required();
    orbit_cmd->add_option("file_b", file_b, "datum JSON")->required();

    auto* bridge_cmd = app.add_subcommand("bridge", "module/matrix conversions");
    bridge_cmd->require_subcommand(1);
    auto* to_pres = bridge_cmd->add_subcommand("to-presentation", "datum -> submodule presentation");
    to_pres->add_option("file", file_a, "datum JSON")->required();
    auto* to_datum = bridge_cmd->add_subcommand("to-datum", "submodule presentation -> datum");
    to_datum->add_option("file", file_b, "presentation JSON")->required();

    auto* census_cmd = app.add_subcommand("census", "exhaustive finite-field counts");
    census_cmd->add_option("--d", census_d, "dimension")->required();
    census_cmd->add_option("--r", census_r, "number of marked vectors")->required();
    census_cmd->add_option("--q", census_q, "prime field size")->required();
    census_cmd->add_flag("--factorized", factorized, "enumerate one B1 per Jordan type");
    census_cmd->add_option("--jobs", jobs, "worker count (never changes results)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(file_a);
        if (stable_cmd->parsed()) return cmd_stable(file_a);
        if (jordan_cmd->parsed()) return cmd_jordan(file_a);
        if (lemma_cmd->parsed()) return cmd_lemma23(file_a, samples);
        if (connect_cmd->parsed()) return cmd_connect(file_a);
        if (orbit_cmd->parsed()) return cmd_orbit(file_a, file_b);
        if (bridge_cmd->parsed()) {
            if (to_pres->parsed()) return cmd_bridge_to_presentation(file_a);
            return cmd_bridge_to_datum(file_b);
        }
        if (census_cmd->parsed()) return cmd_census(census_d, census_r, census_q, factorized, jobs);
    } catch (const BudgetError& e) {
        emit(json{{"error", "budget_exceeded"},
                  {"estimate", e.estimate.get_str()},
                  {"budget", std::to_string(e.budget)}});
        std::cerr << "budget exceeded: estimated " << e.estimate.get_str() << " inner iterations, budget "
                  << e.budget << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
