// frobcoh: command-line front end for the H^1 engines and verification suites.
//
// Exit codes: 0 pass (or skip, or explore), 1 assertion failure, 2 usage error.

#include "frobcoh/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

std::vector<frobcoh::Residue> parse_primes(const std::string& text)
{
    std::vector<frobcoh::Residue> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in prime list '" + text + "'");
        std::size_t used = 0;
        const auto value = std::stoull(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad prime '" + token + "'");
        out.push_back(static_cast<frobcoh::Residue>(value));
    }
    return out;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
}

// Flags shared by verify and scan.
struct SuiteFlags {
    frobcoh::SuiteConfig cfg;
    std::string primes = "2,3,5";
    std::string output;
    bool dim_cap_given = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--kind", cfg.kind, "gl | sl | sp | so");
        cmd->add_option("--n", cfg.n, "rank parameter (gl_n, sl_n, sp_2n, so_n)")->check(CLI::PositiveNumber);
        cmd->add_option("--p", primes, "comma-separated primes");
        cmd->add_option("--dmax", cfg.dmax, "degree cutoff");
        cmd->add_option("--r", cfg.r, "Frobenius level")->check(CLI::PositiveNumber);
        cmd->add_option("--imax", cfg.imax, "largest symmetric power for bn-criteria");
        cmd->add_option("--seed", cfg.seed, "sampling seed");
        cmd->add_option("--budget", cfg.budget, "dying-class budget for thm31/thm32");
        cmd->add_option("--level-max", cfg.level_max, "largest filtration level for thm31/thm32");
        cmd->add_option("--family", cfg.family, "nilcone | u (lemma11)");
        cmd->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--dim-cap", cfg.dim_cap, "largest module dimension (overrides FROBCOH_DIM_CAP)")
            ->check(CLI::PositiveNumber)
            ->each([this](const std::string&) { dim_cap_given = true; });
        cmd->add_option("--dist-cap", cfg.dist_cap, "largest Dist(G_r) dimension")->check(CLI::PositiveNumber);
        cmd->add_flag("--optional", cfg.optional, "refused items do not fail the suite");
        cmd->add_flag("--timings", cfg.timings, "add the timings side field");
        cmd->add_option("-o,--output", output, "write the report to a file");
    }

    void finish()
    {
        cfg.primes = parse_primes(primes);
        if (!dim_cap_given) cfg.dim_cap = frobcoh::dim_cap_from_env(cfg.dim_cap);
    }
};

int run(int argc, char** argv)
{
    CLI::App app{"frobcoh: first cohomology of Frobenius kernels over prime fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", frobcoh::kToolVersion);

    SuiteFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", verify_flags.cfg.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(frobcoh::suite_names()));
    verify_flags.attach(verify);

    SuiteFlags scan_flags;
    scan_flags.cfg.primes = {2, 3};
    scan_flags.primes = "2,3";
    scan_flags.cfg.dmax = 6;
    auto* scan = app.add_subcommand("scan", "search for nonzero H^1(G_1, k[N]_d) over sl_n and gl_n");
    scan_flags.attach(scan);

    frobcoh::H1Request req;
    std::string algebra_doc, module_doc, h1_output;
    std::string h1_format = "json";
    auto* h1 = app.add_subcommand("h1", "compute one H^1(G_r, M)");
    h1->add_option("--kind", req.kind, "gl | sl | sp | so, optionally borel-of-, nilradical-of-, torus-of-");
    h1->add_option("--n", req.n, "rank parameter")->check(CLI::PositiveNumber);
    h1->add_option("--p", req.p, "prime");
    h1->add_option("--r", req.r, "Frobenius level")->check(CLI::PositiveNumber);
    h1->add_option("--module", req.constructor,
                   "trivial | natural | adjoint | coadjoint | sym | symdual | coordring | nilcone | u");
    h1->add_option("--degree", req.degree, "degree or symmetric power");
    h1->add_option("--algebra-json", algebra_doc, "algebra descriptor {kind, n, p[, r]}");
    h1->add_option("--module-json", module_doc, "module descriptor {constructor, degree}");
    h1->add_option("--dist-cap", req.dist_cap, "largest Dist(G_r) dimension")->check(CLI::PositiveNumber);
    h1->add_option("--format", h1_format, "json | text")->check(CLI::IsMember({"json", "text"}));
    h1->add_option("-o,--output", h1_output, "write the result to a file");

    std::string input, report_format = "text", report_output;
    auto* report = app.add_subcommand("report", "re-render a saved JSON report");
    report->add_option("input", input, "JSON report file")->required()->check(CLI::ExistingFile);
    report->add_option("--format", report_format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    report->add_option("-o,--output", report_output, "write to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            verify_flags.finish();
            auto rep = frobcoh::run_suite(verify_flags.cfg);
            write_output(frobcoh::emit_report(rep, verify_flags.cfg.format), verify_flags.output);
            return frobcoh::exit_code(rep);
        }
        if (*scan) {
            scan_flags.finish();
            auto rep = frobcoh::run_scan(scan_flags.cfg);
            write_output(frobcoh::emit_report(rep, scan_flags.cfg.format), scan_flags.output);
            return frobcoh::exit_code(rep);
        }
        if (*h1) {
            if (!algebra_doc.empty()) frobcoh::apply_algebra_descriptor(req, ordered_json::parse(algebra_doc));
            if (!module_doc.empty()) frobcoh::apply_module_descriptor(req, ordered_json::parse(module_doc));
            req.dim_cap = frobcoh::dim_cap_from_env(req.dim_cap);
            const auto rep = frobcoh::run_h1(req);
            std::string text;
            if (h1_format == "json") {
                text = frobcoh::h1_report_json(rep).dump(2) + "\n";
            } else {
                std::ostringstream out;
                out << rep.context.algebra << " n=" << rep.context.n << " p=" << rep.context.p
                    << " r=" << rep.context.r << " M=" << rep.context.module << ": der=" << rep.der
                    << " rder=" << rep.rder << " inner=" << rep.inner << " inv=" << rep.inv << " h1=" << rep.h1
                    << '\n';
                text = out.str();
            }
            write_output(text, h1_output);
            return 0;
        }
        if (*report) {
            std::ifstream file(input);
            const auto parsed = frobcoh::report_from_json(ordered_json::parse(file));
            write_output(frobcoh::emit_report(parsed, report_format), report_output);
            return frobcoh::exit_code(parsed);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "frobcoh: malformed JSON: " << e.what() << '\n';
        return 2;
    } catch (const frobcoh::HypothesisGate& e) {
        std::cerr << "frobcoh: refused: " << e.what() << '\n';
        return 2;
    } catch (const frobcoh::UnsupportedCharacteristic& e) {
        std::cerr << "frobcoh: refused: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "frobcoh: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "frobcoh: refused: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
