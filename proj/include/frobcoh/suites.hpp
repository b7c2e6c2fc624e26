#pragma once

// Verification suites and their reports.
//
// Report layout (JSON, frozen):
//   { "version": str,
//     "config":  { every SuiteConfig field },
//     "items":   [ { "suite", "context": {kind, n, p, r, module, degree},
//                    "dims": {der, rder, inner, inv, h1} | null,
//                    "expected", "pass", "status", "reason", "details" } ],
//     "overall": bool,
//     "timings": [seconds per item]   (only with --timings) }
// Items are ordered by (suite, p, r, degree). Nothing time-dependent
// appears outside "timings", so equal configs give byte-identical output.

#include "frobcoh/cohomology.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobcoh {

inline constexpr const char* kToolVersion = "frobcoh 1.0.0";

struct SuiteConfig {
    std::string suite;
    std::string kind = "gl";
    unsigned n = 2;
    std::vector<Residue> primes{2, 3, 5};
    unsigned dmax = 4;
    unsigned r = 1;
    unsigned imax = 12;
    std::uint64_t seed = 1;
    unsigned budget = 9;
    unsigned level_max = 3;
    std::string family = "nilcone";
    std::string format = "json";
    std::size_t dim_cap = 2000;  // largest module dimension an item may build
    std::size_t dist_cap = 2000; // largest Dist(G_r) dimension
    bool optional = false;       // refused items do not fail the suite
    bool timings = false;

    nlohmann::ordered_json to_json() const;
};

struct ReportItem {
    std::string suite;
    std::string kind;
    unsigned n = 0;
    Residue p = 0;
    unsigned r = 1;
    std::string module;
    std::optional<int> degree;
    std::optional<H1Report> dims;
    std::string expected;
    bool pass = true;
    std::string status = "pass"; // pass | fail | skipped | refused | info
    std::string reason;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    double seconds = 0.0;
};

struct VerificationReport {
    std::string version = kToolVersion;
    SuiteConfig config;
    std::vector<ReportItem> items;

    bool overall() const;
};

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite or malformed config.
VerificationReport run_suite(const SuiteConfig& config);

// Nonvanishing scan of H^1(G_1, k[N]_d) over kinds {sl, gl} (n from the
// config), the configured primes and d <= dmax. Items are informational;
// overall is true when at least one nonzero value is found.
VerificationReport run_scan(const SuiteConfig& config);

int exit_code(const VerificationReport& report);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);
std::string emit_report(const VerificationReport& report, const std::string& format);

// Dimension cap from FROBCOH_DIM_CAP, falling back to `fallback`.
std::size_t dim_cap_from_env(std::size_t fallback);

// A single H^1 computation described by an algebra descriptor {kind, n, p}
// and a module descriptor {constructor, degree}. Constructors: trivial,
// natural, adjoint, coadjoint, sym (S^i V), symdual (S^i V*), coordring
// (k[g]_d), nilcone (k[N]_d), u (k[u]_d, Borel algebras). For r > 1 only sl_2
// and its Borel are supported, through Dist(G_r).
struct H1Request {
    std::string kind = "gl";
    unsigned n = 2;
    Residue p = 2;
    unsigned r = 1;
    std::string constructor = "trivial";
    unsigned degree = 0;
    std::size_t dim_cap = 2000;
    std::size_t dist_cap = 2000;
};

// Fills a request from descriptor documents; missing keys keep their value.
void apply_algebra_descriptor(H1Request& req, const nlohmann::ordered_json& algebra);
void apply_module_descriptor(H1Request& req, const nlohmann::ordered_json& module);

RestrictedModule build_module(const RestrictedLieAlgebra& g, const std::string& constructor, unsigned degree);
H1Report run_h1(const H1Request& req);
nlohmann::ordered_json h1_report_json(const H1Report& rep);

// Expected nonvanishing of H^1(G_r, S^i) for the classical criteria; nullopt
// when no criterion applies.
std::optional<bool> bn_expected(ClassicalType type, unsigned n, Residue p, unsigned r, unsigned i);

} // namespace frobcoh
