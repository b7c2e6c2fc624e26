#include "frobcoh/suites.hpp"

#include "frobcoh/dist.hpp"
#include "frobcoh/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace frobcoh {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t ipow(std::uint64_t base, unsigned e)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

ReportItem make_item(const std::string& suite, const std::string& kind, unsigned n, Residue p, unsigned r,
                     const std::string& module, std::optional<int> degree)
{
    ReportItem item;
    item.suite = suite;
    item.kind = kind;
    item.n = n;
    item.p = p;
    item.r = r;
    item.module = module;
    item.degree = degree;
    return item;
}

void mark_skipped(ReportItem& item, const std::string& reason)
{
    item.pass = true;
    item.status = "skipped";
    item.reason = reason;
}

void mark_refused(ReportItem& item, const std::string& reason, bool optional)
{
    item.pass = optional;
    item.status = "refused";
    item.reason = reason;
}

void judge(ReportItem& item, bool ok, const std::string& failure)
{
    item.pass = ok;
    item.status = ok ? "pass" : "fail";
    if (!ok) item.reason = failure;
}

// Builds an algebra for a suite cell or reports why it cannot be built:
// the constructor gate first, then (H1)-(H3).
struct GatedAlgebra {
    std::optional<RestrictedLieAlgebra> algebra;
    std::string reason;
};

GatedAlgebra gated_algebra(const AlgebraKind& kind, Residue p, bool require_hypotheses)
{
    GatedAlgebra out;
    try {
        auto g = construct(kind, p);
        if (require_hypotheses) {
            auto hyp = check_hypotheses(g);
            if (!hyp.overall) {
                out.reason = hyp.failure_reason();
                return out;
            }
        }
        out.algebra.emplace(std::move(g));
    } catch (const UnsupportedCharacteristic& e) {
        out.reason = std::string("constructor gate: ") + e.what();
    }
    return out;
}

std::size_t poly_dim(std::size_t vars, unsigned d)
{
    // dim S^d of a vars-dimensional space
    return static_cast<std::size_t>(binomial(vars + d - 1, d));
}

void record_h1(ReportItem& item, const H1Report& rep, bool expect_zero)
{
    item.dims = rep;
    item.seconds = rep.seconds;
    item.expected = expect_zero ? "h1 = 0" : "h1 != 0";
    const bool ok = (rep.h1 == 0) == expect_zero;
    judge(item, ok, "h1 = " + std::to_string(rep.h1));
}

struct Runner {
    const SuiteConfig& cfg;
    std::vector<ReportItem>& items;

    // One h1_restricted cell on a module built lazily, with cap and gate handling.
    void h1_cell(ReportItem item, std::size_t predicted_dim, const std::function<RestrictedModule()>& build,
                 const RestrictedLieAlgebra& g, std::optional<bool> expect_zero)
    {
        if (predicted_dim > cfg.dim_cap) {
            mark_refused(item, "module dimension " + std::to_string(predicted_dim) + " exceeds cap " +
                                   std::to_string(cfg.dim_cap), cfg.optional);
            items.push_back(std::move(item));
            return;
        }
        try {
            auto module = build();
            auto rep = h1_restricted(g, module);
            rep.context.degree = item.degree;
            if (expect_zero) {
                record_h1(item, rep, *expect_zero);
            } else {
                item.dims = rep;
                item.seconds = rep.seconds;
                item.expected = "none";
                item.status = "info";
                item.pass = true;
            }
        } catch (const HypothesisGate& e) {
            mark_skipped(item, e.what());
        } catch (const ModuleRefused& e) {
            judge(item, false, std::string("module refused: ") + e.what());
        }
        items.push_back(std::move(item));
    }

    void vanishing_suite(const std::string& suite, Part part)
    {
        for (Residue p : cfg.primes) {
            auto kind = parse_kind(cfg.kind, cfg.n);
            kind.part = part;
            const auto name = kind_name(kind);
            auto gated = gated_algebra(kind, p, true);
            if (!gated.algebra) {
                auto item = make_item(suite, name, cfg.n, p, 1, "k[g]", std::nullopt);
                mark_skipped(item, gated.reason);
                items.push_back(std::move(item));
                continue;
            }
            const auto& g = *gated.algebra;
            const std::string prefix = part == Part::borel ? "k[b]_" : "k[g]_";
            for (unsigned d = 0; d <= cfg.dmax; ++d) {
                auto item = make_item(suite, name, cfg.n, p, 1, prefix + std::to_string(d), static_cast<int>(d));
                h1_cell(std::move(item), poly_dim(g.dim(), d), [&] { return coordring_piece(g, d).module; }, g,
                        true);
            }
        }
    }

    void group_suite(const std::string& suite, GroupKind group)
    {
        const std::string kind = group == GroupKind::sl2 ? "SL2" : "B(SL2)";
        for (Residue p : cfg.primes) {
            auto g = group_lie_algebra(group, p);
            auto hyp = check_hypotheses(g);
            if (!hyp.overall) {
                auto item = make_item(suite, kind, 2, p, 1, "k[G]", std::nullopt);
                mark_skipped(item, hyp.failure_reason());
                items.push_back(std::move(item));
                continue;
            }
            for (unsigned level = 0; level <= cfg.level_max; ++level) {
                auto item = make_item(suite, kind, 2, p, 1, "F_" + std::to_string(level), static_cast<int>(level));
                const auto start = Clock::now();
                auto rep = h1_induced_map(group, p, level, cfg.budget);
                item.seconds = seconds_since(start);
                item.expected = "every class dies by level " + std::to_string(cfg.budget);
                ordered_json dies = ordered_json::array();
                for (const auto& at : rep.dies_at) {
                    if (at) dies.push_back(*at);
                    else dies.push_back(nullptr);
                }
                item.details["h1"] = rep.h1;
                item.details["dies_at"] = dies;
                item.details["surviving"] = rep.surviving;
                item.details["budget"] = cfg.budget;
                judge(item, rep.all_die, "a class persists at budget " + std::to_string(cfg.budget));
                items.push_back(std::move(item));
            }
        }
    }

    void thm42()
    {
        const unsigned r = cfg.r;
        for (Residue p : cfg.primes) {
            for (Part part : {Part::full, Part::borel}) {
                const AlgebraKind kind{ClassicalType::sl, part, 2};
                const auto name = kind_name(kind);
                const std::string prefix = part == Part::borel ? "k[b]_" : "k[g]_";
                auto gated = gated_algebra(kind, p, true);
                if (!gated.algebra) {
                    auto item = make_item("thm42", name, 2, p, r, prefix.substr(0, 4), std::nullopt);
                    mark_skipped(item, gated.reason);
                    items.push_back(std::move(item));
                    continue;
                }
                const auto& g = *gated.algebra;
                std::optional<AugmentedAlgebra> dist;
                try {
                    dist.emplace(dist_sl2(p, r, part == Part::borel ? DistVariant::borel : DistVariant::full,
                                          cfg.dist_cap));
                } catch (const std::length_error& e) {
                    auto item = make_item("thm42", name, 2, p, r, prefix.substr(0, 4), std::nullopt);
                    mark_refused(item, e.what(), cfg.optional);
                    items.push_back(std::move(item));
                    continue;
                }
                for (unsigned d = 0; d <= cfg.dmax; ++d) {
                    auto item = make_item("thm42", name, 2, p, r, prefix + std::to_string(d), static_cast<int>(d));
                    const auto dim = poly_dim(g.dim(), d);
                    if (dim > cfg.dim_cap) {
                        mark_refused(item, "module dimension " + std::to_string(dim) + " exceeds cap", cfg.optional);
                        items.push_back(std::move(item));
                        continue;
                    }
                    auto piece = coordring_piece(g, d);
                    auto module = divided_power_action(*dist, g, piece.module);
                    auto rep = hopf_h1(*dist, module);
                    rep.context.algebra = name;
                    rep.context.n = 2;
                    rep.context.degree = static_cast<int>(d);
                    record_h1(item, rep, true);
                    items.push_back(std::move(item));
                }
            }
        }
    }

    void lemma11()
    {
        Family family;
        Part part = Part::full;
        if (cfg.family == "nilcone") {
            family = Family::nilcone;
        } else if (cfg.family == "u") {
            family = Family::u;
            part = Part::borel;
        } else {
            throw std::invalid_argument("lemma11: family must be nilcone or u, got '" + cfg.family + "'");
        }
        auto kind = parse_kind(cfg.kind, cfg.n);
        kind.part = part;
        const auto name = kind_name(kind);
        const std::string prefix = family == Family::u ? "k[u]_" : "k[N]_";
        for (Residue p : cfg.primes) {
            auto gated = gated_algebra(kind, p, true);
            if (!gated.algebra) {
                auto item = make_item("lemma11", name, cfg.n, p, 1, prefix.substr(0, 4), std::nullopt);
                mark_skipped(item, gated.reason);
                items.push_back(std::move(item));
                continue;
            }
            if (poly_dim(gated.algebra->dim(), cfg.dmax) > cfg.dim_cap) {
                auto item = make_item("lemma11", name, cfg.n, p, 1, prefix.substr(0, 4), std::nullopt);
                mark_refused(item, "ambient degree-dmax piece exceeds cap", cfg.optional);
                items.push_back(std::move(item));
                continue;
            }
            const auto start = Clock::now();
            std::vector<DegreeCheck> checks;
            try {
                checks = lemma11_check(*gated.algebra, family, cfg.dmax);
            } catch (const HypothesisGate& e) {
                auto item = make_item("lemma11", name, cfg.n, p, 1, prefix.substr(0, 4), std::nullopt);
                mark_skipped(item, e.what());
                items.push_back(std::move(item));
                continue;
            }
            const double each = seconds_since(start) / static_cast<double>(std::max<std::size_t>(1, checks.size()));
            for (const auto& c : checks) {
                auto item = make_item("lemma11", name, cfg.n, p, 1, prefix + std::to_string(c.degree),
                                      static_cast<int>(c.degree));
                item.expected = "invariants = span of p-th powers";
                item.details["invariants"] = c.lhs_dim;
                item.details["pth_powers"] = c.rhs_dim;
                item.seconds = each;
                judge(item, c.ok, "subspaces differ");
                items.push_back(std::move(item));
            }
        }
    }

    void lemma41()
    {
        const unsigned r = cfg.r;
        const AlgebraKind kind{ClassicalType::sl, Part::full, 2};
        for (Residue p : cfg.primes) {
            auto gated = gated_algebra(kind, p, true);
            if (!gated.algebra) {
                auto item = make_item("lemma41", "sl", 2, p, r, "k[N]", std::nullopt);
                mark_skipped(item, gated.reason);
                items.push_back(std::move(item));
                continue;
            }
            const auto& g = *gated.algebra;
            std::optional<AugmentedAlgebra> dist;
            try {
                dist.emplace(dist_sl2(p, r, DistVariant::full, cfg.dist_cap));
            } catch (const std::length_error& e) {
                auto item = make_item("lemma41", "sl", 2, p, r, "k[N]", std::nullopt);
                mark_refused(item, e.what(), cfg.optional);
                items.push_back(std::move(item));
                continue;
            }
            const std::uint64_t q = ipow(p, r);
            for (unsigned d = 0; d <= cfg.dmax; ++d) {
                auto item = make_item("lemma41", "sl", 2, p, r, "k[N]_" + std::to_string(d), static_cast<int>(d));
                const auto start = Clock::now();
                auto piece = nilcone_piece(g, d);
                auto module = divided_power_action(*dist, g, piece.module);
                auto inv = gr_invariants(*dist, module);
                auto powers = frobenius_power_subspace(g, Family::nilcone, d, q);
                item.seconds = seconds_since(start);
                item.expected = "G_r-invariants = span of p^r-th powers";
                item.details["invariants"] = inv.dim();
                item.details["powers"] = powers.cols();
                judge(item, same_subspace(inv.basis, powers), "subspaces differ");
                items.push_back(std::move(item));
            }
        }
    }

    void bn_criteria()
    {
        const auto kind = parse_kind(cfg.kind, cfg.n);
        if (kind.part != Part::full) throw std::invalid_argument("bn-criteria needs a full algebra");
        const auto name = kind_name(kind);
        const bool dual = kind.type == ClassicalType::so;
        const unsigned r = cfg.r;
        for (Residue p : cfg.primes) {
            const std::string mod = dual ? "S^i(V*)" : "S^iV";
            auto gated = gated_algebra(kind, p, false);
            if (!gated.algebra) {
                auto item = make_item("bn-criteria", name, cfg.n, p, r, mod, std::nullopt);
                mark_skipped(item, gated.reason);
                items.push_back(std::move(item));
                continue;
            }
            const auto& g = *gated.algebra;
            if (!bn_expected(kind.type, cfg.n, p, r, 0)) {
                auto item = make_item("bn-criteria", name, cfg.n, p, r, mod, std::nullopt);
                mark_skipped(item, "no nonvanishing criterion for this group and rank");
                items.push_back(std::move(item));
                continue;
            }
            std::optional<AugmentedAlgebra> dist;
            if (r > 1) {
                if (kind.type != ClassicalType::sl || cfg.n != 2) {
                    auto item = make_item("bn-criteria", name, cfg.n, p, r, mod, std::nullopt);
                    mark_skipped(item, "Frobenius kernels beyond G_1 are only built for SL_2");
                    items.push_back(std::move(item));
                    continue;
                }
                try {
                    dist.emplace(dist_sl2(p, r, DistVariant::full, cfg.dist_cap));
                } catch (const std::length_error& e) {
                    auto item = make_item("bn-criteria", name, cfg.n, p, r, mod, std::nullopt);
                    mark_refused(item, e.what(), cfg.optional);
                    items.push_back(std::move(item));
                    continue;
                }
            }
            for (unsigned i = 0; i <= cfg.imax; ++i) {
                const std::string label = dual ? "S^" + std::to_string(i) + "(V*)" : "S^" + std::to_string(i) + "V";
                auto item = make_item("bn-criteria", name, cfg.n, p, r, label, static_cast<int>(i));
                const bool expect_zero = !*bn_expected(kind.type, cfg.n, p, r, i);
                auto build = [&] {
                    return dual ? sym_power(dual_module(natural_module(g)), i) : sym_power_natural(g, i);
                };
                const auto dim = poly_dim(g.natural_dim(), i);
                if (!dist) {
                    h1_cell(std::move(item), dim, build, g, expect_zero);
                    continue;
                }
                if (dim > cfg.dim_cap) {
                    mark_refused(item, "module dimension exceeds cap", cfg.optional);
                    items.push_back(std::move(item));
                    continue;
                }
                auto module = divided_power_action(*dist, g, build());
                auto rep = hopf_h1(*dist, module);
                rep.context.algebra = name;
                rep.context.n = cfg.n;
                rep.context.module = label;
                rep.context.degree = static_cast<int>(i);
                record_h1(item, rep, expect_zero);
                items.push_back(std::move(item));
            }
        }
    }

    void explore()
    {
        for (Residue p : cfg.primes) {
            for (Part part : {Part::full, Part::borel}) {
                auto kind = parse_kind(cfg.kind, cfg.n);
                kind.part = part;
                const auto name = kind_name(kind);
                auto gated = gated_algebra(kind, p, false);
                if (!gated.algebra) {
                    auto item = make_item("explore", name, cfg.n, p, 1, "k[g]", std::nullopt);
                    mark_skipped(item, gated.reason);
                    items.push_back(std::move(item));
                    continue;
                }
                const auto& g = *gated.algebra;
                const auto hyp = check_hypotheses(g);
                const std::string note = hyp.overall ? "hypotheses hold" : hyp.failure_reason();
                const std::string prefix = part == Part::borel ? "k[b]_" : "k[g]_";
                for (unsigned d = 0; d <= cfg.dmax; ++d) {
                    auto item = make_item("explore", name, cfg.n, p, 1, prefix + std::to_string(d), static_cast<int>(d));
                    item.reason = note;
                    h1_cell(std::move(item), poly_dim(g.dim(), d), [&] { return coordring_piece(g, d).module; }, g,
                            std::nullopt);
                    if (items.back().status == "info") items.back().reason = note;
                }
            }
        }
    }

    void scan()
    {
        std::vector<std::string> found;
        for (const char* type : {"sl", "gl"}) {
            const auto kind = parse_kind(type, cfg.n);
            for (Residue p : cfg.primes) {
                auto gated = gated_algebra(kind, p, true);
                if (!gated.algebra) {
                    auto item = make_item("scan", type, cfg.n, p, 1, "k[N]", std::nullopt);
                    mark_skipped(item, gated.reason);
                    items.push_back(std::move(item));
                    continue;
                }
                const auto& g = *gated.algebra;
                for (unsigned d = 0; d <= cfg.dmax; ++d) {
                    auto item = make_item("scan", type, cfg.n, p, 1, "k[N]_" + std::to_string(d), static_cast<int>(d));
                    h1_cell(std::move(item), poly_dim(g.dim(), d), [&] { return nilcone_piece(g, d).module; }, g,
                            std::nullopt);
                    const auto& last = items.back();
                    if (last.dims && last.dims->h1 != 0) {
                        found.push_back(std::string(type) + std::to_string(cfg.n) + " p=" + std::to_string(p) +
                                        " d=" + std::to_string(d));
                    }
                }
            }
        }
        auto summary = make_item("scan", "sl,gl", cfg.n, 0, 1, "k[N]", std::nullopt);
        summary.expected = "some h1 != 0";
        summary.details["nonzero"] = found;
        judge(summary, !found.empty(), "no nonzero H^1 found in range");
        items.push_back(std::move(summary));
    }
};

void validate(const SuiteConfig& cfg)
{
    if (cfg.primes.empty()) throw std::invalid_argument("prime list is empty");
    for (Residue p : cfg.primes) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (cfg.dim_cap == 0 || cfg.dist_cap == 0) throw std::invalid_argument("caps must be positive");
    if (cfg.r == 0) throw std::invalid_argument("Frobenius level r must be at least 1");
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
        throw std::invalid_argument("unknown format '" + cfg.format + "'");
    }
    if (cfg.n == 0) throw std::invalid_argument("n must be positive");
}

void sort_items(std::vector<ReportItem>& items)
{
    std::stable_sort(items.begin(), items.end(), [](const ReportItem& a, const ReportItem& b) {
        const auto key = [](const ReportItem& x) {
            return std::make_tuple(std::cref(x.suite), x.p, x.r, x.degree.value_or(-1));
        };
        return key(a) < key(b);
    });
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

ordered_json SuiteConfig::to_json() const
{
    ordered_json j;
    j["suite"] = suite;
    j["kind"] = kind;
    j["n"] = n;
    j["primes"] = primes;
    j["dmax"] = dmax;
    j["r"] = r;
    j["imax"] = imax;
    j["seed"] = seed;
    j["budget"] = budget;
    j["level_max"] = level_max;
    j["family"] = family;
    j["format"] = format;
    j["dim_cap"] = dim_cap;
    j["dist_cap"] = dist_cap;
    j["optional"] = optional;
    return j;
}

bool VerificationReport::overall() const
{
    return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"thm21", "thm22",   "thm31",       "thm32",  "thm42",
                                                "lemma11", "lemma41", "bn-criteria", "explore"};
    return names;
}

std::optional<bool> bn_expected(ClassicalType type, unsigned n, Residue p, unsigned r, unsigned i)
{
    const auto q = static_cast<std::int64_t>(ipow(p, r));
    switch (type) {
    case ClassicalType::gl:
        return false;
    case ClassicalType::sl:
        if (n == 2) {
            for (unsigned s = 0; s < r; ++s) {
                if (floor_mod(static_cast<std::int64_t>(i) + 2 * static_cast<std::int64_t>(ipow(p, s)), q) == 0)
                    return true;
            }
            return false;
        }
        if (n == 3 && p == 2) {
            return floor_mod(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(ipow(2, r - 1)), q) == 0;
        }
        return false;
    case ClassicalType::sp:
        // sp_2n with 2n >= 4
        if (n < 2) return std::nullopt;
        return p == 2 && i % 2 == 1;
    case ClassicalType::so:
        if (n < 4) return std::nullopt;
        return false;
    }
    return std::nullopt;
}

VerificationReport run_suite(const SuiteConfig& config)
{
    validate(config);
    VerificationReport report;
    report.config = config;
    Runner run{config, report.items};
    const auto& s = config.suite;
    if (s == "thm21") run.vanishing_suite(s, Part::full);
    else if (s == "thm22") run.vanishing_suite(s, Part::borel);
    else if (s == "thm31") run.group_suite(s, GroupKind::sl2);
    else if (s == "thm32") run.group_suite(s, GroupKind::borel_sl2);
    else if (s == "thm42") run.thm42();
    else if (s == "lemma11") run.lemma11();
    else if (s == "lemma41") run.lemma41();
    else if (s == "bn-criteria") run.bn_criteria();
    else if (s == "explore") run.explore();
    else throw std::invalid_argument("unknown suite '" + s + "'");
    sort_items(report.items);
    return report;
}

VerificationReport run_scan(const SuiteConfig& config)
{
    validate(config);
    VerificationReport report;
    report.config = config;
    report.config.suite = "scan";
    Runner run{report.config, report.items};
    run.scan();
    sort_items(report.items);
    return report;
}

int exit_code(const VerificationReport& report)
{
    if (report.config.suite == "explore") return 0;
    return report.overall() ? 0 : 1;
}

ordered_json report_to_json(const VerificationReport& report)
{
    ordered_json j;
    j["version"] = report.version;
    j["config"] = report.config.to_json();
    j["items"] = ordered_json::array();
    for (const auto& item : report.items) {
        ordered_json e;
        e["suite"] = item.suite;
        ordered_json ctx;
        ctx["kind"] = item.kind;
        ctx["n"] = item.n;
        ctx["p"] = item.p;
        ctx["r"] = item.r;
        ctx["module"] = item.module;
        if (item.degree) ctx["degree"] = *item.degree;
        else ctx["degree"] = nullptr;
        e["context"] = ctx;
        if (item.dims) {
            e["dims"] = {{"der", item.dims->der},
                         {"rder", item.dims->rder},
                         {"inner", item.dims->inner},
                         {"inv", item.dims->inv},
                         {"h1", item.dims->h1}};
        } else {
            e["dims"] = nullptr;
        }
        e["expected"] = item.expected;
        e["pass"] = item.pass;
        e["status"] = item.status;
        e["reason"] = item.reason;
        e["details"] = item.details;
        j["items"].push_back(std::move(e));
    }
    j["overall"] = report.overall();
    if (report.config.timings) {
        ordered_json t = ordered_json::array();
        for (const auto& item : report.items) t.push_back(item.seconds);
        j["timings"] = t;
    }
    return j;
}

VerificationReport report_from_json(const ordered_json& j)
{
    VerificationReport report;
    report.version = j.at("version").get<std::string>();
    const auto& c = j.at("config");
    auto& cfg = report.config;
    cfg.suite = c.at("suite").get<std::string>();
    cfg.kind = c.at("kind").get<std::string>();
    cfg.n = c.at("n").get<unsigned>();
    cfg.primes = c.at("primes").get<std::vector<Residue>>();
    cfg.dmax = c.at("dmax").get<unsigned>();
    cfg.r = c.at("r").get<unsigned>();
    cfg.imax = c.at("imax").get<unsigned>();
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.budget = c.at("budget").get<unsigned>();
    cfg.level_max = c.at("level_max").get<unsigned>();
    cfg.family = c.at("family").get<std::string>();
    cfg.format = c.at("format").get<std::string>();
    cfg.dim_cap = c.at("dim_cap").get<std::size_t>();
    cfg.dist_cap = c.at("dist_cap").get<std::size_t>();
    cfg.optional = c.at("optional").get<bool>();
    cfg.timings = j.contains("timings");
    const auto& items = j.at("items");
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto& e = items[k];
        const auto& ctx = e.at("context");
        ReportItem item;
        item.suite = e.at("suite").get<std::string>();
        item.kind = ctx.at("kind").get<std::string>();
        item.n = ctx.at("n").get<unsigned>();
        item.p = ctx.at("p").get<Residue>();
        item.r = ctx.at("r").get<unsigned>();
        item.module = ctx.at("module").get<std::string>();
        if (!ctx.at("degree").is_null()) item.degree = ctx.at("degree").get<int>();
        if (!e.at("dims").is_null()) {
            const auto& d = e.at("dims");
            H1Report rep;
            rep.context = H1Context{item.kind, item.n, item.p, item.r, item.module, item.degree};
            rep.der = d.at("der").get<std::size_t>();
            rep.rder = d.at("rder").get<std::size_t>();
            rep.inner = d.at("inner").get<std::size_t>();
            rep.inv = d.at("inv").get<std::size_t>();
            rep.h1 = d.at("h1").get<std::size_t>();
            item.dims = rep;
        }
        item.expected = e.at("expected").get<std::string>();
        item.pass = e.at("pass").get<bool>();
        item.status = e.at("status").get<std::string>();
        item.reason = e.at("reason").get<std::string>();
        item.details = e.value("details", ordered_json::object());
        if (cfg.timings && k < j.at("timings").size()) item.seconds = j.at("timings")[k].get<double>();
        report.items.push_back(std::move(item));
    }
    return report;
}

std::string emit_report(const VerificationReport& report, const std::string& format)
{
    if (format == "json") return report_to_json(report).dump(2) + "\n";

    auto dims_of = [](const ReportItem& item) -> std::vector<std::string> {
        if (!item.dims) return {"", "", "", "", ""};
        const auto& d = *item.dims;
        return {std::to_string(d.der), std::to_string(d.rder), std::to_string(d.inner), std::to_string(d.inv),
                std::to_string(d.h1)};
    };
    const std::vector<std::string> header{"suite", "kind", "n",   "p",  "r",        "module", "degree", "der",
                                          "rder",  "inner", "inv", "h1", "expected", "status", "reason"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& item : report.items) {
        std::vector<std::string> row{item.suite,
                                     item.kind,
                                     std::to_string(item.n),
                                     std::to_string(item.p),
                                     std::to_string(item.r),
                                     item.module,
                                     item.degree ? std::to_string(*item.degree) : ""};
        for (auto& d : dims_of(item)) row.push_back(std::move(d));
        row.push_back(item.expected);
        row.push_back(item.status);
        row.push_back(item.reason);
        rows.push_back(std::move(row));
    }

    std::ostringstream out;
    if (format == "csv") {
        for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
            out << '\n';
        }
        return out.str();
    }
    if (format != "text") throw std::invalid_argument("unknown format '" + format + "'");

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c + 1 == row.size()) out << row[c];
            else out << std::left << std::setw(static_cast<int>(width[c] + 2)) << row[c];
        }
        out << '\n';
    };
    out << report.version << "  suite=" << report.config.suite << "  seed=" << report.config.seed << '\n';
    print_row(header);
    for (const auto& row : rows) print_row(row);
    out << "overall: " << (report.overall() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::size_t dim_cap_from_env(std::size_t fallback)
{
    const char* raw = std::getenv("FROBCOH_DIM_CAP");
    if (raw == nullptr || *raw == '\0') return fallback;
    std::size_t value = 0;
    const std::string text(raw);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw std::invalid_argument("FROBCOH_DIM_CAP must be a positive integer, got '" + text + "'");
    }
    return value;
}

} // namespace frobcoh

namespace frobcoh {

void apply_algebra_descriptor(H1Request& req, const ordered_json& algebra)
{
    if (!algebra.is_object()) throw std::invalid_argument("algebra descriptor must be a JSON object");
    req.kind = algebra.value("kind", req.kind);
    req.n = algebra.value("n", req.n);
    req.p = algebra.value("p", req.p);
    req.r = algebra.value("r", req.r);
}

void apply_module_descriptor(H1Request& req, const ordered_json& module)
{
    if (!module.is_object()) throw std::invalid_argument("module descriptor must be a JSON object");
    req.constructor = module.value("constructor", req.constructor);
    req.degree = module.value("degree", req.degree);
}

RestrictedModule build_module(const RestrictedLieAlgebra& g, const std::string& constructor, unsigned degree)
{
    if (constructor == "trivial") return trivial_module(g);
    if (constructor == "natural") return natural_module(g);
    if (constructor == "adjoint") return adjoint_module(g);
    if (constructor == "coadjoint") return coadjoint_module(g);
    if (constructor == "sym") return sym_power_natural(g, degree);
    if (constructor == "symdual") {
        auto m = sym_power(dual_module(natural_module(g)), degree);
        m.label = "S^" + std::to_string(degree) + "(V*)";
        return m;
    }
    if (constructor == "coordring") return coordring_piece(g, degree).module;
    if (constructor == "nilcone") return nilcone_piece(g, degree).module;
    if (constructor == "u") return u_piece(g, degree).module;
    throw std::invalid_argument("unknown module constructor '" + constructor + "'");
}

H1Report run_h1(const H1Request& req)
{
    if (!is_prime(req.p)) throw std::invalid_argument(std::to_string(req.p) + " is not prime");
    if (req.r == 0) throw std::invalid_argument("Frobenius level r must be at least 1");
    const auto kind = parse_kind(req.kind, req.n);
    const auto g = construct(kind, req.p);
    const std::size_t predicted = [&]() -> std::size_t {
        if (req.constructor == "coordring" || req.constructor == "nilcone" || req.constructor == "u")
            return poly_dim(g.dim(), req.degree);
        if (req.constructor == "sym" || req.constructor == "symdual") return poly_dim(g.natural_dim(), req.degree);
        return g.dim();
    }();
    if (predicted > req.dim_cap) {
        throw ModuleRefused("module dimension " + std::to_string(predicted) + " exceeds cap " +
                            std::to_string(req.dim_cap));
    }
    auto module = build_module(g, req.constructor, req.degree);
    H1Report rep;
    if (req.r == 1) {
        rep = h1_restricted(g, module);
    } else {
        if (kind.type != ClassicalType::sl || req.n != 2 || (kind.part != Part::full && kind.part != Part::borel)) {
            throw std::invalid_argument("r > 1 is only supported for sl_2 and its Borel");
        }
        auto dist = dist_sl2(req.p, req.r, kind.part == Part::borel ? DistVariant::borel : DistVariant::full,
                             req.dist_cap);
        rep = hopf_h1(dist, divided_power_action(dist, g, module));
    }
    rep.context.algebra = kind_name(kind);
    rep.context.n = req.n;
    rep.context.p = req.p;
    rep.context.r = req.r;
    rep.context.module = module.label;
    if (req.constructor != "trivial" && req.constructor != "natural" && req.constructor != "adjoint" &&
        req.constructor != "coadjoint")
        rep.context.degree = static_cast<int>(req.degree);
    return rep;
}

ordered_json h1_report_json(const H1Report& rep)
{
    ordered_json j;
    j["version"] = kToolVersion;
    const auto& c = rep.context;
    j["context"] = {{"kind", c.algebra}, {"n", c.n}, {"p", c.p}, {"r", c.r}, {"module", c.module}};
    if (c.degree) j["context"]["degree"] = *c.degree;
    else j["context"]["degree"] = nullptr;
    j["dims"] = {{"der", rep.der}, {"rder", rep.rder}, {"inner", rep.inner}, {"inv", rep.inv}, {"h1", rep.h1}};
    return j;
}

} // namespace frobcoh
