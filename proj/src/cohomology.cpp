#include "frobcoh/cohomology.hpp"

#include "frobcoh/invariants.hpp"

#include <chrono>
#include <random>

namespace frobcoh {

namespace {

// Nonzero entries of each row of a dense matrix.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, Residue>>>;

SparseRows sparse_rows(const FpMatrix& a)
{
    SparseRows rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (row[c])
                rows[r].emplace_back(c, row[c]);
    }
    return rows;
}

} // namespace

FpMatrix DerivationSpace::as_map(std::size_t i) const
{
    FpMatrix d(basis.p(), m_dim, g_dim);
    for (std::size_t l = 0; l < g_dim; ++l)
        for (std::size_t k = 0; k < m_dim; ++k)
            d.set(k, l, basis(l * m_dim + k, i));
    return d;
}

LinearSystem derivation_system(const RestrictedLieAlgebra& g, const RestrictedModule& m, bool restricted,
                               std::size_t sparse_threshold)
{
    const std::size_t gd = g.dim(), md = m.dim;
    PrimeField f(g.p());
    LinearSystem sys(g.p(), gd * md, sparse_threshold);
    std::vector<SparseRows> rho;
    for (const auto& a : m.action)
        rho.push_back(sparse_rows(a));

    auto unknown = [md](std::size_t l, std::size_t k) { return l * md + k; };

    // D([b_i, b_j]) - b_i D(b_j) + b_j D(b_i) = 0
    for (std::size_t i = 0; i < gd; ++i)
        for (std::size_t j = i + 1; j < gd; ++j)
            for (std::size_t k = 0; k < md; ++k) {
                std::vector<std::pair<std::size_t, Residue>> eq;
                for (std::size_t l = 0; l < gd; ++l)
                    if (Residue c = g.structure_constant(i, j, l))
                        eq.emplace_back(unknown(l, k), c);
                for (auto [t, v] : rho[i][k])
                    eq.emplace_back(unknown(j, t), f.neg(v));
                for (auto [t, v] : rho[j][k])
                    eq.emplace_back(unknown(i, t), v);
                sys.add_equation_residues(std::move(eq));
            }

    if (restricted) {
        // D(b_i^[p]) - rho(b_i)^(p-1) D(b_i) = 0
        for (std::size_t i = 0; i < gd; ++i) {
            auto pw = sparse_rows(m.action[i].power(g.p() - 1));
            for (std::size_t k = 0; k < md; ++k) {
                std::vector<std::pair<std::size_t, Residue>> eq;
                for (std::size_t l = 0; l < gd; ++l)
                    if (Residue c = g.pmap()(l, i))
                        eq.emplace_back(unknown(l, k), c);
                for (auto [t, v] : pw[k])
                    eq.emplace_back(unknown(i, t), f.neg(v));
                sys.add_equation_residues(std::move(eq));
            }
        }
    }
    return sys;
}

DerivationSpace derivations(const RestrictedLieAlgebra& g, const RestrictedModule& m, bool restricted,
                            std::size_t sparse_threshold)
{
    auto ns = derivation_system(g, m, restricted, sparse_threshold).solve_nullspace();
    return DerivationSpace{g.dim(), m.dim, restricted, std::move(ns.basis)};
}

H1Report h1_restricted(const RestrictedLieAlgebra& g, const RestrictedModule& m, std::size_t sparse_threshold)
{
    auto start = std::chrono::steady_clock::now();
    auto axioms = check_module_axioms(m, g);
    if (!axioms.ok)
        throw ModuleRefused("module " + m.label + " refused: " + axioms.detail);

    H1Report rep;
    rep.context = {kind_name(g.kind()), g.kind().n, g.p(), 1, m.label, m.grading};
    rep.der = derivations(g, m, false, sparse_threshold).dim();

    auto sys = derivation_system(g, m, true, sparse_threshold);
    rep.rder = sys.solve_nullspace().basis.cols();
    auto inv = invariants(m);
    rep.inv = inv.dim();
    rep.inner = m.dim - rep.inv;

    // Inner derivations u -> (x -> x.u) for u running over a basis of M.
    FpMatrix stacked = m.stacked_action();
    for (std::size_t u = 0; u < m.dim; ++u)
        if (!sys.satisfied_by(stacked.column(u)))
            throw std::logic_error("inner derivation of " + m.label + " violates the restricted system");
    if (rep.rder < rep.inner)
        throw std::logic_error("restricted derivations smaller than inner derivations");
    rep.h1 = rep.rder - rep.inner;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::size_t restricted_condition_failures(const RestrictedLieAlgebra& g, const RestrictedModule& m,
                                          const DerivationSpace& space, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::size_t gd = g.dim(), md = m.dim;
    PrimeField f(g.p());
    std::size_t failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        FpVector x(gd);
        for (auto& c : x)
            c = random_residue(rng, g.p());
        FpVector xp = g.pth_power(x);
        FpMatrix rho(g.p(), md, md);
        for (std::size_t l = 0; l < gd; ++l)
            if (x[l])
                rho = rho + m.action[l].scaled(x[l]);
        for (std::size_t col = 0; col < space.dim(); ++col) {
            auto apply = [&](const FpVector& y) {
                FpVector out(md, 0);
                for (std::size_t l = 0; l < gd; ++l)
                    if (y[l])
                        for (std::size_t k = 0; k < md; ++k)
                            out[k] = f.add(out[k], f.mul(y[l], space.basis(l * md + k, col)));
                return out;
            };
            FpVector lhs = apply(xp);
            FpVector rhs = apply(x);
            for (Residue e = 1; e < g.p(); ++e)
                rhs = rho * rhs;
            if (lhs != rhs)
                ++failures;
        }
    }
    return failures;
}

InducedMapReport h1_induced_map(GroupKind group, Residue p, unsigned level, unsigned budget)
{
    InducedMapReport rep;
    rep.group = group;
    rep.p = p;
    rep.level = level;
    rep.budget = budget;
    auto g = group_lie_algebra(group, p);
    const std::size_t gd = g.dim();

    auto source = group_coordring_piece(group, p, level);
    auto axioms = check_module_axioms(source.module, g);
    if (!axioms.ok)
        throw ModuleRefused(source.module.label + ": " + axioms.detail);
    auto space = derivations(g, source.module, true);
    FpMatrix inner = column_space_basis(source.module.stacked_action());

    // Representatives: restricted derivations extending a basis of the inner ones.
    std::vector<FpVector> reps;
    FpMatrix span = inner;
    std::size_t span_rank = inner.cols();
    for (std::size_t c = 0; c < space.dim(); ++c) {
        auto col = space.basis.column(c);
        auto trial = FpMatrix::hstack(span, FpMatrix::from_columns(p, col.size(), {col}));
        auto rk = rank(trial);
        if (rk > span_rank) {
            span = trial;
            span_rank = rk;
            reps.push_back(col);
        }
    }
    rep.h1 = reps.size();
    rep.dies_at.assign(reps.size(), std::nullopt);

    const std::size_t sd = source.module.dim;
    for (unsigned d = level; d <= budget; ++d) {
        auto target = d == level ? source : group_coordring_piece(group, p, d);
        const std::size_t td = target.module.dim;
        FpMatrix t_inner = target.module.stacked_action();
        std::size_t base = rank(t_inner);
        std::vector<FpVector> pushed;
        for (const auto& r : reps) {
            FpVector v(gd * td, 0);
            for (std::size_t l = 0; l < gd; ++l)
                for (std::size_t k = 0; k < sd; ++k)
                    v[l * td + k] = r[l * sd + k]; // inclusion is [I; 0]
            pushed.push_back(std::move(v));
        }
        std::size_t image = 0;
        if (!pushed.empty()) {
            auto all = FpMatrix::hstack(t_inner, FpMatrix::from_columns(p, gd * td, pushed));
            image = rank(all) - base;
        }
        rep.surviving.push_back(image);
        for (std::size_t i = 0; i < pushed.size(); ++i) {
            if (rep.dies_at[i])
                continue;
            auto one = FpMatrix::hstack(t_inner, FpMatrix::from_columns(p, gd * td, {pushed[i]}));
            if (rank(one) == base)
                rep.dies_at[i] = d;
        }
        if (image == 0)
            break;
    }
    rep.all_die = !rep.surviving.empty() && rep.surviving.back() == 0;
    return rep;
}

} // namespace frobcoh
