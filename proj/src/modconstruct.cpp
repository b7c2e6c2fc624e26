#include "frobcoh/modconstruct.hpp"

#include "frobcoh/invariants.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace frobcoh {

FpMatrix RestrictedModule::stacked_action() const
{
    return FpMatrix::vstack(action.empty() ? std::vector<FpMatrix>{FpMatrix(p, 0, dim)} : action);
}

namespace {

std::vector<FpMatrix> reduce_all(const std::vector<IntMatrix>& ms, Residue p)
{
    std::vector<FpMatrix> out;
    out.reserve(ms.size());
    for (const auto& m : ms)
        out.push_back(m.reduce(p));
    return out;
}

// Calls add(row, col, multiplicity, entry) for every term of the derivation
// induced on S^d by a matrix acting on the variables.
template <class Matrix, class Add>
void for_each_sym_term(const MonomialBasis& basis, std::size_t nvars, const Matrix& a, Add add)
{
    for (std::size_t col = 0; col < basis.size(); ++col) {
        Monomial t = basis[col];
        for (std::size_t i = 0; i < nvars; ++i) {
            auto mult = basis[col][i];
            if (!mult)
                continue;
            --t[i];
            for (std::size_t k = 0; k < nvars; ++k) {
                auto v = a(k, i);
                if (!v)
                    continue;
                ++t[k];
                add(basis.index_of(t), col, mult, v);
                --t[k];
            }
            ++t[i];
        }
    }
}

} // namespace

RestrictedModule trivial_module(const RestrictedLieAlgebra& g, std::size_t dim)
{
    RestrictedModule m;
    m.p = g.p();
    m.dim = dim;
    m.g_dim = g.dim();
    m.label = dim == 1 ? "k" : "k^" + std::to_string(dim);
    m.action.assign(g.dim(), FpMatrix(g.p(), dim, dim));
    m.integral_lift = std::vector<IntMatrix>(g.dim(), IntMatrix(dim, dim));
    return m;
}

RestrictedModule natural_module(const RestrictedLieAlgebra& g)
{
    RestrictedModule m;
    m.p = g.p();
    m.dim = g.natural_dim();
    m.g_dim = g.dim();
    m.label = "V";
    m.action = g.realization();
    m.integral_lift = g.integral_realization();
    return m;
}

RestrictedModule adjoint_module(const RestrictedLieAlgebra& g)
{
    const std::size_t n = g.dim();
    RestrictedModule m;
    m.p = g.p();
    m.dim = n;
    m.g_dim = n;
    m.label = "ad";
    std::vector<IntMatrix> lift;
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix a(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                a.at(k, j) = g.integral_structure_constant(i, j, k);
        lift.push_back(a);
        m.action.push_back(g.ad_basis(i));
    }
    m.integral_lift = std::move(lift);
    return m;
}

RestrictedModule coadjoint_module(const RestrictedLieAlgebra& g)
{
    auto m = dual_module(adjoint_module(g));
    m.label = "ad*";
    return m;
}

RestrictedModule dual_module(const RestrictedModule& src)
{
    RestrictedModule m = src;
    m.label = src.label + "*";
    for (auto& a : m.action)
        a = a.transpose().scaled(src.p - 1);
    if (m.integral_lift)
        for (auto& a : *m.integral_lift)
            a = a.transpose().negated();
    return m;
}

RestrictedModule tensor_module(const RestrictedModule& a, const RestrictedModule& b)
{
    if (a.g_dim != b.g_dim || a.p != b.p)
        throw DimensionMismatch("tensor factors belong to different algebras");
    RestrictedModule m;
    m.p = a.p;
    m.dim = a.dim * b.dim;
    m.g_dim = a.g_dim;
    m.label = "(" + a.label + ")x(" + b.label + ")";
    auto ia = FpMatrix::identity(a.p, a.dim);
    auto ib = FpMatrix::identity(a.p, b.dim);
    for (std::size_t i = 0; i < a.g_dim; ++i)
        m.action.push_back(FpMatrix::kronecker(a.action[i], ib) + FpMatrix::kronecker(ia, b.action[i]));
    return m;
}

RestrictedModule direct_sum(const RestrictedModule& a, const RestrictedModule& b)
{
    if (a.g_dim != b.g_dim || a.p != b.p)
        throw DimensionMismatch("summands belong to different algebras");
    RestrictedModule m;
    m.p = a.p;
    m.dim = a.dim + b.dim;
    m.g_dim = a.g_dim;
    m.label = a.label + "+" + b.label;
    for (std::size_t i = 0; i < a.g_dim; ++i) {
        FpMatrix s(a.p, m.dim, m.dim);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c)
                s.set(r, c, a.action[i](r, c));
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c)
                s.set(a.dim + r, a.dim + c, b.action[i](r, c));
        m.action.push_back(std::move(s));
    }
    if (a.integral_lift && b.integral_lift) {
        std::vector<IntMatrix> lift;
        for (std::size_t i = 0; i < a.g_dim; ++i) {
            IntMatrix s(m.dim, m.dim);
            for (std::size_t r = 0; r < a.dim; ++r)
                for (std::size_t c = 0; c < a.dim; ++c)
                    s.at(r, c) = (*a.integral_lift)[i](r, c);
            for (std::size_t r = 0; r < b.dim; ++r)
                for (std::size_t c = 0; c < b.dim; ++c)
                    s.at(a.dim + r, a.dim + c) = (*b.integral_lift)[i](r, c);
            lift.push_back(std::move(s));
        }
        m.integral_lift = std::move(lift);
    }
    return m;
}

RestrictedModule sym_power(const RestrictedModule& src, unsigned d)
{
    MonomialBasis basis(src.dim, d);
    PrimeField f(src.p);
    RestrictedModule m;
    m.p = src.p;
    m.dim = basis.size();
    m.g_dim = src.g_dim;
    m.grading = static_cast<int>(d);
    m.label = "S^" + std::to_string(d) + "(" + src.label + ")";
    for (const auto& a : src.action) {
        FpMatrix out(src.p, m.dim, m.dim);
        for_each_sym_term(basis, src.dim, a, [&](std::size_t r, std::size_t c, unsigned mult, Residue v) {
            out.add_to(r, c, f.mul(f.reduce(mult), v));
        });
        m.action.push_back(std::move(out));
    }
    if (src.integral_lift) {
        std::vector<IntMatrix> lift;
        for (const auto& a : *src.integral_lift) {
            IntMatrix out(m.dim, m.dim);
            for_each_sym_term(basis, src.dim, a, [&](std::size_t r, std::size_t c, unsigned mult, std::int64_t v) {
                out.at(r, c) += static_cast<std::int64_t>(mult) * v;
            });
            lift.push_back(std::move(out));
        }
        m.integral_lift = std::move(lift);
    }
    return m;
}

RestrictedModule sym_power_natural(const RestrictedLieAlgebra& g, unsigned i)
{
    auto m = sym_power(natural_module(g), i);
    m.label = "S^" + std::to_string(i) + "V";
    return m;
}

RestrictedModule permuted_module(const RestrictedModule& src, std::span<const std::size_t> perm)
{
    if (perm.size() != src.g_dim)
        throw DimensionMismatch("permutation length differs from the algebra dimension");
    RestrictedModule m = src;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        m.action[i] = src.action.at(perm[i]);
        if (m.integral_lift)
            (*m.integral_lift)[i] = src.integral_lift->at(perm[i]);
    }
    return m;
}

PolyPiece coordring_piece(const RestrictedLieAlgebra& g, unsigned d)
{
    PolyPiece piece{sym_power(coadjoint_module(g), d), MonomialBasis(g.dim(), d)};
    piece.module.label = "k[" + kind_name(g.kind()) + "]_" + std::to_string(d);
    return piece;
}

FpVector multiply(const PolyPiece& a, const FpVector& x, const PolyPiece& b, const FpVector& y,
                  const PolyPiece& target)
{
    if (target.basis.degree() != a.basis.degree() + b.basis.degree())
        throw DimensionMismatch("product lands in the wrong degree");
    return target.to_vector(a.to_poly(x) * b.to_poly(y));
}

// ---------------------------------------------------------------------------
// Quotients by homogeneous ideals.

namespace {

// Integer normal forms for the two ideal shapes where one is available:
// a single generator whose leading monomial has coefficient +-1, or a set of
// generators that are all variables.
class IntegerRewriter {
public:
    static std::optional<IntegerRewriter> make(const std::vector<IntPoly>& gens)
    {
        IntegerRewriter r;
        bool all_variables = !gens.empty();
        for (const auto& s : gens) {
            if (s.terms().size() != 1 || s.degree() != 1 || std::abs(s.terms().begin()->second) != 1) {
                all_variables = false;
                break;
            }
            const auto& mono = s.terms().begin()->first;
            r.killed_.push_back(static_cast<std::size_t>(std::find(mono.begin(), mono.end(), 1) - mono.begin()));
        }
        if (all_variables)
            return r;
        r.killed_.clear();
        if (gens.size() != 1 || gens[0].is_zero())
            return std::nullopt;
        // Homogeneous, so the deg-lex leading term is the lexicographically largest.
        auto lead = *gens[0].terms().rbegin();
        if (std::abs(lead.second) != 1)
            return std::nullopt;
        r.lead_ = lead.first;
        r.tail_ = gens[0].scaled(-lead.second); // lead -> lead - s*sign
        r.tail_.add_term(lead.first, 1);
        return r;
    }

    IntPoly normal_form(IntPoly f) const
    {
        if (!killed_.empty()) {
            IntPoly out(f.nvars());
            for (const auto& [m, c] : f.terms())
                if (std::none_of(killed_.begin(), killed_.end(), [&](std::size_t v) { return m[v] > 0; }))
                    out.add_term(m, c);
            return out;
        }
        for (;;) {
            auto it = std::find_if(f.terms().rbegin(), f.terms().rend(),
                                   [&](const auto& t) { return monomial_divides(lead_, t.first); });
            if (it == f.terms().rend())
                return f;
            Monomial rest = it->first;
            for (std::size_t i = 0; i < rest.size(); ++i)
                rest[i] = static_cast<Exponent>(rest[i] - lead_[i]);
            std::int64_t c = it->second;
            IntPoly mono(f.nvars());
            mono.add_term(rest, c);
            IntPoly lead_term(f.nvars());
            lead_term.add_term(it->first, c);
            f = f - lead_term + mono * tail_;
        }
    }

private:
    std::vector<std::size_t> killed_;
    Monomial lead_;
    IntPoly tail_;
};

IntPoly int_poly_from_column(const MonomialBasis& basis, const IntMatrix& m, std::size_t col)
{
    IntPoly f(basis.nvars());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, col))
            f.add_term(basis[r], m(r, col));
    return f;
}

} // namespace

bool QuotientPiece::ideal_stable() const
{
    if (ideal_basis.cols() == 0)
        return true;
    for (const auto& a : ambient.module.action)
        if (!(projection * (a * ideal_basis)).is_zero())
            return false;
    return true;
}

QuotientPiece quotient_piece(const RestrictedLieAlgebra& g, unsigned d, const std::vector<IntPoly>& generators,
                             const std::string& label)
{
    const Residue p = g.p();
    PrimeField f(p);
    QuotientPiece q{coordring_piece(g, d), {}, {}, {}, {}, {}};
    const auto& basis = q.ambient.basis;
    const std::size_t n = basis.size();

    std::vector<FpVector> rows;
    for (const auto& s : generators) {
        int e = s.degree();
        if (e < 0 || static_cast<unsigned>(e) > d)
            continue;
        if (!s.is_homogeneous())
            throw std::invalid_argument("ideal generators must be homogeneous");
        FpPoly sp = FpPoly::from_int(s, p);
        MonomialBasis shifts(g.dim(), d - static_cast<unsigned>(e));
        for (const auto& mu : shifts.monomials()) {
            FpPoly term(p, g.dim());
            term.add_term(mu, 1);
            rows.push_back((sp * term).to_vector(basis));
        }
    }
    FpMatrix gens(p, rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            gens.set(r, c, rows[r][c]);
    auto ech = row_echelon(gens);
    const std::size_t rk = ech.pivots.size();

    std::vector<int> pivot_row(n, -1);
    for (std::size_t r = 0; r < rk; ++r)
        pivot_row[ech.pivots[r]] = static_cast<int>(r);
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row[c] < 0)
            q.standard.push_back(c);
    const std::size_t qd = q.standard.size();

    q.ideal_basis = FpMatrix(p, n, rk);
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < n; ++c)
            q.ideal_basis.set(c, r, ech.reduced(r, c));
    q.projection = FpMatrix(p, qd, n);
    q.section = FpMatrix(p, n, qd);
    for (std::size_t t = 0; t < qd; ++t) {
        q.projection.set(t, q.standard[t], 1);
        q.section.set(q.standard[t], t, 1);
        for (std::size_t c = 0; c < n; ++c)
            if (pivot_row[c] >= 0)
                q.projection.set(t, c, f.neg(ech.reduced(static_cast<std::size_t>(pivot_row[c]), q.standard[t])));
    }

    auto& m = q.module;
    m.p = p;
    m.dim = qd;
    m.g_dim = g.dim();
    m.grading = static_cast<int>(d);
    m.label = label;
    for (const auto& a : q.ambient.module.action)
        m.action.push_back(q.projection * a * q.section);

    if (generators.empty()) {
        m.integral_lift = q.ambient.module.integral_lift;
    } else if (auto rw = IntegerRewriter::make(generators); rw && q.ambient.module.integral_lift) {
        std::unordered_map<Monomial, std::size_t, MonomialHash> qindex;
        for (std::size_t t = 0; t < qd; ++t)
            qindex.emplace(basis[q.standard[t]], t);
        std::vector<IntMatrix> lift;
        bool ok = true;
        for (const auto& a : *q.ambient.module.integral_lift) {
            IntMatrix out(qd, qd);
            for (std::size_t t = 0; t < qd && ok; ++t) {
                auto nf = rw->normal_form(int_poly_from_column(basis, a, q.standard[t]));
                for (const auto& [mono, c] : nf.terms()) {
                    auto it = qindex.find(mono);
                    if (it == qindex.end()) {
                        ok = false;
                        break;
                    }
                    out.at(it->second, t) = c;
                }
            }
            lift.push_back(std::move(out));
        }
        if (ok && reduce_all(lift, p) == m.action)
            m.integral_lift = std::move(lift);
    }
    return q;
}

QuotientPiece nilcone_piece(const RestrictedLieAlgebra& g, unsigned d)
{
    if (g.kind().part != Part::full)
        throw HypothesisGate("the nilpotent cone is only built for full algebras");
    auto hyp = check_hypotheses(g);
    if (!hyp.overall)
        throw HypothesisGate("k[N] refused for " + kind_name(g.kind()) + std::to_string(g.kind().n) + " at p=" +
                             std::to_string(g.p()) + ": " + hyp.failure_reason());
    return quotient_piece(g, d, chevalley_generators(g).s, "k[N]_" + std::to_string(d));
}

QuotientPiece u_piece(const RestrictedLieAlgebra& b, unsigned d)
{
    const auto& kind = b.kind();
    if (kind.part != Part::borel || (kind.type != ClassicalType::gl && kind.type != ClassicalType::sl))
        throw HypothesisGate("k[u] is only built for Borel algebras of gl_n and sl_n");
    auto hyp = check_hypotheses(b);
    if (!hyp.overall)
        throw HypothesisGate("k[u] refused for " + kind_name(kind) + std::to_string(kind.n) + " at p=" +
                             std::to_string(b.p()) + ": " + hyp.failure_reason());
    return quotient_piece(b, d, chevalley_generators(b).xi, "k[u]_" + std::to_string(d));
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::coordring:
        return "coordring";
    case Family::nilcone:
        return "nilcone";
    case Family::u:
        return "u";
    }
    return "?";
}

QuotientPiece family_piece(const RestrictedLieAlgebra& g, Family f, unsigned d)
{
    switch (f) {
    case Family::coordring:
        return quotient_piece(g, d, {}, "k[g]_" + std::to_string(d));
    case Family::nilcone:
        return nilcone_piece(g, d);
    case Family::u:
        return u_piece(g, d);
    }
    throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Group coordinate rings.

namespace {

// Laurent monomials a^m c^j of k[B].
using Laurent = std::map<std::pair<int, int>, std::int64_t>;

void laurent_add(Laurent& f, std::pair<int, int> key, std::int64_t c)
{
    if (!c)
        return;
    auto& v = f[key];
    v += c;
    if (!v)
        f.erase(key);
}

Laurent laurent_mul(const Laurent& x, const Laurent& y)
{
    Laurent out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y)
            laurent_add(out, {kx.first + ky.first, kx.second + ky.second}, cx * cy);
    return out;
}

// ad -> bc + 1 in k[a,b,c,d] (variables 0..3).
IntPoly sl2_normal_form(IntPoly f)
{
    for (;;) {
        auto it = std::find_if(f.terms().begin(), f.terms().end(),
                               [](const auto& t) { return t.first[0] > 0 && t.first[3] > 0; });
        if (it == f.terms().end())
            return f;
        Monomial m = it->first;
        std::int64_t c = it->second;
        IntPoly old(4);
        old.add_term(m, c);
        --m[0];
        --m[3];
        IntPoly repl(4);
        repl.add_term(m, c);
        ++m[1];
        ++m[2];
        repl.add_term(m, c);
        f = f - old + repl;
    }
}

std::string sl2_monomial_label(const Monomial& m)
{
    static const char names[] = {'a', 'b', 'c', 'd'};
    std::string s;
    for (std::size_t v = 0; v < 4; ++v) {
        if (!m[v])
            continue;
        s += names[v];
        if (m[v] > 1)
            s += "^" + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

GroupPiece sl2_piece(Residue p, unsigned level)
{
    auto g = group_lie_algebra(GroupKind::sl2, p);
    GroupPiece piece{GroupKind::sl2, level, {}, {}};
    std::vector<Monomial> monos;
    for (unsigned t = 0; t <= level; ++t) {
        MonomialBasis layer(4, t);
        for (const auto& m : layer.monomials())
            if (m[0] == 0 || m[3] == 0)
                monos.push_back(m);
    }
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        index.emplace(monos[i], i);
        piece.labels.push_back(sl2_monomial_label(monos[i]));
    }
    const std::size_t n = monos.size();

    auto& mod = piece.module;
    mod.p = p;
    mod.dim = n;
    mod.g_dim = g.dim();
    mod.label = "k[SL2]_<=" + std::to_string(level);
    std::vector<IntMatrix> lift;
    for (const auto& x : g.integral_realization()) {
        // D(A) = AX - XA on the generator matrix A = [[a, b], [c, d]].
        std::vector<IntPoly> dgen(4, IntPoly(4));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    dgen[2 * i + j] = dgen[2 * i + j] + IntPoly::variable(4, 2 * i + k).scaled(x(k, j));
                    dgen[2 * i + j] = dgen[2 * i + j] - IntPoly::variable(4, 2 * k + j).scaled(x(i, k));
                }
        IntMatrix a(n, n);
        for (std::size_t col = 0; col < n; ++col) {
            IntPoly image(4);
            for (std::size_t v = 0; v < 4; ++v) {
                if (!monos[col][v])
                    continue;
                Monomial rest = monos[col];
                --rest[v];
                IntPoly r(4);
                r.add_term(rest, monos[col][v]);
                image = image + r * dgen[v];
            }
            auto nf = sl2_normal_form(image);
            for (const auto& [m, c] : nf.terms())
                a.at(index.at(m), col) = c;
        }
        lift.push_back(std::move(a));
    }
    mod.action = reduce_all(lift, p);
    mod.integral_lift = std::move(lift);
    return piece;
}

GroupPiece borel_piece(Residue p, unsigned level)
{
    auto g = group_lie_algebra(GroupKind::borel_sl2, p);
    GroupPiece piece{GroupKind::borel_sl2, level, {}, {}};
    std::vector<std::pair<int, int>> monos;
    for (int l = 0; l <= static_cast<int>(level); ++l)
        for (int j = 0; j <= l; ++j) {
            monos.emplace_back(l - j, j);
            if (l - j != 0)
                monos.emplace_back(j - l, j);
        }
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        index.emplace(monos[i], i);
        auto [m, j] = monos[i];
        std::string s;
        if (m)
            s += m == 1 ? "a" : "a^" + std::to_string(m);
        if (j)
            s += j == 1 ? "c" : "c^" + std::to_string(j);
        piece.labels.push_back(s.empty() ? "1" : s);
    }
    const std::size_t n = monos.size();

    auto& mod = piece.module;
    mod.p = p;
    mod.dim = n;
    mod.g_dim = g.dim();
    mod.label = "k[B]_<=" + std::to_string(level);
    std::vector<IntMatrix> lift;
    // A = [[a, 0], [c, a^-1]]
    const Laurent entries[2][2] = {{Laurent{{{1, 0}, 1}}, Laurent{}}, {Laurent{{{0, 1}, 1}}, Laurent{{{-1, 0}, 1}}}};
    for (const auto& x : g.integral_realization()) {
        Laurent da, dc; // D(a) from entry (0,0), D(c) from entry (1,0)
        for (std::size_t k = 0; k < 2; ++k) {
            for (const auto& [key, c] : entries[0][k])
                laurent_add(da, key, c * x(k, 0));
            for (const auto& [key, c] : entries[k][0])
                laurent_add(da, key, -c * x(0, k));
            for (const auto& [key, c] : entries[1][k])
                laurent_add(dc, key, c * x(k, 0));
            for (const auto& [key, c] : entries[k][0])
                laurent_add(dc, key, -c * x(1, k));
        }
        IntMatrix a(n, n);
        for (std::size_t col = 0; col < n; ++col) {
            auto [m, j] = monos[col];
            Laurent image;
            if (m)
                for (const auto& [key, c] : laurent_mul(Laurent{{{m - 1, j}, m}}, da))
                    laurent_add(image, key, c);
            if (j)
                for (const auto& [key, c] : laurent_mul(Laurent{{{m, j - 1}, j}}, dc))
                    laurent_add(image, key, c);
            for (const auto& [key, c] : image)
                a.at(index.at(key), col) = c;
        }
        lift.push_back(std::move(a));
    }
    mod.action = reduce_all(lift, p);
    mod.integral_lift = std::move(lift);
    return piece;
}

} // namespace

RestrictedLieAlgebra group_lie_algebra(GroupKind group, Residue p)
{
    AlgebraKind k{ClassicalType::sl, group == GroupKind::sl2 ? Part::full : Part::borel, 2};
    return construct(k, p);
}

GroupPiece group_coordring_piece(GroupKind group, Residue p, unsigned d)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
    if (group == GroupKind::sl2) {
        if (p == 2)
            throw UnsupportedCharacteristic("k[SL_2] pieces need p odd");
        return sl2_piece(p, d);
    }
    return borel_piece(p, d);
}

FpMatrix group_inclusion(const GroupPiece& from, const GroupPiece& to)
{
    if (from.group != to.group || from.level > to.level || from.module.p != to.module.p)
        throw DimensionMismatch("no inclusion between these filtration pieces");
    FpMatrix inc(to.module.p, to.module.dim, from.module.dim);
    for (std::size_t i = 0; i < from.module.dim; ++i)
        inc.set(i, i, 1);
    return inc;
}

// ---------------------------------------------------------------------------

ModuleCheck check_module_axioms(const RestrictedModule& m, const RestrictedLieAlgebra& g)
{
    ModuleCheck out;
    if (m.p != g.p() || m.g_dim != g.dim() || m.action.size() != g.dim()) {
        out.ok = false;
        out.detail = "module does not match the algebra";
        return out;
    }
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim) {
            out.ok = false;
            out.detail = "action matrix has the wrong size";
            return out;
        }
    auto combo = [&](auto coeff) {
        FpMatrix s(m.p, m.dim, m.dim);
        for (std::size_t k = 0; k < g.dim(); ++k)
            if (Residue c = coeff(k))
                s = s + m.action[k].scaled(c);
        return s;
    };
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            auto lhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
            auto rhs = combo([&](std::size_t k) { return g.structure_constant(i, j, k); });
            if (!(lhs == rhs)) {
                out.ok = false;
                out.witness = std::make_pair(i, j);
                out.detail = "bracket compatibility fails for (" + g.labels()[i] + ", " + g.labels()[j] + ")";
                return out;
            }
        }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        auto rhs = combo([&](std::size_t k) { return g.pmap()(k, i); });
        if (!(m.action[i].power(g.p()) == rhs)) {
            out.ok = false;
            out.witness = std::make_pair(i, i);
            out.detail = "restrictedness fails for " + g.labels()[i];
            return out;
        }
    }
    return out;
}

HilbertComparison hilbert_identity(const RestrictedLieAlgebra& g, unsigned dmax)
{
    HilbertComparison h;
    auto data = chevalley_generators(g);
    const std::size_t m = g.dim();
    for (unsigned d = 0; d <= dmax; ++d) {
        h.coordring.push_back(static_cast<std::size_t>(binomial(d + m - 1, m - 1)));
        h.nilcone.push_back(nilcone_piece(g, d).module.dim);
    }
    h.predicted = h.nilcone;
    for (auto e : data.degrees)
        for (std::size_t d = e; d <= dmax; ++d)
            h.predicted[d] += h.predicted[d - e]; // multiply by 1/(1 - t^e)
    h.match = h.predicted == h.coordring;
    return h;
}

} // namespace frobcoh
