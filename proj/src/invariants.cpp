#include "frobcoh/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace frobcoh {

InvariantBasis common_kernel(Residue p, std::size_t dim, const std::vector<FpMatrix>& ops)
{
    LinearSystem sys(p, dim);
    for (const auto& a : ops) {
        if (a.rows() != dim || a.cols() != dim)
            throw DimensionMismatch("operator does not act on the module");
        for (std::size_t r = 0; r < dim; ++r) {
            std::vector<std::pair<std::size_t, Residue>> terms;
            auto row = a.row(r);
            for (std::size_t c = 0; c < dim; ++c)
                if (row[c])
                    terms.emplace_back(c, row[c]);
            if (!terms.empty())
                sys.add_equation_residues(std::move(terms));
        }
    }
    auto ns = sys.solve_nullspace();
    return InvariantBasis{dim, ns.rank, std::move(ns.basis)};
}

InvariantBasis invariants(const RestrictedModule& m)
{
    return common_kernel(m.p, m.dim, m.action);
}

FpMatrix frobenius_power_subspace(const QuotientPiece& low, const QuotientPiece& high, std::uint64_t q)
{
    const auto& lb = low.ambient.basis;
    const auto& hb = high.ambient.basis;
    const Residue p = high.module.p;
    if (lb.degree() * q != hb.degree())
        return FpMatrix(p, high.module.dim, 0);
    std::vector<FpVector> cols;
    for (auto idx : low.standard) {
        Monomial m = lb[idx];
        for (auto& e : m)
            e = static_cast<Exponent>(e * q);
        cols.push_back(high.projection.column(hb.index_of(m)));
    }
    return FpMatrix::from_columns(p, high.module.dim, cols);
}

FpMatrix frobenius_power_subspace(const RestrictedLieAlgebra& g, Family family, unsigned d, std::uint64_t q)
{
    auto high = family_piece(g, family, d);
    if (q == 0 || d % q != 0)
        return FpMatrix(g.p(), high.module.dim, 0);
    auto low = family_piece(g, family, static_cast<unsigned>(d / q));
    return frobenius_power_subspace(low, high, q);
}

std::vector<DegreeCheck> lemma11_check(const RestrictedLieAlgebra& g, Family family, unsigned dmax)
{
    std::vector<QuotientPiece> pieces;
    std::vector<DegreeCheck> out;
    const Residue p = g.p();
    for (unsigned d = 0; d <= dmax; ++d) {
        pieces.push_back(family_piece(g, family, d));
        const auto& high = pieces.back();
        auto inv = invariants(high.module);
        FpMatrix frob = d % p == 0 ? frobenius_power_subspace(pieces[d / p], high, p)
                                   : FpMatrix(p, high.module.dim, 0);
        out.push_back({d, inv.dim(), rank(frob), same_subspace(inv.basis, frob)});
    }
    return out;
}

std::vector<DegreeCheck> restriction_surjectivity_check(const RestrictedLieAlgebra& g, unsigned dmax)
{
    std::vector<DegreeCheck> out;
    for (unsigned d = 0; d <= dmax; ++d) {
        auto n = nilcone_piece(g, d);
        auto source = invariants(n.ambient.module);
        auto target = invariants(n.module);
        FpMatrix image = n.projection * source.basis;
        out.push_back({d, rank(image), target.dim(), same_subspace(image, target.basis)});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

PolyMatrix generic_element(const RestrictedLieAlgebra& g)
{
    const std::size_t n = g.natural_dim(), m = g.dim();
    PolyMatrix x(n, std::vector<IntPoly>(n, IntPoly(m)));
    for (std::size_t k = 0; k < m; ++k) {
        auto var = IntPoly::variable(m, k);
        const auto& b = g.integral_realization()[k];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (b(r, c))
                    x[r][c] = x[r][c] + var.scaled(b(r, c));
    }
    return x;
}

PolyMatrix poly_product(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars)
{
    const std::size_t n = a.size();
    PolyMatrix out(n, std::vector<IntPoly>(n, IntPoly(nvars)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

// Leibniz expansion; the matrices here are at most 5 x 5.
IntPoly poly_det(const PolyMatrix& a, std::size_t nvars)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    IntPoly det = IntPoly::constant(nvars, n == 0 ? 1 : 0);
    if (n == 0)
        return det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        IntPoly term = IntPoly::constant(nvars, inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
            term = term * a[i][perm[i]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

IntPoly pfaffian(const PolyMatrix& a, std::vector<std::size_t> idx, std::size_t nvars)
{
    if (idx.empty())
        return IntPoly::constant(nvars, 1);
    IntPoly out(nvars);
    const std::size_t first = idx[0];
    for (std::size_t t = 1; t < idx.size(); ++t) {
        if (a[first][idx[t]].is_zero())
            continue;
        std::vector<std::size_t> rest;
        for (std::size_t u = 1; u < idx.size(); ++u)
            if (u != t)
                rest.push_back(idx[u]);
        auto term = a[first][idx[t]] * pfaffian(a, rest, nvars);
        out = out + (t % 2 == 1 ? term : term.scaled(-1));
    }
    return out;
}

bool is_full(const RestrictedLieAlgebra& g)
{
    return g.kind().part == Part::full;
}

// Swaps of diagonal positions generating the Weyl group action on the torus.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> weyl_generators(const RestrictedLieAlgebra& g)
{
    const std::size_t n = g.natural_dim();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> gens;
    if (g.kind().type == ClassicalType::gl || g.kind().type == ClassicalType::sl) {
        for (std::size_t k = 0; k + 1 < n; ++k)
            gens.push_back({{k, k + 1}});
        return gens;
    }
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k + 1 < half; ++k)
        gens.push_back({{k, k + 1}, {n - 1 - k, n - 2 - k}});
    if (g.kind().type == ClassicalType::sp)
        gens.push_back({{half - 1, half}});
    else if (n % 2 == 1)
        gens.push_back({{half - 1, half + 1}});
    else if (half >= 2)
        gens.push_back({{half - 2, half + 1}, {half - 1, half}});
    return gens;
}

Residue det_mod_p(FpMatrix a)
{
    PrimeField f(a.p());
    const std::size_t n = a.rows();
    Residue det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) {
                Residue t = a(c, j);
                a.set(c, j, a(piv, j));
                a.set(piv, j, t);
            }
            det = f.neg(det);
        }
        det = f.mul(det, a(c, c));
        Residue inv = f.inv(a(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            Residue factor = f.mul(a(r, c), inv);
            if (!factor)
                continue;
            for (std::size_t j = c; j < n; ++j)
                a.set(r, j, f.sub(a(r, j), f.mul(factor, a(c, j))));
        }
    }
    return det;
}

} // namespace

std::vector<IntPoly> characteristic_coefficients(const RestrictedLieAlgebra& g)
{
    const std::size_t n = g.natural_dim(), m = g.dim();
    auto x = generic_element(g);
    std::vector<IntPoly> coeffs;
    for (std::size_t size = 1; size <= n; ++size) {
        IntPoly e(m);
        std::vector<bool> choose(n, false);
        std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (choose[i])
                    idx.push_back(i);
            PolyMatrix sub(size, std::vector<IntPoly>(size, IntPoly(m)));
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t c = 0; c < size; ++c)
                    sub[r][c] = x[idx[r]][idx[c]];
            e = e + poly_det(sub, m);
        } while (std::prev_permutation(choose.begin(), choose.end()));
        coeffs.push_back(std::move(e));
    }
    return coeffs;
}

ChevalleyData chevalley_generators(const RestrictedLieAlgebra& g)
{
    ChevalleyData data;
    const auto& kind = g.kind();
    if (kind.part == Part::borel) {
        for (auto i : g.diagonal_indices())
            data.xi.push_back(IntPoly::variable(g.dim(), i));
        return data;
    }
    if (!is_full(g))
        throw std::invalid_argument("no invariant generators for " + kind_name(kind));

    const std::size_t n = g.natural_dim(), m = g.dim();
    auto e = characteristic_coefficients(g);
    auto take = [&](std::size_t i) {
        data.s.push_back(e[i - 1]);
        data.degrees.push_back(static_cast<unsigned>(i));
    };
    switch (kind.type) {
    case ClassicalType::gl:
        for (std::size_t i = 1; i <= n; ++i)
            take(i);
        break;
    case ClassicalType::sl:
        for (std::size_t i = 2; i <= n; ++i)
            take(i);
        break;
    case ClassicalType::sp:
        for (std::size_t i = 2; i <= n; i += 2)
            take(i);
        data.generating_set_assumed = true;
        break;
    case ClassicalType::so: {
        for (std::size_t i = 2; i < n; i += 2)
            take(i);
        if (n % 2 == 0) {
            // J x is antisymmetric; its Pfaffian replaces e_n = Pf^2.
            auto x = generic_element(g);
            PolyMatrix jx(n, std::vector<IntPoly>(n, IntPoly(m)));
            for (std::size_t r = 0; r < n; ++r)
                jx[r] = x[n - 1 - r];
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            data.s.push_back(pfaffian(jx, idx, m));
            data.degrees.push_back(static_cast<unsigned>(n / 2));
        }
        data.generating_set_assumed = true;
        break;
    }
    }

    if (kind.type == ClassicalType::gl && n <= 3) {
        auto x = generic_element(g);
        std::vector<IntPoly> traces;
        PolyMatrix power(n, std::vector<IntPoly>(n, IntPoly(m)));
        for (std::size_t i = 0; i < n; ++i)
            power[i][i] = IntPoly::constant(m, 1);
        for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
            IntPoly t(m);
            for (std::size_t i = 0; i < n; ++i)
                t = t + power[i][i];
            traces.push_back(std::move(t));
            power = poly_product(power, x, m);
        }
        PolyMatrix hankel(n, std::vector<IntPoly>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                hankel[i][j] = traces[i + j];
        data.frs = poly_det(hankel, m);
    }
    return data;
}

std::optional<std::string> verify_chevalley(const RestrictedLieAlgebra& g, const ChevalleyData& data)
{
    const Residue p = g.p();
    std::map<unsigned, PolyPiece> pieces;
    auto invariant = [&](const IntPoly& f) {
        auto deg = static_cast<unsigned>(std::max(f.degree(), 0));
        auto it = pieces.find(deg);
        if (it == pieces.end())
            it = pieces.emplace(deg, coordring_piece(g, deg)).first;
        auto v = it->second.to_vector(FpPoly::from_int(f, p));
        for (const auto& a : it->second.module.action)
            if (auto img = a * v; std::any_of(img.begin(), img.end(), [](Residue r) { return r != 0; }))
                return false;
        return true;
    };
    for (std::size_t i = 0; i < data.s.size(); ++i)
        if (!invariant(data.s[i]))
            return "s_" + std::to_string(i + 1) + " is not invariant";
    for (std::size_t i = 0; i < data.xi.size(); ++i)
        if (!invariant(data.xi[i]))
            return "xi_" + std::to_string(i + 1) + " is not invariant";
    if (data.frs && !invariant(*data.frs))
        return "f_rs is not invariant";

    if (data.s.empty())
        return std::nullopt;
    const std::size_t m = g.dim(), n = g.natural_dim();
    auto torus = g.diagonal_indices();
    std::vector<FpPoly> restrict_subs(m, FpPoly(p, m));
    for (auto t : torus)
        restrict_subs[t] = FpPoly::variable(p, m, t);
    for (const auto& swaps : weyl_generators(g)) {
        std::vector<FpPoly> subs(m, FpPoly(p, m));
        for (auto j : torus) {
            const auto& b = g.realization()[j];
            FpMatrix w(p, n, n);
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t target = i;
                for (auto [x, y] : swaps) {
                    if (i == x)
                        target = y;
                    else if (i == y)
                        target = x;
                }
                w.set(target, target, b(i, i));
            }
            auto c = g.coordinates(w);
            if (!c)
                return "Weyl generator leaves the torus";
            for (auto i : torus)
                if ((*c)[i])
                    subs[i] = subs[i] + FpPoly::variable(p, m, j).scaled((*c)[i]);
        }
        for (std::size_t i = 0; i < data.s.size(); ++i) {
            auto restricted = FpPoly::from_int(data.s[i], p).substitute(restrict_subs);
            if (!(restricted.substitute(subs) == restricted))
                return "restriction of s_" + std::to_string(i + 1) + " is not Weyl invariant";
        }
    }
    return std::nullopt;
}

Residue frs_value(const RestrictedLieAlgebra& g, const FpVector& x)
{
    const auto t = g.kind().type;
    if (g.kind().part != Part::full || (t != ClassicalType::gl && t != ClassicalType::sl))
        throw std::invalid_argument("f_rs is only provided for gl_n and sl_n");
    const Residue p = g.p();
    PrimeField f(p);
    const std::size_t n = g.natural_dim();
    auto xm = g.element_matrix(x);
    std::vector<Residue> traces;
    auto power = FpMatrix::identity(p, n);
    for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
        Residue tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr = f.add(tr, power(i, i));
        traces.push_back(tr);
        power = power * xm;
    }
    FpMatrix hankel(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            hankel.set(i, j, traces[i + j]);
    return det_mod_p(hankel);
}

} // namespace frobcoh
