#include "frobcoh/dist.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

namespace frobcoh {

using boost::multiprecision::cpp_int;

FpVector LeftMult::apply(const FpVector& v, Residue p) const
{
    PrimeField f(p);
    FpVector out(v.size(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!v[j])
            continue;
        for (auto [r, val] : cols[j])
            out[r] = f.add(out[r], f.mul(v[j], val));
    }
    return out;
}

FpMatrix LeftMult::to_dense(Residue p) const
{
    FpMatrix m(p, cols.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto [r, val] : cols[j])
            m.add_to(r, j, val);
    return m;
}

FpVector AugmentedAlgebra::left_multiply(std::size_t i, const FpVector& v) const
{
    FpVector out = v;
    const auto& w = words.at(i);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = atoms[*it].apply(out, p);
    return out;
}

FpVector AugmentedAlgebra::basis_vector(std::size_t i) const
{
    FpVector v(dim, 0);
    v.at(i) = 1;
    return v;
}

namespace {

Residue dot(const FpVector& a, const FpVector& b, const PrimeField& f)
{
    Residue s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

// Incremental row-reduced span used for the generation check.
class SpanBuilder {
public:
    SpanBuilder(Residue p, std::size_t n) : f_(p), n_(n) {}

    // Adds v if it is new; returns whether the span grew.
    bool insert(FpVector v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Residue c = v[pivots_[r]];
            if (!c)
                continue;
            for (std::size_t k = pivots_[r]; k < n_; ++k)
                if (rows_[r][k])
                    v[k] = f_.sub(v[k], f_.mul(c, rows_[r][k]));
        }
        std::size_t piv = 0;
        while (piv < n_ && v[piv] == 0)
            ++piv;
        if (piv == n_)
            return false;
        Residue inv = f_.inv(v[piv]);
        for (auto& x : v)
            x = f_.mul(x, inv);
        // Keep earlier rows reduced at the new pivot.
        for (auto& row : rows_) {
            Residue c = row[piv];
            if (!c)
                continue;
            for (std::size_t k = piv; k < n_; ++k)
                if (v[k])
                    row[k] = f_.sub(row[k], f_.mul(c, v[k]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }
    std::size_t size() const { return rows_.size(); }

private:
    PrimeField f_;
    std::size_t n_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace

std::optional<std::string> check_algebra(const AugmentedAlgebra& a, std::size_t samples, std::uint64_t seed)
{
    PrimeField f(a.p);
    if (a.counit.size() != a.dim || a.words.size() != a.dim || a.labels.size() != a.dim)
        return std::string("algebra tables have inconsistent sizes");
    if (a.counit[a.unit] != 1)
        return std::string("counit of the unit is not 1");
    for (std::size_t t = 0; t < a.atoms.size(); ++t) {
        if (a.atoms[t].cols.size() != a.dim)
            return "atom " + a.atom_labels[t] + " has the wrong size";
        if (a.atoms[t].apply(a.basis_vector(a.unit), a.p) != a.basis_vector(a.atom_basis_index[t]))
            return "atom " + a.atom_labels[t] + " does not match its basis element";
    }
    for (std::size_t j = 0; j < a.dim; ++j)
        if (a.left_multiply(j, a.basis_vector(a.unit)) != a.basis_vector(j))
            return "word of " + a.labels[j] + " does not reproduce it";
    for (std::size_t t = 0; t < a.atoms.size(); ++t) {
        Residue et = a.counit[a.atom_basis_index[t]];
        for (std::size_t b = 0; b < a.dim; ++b) {
            FpVector prod = a.atoms[t].apply(a.basis_vector(b), a.p);
            if (dot(a.counit, prod, f) != f.mul(et, a.counit[b]))
                return "counit is not multiplicative on (" + a.atom_labels[t] + ", " + a.labels[b] + ")";
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t i = rng() % a.dim, j = rng() % a.dim, k = rng() % a.dim;
        FpVector lhs = a.left_multiply(i, a.left_multiply(j, a.basis_vector(k)));
        FpVector ij = a.left_multiply(i, a.basis_vector(j));
        FpVector rhs(a.dim, 0);
        for (std::size_t l = 0; l < a.dim; ++l) {
            if (!ij[l])
                continue;
            FpVector t = a.left_multiply(l, a.basis_vector(k));
            for (std::size_t c = 0; c < a.dim; ++c)
                rhs[c] = f.add(rhs[c], f.mul(ij[l], t[c]));
        }
        if (lhs != rhs)
            return "associativity fails on (" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")";
    }
    SpanBuilder span(a.p, a.dim);
    std::vector<FpVector> queue{a.basis_vector(a.unit)};
    span.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (auto g : a.generators) {
            FpVector v = a.atoms[g].apply(queue[head], a.p);
            if (span.insert(v))
                queue.push_back(std::move(v));
        }
    if (span.size() != a.dim)
        return "generators span only " + std::to_string(span.size()) + " of " + std::to_string(a.dim) + " dimensions";
    return std::nullopt;
}

AlgebraModule module_from_atoms(const AugmentedAlgebra& a, std::vector<FpMatrix> atom_action, std::string label)
{
    if (atom_action.size() != a.atoms.size())
        throw DimensionMismatch("one matrix per atom is required");
    AlgebraModule m;
    m.label = std::move(label);
    m.dim = atom_action.empty() ? 0 : atom_action.front().rows();
    m.atom_action = std::move(atom_action);
    for (std::size_t j = 0; j < a.dim; ++j) {
        FpMatrix acc = FpMatrix::identity(a.p, m.dim);
        for (auto t : a.words[j])
            acc = acc * m.atom_action[t];
        m.basis_action.push_back(std::move(acc));
    }
    return m;
}

std::optional<std::string> check_algebra_module(const AugmentedAlgebra& a, const AlgebraModule& m)
{
    for (auto g : a.generators)
        for (std::size_t b = 0; b < a.dim; ++b) {
            FpMatrix lhs(a.p, m.dim, m.dim);
            for (auto [r, val] : a.atoms[g].cols[b])
                lhs = lhs + m.basis_action[r].scaled(val);
            if (!(lhs == m.atom_action[g] * m.basis_action[b]))
                return "rho(" + a.atom_labels[g] + " * " + a.labels[b] + ") != rho(" + a.atom_labels[g] + ") rho(" +
                       a.labels[b] + ")";
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// u(g)

namespace {

using SparseVec = std::map<std::size_t, Residue>;

class EnvBuilder {
public:
    EnvBuilder(const RestrictedLieAlgebra& g) : g_(g), f_(g.p()), m_(g.dim())
    {
        std::size_t w = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            weight_.push_back(w);
            w *= g.p();
        }
        dim_ = w;
    }

    std::size_t dim() const { return dim_; }
    Residue exponent(std::size_t idx, std::size_t i) const { return static_cast<Residue>((idx / weight_[i]) % g_.p()); }
    std::size_t weight(std::size_t i) const { return weight_[i]; }

    // b_i * (PBW monomial idx), straightened.
    SparseVec mult(std::size_t i, std::size_t idx)
    {
        std::uint64_t key = static_cast<std::uint64_t>(i) * dim_ + idx;
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::size_t j = 0;
        while (j < m_ && exponent(idx, j) == 0)
            ++j;
        SparseVec out;
        if (i < j || (i == j && exponent(idx, i) + 1 < g_.p())) {
            out[idx + weight_[i]] = 1;
        } else if (i == j) {
            // b_i^p = b_i^[p]
            std::size_t rest = idx - static_cast<std::size_t>(exponent(idx, i)) * weight_[i];
            for (std::size_t k = 0; k < m_; ++k)
                if (Residue c = g_.pmap()(k, i))
                    accumulate(out, mult(k, rest), c);
        } else {
            // b_i b_j = b_j b_i + [b_i, b_j]
            std::size_t rest = idx - weight_[j];
            accumulate(out, mult_vec(j, mult(i, rest)), 1);
            for (std::size_t k = 0; k < m_; ++k)
                if (Residue c = g_.structure_constant(i, j, k))
                    accumulate(out, mult(k, rest), c);
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    SparseVec mult_vec(std::size_t i, const SparseVec& v)
    {
        SparseVec out;
        for (auto [idx, c] : v)
            accumulate(out, mult(i, idx), c);
        return out;
    }

    void accumulate(SparseVec& out, const SparseVec& v, Residue c)
    {
        for (auto [idx, val] : v) {
            Residue& slot = out[idx];
            slot = f_.add(slot, f_.mul(c, val));
            if (!slot)
                out.erase(idx);
        }
    }

    const RestrictedLieAlgebra& g_;
    PrimeField f_;
    std::size_t m_;
    std::size_t dim_ = 1;
    std::vector<std::size_t> weight_;
    std::unordered_map<std::uint64_t, SparseVec> memo_;
};

} // namespace

AugmentedAlgebra restricted_env(const RestrictedLieAlgebra& g, std::size_t dim_cap)
{
    double estimate = std::pow(static_cast<double>(g.p()), static_cast<double>(g.dim()));
    if (estimate > static_cast<double>(dim_cap))
        throw std::length_error("u(" + kind_name(g.kind()) + ") has dimension above the cap " + std::to_string(dim_cap));
    EnvBuilder env(g);
    AugmentedAlgebra a;
    a.p = g.p();
    a.r = 1;
    a.dim = env.dim();
    a.label = "u(" + kind_name(g.kind()) + std::to_string(g.kind().n) + ")";
    a.unit = 0;
    a.counit.assign(a.dim, 0);
    a.counit[0] = 1;
    for (std::size_t idx = 0; idx < a.dim; ++idx) {
        std::string label;
        std::vector<std::size_t> word;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            Residue e = env.exponent(idx, i);
            for (Residue t = 0; t < e; ++t)
                word.push_back(i);
            if (e) {
                label += (label.empty() ? "" : " ") + g.labels()[i];
                if (e > 1)
                    label += "^" + std::to_string(e);
            }
        }
        a.labels.push_back(label.empty() ? "1" : label);
        a.words.push_back(std::move(word));
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        LeftMult lm;
        lm.cols.resize(a.dim);
        for (std::size_t idx = 0; idx < a.dim; ++idx)
            for (auto [row, c] : env.mult(i, idx))
                lm.cols[idx].emplace_back(static_cast<std::uint32_t>(row), c);
        a.atoms.push_back(std::move(lm));
        a.atom_labels.push_back(g.labels()[i]);
        a.atom_basis_index.push_back(env.weight(i));
        a.generators.push_back(i);
    }
    return a;
}

AlgebraModule env_module(const AugmentedAlgebra& u, const RestrictedModule& m)
{
    return module_from_atoms(u, m.action, m.label);
}

// ---------------------------------------------------------------------------
// Dist((SL_2)_r)

namespace {

cpp_int gen_binomial(const cpp_int& x, unsigned k)
{
    cpp_int num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    return num / den;
}

Residue reduce_big(const cpp_int& v, Residue p)
{
    cpp_int r = v % p;
    if (r < 0)
        r += p;
    return static_cast<Residue>(r);
}

// binom(h + s1, j) * binom(h + s2, b) = sum_t c_t binom(h, t), by forward
// differences of the values at h = 0..j+b.
class BinomialExpander {
public:
    const std::vector<cpp_int>& expand(int s1, unsigned j, int s2, unsigned b)
    {
        auto key = std::make_tuple(s1, j, s2, b);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        const unsigned deg = j + b;
        std::vector<cpp_int> vals(deg + 1);
        for (unsigned x = 0; x <= deg; ++x)
            vals[x] = gen_binomial(cpp_int(static_cast<int>(x) + s1), j) * gen_binomial(cpp_int(static_cast<int>(x) + s2), b);
        std::vector<cpp_int> coeffs;
        for (unsigned t = 0; t <= deg; ++t) {
            coeffs.push_back(vals[0]);
            for (unsigned x = 0; x + 1 < vals.size(); ++x)
                vals[x] = vals[x + 1] - vals[x];
            vals.pop_back();
        }
        return cache_.emplace(key, std::move(coeffs)).first->second;
    }

private:
    std::map<std::tuple<int, unsigned, int, unsigned>, std::vector<cpp_int>> cache_;
};

struct DistIndex {
    std::size_t q;
    bool full;
    std::size_t operator()(std::size_t a, std::size_t b, std::size_t c) const
    {
        return full ? (a * q + b) * q + c : a * q + b;
    }
};

// Accumulates into a column, asserting that terms outside the truncation vanish mod p.
class ColumnBuilder {
public:
    ColumnBuilder(Residue p, std::size_t q) : f_(p), q_(q) {}

    void add(std::size_t a, std::size_t b, std::size_t c, const cpp_int& coeff, const DistIndex& idx)
    {
        Residue r = reduce_big(coeff, f_.p);
        if (!r)
            return;
        if (a >= q_ || b >= q_ || c >= q_)
            throw std::logic_error("Dist product leaves the truncation with a nonzero coefficient");
        auto& slot = entries_[idx(a, b, c)];
        slot = f_.add(slot, r);
    }

    std::vector<std::pair<std::uint32_t, Residue>> take()
    {
        std::vector<std::pair<std::uint32_t, Residue>> out;
        for (auto [k, v] : entries_)
            if (v)
                out.emplace_back(static_cast<std::uint32_t>(k), v);
        entries_.clear();
        return out;
    }

private:
    PrimeField f_;
    std::size_t q_;
    std::map<std::size_t, Residue> entries_;
};

} // namespace

AugmentedAlgebra dist_sl2(Residue p, unsigned r, DistVariant variant, std::size_t dim_cap)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
    if (r < 1)
        throw std::invalid_argument("Frobenius level must be at least 1");
    const bool full = variant == DistVariant::full;
    std::size_t q = 1;
    for (unsigned i = 0; i < r; ++i)
        q *= p;
    const double dim_est = std::pow(static_cast<double>(q), full ? 3.0 : 2.0);
    if (dim_est > static_cast<double>(dim_cap))
        throw std::length_error("Dist((SL2)_" + std::to_string(r) + ") at p=" + std::to_string(p) +
                                " exceeds the dimension cap " + std::to_string(dim_cap));
    const std::size_t cq = full ? q : 1; // range of the e exponent
    DistIndex idx{q, full};

    AugmentedAlgebra a;
    a.p = p;
    a.r = r;
    a.dim = q * q * cq;
    a.label = std::string(full ? "Dist(SL2_" : "Dist(B2_") + std::to_string(r) + ")";
    a.unit = 0;
    a.counit.assign(a.dim, 0);
    a.counit[0] = 1;
    a.labels.resize(a.dim);
    a.words.resize(a.dim);

    const std::size_t n_kinds = full ? 3 : 2;
    auto atom_id = [q](std::size_t kind, std::size_t k) { return kind * q + k; };
    const char* names[] = {"f", "h", "e"};
    for (std::size_t kind = 0; kind < n_kinds; ++kind)
        for (std::size_t k = 0; k < q; ++k) {
            a.atom_labels.push_back(std::string(names[kind]) + "(" + std::to_string(k) + ")");
            a.atom_basis_index.push_back(kind == 0 ? idx(k, 0, 0) : kind == 1 ? idx(0, k, 0) : idx(0, 0, k));
        }
    for (std::size_t s = 1; s < q; s *= p)
        for (std::size_t kind = 0; kind < n_kinds; ++kind)
            a.generators.push_back(atom_id(kind, s));

    for (std::size_t x = 0; x < q; ++x)
        for (std::size_t y = 0; y < q; ++y)
            for (std::size_t z = 0; z < cq; ++z) {
                std::size_t j = idx(x, y, z);
                std::string label;
                if (x)
                    label += "f(" + std::to_string(x) + ")";
                if (y)
                    label += "h(" + std::to_string(y) + ")";
                if (z)
                    label += "e(" + std::to_string(z) + ")";
                a.labels[j] = label.empty() ? "1" : label;
                if (x)
                    a.words[j].push_back(atom_id(0, x));
                if (y)
                    a.words[j].push_back(atom_id(1, y));
                if (z)
                    a.words[j].push_back(atom_id(2, z));
            }

    BinomialExpander expander;
    ColumnBuilder col(p, q);
    a.atoms.resize(n_kinds * q);
    for (std::size_t kind = 0; kind < n_kinds; ++kind)
        for (std::size_t k = 0; k < q; ++k) {
            auto& lm = a.atoms[atom_id(kind, k)];
            lm.cols.resize(a.dim);
            for (std::size_t x = 0; x < q; ++x)
                for (std::size_t y = 0; y < q; ++y)
                    for (std::size_t z = 0; z < cq; ++z) {
                        const int ix = static_cast<int>(x);
                        if (kind == 0) {
                            // f^(k) f^(x) = binom(x + k, k) f^(x + k)
                            col.add(x + k, y, z, gen_binomial(cpp_int(x + k), static_cast<unsigned>(k)), idx);
                        } else if (kind == 1) {
                            // binom(h, k) f^(x) = f^(x) binom(h - 2x, k)
                            const auto& c = expander.expand(-2 * ix, static_cast<unsigned>(k), 0, static_cast<unsigned>(y));
                            for (std::size_t t = 0; t < c.size(); ++t)
                                col.add(x, t, z, c[t], idx);
                        } else {
                            // e^(k) f^(x) = sum_j f^(x-j) binom(h - k - x + 2j, j) e^(k-j),
                            // then e^(u) binom(h, y) = binom(h - 2u, y) e^(u).
                            const int ik = static_cast<int>(k);
                            for (std::size_t jj = 0; jj <= std::min(k, x); ++jj) {
                                const int ij = static_cast<int>(jj);
                                const std::size_t u = k - jj;
                                cpp_int ecoef = gen_binomial(cpp_int(u + z), static_cast<unsigned>(z));
                                const auto& c = expander.expand(2 * ij - ik - ix, static_cast<unsigned>(jj),
                                                                -2 * static_cast<int>(u), static_cast<unsigned>(y));
                                for (std::size_t t = 0; t < c.size(); ++t)
                                    col.add(x - jj, t, u + z, c[t] * ecoef, idx);
                            }
                        }
                        lm.cols[idx(x, y, z)] = col.take();
                    }
        }
    return a;
}

AlgebraModule divided_power_action(const AugmentedAlgebra& dist, const RestrictedLieAlgebra& g,
                                   const RestrictedModule& m)
{
    if (!m.integral_lift)
        throw std::invalid_argument("module " + m.label + " carries no integral lift");
    const auto& lift = *m.integral_lift;
    std::size_t q = 1;
    for (unsigned i = 0; i < dist.r; ++i)
        q *= dist.p;
    const bool full = dist.atoms.size() == 3 * q;
    if (full != (g.kind().part == Part::full))
        throw std::invalid_argument("algebra and distribution variant do not match");
    auto h = g.index_of("h1");
    auto e = g.index_of("e12");
    auto f = g.index_of("e21");
    if (!h || !f || (full && !e))
        throw std::invalid_argument("divided powers need sl_2 or its Borel algebra");
    const std::size_t n = m.dim;

    const auto& hm = lift[*h];
    if (!hm.is_diagonal())
        throw std::invalid_argument("h does not act diagonally on " + m.label);

    using BigMatrix = std::vector<cpp_int>;
    auto big_mul = [n](const BigMatrix& x, const BigMatrix& y) {
        BigMatrix out(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (x[i * n + k] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    out[i * n + j] += x[i * n + k] * y[k * n + j];
            }
        return out;
    };
    auto divided_powers = [&](const IntMatrix& nil) {
        BigMatrix base(n * n), cur(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            cur[i * n + i] = 1;
            for (std::size_t j = 0; j < n; ++j)
                base[i * n + j] = nil(i, j);
        }
        BigMatrix check = cur;
        for (std::size_t i = 0; i < n; ++i)
            check = big_mul(check, base);
        for (const auto& v : check)
            if (v != 0)
                throw std::invalid_argument("operator is not nilpotent on " + m.label);
        std::vector<FpMatrix> out;
        for (std::size_t k = 0; k < q; ++k) {
            if (k > 0) {
                cur = big_mul(cur, base);
                for (auto& v : cur) {
                    if (v % k != 0)
                        throw std::domain_error("non-integral divided power on " + m.label);
                    v /= k;
                }
            }
            FpMatrix red(dist.p, n, n);
            for (std::size_t i = 0; i < n * n; ++i)
                red.set(i / n, i % n, reduce_big(cur[i], dist.p));
            out.push_back(std::move(red));
        }
        return out;
    };

    std::vector<FpMatrix> atoms;
    auto fpow = divided_powers(lift[*f]);
    atoms.insert(atoms.end(), fpow.begin(), fpow.end());
    for (std::size_t k = 0; k < q; ++k) {
        FpMatrix d(dist.p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            d.set(i, i, reduce_big(gen_binomial(cpp_int(hm(i, i)), static_cast<unsigned>(k)), dist.p));
        atoms.push_back(std::move(d));
    }
    if (full) {
        auto epow = divided_powers(lift[*e]);
        atoms.insert(atoms.end(), epow.begin(), epow.end());
    }
    auto mod = module_from_atoms(dist, std::move(atoms), m.label);
    if (auto err = check_algebra_module(dist, mod))
        throw std::logic_error("divided power action inconsistent: " + *err);
    return mod;
}

H1Report hopf_h1(const AugmentedAlgebra& a, const AlgebraModule& m)
{
    auto start = std::chrono::steady_clock::now();
    if (auto err = check_algebra(a, 64, 0x5eed))
        throw ModuleRefused("algebra " + a.label + " refused: " + *err);
    if (auto err = check_algebra_module(a, m))
        throw ModuleRefused("module " + m.label + " refused: " + *err);

    PrimeField f(a.p);
    const std::size_t md = m.dim;
    auto unknown = [md](std::size_t j, std::size_t k) { return j * md + k; };
    LinearSystem sys(a.p, a.dim * md);
    for (std::size_t k = 0; k < md; ++k)
        sys.add_equation_residues({{unknown(a.unit, k), 1}});
    for (auto g : a.generators) {
        const auto& rho = m.atom_action[g];
        const std::size_t gb = a.atom_basis_index[g];
        for (std::size_t b = 0; b < a.dim; ++b)
            for (std::size_t k = 0; k < md; ++k) {
                // f(g x_b) - g.f(x_b) - e(x_b) f(g) = 0
                std::vector<std::pair<std::size_t, Residue>> eq;
                for (auto [j, v] : a.atoms[g].cols[b])
                    eq.emplace_back(unknown(j, k), v);
                auto row = rho.row(k);
                for (std::size_t t = 0; t < md; ++t)
                    if (row[t])
                        eq.emplace_back(unknown(b, t), f.neg(row[t]));
                if (Residue eb = a.counit[b])
                    eq.emplace_back(unknown(gb, k), f.neg(eb));
                sys.add_equation_residues(std::move(eq));
            }
    }
    H1Report rep;
    rep.context = {a.label, 2, a.p, a.r, m.label, std::nullopt};
    rep.der = sys.solve_nullspace().basis.cols();
    rep.rder = rep.der;
    auto inv = gr_invariants(a, m);
    rep.inv = inv.dim();
    rep.inner = md - rep.inv;
    for (std::size_t u = 0; u < md; ++u) {
        FpVector v(a.dim * md, 0);
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < md; ++k) {
                Residue x = m.basis_action[j](k, u);
                if (k == u)
                    x = f.sub(x, a.counit[j]);
                v[unknown(j, k)] = x;
            }
        if (!sys.satisfied_by(v))
            throw std::logic_error("inner e-derivation violates the derivation system");
    }
    if (rep.der < rep.inner)
        throw std::logic_error("e-derivations smaller than inner ones");
    rep.h1 = rep.der - rep.inner;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

InvariantBasis gr_invariants(const AugmentedAlgebra& dist, const AlgebraModule& m)
{
    PrimeField f(dist.p);
    std::vector<FpMatrix> ops;
    for (auto g : dist.generators) {
        FpMatrix op = m.atom_action[g];
        if (Residue e = dist.counit[dist.atom_basis_index[g]])
            for (std::size_t i = 0; i < m.dim; ++i)
                op.set(i, i, f.sub(op(i, i), e));
        ops.push_back(std::move(op));
    }
    return common_kernel(dist.p, m.dim, ops);
}

} // namespace frobcoh
