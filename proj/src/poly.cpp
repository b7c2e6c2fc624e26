#include "frobcoh/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frobcoh {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("integer matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            auto a = (*this)(i, k);
            if (!a)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::negated() const
{
    IntMatrix out = *this;
    for (auto& v : out.data_)
        v = -v;
    return out;
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0)
                return false;
    return true;
}

FpMatrix IntMatrix::reduce(Residue p) const
{
    return FpMatrix::from_integers(p, rows_, cols_, data_);
}

// ---------------------------------------------------------------------------

unsigned monomial_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0u);
}

Monomial monomial_product(const Monomial& a, const Monomial& b)
{
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<Exponent>(a[i] + b[i]);
    return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i])
            return false;
    return true;
}

bool deglex_greater(const Monomial& a, const Monomial& b)
{
    auto da = monomial_degree(a), db = monomial_degree(b);
    if (da != db)
        return da > db;
    return a > b;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : m)
        h = (h ^ e) * 1099511628211ull;
    return h;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

namespace {

void enumerate_monomials(std::size_t nvars, unsigned degree, std::size_t var, Monomial& cur,
                         std::vector<Monomial>& out)
{
    if (var + 1 == nvars) {
        cur[var] = static_cast<Exponent>(degree);
        out.push_back(cur);
        cur[var] = 0;
        return;
    }
    for (int e = static_cast<int>(degree); e >= 0; --e) {
        cur[var] = static_cast<Exponent>(e);
        enumerate_monomials(nvars, degree - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

} // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree)
{
    if (nvars == 0) {
        if (degree == 0)
            monomials_.emplace_back();
    } else {
        Monomial cur(nvars, 0);
        enumerate_monomials(nvars, degree, 0, cur, monomials_);
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        throw std::out_of_range("monomial not in basis");
    return it->second;
}

// ---------------------------------------------------------------------------

IntPoly IntPoly::constant(std::size_t nvars, std::int64_t c)
{
    IntPoly f(nvars);
    f.add_term(Monomial(nvars, 0), c);
    return f;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t i)
{
    IntPoly f(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    f.add_term(m, 1);
    return f;
}

int IntPoly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<int>(monomial_degree(m)));
    return d;
}

bool IntPoly::is_homogeneous() const
{
    int d = degree();
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(monomial_degree(m)) != d)
            return false;
    return true;
}

void IntPoly::add_term(const Monomial& m, std::int64_t c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IntPoly IntPoly::operator+(const IntPoly& o) const
{
    IntPoly out = *this;
    out.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const
{
    return *this + o.scaled(-1);
}

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    IntPoly out(std::max(nvars_, o.nvars_));
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            out.add_term(monomial_product(a, b), ca * cb);
    return out;
}

IntPoly IntPoly::scaled(std::int64_t c) const
{
    IntPoly out(nvars_);
    if (c == 0)
        return out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace(m, v * c);
    return out;
}

// ---------------------------------------------------------------------------

FpPoly FpPoly::from_int(const IntPoly& f, Residue p)
{
    PrimeField field(p);
    FpPoly out(p, f.nvars());
    for (const auto& [m, c] : f.terms())
        out.add_term(m, field.reduce(c));
    return out;
}

FpPoly FpPoly::constant(Residue p, std::size_t nvars, Residue c)
{
    FpPoly f(p, nvars);
    f.add_term(Monomial(nvars, 0), c);
    return f;
}

FpPoly FpPoly::variable(Residue p, std::size_t nvars, std::size_t i)
{
    FpPoly f(p, nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    f.add_term(m, 1);
    return f;
}

int FpPoly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<int>(monomial_degree(m)));
    return d;
}

void FpPoly::add_term(const Monomial& m, Residue c)
{
    c %= p_;
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FpPoly FpPoly::operator+(const FpPoly& o) const
{
    FpPoly out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

FpPoly FpPoly::operator-(const FpPoly& o) const
{
    return *this + o.scaled(p_ - 1);
}

FpPoly FpPoly::operator*(const FpPoly& o) const
{
    FpPoly out(p_, std::max(nvars_, o.nvars_));
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            out.add_term(monomial_product(a, b),
                         static_cast<Residue>((static_cast<std::uint64_t>(ca) * cb) % p_));
    return out;
}

FpPoly FpPoly::scaled(Residue c) const
{
    FpPoly out(p_, nvars_);
    for (const auto& [m, v] : terms_)
        out.add_term(m, static_cast<Residue>((static_cast<std::uint64_t>(v) * c) % p_));
    return out;
}

FpPoly FpPoly::pow(unsigned e) const
{
    FpPoly out = constant(p_, nvars_, 1);
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

Residue FpPoly::evaluate(const FpVector& point) const
{
    if (point.size() != nvars_)
        throw DimensionMismatch("evaluation point has the wrong number of coordinates");
    PrimeField f(p_);
    Residue acc = 0;
    for (const auto& [m, c] : terms_) {
        Residue t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                t = f.mul(t, f.pow(point[i], m[i]));
        acc = f.add(acc, t);
    }
    return acc;
}

FpPoly FpPoly::substitute(const std::vector<FpPoly>& subs) const
{
    if (subs.size() != nvars_)
        throw DimensionMismatch("substitution list has the wrong length");
    std::size_t target_vars = subs.empty() ? 0 : subs.front().nvars();
    FpPoly out(p_, target_vars);
    for (const auto& [m, c] : terms_) {
        FpPoly t = constant(p_, target_vars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                t = t * subs[i].pow(m[i]);
        out = out + t;
    }
    return out;
}

FpVector FpPoly::to_vector(const MonomialBasis& basis) const
{
    FpVector v(basis.size(), 0);
    for (const auto& [m, c] : terms_)
        v[basis.index_of(m)] = c;
    return v;
}

FpPoly FpPoly::from_vector(Residue p, const MonomialBasis& basis, const FpVector& v)
{
    FpPoly f(p, basis.nvars());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i])
            f.add_term(basis[i], v[i]);
    return f;
}

} // namespace frobcoh
