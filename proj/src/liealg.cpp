#include "frobcoh/liealg.hpp"

#include <algorithm>
#include <numeric>

namespace frobcoh {

std::string type_name(ClassicalType t)
{
    switch (t) {
    case ClassicalType::gl:
        return "gl";
    case ClassicalType::sl:
        return "sl";
    case ClassicalType::sp:
        return "sp";
    case ClassicalType::so:
        return "so";
    }
    return "?";
}

std::string kind_name(const AlgebraKind& kind)
{
    std::string base = type_name(kind.type);
    switch (kind.part) {
    case Part::full:
        return base;
    case Part::borel:
        return "borel-of-" + base;
    case Part::nilradical:
        return "nilradical-of-" + base;
    case Part::torus:
        return "torus-of-" + base;
    }
    return base;
}

AlgebraKind parse_kind(const std::string& text, unsigned n)
{
    AlgebraKind k;
    k.n = n;
    std::string base = text;
    auto strip = [&](const std::string& prefix, Part part) {
        if (base.rfind(prefix, 0) == 0) {
            base = base.substr(prefix.size());
            k.part = part;
        }
    };
    strip("borel-of-", Part::borel);
    strip("nilradical-of-", Part::nilradical);
    strip("torus-of-", Part::torus);
    if (base == "gl")
        k.type = ClassicalType::gl;
    else if (base == "sl")
        k.type = ClassicalType::sl;
    else if (base == "sp")
        k.type = ClassicalType::sp;
    else if (base == "so")
        k.type = ClassicalType::so;
    else
        throw std::invalid_argument("unknown algebra kind '" + text + "'");
    return k;
}

namespace {

struct Ambient {
    std::size_t natural_dim = 0;
    std::vector<std::string> labels;
    std::vector<IntMatrix> basis;
    IntMatrix coord_map;
};

std::string entry_label(char letter, std::size_t i, std::size_t j, std::size_t n)
{
    if (n < 10)
        return letter + std::to_string(i + 1) + std::to_string(j + 1);
    return std::string(1, letter) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Ambient ambient_gl(std::size_t n)
{
    Ambient a;
    a.natural_dim = n;
    a.coord_map = IntMatrix(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix b(n, n);
            b.at(i, j) = 1;
            a.coord_map.at(a.basis.size(), i * n + j) = 1;
            a.basis.push_back(b);
            a.labels.push_back(entry_label('e', i, j, n));
        }
    return a;
}

Ambient ambient_sl(std::size_t n)
{
    Ambient a;
    a.natural_dim = n;
    a.coord_map = IntMatrix(n * n - 1, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && i + 1 == n)
                continue;
            IntMatrix b(n, n);
            std::size_t row = a.basis.size();
            if (i == j) {
                b.at(i, i) = 1;
                b.at(i + 1, i + 1) = -1;
                for (std::size_t k = 0; k <= i; ++k)
                    a.coord_map.at(row, k * n + k) = 1;
                a.labels.push_back("h" + std::to_string(i + 1));
            } else {
                b.at(i, j) = 1;
                a.coord_map.at(row, i * n + j) = 1;
                a.labels.push_back(entry_label('e', i, j, n));
            }
            a.basis.push_back(b);
        }
    return a;
}

// Forms preserved by sp and so: antidiagonal J. For sp the first half of the
// rows carries +1 and the second half -1.
IntMatrix form_matrix(std::size_t n, bool symplectic)
{
    IntMatrix j(n, n);
    for (std::size_t a = 0; a < n; ++a)
        j.at(a, n - 1 - a) = (symplectic && a >= n / 2) ? -1 : 1;
    return j;
}

Ambient ambient_form(std::size_t n, bool symplectic)
{
    Ambient a;
    a.natural_dim = n;
    IntMatrix j = form_matrix(n, symplectic);
    IntMatrix jinv = symplectic ? j.negated() : j;
    std::vector<IntMatrix> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
            if (!symplectic && i == k)
                continue;
            IntMatrix s(n, n);
            if (i == k) {
                s.at(i, i) = 1;
            } else {
                s.at(i, k) = 1;
                s.at(k, i) = symplectic ? 1 : -1;
            }
            a.basis.push_back(jinv * s);
            a.labels.push_back(entry_label('X', i, k, n));
            // coordinate = (J X)_{ik} = J_{i,i'} X_{i',k}
            IntMatrix row(1, n * n);
            std::size_t ip = n - 1 - i;
            row.at(0, ip * n + k) = j(i, ip);
            rows.push_back(row);
        }
    a.coord_map = IntMatrix(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c)
            a.coord_map.at(r, c) = rows[r](0, c);
    return a;
}

bool is_lower(const IntMatrix& m, bool strict)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && (strict ? j >= i : j > i))
                return false;
    return true;
}

std::vector<std::int64_t> flatten(const IntMatrix& m)
{
    std::vector<std::int64_t> v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v[i * m.cols() + j] = m(i, j);
    return v;
}

} // namespace

RestrictedLieAlgebra::RestrictedLieAlgebra(AlgebraKind kind, Residue p, std::size_t natural_dim,
                                           std::vector<std::string> labels, std::vector<IntMatrix> realization,
                                           IntMatrix coord_map)
    : kind_(kind), p_(p), natural_dim_(natural_dim), labels_(std::move(labels)),
      int_realization_(std::move(realization)), coord_map_(std::move(coord_map))
{
    const std::size_t m = labels_.size();
    const std::size_t n = natural_dim_;
    for (const auto& b : int_realization_)
        realization_.push_back(b.reduce(p_));

    int_constants_.assign(m * m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            IntMatrix c = int_realization_[i] * int_realization_[j] - int_realization_[j] * int_realization_[i];
            auto flat = flatten(c);
            IntMatrix back(n, n);
            for (std::size_t k = 0; k < m; ++k) {
                std::int64_t coeff = 0;
                for (std::size_t e = 0; e < n * n; ++e)
                    coeff += coord_map_(k, e) * flat[e];
                int_constants_[(i * m + j) * m + k] = coeff;
                if (coeff)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s)
                            back.at(r, s) += coeff * int_realization_[k](r, s);
            }
            if (!(back == c))
                throw std::logic_error("realization of " + kind_name(kind_) + " is not closed under the bracket");
        }
    PrimeField f(p_);
    constants_.resize(int_constants_.size());
    for (std::size_t i = 0; i < int_constants_.size(); ++i)
        constants_[i] = f.reduce(int_constants_[i]);

    pmap_ = FpMatrix(p_, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        auto coords = coordinates(realization_[i].power(p_));
        if (!coords)
            throw std::logic_error("realization of " + kind_name(kind_) + " is not closed under p-th powers");
        for (std::size_t k = 0; k < m; ++k)
            pmap_.set(k, i, (*coords)[k]);
    }
}

std::size_t RestrictedLieAlgebra::rank() const
{
    switch (kind_.type) {
    case ClassicalType::gl:
        return kind_.n;
    case ClassicalType::sl:
        return kind_.n - 1;
    case ClassicalType::sp:
        return kind_.n;
    case ClassicalType::so:
        return kind_.n / 2;
    }
    return 0;
}

FpMatrix RestrictedLieAlgebra::element_matrix(const FpVector& x) const
{
    if (x.size() != dim())
        throw DimensionMismatch("element has the wrong number of coordinates");
    FpMatrix out(p_, natural_dim_, natural_dim_);
    for (std::size_t k = 0; k < dim(); ++k)
        if (x[k])
            out = out + realization_[k].scaled(x[k]);
    return out;
}

std::optional<FpVector> RestrictedLieAlgebra::coordinates(const FpMatrix& x) const
{
    const std::size_t n = natural_dim_;
    if (x.rows() != n || x.cols() != n)
        throw DimensionMismatch("matrix does not match the natural dimension");
    PrimeField f(p_);
    FpVector c(dim(), 0);
    for (std::size_t k = 0; k < dim(); ++k) {
        std::int64_t acc = 0;
        for (std::size_t e = 0; e < n * n; ++e)
            if (coord_map_(k, e))
                acc += coord_map_(k, e) * static_cast<std::int64_t>(x(e / n, e % n));
        c[k] = f.reduce(acc);
    }
    if (!(element_matrix(c) == x))
        return std::nullopt;
    return c;
}

FpVector RestrictedLieAlgebra::bracket(const FpVector& x, const FpVector& y) const
{
    const std::size_t m = dim();
    PrimeField f(p_);
    FpVector out(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (!y[j])
                continue;
            Residue s = f.mul(x[i], y[j]);
            for (std::size_t k = 0; k < m; ++k)
                if (auto c = structure_constant(i, j, k))
                    out[k] = f.add(out[k], f.mul(s, c));
        }
    }
    return out;
}

FpVector RestrictedLieAlgebra::pth_power(const FpVector& x) const
{
    auto c = coordinates(element_matrix(x).power(p_));
    if (!c)
        throw std::logic_error("p-th power left the algebra");
    return *c;
}

FpMatrix RestrictedLieAlgebra::ad(const FpVector& x) const
{
    const std::size_t m = dim();
    PrimeField f(p_);
    FpMatrix out(p_, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (auto c = structure_constant(i, j, k))
                    out.add_to(k, j, f.mul(x[i], c));
    }
    return out;
}

FpMatrix RestrictedLieAlgebra::ad_basis(std::size_t i) const
{
    return ad(basis_vector(i));
}

FpVector RestrictedLieAlgebra::basis_vector(std::size_t i) const
{
    FpVector v(dim(), 0);
    v.at(i) = 1;
    return v;
}

std::vector<std::size_t> RestrictedLieAlgebra::diagonal_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (int_realization_[i].is_diagonal())
            out.push_back(i);
    return out;
}

std::vector<std::size_t> RestrictedLieAlgebra::strictly_lower_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (is_lower(int_realization_[i], true))
            out.push_back(i);
    return out;
}

std::optional<std::size_t> RestrictedLieAlgebra::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

RestrictedLieAlgebra RestrictedLieAlgebra::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != dim())
        throw DimensionMismatch("permutation length differs from the dimension");
    std::vector<std::string> labels;
    std::vector<IntMatrix> real;
    IntMatrix coords(dim(), natural_dim_ * natural_dim_);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        labels.push_back(labels_.at(perm[i]));
        real.push_back(int_realization_.at(perm[i]));
        for (std::size_t e = 0; e < coord_map_.cols(); ++e)
            coords.at(i, e) = coord_map_(perm[i], e);
    }
    return RestrictedLieAlgebra(kind_, p_, natural_dim_, std::move(labels), std::move(real), std::move(coords));
}

RestrictedLieAlgebra construct(const AlgebraKind& kind, Residue p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
    Ambient amb;
    switch (kind.type) {
    case ClassicalType::gl:
        if (kind.n < 1)
            throw std::invalid_argument("gl_n needs n >= 1");
        amb = ambient_gl(kind.n);
        break;
    case ClassicalType::sl:
        if (kind.n < 2)
            throw std::invalid_argument("sl_n needs n >= 2");
        amb = ambient_sl(kind.n);
        break;
    case ClassicalType::sp:
        if (kind.n < 1)
            throw std::invalid_argument("sp_2n needs n >= 1");
        if (p == 2)
            throw UnsupportedCharacteristic("sp_" + std::to_string(2 * kind.n) +
                                            " is not supported in characteristic 2 (bad prime for type C)");
        amb = ambient_form(2 * kind.n, true);
        break;
    case ClassicalType::so:
        if (kind.n < 2)
            throw std::invalid_argument("so_n needs n >= 2");
        if (p == 2)
            throw UnsupportedCharacteristic("so_" + std::to_string(kind.n) +
                                            " is not supported in characteristic 2");
        amb = ambient_form(kind.n, false);
        break;
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < amb.basis.size(); ++i) {
        const auto& b = amb.basis[i];
        bool ok = true;
        switch (kind.part) {
        case Part::full:
            break;
        case Part::borel:
            ok = is_lower(b, false);
            break;
        case Part::nilradical:
            ok = is_lower(b, true);
            break;
        case Part::torus:
            ok = b.is_diagonal();
            break;
        }
        if (ok)
            keep.push_back(i);
    }
    std::vector<std::string> labels;
    std::vector<IntMatrix> basis;
    IntMatrix coords(keep.size(), amb.coord_map.cols());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        labels.push_back(amb.labels[keep[r]]);
        basis.push_back(amb.basis[keep[r]]);
        for (std::size_t e = 0; e < amb.coord_map.cols(); ++e)
            coords.at(r, e) = amb.coord_map(keep[r], e);
    }
    return RestrictedLieAlgebra(kind, p, amb.natural_dim, std::move(labels), std::move(basis), std::move(coords));
}

// ---------------------------------------------------------------------------

std::string HypothesisReport::failure_reason() const
{
    if (!h1_simply_connected)
        return "(H1) fails: " + h1_note;
    if (!h2_good_prime)
        return "(H2) fails: " + h2_note;
    if (!h3_form_nondegenerate)
        return "(H3) fails: " + h3_note;
    return {};
}

FpMatrix trace_form_gram(const RestrictedLieAlgebra& g)
{
    const std::size_t m = g.dim();
    PrimeField f(g.p());
    FpMatrix gram(g.p(), m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto prod = g.realization()[i] * g.realization()[j];
            Residue t = 0;
            for (std::size_t k = 0; k < g.natural_dim(); ++k)
                t = f.add(t, prod(k, k));
            gram.set(i, j, t);
        }
    return gram;
}

HypothesisReport check_hypotheses(const RestrictedLieAlgebra& g)
{
    HypothesisReport r;
    const auto& kind = g.kind();
    switch (kind.type) {
    case ClassicalType::gl:
        r.h1_simply_connected = true;
        r.h1_note = "by construction: the derived group SL_n is simply connected";
        break;
    case ClassicalType::sl:
        r.h1_simply_connected = true;
        r.h1_note = "by construction: SL_n is simply connected";
        break;
    case ClassicalType::sp:
        r.h1_simply_connected = true;
        r.h1_note = "by construction: Sp_2n is simply connected";
        break;
    case ClassicalType::so:
        r.h1_simply_connected = false;
        r.h1_note = "by construction: SO_n is not simply connected";
        break;
    }
    bool bad = (kind.type == ClassicalType::sp || kind.type == ClassicalType::so) && g.p() == 2;
    r.h2_good_prime = !bad;
    r.h2_note = bad ? "p = 2 is bad for types B, C, D" : "p is good for the type";

    AlgebraKind full = kind;
    full.part = Part::full;
    auto gram = trace_form_gram(kind.part == Part::full ? g : construct(full, g.p()));
    r.h3_form_nondegenerate = rank(gram) == gram.rows();
    r.h3_note = r.h3_form_nondegenerate ? "trace form of the natural realization is nondegenerate"
                                        : "trace form of the natural realization is degenerate";
    r.overall = r.h1_simply_connected && r.h2_good_prime && r.h3_form_nondegenerate;
    return r;
}

std::optional<std::string> check_lie_axioms(const RestrictedLieAlgebra& g)
{
    const std::size_t m = g.dim();
    PrimeField f(g.p());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (f.add(g.structure_constant(i, j, k), g.structure_constant(j, i, k)) != 0)
                    return "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                for (std::size_t t = 0; t < m; ++t) {
                    Residue acc = 0;
                    for (std::size_t l = 0; l < m; ++l) {
                        acc = f.add(acc, f.mul(g.structure_constant(j, k, l), g.structure_constant(i, l, t)));
                        acc = f.add(acc, f.mul(g.structure_constant(k, i, l), g.structure_constant(j, l, t)));
                        acc = f.add(acc, f.mul(g.structure_constant(i, j, l), g.structure_constant(k, l, t)));
                    }
                    if (acc)
                        return "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")";
                }
    return std::nullopt;
}

std::optional<std::string> check_restrictedness(const RestrictedLieAlgebra& g)
{
    for (std::size_t i = 0; i < g.dim(); ++i) {
        auto lhs = g.ad(g.pmap().column(i));
        auto rhs = g.ad_basis(i).power(g.p());
        if (!(lhs == rhs))
            return "ad(b^[p]) != ad(b)^p for " + g.labels()[i];
    }
    return std::nullopt;
}

std::size_t centralizer_dim(const RestrictedLieAlgebra& g, const FpVector& x)
{
    return g.dim() - rank(g.ad(x));
}

CentralizerSample sampled_min_centralizer_dim(const RestrictedLieAlgebra& g, std::span<const std::size_t> support,
                                              std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    CentralizerSample out;
    out.minimum = g.dim();
    out.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        FpVector x(g.dim(), 0);
        for (auto i : support)
            x[i] = random_residue(rng, g.p());
        auto d = centralizer_dim(g, x);
        if (d < out.minimum) {
            out.minimum = d;
            out.attained = 0;
        }
        if (d == out.minimum)
            ++out.attained;
    }
    return out;
}

} // namespace frobcoh
