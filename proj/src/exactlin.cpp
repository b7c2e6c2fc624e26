#include "frobcoh/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace frobcoh {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(Residue prime) : p(prime)
{
    if (prime >= (1u << 31) || !is_prime(prime))
        throw MalformedInput("modulus " + std::to_string(prime) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const
{
    Residue result = 1 % p;
    Residue base = a % p;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const
{
    if (a % p == 0)
        throw std::domain_error("zero has no inverse mod p");
    return pow(a, p - 2);
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix FpMatrix::from_residues(Residue p, std::size_t rows, std::size_t cols, std::vector<Residue> data)
{
    if (data.size() != rows * cols)
        throw DimensionMismatch("residue buffer does not match the requested shape");
    for (auto v : data)
        if (v >= p)
            throw MalformedInput("entry " + std::to_string(v) + " is not reduced mod " + std::to_string(p));
    FpMatrix m(p, rows, cols);
    m.data_ = std::move(data);
    return m;
}

FpMatrix FpMatrix::from_integers(Residue p, std::size_t rows, std::size_t cols, std::span<const std::int64_t> data)
{
    if (data.size() != rows * cols)
        throw DimensionMismatch("integer buffer does not match the requested shape");
    PrimeField f(p);
    FpMatrix m(p, rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i)
        m.data_[i] = f.reduce(data[i]);
    return m;
}

FpMatrix FpMatrix::from_rows(Residue p, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<std::int64_t> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw DimensionMismatch("ragged row list");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_integers(p, rows.size(), cols, flat);
}

FpMatrix FpMatrix::identity(Residue p, std::size_t n)
{
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1 % p;
    return m;
}

FpMatrix FpMatrix::from_columns(Residue p, std::size_t rows, const std::vector<FpVector>& cols)
{
    FpMatrix m(p, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m.set(r, c, cols[c][r]);
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, Residue v)
{
    data_[r * cols_ + c] = v % p_;
}

void FpMatrix::add_to(std::size_t r, std::size_t c, Residue v)
{
    auto& e = data_[r * cols_ + c];
    e = static_cast<Residue>((static_cast<std::uint64_t>(e) + v) % p_);
}

FpVector FpMatrix::column(std::size_t c) const
{
    FpVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const
{
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw DimensionMismatch("matrix product shape mismatch");
    FpMatrix out(p_, rows_, rhs.cols_);
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            Residue a = (*this)(i, k);
            if (a == 0)
                continue;
            auto brow = rhs.row(k);
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (brow[j])
                    acc[j] = (acc[j] + static_cast<std::uint64_t>(a) * brow[j]) % p_;
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out.data_[i * rhs.cols_ + j] = static_cast<Residue>(acc[j]);
    }
    return out;
}

FpVector FpMatrix::operator*(const FpVector& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector shape mismatch");
    FpVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        auto r = row(i);
        for (std::size_t k = 0; k < cols_; ++k)
            if (r[k] && v[k])
                acc = (acc + static_cast<std::uint64_t>(r[k]) * v[k]) % p_;
        out[i] = static_cast<Residue>(acc);
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::scaled(Residue s) const
{
    FpMatrix out = *this;
    for (auto& e : out.data_)
        e = static_cast<Residue>((static_cast<std::uint64_t>(e) * s) % p_);
    return out;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.data_[j * rows_ + i] = (*this)(i, j);
    return out;
}

FpMatrix FpMatrix::power(std::uint64_t e) const
{
    if (rows_ != cols_)
        throw DimensionMismatch("power of a non-square matrix");
    FpMatrix result = identity(p_, rows_);
    FpMatrix base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool FpMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> cols) const
{
    FpMatrix out(p_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.data_[i * cols.size() + j] = (*this)(i, cols[j]);
    return out;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> rows) const
{
    FpMatrix out(p_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy_n(data_.begin() + rows[i] * cols_, cols_, out.data_.begin() + i * cols_);
    return out;
}

FpMatrix FpMatrix::permuted(std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) const
{
    // new(i, j) = old(row_perm[i], col_perm[j])
    return select_rows(row_perm).select_columns(col_perm);
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b)
{
    if (a.rows_ != b.rows_)
        throw DimensionMismatch("hstack row mismatch");
    FpMatrix out(a.p_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::copy_n(a.data_.begin() + i * a.cols_, a.cols_, out.data_.begin() + i * out.cols_);
        std::copy_n(b.data_.begin() + i * b.cols_, b.cols_, out.data_.begin() + i * out.cols_ + a.cols_);
    }
    return out;
}

FpMatrix FpMatrix::vstack(const std::vector<FpMatrix>& blocks)
{
    if (blocks.empty())
        return {};
    std::size_t cols = blocks.front().cols_;
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols_ != cols)
            throw DimensionMismatch("vstack column mismatch");
        rows += b.rows_;
    }
    FpMatrix out(blocks.front().p_, rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + offset);
        offset += b.data_.size();
    }
    return out;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& a, const FpMatrix& b)
{
    FpMatrix out(a.p_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    PrimeField f(a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            Residue s = a(i, j);
            if (!s)
                continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    out.set(i * b.rows_ + k, j * b.cols_ + l, f.mul(s, b(k, l)));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// In-place RREF on a dense row-major buffer. Stops early once every column is
// a pivot. Returns the pivot columns; nonzero rows are moved to the top.
std::vector<std::size_t> rref_in_place(std::vector<Residue>& data, std::size_t rows, std::size_t cols, Residue p)
{
    PrimeField f(p);
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    auto at = [&](std::size_t r, std::size_t c) -> Residue& { return data[r * cols + c]; };
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = next; r < rows; ++r)
            if (at(r, c)) {
                sel = r;
                break;
            }
        if (sel == rows)
            continue;
        if (sel != next)
            std::swap_ranges(data.begin() + sel * cols, data.begin() + (sel + 1) * cols, data.begin() + next * cols);
        Residue inv = f.inv(at(next, c));
        Residue* prow = data.data() + next * cols;
        if (inv != 1)
            for (std::size_t k = c; k < cols; ++k)
                prow[k] = f.mul(prow[k], inv);
        // Nonzero positions of the pivot row, to keep the update loop sparse-aware.
        std::vector<std::size_t> support;
        for (std::size_t k = c; k < cols; ++k)
            if (prow[k])
                support.push_back(k);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next)
                continue;
            Residue* row = data.data() + r * cols;
            Residue factor = row[c];
            if (!factor)
                continue;
            Residue neg = p - factor;
            for (auto k : support)
                row[k] = static_cast<Residue>((row[k] + static_cast<std::uint64_t>(neg) * prow[k]) % p);
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

FpMatrix nullspace_from_rref(const std::vector<Residue>& data, std::size_t cols, const std::vector<std::size_t>& pivots,
                             Residue p)
{
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    FpMatrix basis(p, cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.set(f, k, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Residue v = data[r * cols + f];
            if (v)
                basis.set(pivots[r], k, p - v);
        }
    }
    return basis;
}

} // namespace

RowEchelon row_echelon(FpMatrix a)
{
    std::vector<Residue> data = a.data();
    auto pivots = rref_in_place(data, a.rows(), a.cols(), a.p());
    return {FpMatrix::from_residues(a.p(), a.rows(), a.cols(), std::move(data)), std::move(pivots)};
}

NullspaceResult rank_and_nullspace(const FpMatrix& a)
{
    std::vector<Residue> data = a.data();
    auto pivots = rref_in_place(data, a.rows(), a.cols(), a.p());
    return {pivots.size(), nullspace_from_rref(data, a.cols(), pivots, a.p())};
}

std::size_t rank(const FpMatrix& a)
{
    std::vector<Residue> data = a.data();
    return rref_in_place(data, a.rows(), a.cols(), a.p()).size();
}

std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length differs from the row count");
    FpMatrix aug(a.p(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.set(i, j, a(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    auto ech = row_echelon(std::move(aug));
    FpVector x(a.cols(), 0);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == a.cols())
            return std::nullopt;
        x[ech.pivots[r]] = ech.reduced(r, a.cols());
    }
    return x;
}

FpMatrix column_space_basis(const FpMatrix& a)
{
    auto ech = row_echelon(a.transpose());
    std::vector<std::size_t> rows(ech.pivots.size());
    std::iota(rows.begin(), rows.end(), 0);
    return ech.reduced.select_rows(rows).transpose();
}

bool subspace_contains(const FpMatrix& big, const FpMatrix& small)
{
    if (small.cols() == 0)
        return true;
    if (big.rows() != small.rows())
        throw DimensionMismatch("subspaces live in different ambient spaces");
    if (big.cols() == 0)
        return small.is_zero();
    return rank(FpMatrix::hstack(big, small)) == rank(big);
}

bool same_subspace(const FpMatrix& a, const FpMatrix& b)
{
    return subspace_contains(a, b) && subspace_contains(b, a);
}

// ---------------------------------------------------------------------------
// Sparse

SparseFpMatrix::SparseFpMatrix(Residue p, std::size_t cols) : field_(p), cols_(cols) {}

std::size_t SparseFpMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

void SparseFpMatrix::add_row(std::vector<std::pair<std::size_t, std::int64_t>> terms)
{
    std::vector<std::pair<std::size_t, Residue>> reduced;
    reduced.reserve(terms.size());
    for (auto [c, v] : terms)
        reduced.emplace_back(c, field_.reduce(v));
    add_row_residues(std::move(reduced));
}

void SparseFpMatrix::add_row_residues(std::vector<std::pair<std::size_t, Residue>> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row row;
    for (auto [c, v] : terms) {
        if (c >= cols_)
            throw DimensionMismatch("sparse column index out of range");
        v %= field_.p;
        if (!row.empty() && row.back().first == c)
            row.back().second = field_.add(row.back().second, v);
        else
            row.emplace_back(static_cast<std::uint32_t>(c), v);
        if (row.back().second == 0)
            row.pop_back();
    }
    if (!row.empty())
        rows_.push_back(std::move(row));
}

FpVector SparseFpMatrix::apply(const FpVector& x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("sparse apply length mismatch");
    FpVector out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t acc = 0;
        for (auto [c, v] : rows_[i])
            acc = (acc + static_cast<std::uint64_t>(v) * x[c]) % field_.p;
        out[i] = static_cast<Residue>(acc);
    }
    return out;
}

FpMatrix SparseFpMatrix::to_dense() const
{
    FpMatrix m(field_.p, rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (auto [c, v] : rows_[i])
            m.set(i, c, v);
    return m;
}

SparseFpMatrix SparseFpMatrix::from_dense(const FpMatrix& a)
{
    SparseFpMatrix s(a.p(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<std::pair<std::size_t, Residue>> terms;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j))
                terms.emplace_back(j, a(i, j));
        s.add_row_residues(std::move(terms));
    }
    return s;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

NullspaceResult rank_and_nullspace(const SparseFpMatrix& a)
{
    const std::size_t n = a.cols();
    const Residue p = a.p();
    DisjointSets sets(n);
    for (const auto& row : a.row_list())
        for (std::size_t k = 1; k < row.size(); ++k)
            sets.unite(row[0].first, row[k].first);

    // Columns of each component, in increasing order.
    std::vector<std::size_t> comp_of(n);
    std::vector<std::vector<std::size_t>> comp_cols;
    std::vector<std::size_t> root_to_comp(n, SIZE_MAX);
    for (std::size_t c = 0; c < n; ++c) {
        auto r = sets.find(c);
        if (root_to_comp[r] == SIZE_MAX) {
            root_to_comp[r] = comp_cols.size();
            comp_cols.emplace_back();
        }
        comp_of[c] = root_to_comp[r];
        comp_cols[comp_of[c]].push_back(c);
    }
    std::vector<std::vector<std::size_t>> comp_rows(comp_cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        comp_rows[comp_of[a.row_list()[i].front().first]].push_back(i);

    std::size_t total_rank = 0;
    std::vector<std::vector<std::pair<std::size_t, Residue>>> vectors;
    std::vector<std::size_t> vector_free_col;

    std::vector<std::size_t> local(n, 0);
    for (std::size_t k = 0; k < comp_cols.size(); ++k) {
        const auto& cols = comp_cols[k];
        const auto& rows = comp_rows[k];
        for (std::size_t j = 0; j < cols.size(); ++j)
            local[cols[j]] = j;
        std::vector<Residue> block(rows.size() * cols.size(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (auto [c, v] : a.row_list()[rows[i]])
                block[i * cols.size() + local[c]] = v;
        auto pivots = rref_in_place(block, rows.size(), cols.size(), p);
        total_rank += pivots.size();
        auto basis = nullspace_from_rref(block, cols.size(), pivots, p);
        for (std::size_t b = 0; b < basis.cols(); ++b) {
            std::vector<std::pair<std::size_t, Residue>> v;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (basis(j, b))
                    v.emplace_back(cols[j], basis(j, b));
            vectors.push_back(std::move(v));
        }
        // Free columns of this block, in order, match the basis order.
        std::vector<char> is_pivot(cols.size(), 0);
        for (auto c : pivots)
            is_pivot[c] = 1;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!is_pivot[j])
                vector_free_col.push_back(cols[j]);
    }

    // Order the basis by free column so it matches the dense canonical basis.
    std::vector<std::size_t> order(vectors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return vector_free_col[x] < vector_free_col[y]; });
    FpMatrix basis(p, n, vectors.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        for (auto [c, v] : vectors[order[k]])
            basis.set(c, k, v);
    return {total_rank, std::move(basis)};
}

// ---------------------------------------------------------------------------

LinearSystem::LinearSystem(Residue p, std::size_t unknowns, std::size_t sparse_threshold)
    : rows_(p, unknowns), threshold_(sparse_threshold)
{
}

bool LinearSystem::uses_sparse() const
{
    return rows_.rows() * rows_.cols() > threshold_;
}

NullspaceResult LinearSystem::solve_nullspace() const
{
    if (uses_sparse())
        return rank_and_nullspace(rows_);
    return rank_and_nullspace(rows_.to_dense());
}

bool LinearSystem::satisfied_by(const FpVector& x) const
{
    auto r = rows_.apply(x);
    return std::all_of(r.begin(), r.end(), [](Residue v) { return v == 0; });
}

} // namespace frobcoh
