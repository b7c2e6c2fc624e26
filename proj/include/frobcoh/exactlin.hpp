#pragma once

// Exact linear algebra over the prime field F_p.
//
// Every object in this library is defined over F_p, so all kernels, images
// and quotient dimensions are computed here. Dimensions of cohomology groups
// do not change under extension of the base field, which is why no extension
// fields are ever needed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobcoh {

using Residue = std::uint32_t;
using FpVector = std::vector<Residue>;

class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

// Arithmetic in F_p. The modulus must be a prime below 2^31.
struct PrimeField {
    Residue p;

    explicit PrimeField(Residue prime);

    Residue reduce(std::int64_t v) const
    {
        auto r = v % static_cast<std::int64_t>(p);
        return static_cast<Residue>(r < 0 ? r + p : r);
    }
    Residue add(Residue a, Residue b) const
    {
        Residue s = a + b;
        return s >= p ? s - p : s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p - a; }
    Residue mul(Residue a, Residue b) const
    {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
    }
    Residue pow(Residue a, std::uint64_t e) const;
    Residue inv(Residue a) const;
};

// Dense matrix of residues, row-major: entry (r, c) lives at data[r * cols + c].
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(Residue p, std::size_t rows, std::size_t cols);

    // Entries must already be reduced; anything >= p is a MalformedInput.
    static FpMatrix from_residues(Residue p, std::size_t rows, std::size_t cols,
                                  std::vector<Residue> data);
    static FpMatrix from_integers(Residue p, std::size_t rows, std::size_t cols,
                                  std::span<const std::int64_t> data);
    static FpMatrix from_rows(Residue p, const std::vector<std::vector<std::int64_t>>& rows);
    static FpMatrix identity(Residue p, std::size_t n);
    // Columns of the result are the given vectors.
    static FpMatrix from_columns(Residue p, std::size_t rows, const std::vector<FpVector>& cols);

    Residue p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue v);
    void add_to(std::size_t r, std::size_t c, Residue v);

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row_mut(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    FpVector column(std::size_t c) const;
    const std::vector<Residue>& data() const { return data_; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpVector operator*(const FpVector& v) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix scaled(Residue s) const;
    FpMatrix transpose() const;
    FpMatrix power(std::uint64_t e) const;
    bool is_zero() const;

    FpMatrix select_columns(std::span<const std::size_t> cols) const;
    FpMatrix select_rows(std::span<const std::size_t> rows) const;
    FpMatrix permuted(std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) const;
    static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix vstack(const std::vector<FpMatrix>& blocks);
    static FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    Residue p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

// Reduced row echelon form with deterministic left-to-right pivoting: the
// pivot of each column is the first remaining row with a nonzero entry there.
struct RowEchelon {
    FpMatrix reduced;                // first `pivots.size()` rows are the nonzero rows
    std::vector<std::size_t> pivots; // pivot column of each nonzero row, increasing
};

RowEchelon row_echelon(FpMatrix a);

struct NullspaceResult {
    std::size_t rank = 0;
    FpMatrix basis; // cols(A) x (cols(A) - rank); columns span ker A
};

// Canonical basis: one vector per free column f, with a 1 at f and zeros on
// every other free column.
NullspaceResult rank_and_nullspace(const FpMatrix& a);
std::size_t rank(const FpMatrix& a);

// Pivot-preferred solution (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b);

// Subspaces given by spanning columns.
FpMatrix column_space_basis(const FpMatrix& a);
bool subspace_contains(const FpMatrix& big, const FpMatrix& small);
bool same_subspace(const FpMatrix& a, const FpMatrix& b);

// A sparse row-oriented matrix: each row is a list of (column, value) pairs
// with strictly increasing columns and nonzero values. Same semantics as
// FpMatrix; used for the large derivation systems.
class SparseFpMatrix {
public:
    using Entry = std::pair<std::uint32_t, Residue>;
    using Row = std::vector<Entry>;

    SparseFpMatrix(Residue p, std::size_t cols);

    Residue p() const { return field_.p; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;
    const std::vector<Row>& row_list() const { return rows_; }

    // Terms may repeat columns and be unreduced; the row is normalised and
    // dropped entirely if it collapses to zero.
    void add_row(std::vector<std::pair<std::size_t, std::int64_t>> terms);
    void add_row_residues(std::vector<std::pair<std::size_t, Residue>> terms);

    FpVector apply(const FpVector& x) const;
    FpMatrix to_dense() const;
    static SparseFpMatrix from_dense(const FpMatrix& a);

private:
    PrimeField field_;
    std::size_t cols_;
    std::vector<Row> rows_;
};

// Splits the columns into connected components (two columns are linked when
// a row touches both) and eliminates each block densely. Produces the same
// rank and the same canonical nullspace basis as the dense routine.
NullspaceResult rank_and_nullspace(const SparseFpMatrix& a);

inline constexpr std::size_t kDefaultSparseThreshold = 1'000'000;

// Homogeneous system accumulated row by row. `solve_nullspace` uses the dense
// kernel when rows * cols fits under the threshold and the sparse one otherwise.
class LinearSystem {
public:
    LinearSystem(Residue p, std::size_t unknowns, std::size_t sparse_threshold = kDefaultSparseThreshold);

    void add_equation(std::vector<std::pair<std::size_t, std::int64_t>> terms) { rows_.add_row(std::move(terms)); }
    void add_equation_residues(std::vector<std::pair<std::size_t, Residue>> terms)
    {
        rows_.add_row_residues(std::move(terms));
    }

    std::size_t unknowns() const { return rows_.cols(); }
    std::size_t equations() const { return rows_.rows(); }
    const SparseFpMatrix& matrix() const { return rows_; }
    bool uses_sparse() const;

    NullspaceResult solve_nullspace() const;
    // True when x satisfies every equation.
    bool satisfied_by(const FpVector& x) const;

private:
    SparseFpMatrix rows_;
    std::size_t threshold_;
};

} // namespace frobcoh
