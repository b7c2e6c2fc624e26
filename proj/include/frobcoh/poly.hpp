#pragma once

// Integer matrices, monomials and sparse multivariate polynomials.

#include "frobcoh/exactlin.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace frobcoh {

// Dense integer matrix, row-major. Used for integral lifts of actions.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    IntMatrix negated() const;
    bool is_diagonal() const;
    FpMatrix reduce(Residue p) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;

unsigned monomial_degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);

// Degree-lexicographic comparison: higher total degree first, then the
// lexicographically larger exponent vector (x_1 > x_2 > ...).
bool deglex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// All monomials of total degree `degree` in `nvars` variables, in deg-lex
// order (x_1^d first).
class MonomialBasis {
public:
    MonomialBasis() = default;
    MonomialBasis(std::size_t nvars, unsigned degree);

    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    // Index of a monomial of the right degree; throws when absent.
    std::size_t index_of(const Monomial& m) const;
    bool contains(const Monomial& m) const { return index_.count(m) != 0; }

private:
    std::size_t nvars_ = 0;
    unsigned degree_ = 0;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Sparse polynomial with integer coefficients. Terms with zero coefficient
// are never stored.
class IntPoly {
public:
    using Terms = std::map<Monomial, std::int64_t>;

    IntPoly() = default;
    explicit IntPoly(std::size_t nvars) : nvars_(nvars) {}
    static IntPoly constant(std::size_t nvars, std::int64_t c);
    static IntPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, std::int64_t c);
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(std::int64_t c) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

// Sparse polynomial over F_p.
class FpPoly {
public:
    using Terms = std::map<Monomial, Residue>;

    FpPoly() = default;
    FpPoly(Residue p, std::size_t nvars) : p_(p), nvars_(nvars) {}
    static FpPoly from_int(const IntPoly& f, Residue p);
    static FpPoly constant(Residue p, std::size_t nvars, Residue c);
    static FpPoly variable(Residue p, std::size_t nvars, std::size_t i);

    Residue p() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Monomial& m, Residue c);
    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(Residue c) const;
    FpPoly pow(unsigned e) const;

    Residue evaluate(const FpVector& point) const;
    // Replace variable i by the polynomial subs[i] (all in a common ring).
    FpPoly substitute(const std::vector<FpPoly>& subs) const;

    // Coordinates of a homogeneous polynomial in a monomial basis of its degree.
    FpVector to_vector(const MonomialBasis& basis) const;
    static FpPoly from_vector(Residue p, const MonomialBasis& basis, const FpVector& v);

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    Residue p_ = 2;
    std::size_t nvars_ = 0;
    Terms terms_;
};

} // namespace frobcoh
