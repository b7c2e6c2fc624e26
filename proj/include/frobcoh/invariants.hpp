#pragma once

// Invariants of restricted modules, p-th power subspaces of polynomial
// pieces, and the classical invariant polynomials of gl, sl, sp and so.

#include "frobcoh/exactlin.hpp"
#include "frobcoh/liealg.hpp"
#include "frobcoh/modconstruct.hpp"
#include "frobcoh/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frobcoh {

struct InvariantBasis {
    std::size_t module_dim = 0;
    std::size_t stacked_rank = 0; // rank of the stacked action matrix
    FpMatrix basis;               // module_dim x dim, columns span M^g

    std::size_t dim() const { return basis.cols(); }
};

InvariantBasis invariants(const RestrictedModule& m);
// Common kernel of square matrices acting on F_p^dim.
InvariantBasis common_kernel(Residue p, std::size_t dim, const std::vector<FpMatrix>& ops);

// Span of { f^q : f in piece(d / q) } inside piece(d), in quotient
// coordinates; the zero subspace when q does not divide d. Over F_p,
// (sum c_i m_i)^q = sum c_i m_i^q, so the q-th powers of the standard
// monomials span it.
FpMatrix frobenius_power_subspace(const RestrictedLieAlgebra& g, Family family, unsigned d, std::uint64_t q);
// Same, for pieces the caller already holds.
FpMatrix frobenius_power_subspace(const QuotientPiece& low, const QuotientPiece& high, std::uint64_t q);

struct DegreeCheck {
    unsigned degree = 0;
    std::size_t lhs_dim = 0; // invariants, or the image for surjectivity
    std::size_t rhs_dim = 0; // p-th powers, or the target invariants
    bool ok = false;
};

// M^g = (p-th powers) in every degree d <= dmax.
std::vector<DegreeCheck> lemma11_check(const RestrictedLieAlgebra& g, Family family, unsigned dmax);
// The quotient map k[g]_d -> k[N]_d carries k[g]_d^g onto k[N]_d^g.
std::vector<DegreeCheck> restriction_surjectivity_check(const RestrictedLieAlgebra& g, unsigned dmax);

struct ChevalleyData {
    // Polynomials in the coordinate functions of g (one variable per basis element).
    std::vector<IntPoly> s;
    std::vector<unsigned> degrees;
    std::vector<IntPoly> xi; // Borel algebras: torus coordinate functions
    std::optional<IntPoly> frs; // gl_n, n <= 3: discriminant of det(tI - x)
    // True for sp/so, where completeness of the list as a generating set is
    // taken on trust rather than checked.
    bool generating_set_assumed = false;
};

// Coefficients e_1..e_N of det(tI - x) up to sign (sums of principal
// minors), as integer polynomials in the coordinates.
std::vector<IntPoly> characteristic_coefficients(const RestrictedLieAlgebra& g);

// Full algebras: gl_n e_1..e_n; sl_n e_2..e_n; sp_2n e_2, e_4, ..., e_2n;
// so_2n+1 e_2..e_2n (even); so_2n the even e_i below 2n plus the Pfaffian
// of J x. Borel algebras: xi only.
ChevalleyData chevalley_generators(const RestrictedLieAlgebra& g);

// Exact checks: every s_i is g-invariant and its restriction to the diagonal
// torus is fixed by the Weyl generators; every xi is invariant.
std::optional<std::string> verify_chevalley(const RestrictedLieAlgebra& g, const ChevalleyData& data);

// Discriminant of det(tI - x) for gl_n or sl_n, evaluated at x, computed as
// the determinant of the Hankel matrix of power traces tr(x^(i+j)).
Residue frs_value(const RestrictedLieAlgebra& g, const FpVector& x);

} // namespace frobcoh
