#pragma once

// Finite-dimensional augmented algebras and Ext^1_A(k, M).
//
// For an augmented algebra A with counit e, an e-derivation is a linear map
// f: A -> M with f(ab) = a.f(b) + e(b) f(a). Restricting f to the
// augmentation ideal A+ gives Hom_A(A+, M), and the sequence
// 0 -> A+ -> A -> k -> 0 identifies e-derivations modulo the maps
// f_m(a) = a.m - e(a) m with Ext^1_A(k, M). For A = u(g) or Dist(G_r) this is
// H^1(G_1, M) or H^1(G_r, M).
//
// It suffices to impose the derivation rule for a in a generating set: the
// rule is linear in a, and if it holds for a and a' (and all b) then
//   f(aa'b) = a.f(a'b) + e(a'b) f(a) = aa'.f(b) + e(b) (a.f(a') + e(a') f(a))
//           = aa'.f(b) + e(b) f(aa'),
// so the set of good a is a subalgebra; together with f(1) = 0 it is all of A.

#include "frobcoh/cohomology.hpp"
#include "frobcoh/exactlin.hpp"
#include "frobcoh/invariants.hpp"
#include "frobcoh/liealg.hpp"
#include "frobcoh/modconstruct.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobcoh {

// Left multiplication by a fixed element, stored by columns:
// cols[j] lists the nonzero coordinates of (element * x_j).
struct LeftMult {
    std::vector<std::vector<std::pair<std::uint32_t, Residue>>> cols;

    FpVector apply(const FpVector& v, Residue p) const;
    FpMatrix to_dense(Residue p) const;
};

struct AugmentedAlgebra {
    Residue p = 2;
    unsigned r = 1; // Frobenius level
    std::size_t dim = 0;
    std::string label;
    std::vector<std::string> labels; // basis labels
    std::size_t unit = 0;            // index of the identity basis element
    FpVector counit;

    // Atoms: elements whose left multiplication is tabulated. Each basis
    // element is the product of the atoms in its word, applied to 1 from
    // the right: x_j = atom[w_0] * atom[w_1] * ... * 1.
    std::vector<std::string> atom_labels;
    std::vector<LeftMult> atoms;
    std::vector<std::size_t> atom_basis_index; // each atom is a basis element
    std::vector<std::vector<std::size_t>> words;
    std::vector<std::size_t> generators; // atom indices generating A

    // (x_i * v) for a coordinate vector v.
    FpVector left_multiply(std::size_t i, const FpVector& v) const;
    FpVector basis_vector(std::size_t i) const;
};

// Exhaustive or sampled consistency checks; nullopt when everything holds.
// Covers: words reproduce the basis, the counit is multiplicative on
// (atom, basis) pairs, associativity on `samples` random triples, and the
// generators generate A.
std::optional<std::string> check_algebra(const AugmentedAlgebra& a, std::size_t samples, std::uint64_t seed);

// A module over an augmented algebra: one matrix per atom and the induced
// matrix of every basis element.
struct AlgebraModule {
    std::string label;
    std::size_t dim = 0;
    std::vector<FpMatrix> atom_action;
    std::vector<FpMatrix> basis_action;
};

AlgebraModule module_from_atoms(const AugmentedAlgebra& a, std::vector<FpMatrix> atom_action, std::string label);
// rho(g x_b) = rho(g) rho(x_b) for all generators g and basis elements b.
std::optional<std::string> check_algebra_module(const AugmentedAlgebra& a, const AlgebraModule& m);

// u(g): PBW monomials b_1^a_1 ... b_m^a_m with 0 <= a_i < p, mixed radix
// index sum a_i p^(i-1); the atoms are the basis elements b_i.
AugmentedAlgebra restricted_env(const RestrictedLieAlgebra& g, std::size_t dim_cap = 2000);
AlgebraModule env_module(const AugmentedAlgebra& u, const RestrictedModule& m);

enum class DistVariant { full, borel };

// Dist((SL_2)_r) with basis f^(a) binom(h, b) e^(c), a, b, c < q = p^r, at
// index (a q + b) q + c. The Borel variant keeps f and h only (index a q + b).
// Atoms F_k, Hb_k (and E_k) for k < q; generators are those with k = p^s.
AugmentedAlgebra dist_sl2(Residue p, unsigned r, DistVariant variant = DistVariant::full, std::size_t dim_cap = 2000);

// Atom matrices from an integral lift of an sl_2 (or Borel) module: divided
// powers of e and f computed over Z, binom(h, k) on weight vectors.
AlgebraModule divided_power_action(const AugmentedAlgebra& dist, const RestrictedLieAlgebra& g,
                                   const RestrictedModule& m);

H1Report hopf_h1(const AugmentedAlgebra& a, const AlgebraModule& m);

// Common kernel of the generators (all of which lie in the augmentation ideal).
InvariantBasis gr_invariants(const AugmentedAlgebra& dist, const AlgebraModule& m);

} // namespace frobcoh
