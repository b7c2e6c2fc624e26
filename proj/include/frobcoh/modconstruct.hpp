#pragma once

// Restricted modules: one action matrix per basis element of the Lie
// algebra. Polynomial pieces are built as symmetric powers of the coadjoint
// module; quotients by homogeneous ideals reuse the same machinery.
//
// Only single degrees are ever built. The adjoint action preserves degree,
// so H^1 of a graded module is the direct sum of the H^1 of its pieces and a
// degree-by-degree computation loses nothing up to the cutoff.

#include "frobcoh/exactlin.hpp"
#include "frobcoh/liealg.hpp"
#include "frobcoh/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobcoh {

class HypothesisGate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RestrictedModule {
    Residue p = 2;
    std::size_t dim = 0;
    std::size_t g_dim = 0;
    std::vector<FpMatrix> action; // action[i] = rho(b_i), dim x dim
    std::optional<int> grading;
    std::string label;
    // Integer matrices reducing to `action` mod p, when known.
    std::optional<std::vector<IntMatrix>> integral_lift;

    FpMatrix stacked_action() const; // (g_dim * dim) x dim
};

RestrictedModule trivial_module(const RestrictedLieAlgebra& g, std::size_t dim = 1);
RestrictedModule natural_module(const RestrictedLieAlgebra& g);
RestrictedModule adjoint_module(const RestrictedLieAlgebra& g);
RestrictedModule coadjoint_module(const RestrictedLieAlgebra& g);
RestrictedModule dual_module(const RestrictedModule& m);
RestrictedModule tensor_module(const RestrictedModule& a, const RestrictedModule& b);
RestrictedModule direct_sum(const RestrictedModule& a, const RestrictedModule& b);
// S^d(M) on the monomial basis of MonomialBasis(dim M, d).
RestrictedModule sym_power(const RestrictedModule& m, unsigned d);
RestrictedModule sym_power_natural(const RestrictedLieAlgebra& g, unsigned i);
// Same module with the Lie-algebra basis reordered as in g.permuted(perm).
RestrictedModule permuted_module(const RestrictedModule& m, std::span<const std::size_t> perm);

// Degree-d piece of k[g] = S(g*), the variables being the coordinate
// functions x_1..x_m dual to the basis of g.
struct PolyPiece {
    RestrictedModule module;
    MonomialBasis basis;

    FpPoly to_poly(const FpVector& v) const { return FpPoly::from_vector(module.p, basis, v); }
    FpVector to_vector(const FpPoly& f) const { return f.to_vector(basis); }
};

PolyPiece coordring_piece(const RestrictedLieAlgebra& g, unsigned d);

// Product of a degree-a element and a degree-b element of k[g].
FpVector multiply(const PolyPiece& a, const FpVector& x, const PolyPiece& b, const FpVector& y,
                  const PolyPiece& target);

// Degree-d piece of k[g]/I for a homogeneous ideal I = (generators).
//
// The ideal piece I_d is row reduced; its pivot monomials are eliminated and
// the remaining ("standard") monomials form the quotient basis. `projection`
// sends an ambient vector to quotient coordinates, `section` embeds the
// standard monomials.
struct QuotientPiece {
    PolyPiece ambient;
    RestrictedModule module;
    FpMatrix ideal_basis; // ambient_dim x dim I_d, canonical echelon rows as columns
    FpMatrix projection;  // dim x ambient_dim
    FpMatrix section;     // ambient_dim x dim
    std::vector<std::size_t> standard; // ambient indices of the quotient basis

    // g . I_d within I_d, checked exactly.
    bool ideal_stable() const;
};

QuotientPiece quotient_piece(const RestrictedLieAlgebra& g, unsigned d, const std::vector<IntPoly>& generators,
                             const std::string& label);

// k[N]_d: quotient by the Chevalley generators. Refuses (HypothesisGate)
// unless (H1)-(H3) hold for a full algebra.
QuotientPiece nilcone_piece(const RestrictedLieAlgebra& g, unsigned d);
// k[u]_d for a Borel algebra: quotient by the torus coordinate functions.
QuotientPiece u_piece(const RestrictedLieAlgebra& b, unsigned d);

// Monomial families of k[g] used by the invariant-theory checks.
enum class Family { coordring, nilcone, u };
std::string family_name(Family f);
QuotientPiece family_piece(const RestrictedLieAlgebra& g, Family f, unsigned d);

// Filtration pieces of coordinate rings of groups, with the conjugation
// action of the Lie algebra.
enum class GroupKind { sl2, borel_sl2 };

struct GroupPiece {
    GroupKind group;
    unsigned level = 0;
    RestrictedModule module;
    std::vector<std::string> labels; // human-readable basis monomials
};

// The matching Lie algebra: sl_2, or the lower-triangular Borel of sl_2.
RestrictedLieAlgebra group_lie_algebra(GroupKind group, Residue p);

// SL_2: k[a,b,c,d]/(ad - bc - 1), normal-form monomials (no factor ad) of
// total degree <= d, ordered by degree and then deg-lex.
// B: k[a, a^-1, c] with a^m c^j, |m| + j <= d, ordered by |m| + j.
// Both orders make the inclusion F_d -> F_d' the block [I; 0].
GroupPiece group_coordring_piece(GroupKind group, Residue p, unsigned d);
FpMatrix group_inclusion(const GroupPiece& from, const GroupPiece& to);

struct ModuleCheck {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // (i, j); (i, i) for restrictedness
    std::string detail;
};

ModuleCheck check_module_axioms(const RestrictedModule& m, const RestrictedLieAlgebra& g);

// Coefficients of the Hilbert series of k[g] and of (k[N] series) / prod(1 - t^deg s_i)
// up to dmax; the identity holds when the two vectors agree.
struct HilbertComparison {
    std::vector<std::size_t> coordring;
    std::vector<std::size_t> nilcone;
    std::vector<std::size_t> predicted;
    bool match = false;
};
HilbertComparison hilbert_identity(const RestrictedLieAlgebra& g, unsigned dmax);

} // namespace frobcoh
