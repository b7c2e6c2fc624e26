#pragma once

// H^1(G_1, M) as restricted derivations g -> M modulo inner derivations.
//
// A linear map D: g -> M is stored as a vector of length dim(g) * dim(M);
// the coordinate of D(b_l) in direction k sits at index l * dim(M) + k, so
// the inner derivation of u is exactly the stacked action applied to u.

#include "frobcoh/exactlin.hpp"
#include "frobcoh/liealg.hpp"
#include "frobcoh/modconstruct.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcoh {

class ModuleRefused : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct H1Context {
    std::string algebra; // kind name, or an algebra label
    unsigned n = 0;
    Residue p = 2;
    unsigned r = 1;
    std::string module;
    std::optional<int> degree;
};

struct H1Report {
    H1Context context;
    std::size_t der = 0;   // derivations (bracket constraints only)
    std::size_t rder = 0;  // restricted derivations
    std::size_t inner = 0;
    std::size_t inv = 0;   // dim M^g
    std::size_t h1 = 0;
    double seconds = 0.0;
};

struct DerivationSpace {
    std::size_t g_dim = 0;
    std::size_t m_dim = 0;
    bool restricted = false;
    FpMatrix basis; // (g_dim * m_dim) x k

    std::size_t dim() const { return basis.cols(); }
    // Column `i` of the basis as a dim(M) x dim(g) matrix.
    FpMatrix as_map(std::size_t i) const;
};

LinearSystem derivation_system(const RestrictedLieAlgebra& g, const RestrictedModule& m, bool restricted,
                               std::size_t sparse_threshold = kDefaultSparseThreshold);
DerivationSpace derivations(const RestrictedLieAlgebra& g, const RestrictedModule& m, bool restricted,
                            std::size_t sparse_threshold = kDefaultSparseThreshold);

// Refuses (ModuleRefused) when the module axioms fail. Verifies that every
// inner derivation satisfies the restricted system before subtracting.
H1Report h1_restricted(const RestrictedLieAlgebra& g, const RestrictedModule& m,
                       std::size_t sparse_threshold = kDefaultSparseThreshold);

// D(x^[p]) = rho(x)^(p-1) D(x) for random non-basis x and every basis
// derivation in the space. Returns the number of failures.
std::size_t restricted_condition_failures(const RestrictedLieAlgebra& g, const RestrictedModule& m,
                                          const DerivationSpace& space, std::size_t samples, std::uint64_t seed);

// Classes of H^1(G_1, F_level) pushed along F_level -> F_d' for d' up to the
// budget. A class dies at d' when its image is an inner derivation there.
struct InducedMapReport {
    GroupKind group = GroupKind::sl2;
    Residue p = 3;
    unsigned level = 0;
    unsigned budget = 0;
    std::size_t h1 = 0;
    std::vector<std::optional<unsigned>> dies_at; // per representative class
    std::vector<std::size_t> surviving;           // dim of the image in H^1(F_d'), d' = level..budget
    bool all_die = false;
};

InducedMapReport h1_induced_map(GroupKind group, Residue p, unsigned level, unsigned budget);

} // namespace frobcoh
