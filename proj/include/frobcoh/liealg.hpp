#pragma once

// Restricted Lie algebras of the classical groups, built from faithful
// matrix realizations over F_p.
//
// Basis orders (frozen; reports depend on them):
//   gl_n        e_ij, row-major over (i, j).
//   sl_n        row-major over (i, j); the diagonal slot (i, i), i < n, holds
//               h_i = e_ii - e_{i+1,i+1}; the slot (n, n) is skipped.
//   sp_2n/so_n  X = J^{-1} S with S running over the symmetric (sp) or
//               antisymmetric (so) elementary matrices E_ij + E_ji (i < j),
//               E_ii (sp only), E_ij - E_ji (so), row-major over i <= j.
//               J is antidiagonal: all ones for so; +1 on the first n rows
//               and -1 on the last n rows for sp_2n.
//   borel       the basis elements of the ambient algebra that are lower
//               triangular, in ambient order; nilradical keeps the strictly
//               lower triangular ones, torus the diagonal ones.
//
// The p-th power map of every algebra here is the matrix p-th power of the
// realization. For sl_n this stays traceless because tr(x^p) = tr(x)^p in
// characteristic p.

#include "frobcoh/exactlin.hpp"
#include "frobcoh/poly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcoh {

enum class ClassicalType { gl, sl, sp, so };
enum class Part { full, borel, nilradical, torus };

struct AlgebraKind {
    ClassicalType type = ClassicalType::gl;
    Part part = Part::full;
    unsigned n = 2; // gl_n, sl_n, sp_2n, so_n

    friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

// "gl", "sl", "sp", "so", optionally prefixed by "borel-of-", "nilradical-of-"
// or "torus-of-".
AlgebraKind parse_kind(const std::string& text, unsigned n);
std::string kind_name(const AlgebraKind& kind);
std::string type_name(ClassicalType t);

class UnsupportedCharacteristic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RestrictedLieAlgebra {
public:
    Residue p() const { return p_; }
    std::size_t dim() const { return labels_.size(); }
    std::size_t natural_dim() const { return natural_dim_; }
    const AlgebraKind& kind() const { return kind_; }
    // Number of diagonal basis elements of the full ambient algebra.
    std::size_t rank() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<IntMatrix>& integral_realization() const { return int_realization_; }
    const std::vector<FpMatrix>& realization() const { return realization_; }

    // [b_i, b_j] = sum_k c(i, j, k) b_k
    Residue structure_constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return constants_[(i * dim() + j) * dim() + k];
    }
    std::int64_t integral_structure_constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return int_constants_[(i * dim() + j) * dim() + k];
    }
    // Column i holds the coordinates of b_i^[p].
    const FpMatrix& pmap() const { return pmap_; }

    FpMatrix element_matrix(const FpVector& x) const;
    std::optional<FpVector> coordinates(const FpMatrix& x) const;
    FpVector bracket(const FpVector& x, const FpVector& y) const;
    FpVector pth_power(const FpVector& x) const;
    // Matrix of y -> [x, y].
    FpMatrix ad(const FpVector& x) const;
    FpMatrix ad_basis(std::size_t i) const;
    FpVector basis_vector(std::size_t i) const;

    std::vector<std::size_t> diagonal_indices() const;
    std::vector<std::size_t> strictly_lower_indices() const;
    // Index of the basis element with the given label.
    std::optional<std::size_t> index_of(const std::string& label) const;

    // New basis b'_i = b_{perm[i]}.
    RestrictedLieAlgebra permuted(std::span<const std::size_t> perm) const;

    friend RestrictedLieAlgebra construct(const AlgebraKind& kind, Residue p);

private:
    RestrictedLieAlgebra(AlgebraKind kind, Residue p, std::size_t natural_dim, std::vector<std::string> labels,
                         std::vector<IntMatrix> realization, IntMatrix coord_map);

    AlgebraKind kind_;
    Residue p_;
    std::size_t natural_dim_;
    std::vector<std::string> labels_;
    std::vector<IntMatrix> int_realization_;
    std::vector<FpMatrix> realization_;
    IntMatrix coord_map_; // dim x N^2: coordinates of a realization matrix
    std::vector<Residue> constants_;
    std::vector<std::int64_t> int_constants_;
    FpMatrix pmap_;
};

// Throws UnsupportedCharacteristic for so or sp in characteristic 2, and
// std::invalid_argument for bad rank parameters.
RestrictedLieAlgebra construct(const AlgebraKind& kind, Residue p);

struct HypothesisReport {
    bool h1_simply_connected = false; // from the construction table
    bool h2_good_prime = false;
    bool h3_form_nondegenerate = false;
    bool overall = false;
    std::string h1_note;
    std::string h2_note;
    std::string h3_note;
    // First failing hypothesis, empty when overall holds.
    std::string failure_reason() const;
};

HypothesisReport check_hypotheses(const RestrictedLieAlgebra& g);

// Gram matrix tr(rho_i rho_j) of the natural realization.
FpMatrix trace_form_gram(const RestrictedLieAlgebra& g);

// Exhaustive structural checks; each returns a description of the first
// violation or nullopt.
std::optional<std::string> check_lie_axioms(const RestrictedLieAlgebra& g);
std::optional<std::string> check_restrictedness(const RestrictedLieAlgebra& g);

std::size_t centralizer_dim(const RestrictedLieAlgebra& g, const FpVector& x);

struct CentralizerSample {
    std::size_t minimum = 0;
    std::size_t samples = 0;
    std::size_t attained = 0; // how many samples hit the minimum
};

// Minimum of dim g_x over random x supported on `support` (basis indices),
// e.g. strictly_lower_indices() for nilpotent elements.
CentralizerSample sampled_min_centralizer_dim(const RestrictedLieAlgebra& g, std::span<const std::size_t> support,
                                              std::size_t samples, std::uint64_t seed);

// Uniform residue from a 64-bit engine; avoids the implementation-defined
// std::uniform_int_distribution so samples are reproducible everywhere.
inline Residue random_residue(std::mt19937_64& rng, Residue p)
{
    return static_cast<Residue>(rng() % p);
}

} // namespace frobcoh
