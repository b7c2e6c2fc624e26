#include "frobcoh/invariants.hpp"

#include <doctest.h>

using namespace frobcoh;

namespace {

RestrictedLieAlgebra algebra(const char* kind, unsigned n, Residue p)
{
    return construct(parse_kind(kind, n), p);
}

} // namespace

TEST_CASE("small invariant spaces")
{
    auto g = algebra("gl", 2, 5);
    CHECK(invariants(trivial_module(g, 3)).dim() == 3);
    CHECK(invariants(natural_module(g)).dim() == 0);
    // k[gl_2]_1 = gl_2^*: only the trace is invariant
    CHECK(invariants(coordring_piece(g, 1).module).dim() == 1);
    // k[gl_2]_2: tr^2 and det
    CHECK(invariants(coordring_piece(g, 2).module).dim() == 2);
    // adjoint of sl_2 at p=2 has the centre spanned by h
    CHECK(invariants(adjoint_module(algebra("sl", 2, 2))).dim() == 1);
}

TEST_CASE("common kernel of commuting projections")
{
    auto a = FpMatrix::from_rows(3, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    auto b = FpMatrix::from_rows(3, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    auto k = common_kernel(3, 3, {a, b});
    CHECK(k.dim() == 1);
    CHECK(k.basis(2, 0) != 0);
}

TEST_CASE("invariants of k[N] are p-th powers")
{
    for (auto [kind, p] : {std::pair{"gl", 2u}, std::pair{"gl", 3u}, std::pair{"sl", 3u}, std::pair{"sl", 5u}}) {
        auto checks = lemma11_check(algebra(kind, 2, p), Family::nilcone, 8);
        REQUIRE(checks.size() == 9);
        for (const auto& c : checks) {
            CAPTURE(kind);
            CAPTURE(p);
            CAPTURE(c.degree);
            CHECK(c.ok);
            CHECK(c.lhs_dim == c.rhs_dim);
            if (c.degree % p != 0) CHECK(c.lhs_dim == 0);
        }
    }
}

TEST_CASE("invariants of k[u] are p-th powers")
{
    for (Residue p : {2u, 3u}) {
        auto checks = lemma11_check(algebra("borel-of-gl", 2, p), Family::u, 10);
        for (const auto& c : checks) CHECK(c.ok);
        // k[u] for the 2x2 Borel is k[x]; its p-th powers live in degrees divisible by p
        CHECK(checks[p].rhs_dim == 1);
        CHECK(checks[1].rhs_dim == 0);
    }
}

TEST_CASE("restriction to the nilcone is onto on invariants")
{
    for (auto [kind, p] : {std::pair{"gl", 2u}, std::pair{"gl", 3u}, std::pair{"sl", 3u}, std::pair{"sl", 5u}}) {
        for (const auto& c : restriction_surjectivity_check(algebra(kind, 2, p), 8)) {
            CHECK(c.ok);
            CHECK(c.lhs_dim == c.rhs_dim);
        }
    }
}

TEST_CASE("frobenius power subspace vanishes off multiples of q")
{
    auto g = algebra("gl", 2, 3);
    CHECK(frobenius_power_subspace(g, Family::nilcone, 4, 3).cols() == 0);
    CHECK(frobenius_power_subspace(g, Family::nilcone, 3, 3).cols() == 3);
    CHECK(frobenius_power_subspace(g, Family::coordring, 0, 9).cols() == 1);
}

TEST_CASE("Chevalley generators are invariant and Weyl symmetric")
{
    for (const char* kind : {"gl", "sl"}) {
        for (unsigned n : {2u, 3u}) {
            for (Residue p : {2u, 3u, 5u}) {
                auto g = algebra(kind, n, p);
                auto data = chevalley_generators(g);
                CAPTURE(kind);
                CAPTURE(n);
                CAPTURE(p);
                CHECK_FALSE(verify_chevalley(g, data).has_value());
                CHECK_FALSE(data.generating_set_assumed);
                CHECK(data.s.size() == (std::string(kind) == "gl" ? n : n - 1));
            }
        }
    }
    for (auto [kind, n] : {std::pair{"sp", 1u}, std::pair{"sp", 2u}, std::pair{"so", 3u}, std::pair{"so", 4u},
                           std::pair{"so", 5u}}) {
        auto g = algebra(kind, n, 3);
        auto data = chevalley_generators(g);
        CAPTURE(kind);
        CAPTURE(n);
        CHECK_FALSE(verify_chevalley(g, data).has_value());
        CHECK(data.generating_set_assumed);
    }
    // so_4: degrees 2 and 2 (the quadratic invariant and the Pfaffian)
    CHECK(chevalley_generators(algebra("so", 4, 5)).degrees == std::vector<unsigned>{2, 2});
    auto b = algebra("borel-of-gl", 3, 3);
    auto bd = chevalley_generators(b);
    CHECK(bd.xi.size() == 3);
    CHECK_FALSE(verify_chevalley(b, bd).has_value());
}

TEST_CASE("discriminant separates regular semisimple from nilpotent")
{
    auto g = algebra("gl", 2, 5);
    FpVector diag(g.dim(), 0);
    diag[*g.index_of("e11")] = 1;
    diag[*g.index_of("e22")] = 2;
    CHECK(frs_value(g, diag) != 0);
    FpVector nil(g.dim(), 0);
    nil[*g.index_of("e21")] = 1;
    CHECK(frs_value(g, nil) == 0);
    auto data = chevalley_generators(g);
    REQUIRE(data.frs.has_value());
    // symbolic and numeric discriminants agree
    auto f = FpPoly::from_int(*data.frs, 5);
    CHECK(f.evaluate(diag) == frs_value(g, diag));
}
