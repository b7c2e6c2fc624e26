#include "frobcoh/modconstruct.hpp"

#include <doctest.h>

using namespace frobcoh;

namespace {

RestrictedLieAlgebra algebra(const char* kind, unsigned n, Residue p)
{
    return construct(parse_kind(kind, n), p);
}

} // namespace

TEST_CASE("every constructor yields a restricted module")
{
    for (Residue p : {2u, 3u, 5u}) {
        for (const char* kind : {"gl", "sl", "borel-of-gl"}) {
            auto g = algebra(kind, 2, p);
            std::vector<RestrictedModule> mods{trivial_module(g, 2), natural_module(g), adjoint_module(g),
                                               coadjoint_module(g), dual_module(natural_module(g)),
                                               sym_power_natural(g, 4), coordring_piece(g, 3).module};
            mods.push_back(tensor_module(natural_module(g), dual_module(natural_module(g))));
            mods.push_back(direct_sum(natural_module(g), adjoint_module(g)));
            mods.push_back(sym_power(adjoint_module(g), 2));
            for (const auto& m : mods) {
                CAPTURE(m.label);
                CAPTURE(p);
                auto check = check_module_axioms(m, g);
                CHECK(check.ok);
            }
        }
    }
}

TEST_CASE("a broken action is caught with a witness")
{
    auto g = algebra("sl", 2, 3);
    auto m = natural_module(g);
    m.action[0] = m.action[0].scaled(2);
    auto check = check_module_axioms(m, g);
    CHECK_FALSE(check.ok);
    CHECK(check.witness.has_value());
}

TEST_CASE("dimensions of polynomial pieces")
{
    auto g = algebra("gl", 2, 5);
    CHECK(coordring_piece(g, 0).module.dim == 1);
    CHECK(coordring_piece(g, 3).module.dim == 20);
    CHECK(sym_power_natural(g, 6).dim == 7);
    CHECK(tensor_module(natural_module(g), adjoint_module(g)).dim == 8);
}

TEST_CASE("nilcone pieces of gl_2 and sl_2")
{
    // k[N] for 2x2 matrices is a quadric cone's coordinate ring: dims 2d+1
    for (Residue p : {2u, 3u, 5u}) {
        auto g = algebra("gl", 2, p);
        for (unsigned d = 0; d <= 6; ++d) {
            auto piece = nilcone_piece(g, d);
            CHECK(piece.module.dim == 2 * d + 1);
            CHECK(piece.ideal_stable());
            CHECK(check_module_axioms(piece.module, g).ok);
            CHECK((piece.projection * piece.section) == FpMatrix::identity(p, piece.module.dim));
        }
    }
    auto s = algebra("sl", 2, 3);
    for (unsigned d = 0; d <= 6; ++d) CHECK(nilcone_piece(s, d).module.dim == 2 * d + 1);
}

TEST_CASE("nilcone and u pieces are gated")
{
    CHECK_THROWS_AS(nilcone_piece(algebra("sl", 2, 2), 2), HypothesisGate);
    CHECK_THROWS_AS(nilcone_piece(algebra("borel-of-gl", 2, 3), 2), HypothesisGate);
    CHECK_THROWS_AS(u_piece(algebra("gl", 2, 3), 2), HypothesisGate);
    auto b = algebra("borel-of-gl", 3, 3);
    for (unsigned d = 0; d <= 4; ++d) {
        auto piece = u_piece(b, d);
        // k[u] is a polynomial ring in the 3 strictly lower coordinates
        CHECK(piece.module.dim == binomial(d + 2, 2));
        CHECK(piece.ideal_stable());
    }
}

TEST_CASE("Hilbert series identity")
{
    for (auto [kind, p] : {std::pair{"gl", 2u}, std::pair{"gl", 3u}, std::pair{"sl", 3u}, std::pair{"sl", 5u}}) {
        auto g = algebra(kind, 2, p);
        auto cmp = hilbert_identity(g, 10);
        CHECK(cmp.match);
        CHECK(cmp.coordring.size() == 11);
        CHECK(cmp.coordring == cmp.predicted);
    }
}

TEST_CASE("group coordinate ring filtrations")
{
    const std::vector<std::size_t> sl2{1, 5, 14, 30};
    for (unsigned d = 0; d < sl2.size(); ++d) {
        auto piece = group_coordring_piece(GroupKind::sl2, 3, d);
        CHECK(piece.module.dim == sl2[d]);
        CHECK(piece.labels.size() == sl2[d]);
        CHECK(check_module_axioms(piece.module, group_lie_algebra(GroupKind::sl2, 3)).ok);
        auto b = group_coordring_piece(GroupKind::borel_sl2, 3, d);
        CHECK(b.module.dim == (d + 1) * (d + 1));
        CHECK(check_module_axioms(b.module, group_lie_algebra(GroupKind::borel_sl2, 3)).ok);
    }
    // F_1 -> F_3 is a block inclusion that intertwines the actions
    auto lo = group_coordring_piece(GroupKind::sl2, 3, 1);
    auto hi = group_coordring_piece(GroupKind::sl2, 3, 3);
    auto inc = group_inclusion(lo, hi);
    for (std::size_t i = 0; i < lo.module.action.size(); ++i)
        CHECK(hi.module.action[i] * inc == inc * lo.module.action[i]);
}

TEST_CASE("permuted modules follow the permuted algebra")
{
    auto g = algebra("gl", 2, 3);
    std::vector<std::size_t> perm{2, 0, 3, 1};
    auto h = g.permuted(perm);
    auto m = permuted_module(coordring_piece(g, 2).module, perm);
    CHECK(check_module_axioms(m, h).ok);
}
