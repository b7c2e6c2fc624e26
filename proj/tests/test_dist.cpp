#include "frobcoh/dist.hpp"

#include <doctest.h>

using namespace frobcoh;

namespace {

RestrictedLieAlgebra algebra(const char* kind, unsigned n, Residue p)
{
    return construct(parse_kind(kind, n), p);
}

std::size_t index_of_label(const AugmentedAlgebra& a, const std::string& label)
{
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (a.labels[i] == label) return i;
    FAIL("missing label " << label);
    return 0;
}

} // namespace

TEST_CASE("restricted enveloping algebras")
{
    auto g = algebra("sl", 2, 2);
    auto u = restricted_env(g);
    CHECK(u.dim == 8);
    CHECK_FALSE(check_algebra(u, 64, 1).has_value());
    CHECK(u.counit[u.unit] == 1);
    auto big = restricted_env(algebra("gl", 2, 3));
    CHECK(big.dim == 81);
    CHECK_FALSE(check_algebra(big, 64, 2).has_value());
}

TEST_CASE("hopf_h1 over u(g) agrees with h1_restricted")
{
    for (Residue p : {2u, 3u}) {
        for (const char* kind : {"sl", "gl", "borel-of-gl"}) {
            auto g = algebra(kind, 2, p);
            auto u = restricted_env(g);
            std::vector<RestrictedModule> mods{trivial_module(g), natural_module(g), sym_power_natural(g, 2),
                                               adjoint_module(g), coordring_piece(g, 2).module};
            for (const auto& m : mods) {
                CAPTURE(kind);
                CAPTURE(p);
                CAPTURE(m.label);
                auto am = env_module(u, m);
                CHECK_FALSE(check_algebra_module(u, am).has_value());
                CHECK(hopf_h1(u, am).h1 == h1_restricted(g, m).h1);
            }
        }
    }
    auto t = algebra("torus-of-sl", 2, 3);
    CHECK(hopf_h1(restricted_env(t), env_module(restricted_env(t), trivial_module(t))).h1 == 0);
}

TEST_CASE("distribution algebra of SL_2")
{
    auto d = dist_sl2(2, 2);
    CHECK(d.dim == 64);
    CHECK_FALSE(check_algebra(d, 128, 3).has_value());
    CHECK(d.generators.size() == 6);
    auto b = dist_sl2(3, 1, DistVariant::borel);
    CHECK(b.dim == 9);
    CHECK_FALSE(check_algebra(b, 64, 4).has_value());
    CHECK_THROWS_AS(dist_sl2(5, 2, DistVariant::full, 2000), std::length_error);

    // e^(1) e^(1) = 2 e^(2)
    auto d5 = dist_sl2(5, 1);
    const auto e1 = index_of_label(d5, "e(1)");
    auto prod = d5.left_multiply(e1, d5.basis_vector(e1));
    auto expect = d5.basis_vector(index_of_label(d5, "e(2)"));
    for (auto& v : expect) v = (2 * v) % 5;
    CHECK(prod == expect);
}

TEST_CASE("divided powers on small modules")
{
    auto g = algebra("sl", 2, 2);
    auto d = dist_sl2(2, 2);
    auto v = divided_power_action(d, g, natural_module(g));
    CHECK_FALSE(check_algebra_module(d, v).has_value());
    const auto e2 = index_of_label(d, "e(2)");
    CHECK(v.basis_action[e2].is_zero());

    // on S^2 V, e^(2) sends the lowest weight vector to the highest
    auto s2 = divided_power_action(d, g, sym_power_natural(g, 2));
    const auto& m = s2.basis_action[e2];
    CHECK(m.is_zero() == false);
    CHECK(rank(m) == 1);
}

TEST_CASE("Dist at level one matches u(sl_2)")
{
    for (Residue p : {2u, 3u, 5u}) {
        auto g = algebra("sl", 2, p);
        auto d = dist_sl2(p, 1);
        for (unsigned i = 0; i <= 12; ++i) {
            auto m = sym_power_natural(g, i);
            CHECK(hopf_h1(d, divided_power_action(d, g, m)).h1 == h1_restricted(g, m).h1);
        }
    }
}

TEST_CASE("second Frobenius kernel criterion at p = 2")
{
    auto g = algebra("sl", 2, 2);
    auto d = dist_sl2(2, 2);
    for (unsigned i = 0; i <= 6; ++i) {
        CAPTURE(i);
        const bool expected = (i + 2) % 4 == 0 || (i + 4) % 4 == 0;
        CHECK((hopf_h1(d, divided_power_action(d, g, sym_power_natural(g, i))).h1 != 0) == expected);
    }
}

TEST_CASE("G_r invariants")
{
    auto g = algebra("sl", 2, 3);
    auto d1 = dist_sl2(3, 1);
    CHECK(gr_invariants(d1, divided_power_action(d1, g, natural_module(g))).dim() == 0);
    CHECK(gr_invariants(d1, divided_power_action(d1, g, trivial_module(g, 2))).dim() == 2);
    for (unsigned deg = 0; deg <= 4; ++deg) {
        auto m = coordring_piece(g, deg).module;
        CHECK(gr_invariants(d1, divided_power_action(d1, g, m)).dim() == invariants(m).dim());
    }
    auto d2 = dist_sl2(3, 2);
    auto piece = nilcone_piece(g, 9);
    auto inv = gr_invariants(d2, divided_power_action(d2, g, piece.module));
    CHECK(inv.dim() == 3);
    CHECK(same_subspace(inv.basis, frobenius_power_subspace(g, Family::nilcone, 9, 9)));
}
