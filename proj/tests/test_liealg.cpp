#include "frobcoh/liealg.hpp"

#include <doctest.h>

#include <numeric>

using namespace frobcoh;

namespace {

AlgebraKind full(ClassicalType t, unsigned n)
{
    return AlgebraKind{t, Part::full, n};
}

} // namespace

TEST_CASE("dimensions of the classical algebras")
{
    CHECK(construct(full(ClassicalType::gl, 3), 5).dim() == 9);
    CHECK(construct(full(ClassicalType::sl, 3), 5).dim() == 8);
    CHECK(construct(full(ClassicalType::sp, 2), 5).dim() == 10);
    CHECK(construct(full(ClassicalType::so, 4), 3).dim() == 6);
    CHECK(construct(full(ClassicalType::so, 5), 3).dim() == 10);
    CHECK(construct(AlgebraKind{ClassicalType::gl, Part::borel, 3}, 2).dim() == 6);
    CHECK(construct(AlgebraKind{ClassicalType::gl, Part::nilradical, 3}, 2).dim() == 3);
    CHECK(construct(AlgebraKind{ClassicalType::sl, Part::torus, 3}, 2).dim() == 2);
}

TEST_CASE("sl_2 structure constants")
{
    auto g = construct(full(ClassicalType::sl, 2), 5);
    const auto e = *g.index_of("e12");
    const auto f = *g.index_of("e21");
    const auto h = *g.index_of("h1");
    // [e, f] = h, [h, e] = 2e, [h, f] = -2f
    CHECK(g.structure_constant(e, f, h) == 1);
    CHECK(g.structure_constant(h, e, e) == 2);
    CHECK(g.structure_constant(h, f, f) == 3);
    // e^[p] = 0, h^[p] = h
    CHECK(g.pth_power(g.basis_vector(e)) == FpVector(3, 0));
    CHECK(g.pth_power(g.basis_vector(h)) == g.basis_vector(h));
}

TEST_CASE("Lie and restricted axioms hold exhaustively")
{
    for (Residue p : {2u, 3u, 5u}) {
        for (auto kind : {full(ClassicalType::gl, 2), full(ClassicalType::gl, 3), full(ClassicalType::sl, 2),
                          full(ClassicalType::sl, 3), AlgebraKind{ClassicalType::gl, Part::borel, 3},
                          AlgebraKind{ClassicalType::sl, Part::nilradical, 3}}) {
            auto g = construct(kind, p);
            CAPTURE(kind_name(kind));
            CAPTURE(p);
            CHECK_FALSE(check_lie_axioms(g).has_value());
            CHECK_FALSE(check_restrictedness(g).has_value());
        }
    }
    for (Residue p : {3u, 5u}) {
        for (auto kind : {full(ClassicalType::sp, 1), full(ClassicalType::sp, 2), full(ClassicalType::so, 3),
                          full(ClassicalType::so, 4), full(ClassicalType::so, 5)}) {
            auto g = construct(kind, p);
            CHECK_FALSE(check_lie_axioms(g).has_value());
            CHECK_FALSE(check_restrictedness(g).has_value());
        }
    }
}

TEST_CASE("constructor gate for bad primes")
{
    CHECK_THROWS_AS(construct(full(ClassicalType::sp, 2), 2), UnsupportedCharacteristic);
    CHECK_THROWS_AS(construct(full(ClassicalType::so, 4), 2), UnsupportedCharacteristic);
    CHECK_THROWS_AS(construct(full(ClassicalType::sl, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_kind("e8", 8), std::invalid_argument);
}

TEST_CASE("standard hypotheses")
{
    auto hyp = [](ClassicalType t, unsigned n, Residue p) { return check_hypotheses(construct(full(t, n), p)); };
    CHECK(hyp(ClassicalType::gl, 2, 2).overall);
    CHECK(hyp(ClassicalType::gl, 3, 3).overall);
    CHECK(hyp(ClassicalType::sl, 2, 3).overall);
    CHECK_FALSE(hyp(ClassicalType::sl, 2, 2).overall);
    CHECK_FALSE(hyp(ClassicalType::sl, 3, 3).h3_form_nondegenerate);
    CHECK(hyp(ClassicalType::sl, 3, 2).overall);
    CHECK(hyp(ClassicalType::sp, 2, 3).overall);
    CHECK_FALSE(hyp(ClassicalType::so, 4, 3).h1_simply_connected);
    CHECK_FALSE(hyp(ClassicalType::sl, 2, 2).failure_reason().empty());
    CHECK(hyp(ClassicalType::gl, 2, 5).failure_reason().empty());
}

// "Regular" means dim g_x equals the dimension of a maximal torus: n for
// gl_n, n - 1 for sl_n.
TEST_CASE("regular nilpotent centralizers have the rank as dimension")
{
    for (unsigned n : {2u, 3u}) {
        for (Residue p : {2u, 3u, 5u}) {
            for (auto t : {ClassicalType::gl, ClassicalType::sl}) {
                auto g = construct(full(t, n), p);
                if (!check_hypotheses(g).overall) continue;
                auto lower = g.strictly_lower_indices();
                auto sample = sampled_min_centralizer_dim(g, lower, 200, 7 + p);
                CAPTURE(kind_name(g.kind()));
                CHECK(sample.minimum == g.rank());
                CHECK(g.rank() == (t == ClassicalType::gl ? n : n - 1));
                CHECK(sample.attained > 0);
            }
        }
    }
}

TEST_CASE("permuting the basis preserves the structure")
{
    auto g = construct(full(ClassicalType::gl, 2), 3);
    std::vector<std::size_t> perm{3, 1, 0, 2};
    auto h = g.permuted(perm);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(h.structure_constant(i, j, k) == g.structure_constant(perm[i], perm[j], perm[k]));
    CHECK_FALSE(check_restrictedness(h).has_value());
}

TEST_CASE("trace form is invariant on random triples")
{
    std::mt19937_64 rng(31);
    for (auto [kind, n, p] : {std::tuple{"gl", 3u, 2u}, std::tuple{"sl", 3u, 5u}, std::tuple{"sp", 2u, 3u},
                              std::tuple{"so", 5u, 3u}, std::tuple{"borel-of-gl", 3u, 3u}}) {
        auto g = construct(parse_kind(kind, n), p);
        auto gram = trace_form_gram(g);
        PrimeField f(p);
        auto form = [&](const FpVector& x, const FpVector& y) {
            auto gy = gram * y;
            Residue acc = 0;
            for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], gy[i]));
            return acc;
        };
        for (int trial = 0; trial < 100; ++trial) {
            FpVector x(g.dim()), y(g.dim()), z(g.dim());
            for (auto* v : {&x, &y, &z})
                for (auto& c : *v) c = random_residue(rng, p);
            CHECK(form(g.bracket(x, y), z) == form(x, g.bracket(y, z)));
        }
    }
}
