#include "frobcoh/exactlin.hpp"

#include <doctest.h>

#include <random>

using namespace frobcoh;

namespace {

FpMatrix random_matrix(Residue p, std::size_t rows, std::size_t cols, std::mt19937_64& rng, unsigned density = 100)
{
    FpMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 100 < density) m.set(r, c, static_cast<Residue>(rng() % p));
    return m;
}

} // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField f(7);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.pow(3, 6) == 1);
    CHECK_THROWS_AS(PrimeField(9), MalformedInput);
    CHECK(is_prime(2));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("hand-checked rank and nullspace")
{
    // [[1,2],[2,4]] has rank 1 over Q and over F_3; over F_2 the second row vanishes too.
    auto a = FpMatrix::from_rows(3, {{1, 2}, {2, 4}});
    auto res = rank_and_nullspace(a);
    CHECK(res.rank == 1);
    REQUIRE(res.basis.cols() == 1);
    CHECK((a * res.basis).is_zero());
    // canonical basis vector: 1 on the free column
    CHECK(res.basis(1, 0) == 1);
    CHECK(res.basis(0, 0) == 1); // x = -2y = y mod 3

    auto id = FpMatrix::identity(5, 4);
    CHECK(rank(id) == 4);
    CHECK(rank_and_nullspace(id).basis.cols() == 0);

    // the 2x2 matrix [[1,1],[1,1]] is singular everywhere, [[1,1],[1,-1]] only at p=2
    CHECK(rank(FpMatrix::from_rows(2, {{1, 1}, {1, -1}})) == 1);
    CHECK(rank(FpMatrix::from_rows(3, {{1, 1}, {1, -1}})) == 2);
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(FpMatrix::from_residues(5, 1, 2, {1, 5}), MalformedInput);
    CHECK_THROWS_AS(FpMatrix::from_residues(5, 2, 2, {1, 2, 3}), std::invalid_argument);
    auto a = FpMatrix::identity(3, 2);
    auto b = FpMatrix::identity(3, 3);
    CHECK_THROWS(a * b);
}

TEST_CASE("solve returns a solution or reports inconsistency")
{
    auto a = FpMatrix::from_rows(5, {{1, 2, 0}, {0, 1, 1}});
    auto x = solve(a, {3, 4});
    REQUIRE(x.has_value());
    CHECK(a * *x == FpVector{3, 4});
    auto singular = FpMatrix::from_rows(5, {{1, 1}, {2, 2}});
    CHECK_FALSE(solve(singular, {1, 1}).has_value());
}

TEST_CASE("rank-nullity and dense/sparse agreement on random matrices")
{
    std::mt19937_64 rng(2024);
    for (Residue p : {2u, 3u, 5u, 7u, 101u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 12;
            const std::size_t cols = 1 + rng() % 12;
            auto a = random_matrix(p, rows, cols, rng, 30 + static_cast<unsigned>(rng() % 70));
            auto dense = rank_and_nullspace(a);
            CHECK(dense.rank + dense.basis.cols() == cols);
            CHECK((a * dense.basis).is_zero());
            CHECK(rank(dense.basis) == dense.basis.cols());
            auto sparse = rank_and_nullspace(SparseFpMatrix::from_dense(a));
            CHECK(sparse.rank == dense.rank);
            CHECK(sparse.basis == dense.basis);
            CHECK(rank(a.transpose()) == dense.rank);
        }
    }
}

TEST_CASE("block-diagonal sparse systems split into components")
{
    SparseFpMatrix s(3, 6);
    s.add_row({{0, 1}, {1, 1}});
    s.add_row({{2, 1}, {3, 2}});
    s.add_row({{4, 3}}); // collapses to zero mod 3 and is dropped
    s.add_row({{5, 1}, {5, 2}});
    CHECK(s.rows() == 2);
    auto res = rank_and_nullspace(s);
    CHECK(res.rank == 2);
    CHECK(res.basis.cols() == 4);
    CHECK(res.basis == rank_and_nullspace(s.to_dense()).basis);
}

TEST_CASE("subspace helpers")
{
    auto a = FpMatrix::from_rows(5, {{1, 0}, {0, 1}, {1, 1}});
    auto b = FpMatrix::from_rows(5, {{1}, {1}, {2}});
    CHECK(subspace_contains(a, b));
    CHECK_FALSE(subspace_contains(b, a));
    CHECK(same_subspace(a, FpMatrix::hstack(a, b)));
    FpMatrix empty(5, 3, 0);
    CHECK(subspace_contains(a, empty));
    CHECK(same_subspace(empty, FpMatrix(5, 3, 0)));
    CHECK(column_space_basis(FpMatrix::hstack(a, b)).cols() == 2);
}

TEST_CASE("linear system picks a kernel and checks solutions")
{
    for (std::size_t threshold : {std::size_t{0}, kDefaultSparseThreshold}) {
        LinearSystem sys(7, 4, threshold);
        sys.add_equation({{0, 1}, {1, -1}});
        sys.add_equation({{2, 3}, {3, 4}});
        CHECK(sys.uses_sparse() == (threshold == 0));
        auto res = sys.solve_nullspace();
        CHECK(res.rank == 2);
        for (std::size_t c = 0; c < res.basis.cols(); ++c) CHECK(sys.satisfied_by(res.basis.column(c)));
        CHECK_FALSE(sys.satisfied_by({1, 0, 0, 0}));
    }
}

TEST_CASE("matrix power and kronecker")
{
    auto n = FpMatrix::from_rows(3, {{0, 1}, {0, 0}});
    CHECK(n.power(2).is_zero());
    CHECK(n.power(0) == FpMatrix::identity(3, 2));
    auto k = FpMatrix::kronecker(FpMatrix::identity(3, 2), n);
    CHECK(k.rows() == 4);
    CHECK(rank(k) == 2);
}
