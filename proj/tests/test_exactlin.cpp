#include "arrcohom/exactlin.hpp"

#include <doctest.h>

#include <random>

using namespace arrcohom;

namespace {

RationalMatrix rational_from(std::initializer_list<std::initializer_list<long>> rows)
{
    RationalMatrix m(static_cast<Index>(rows.size()),
                     static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntegerMatrix integer_from(std::initializer_list<std::initializer_list<long>> rows)
{
    IntegerMatrix m(static_cast<Index>(rows.size()),
                    static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// Random integer matrix with entries in [-bound, bound].
IntegerMatrix random_integer_matrix(std::mt19937_64& rng, Index rows, Index cols, long bound)
{
    IntegerMatrix m(rows, cols);
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// Random unimodular matrix: product of elementary row additions and swaps.
IntegerMatrix random_unimodular(std::mt19937_64& rng, Index n, int steps)
{
    IntegerMatrix u = IntegerMatrix::Identity(n, n);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int s = 0; s < steps; ++s) {
        Index i = pick(rng), j = pick(rng);
        if (i == j) continue;
        u.row(i) += Integer(coef(rng)) * u.row(j);
    }
    return u;
}

}  // namespace

TEST_CASE("rational rank on pinned inputs")
{
    CHECK(rational_rank(RationalMatrix::Identity(2, 2)) == 2);
    CHECK(rational_rank(RationalMatrix::Zero(3, 4)) == 0);
    // third row is the sum of the first two
    CHECK(rational_rank(rational_from({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}})) == 2);
}

TEST_CASE("rational rank invariance under permutation and transpose")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        IntegerMatrix zi = random_integer_matrix(rng, 4, 5, 6);
        RationalMatrix m(4, 5);
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 5; ++j) m(i, j) = Rational(zi(i, j));
        int r = rational_rank(m);
        CHECK(r == rational_rank(m.transpose().eval()));

        RationalMatrix shuffled = m;
        std::vector<Index> perm{2, 0, 3, 1};
        for (Index i = 0; i < 4; ++i) shuffled.row(i) = m.row(perm[static_cast<std::size_t>(i)]);
        CHECK(r == rational_rank(shuffled));
    }
}

TEST_CASE("nullspace on pinned inputs")
{
    CHECK(nullspace_rational(RationalMatrix::Identity(2, 2)).cols() == 0);

    RationalMatrix single = rational_from({{1, 1}});
    RationalMatrix basis = nullspace_rational(single);
    REQUIRE(basis.cols() == 1);
    CHECK(basis(0, 0) * 1 + basis(1, 0) * 1 == 0);
    CHECK(basis(0, 0) != 0);

    RationalMatrix two = rational_from({{1, 0, 1}, {0, 1, 1}});
    RationalMatrix basis2 = nullspace_rational(two);
    REQUIRE(basis2.cols() == 1);
    // proportional to (1, 1, -1)
    CHECK(basis2(0, 0) == basis2(1, 0));
    CHECK(basis2(2, 0) == -basis2(0, 0));
    CHECK((two * basis2).isZero(0));
}

TEST_CASE("nullspace dimension equals cols minus rank")
{
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        IntegerMatrix zi = random_integer_matrix(rng, 3, 6, 4);
        RationalMatrix m(3, 6);
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 6; ++j) m(i, j) = Rational(zi(i, j));
        RationalMatrix basis = nullspace_rational(m);
        CHECK(basis.cols() == 6 - rational_rank(m));
        CHECK((m * basis).isZero(0));
        if (basis.cols() > 0) CHECK(rational_rank(basis) == basis.cols());
    }
}

TEST_CASE("smith normal form on pinned inputs")
{
    SUBCASE("diag(2,3) becomes (1,6)")
    {
        auto snf = smith_normal_form(integer_from({{2, 0}, {0, 3}}));
        REQUIRE(snf.diagonal.size() == 2);
        CHECK(snf.diagonal[0] == 1);
        CHECK(snf.diagonal[1] == 6);
    }
    SUBCASE("identity stays identity")
    {
        auto snf = smith_normal_form(IntegerMatrix::Identity(3, 3));
        REQUIRE(snf.diagonal.size() == 3);
        for (const Integer& d : snf.diagonal) CHECK(d == 1);
    }
    SUBCASE("single row (2,4) has diagonal (2)")
    {
        auto snf = smith_normal_form(integer_from({{2, 4}}));
        REQUIRE(snf.diagonal.size() == 1);
        CHECK(snf.diagonal[0] == 2);
    }
}

TEST_CASE("smith normal form transform identities and divisibility")
{
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        Index rows = 2 + static_cast<Index>(trial % 3);
        Index cols = 2 + static_cast<Index>((trial / 3) % 3);
        IntegerMatrix m = random_integer_matrix(rng, rows, cols, 9);
        auto snf = smith_normal_form(m);

        IntegerMatrix product = snf.left * m * snf.right;
        CHECK(product == snf.matrix);
        for (Index i = 0; i < product.rows(); ++i)
            for (Index j = 0; j < product.cols(); ++j)
                if (i != j) CHECK(product(i, j) == 0);
        for (std::size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
            CHECK(snf.diagonal[k] > 0);
            CHECK(snf.diagonal[k + 1] % snf.diagonal[k] == 0);
        }
        Integer dl = integer_determinant(snf.left);
        Integer dr = integer_determinant(snf.right);
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));
    }
}

TEST_CASE("smith diagonal invariant under unimodular transforms")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        IntegerMatrix m = random_integer_matrix(rng, 3, 4, 7);
        auto base = smith_normal_form(m);
        IntegerMatrix u = random_unimodular(rng, 3, 8);
        IntegerMatrix v = random_unimodular(rng, 4, 8);
        auto transformed = smith_normal_form((u * m * v).eval());
        CHECK(base.diagonal == transformed.diagonal);
    }
}

TEST_CASE("prime field rank on pinned inputs")
{
    CHECK(prime_field_rank(PrimeFieldMatrix(5, integer_from({{2, 0}, {0, 2}}))) == 2);
    CHECK(prime_field_rank(PrimeFieldMatrix(5, integer_from({{5, 0}, {0, 5}}))) == 0);
    CHECK(prime_field_rank(PrimeFieldMatrix(7, integer_from({{1, 1}, {1, 1}}))) == 1);
}

TEST_CASE("prime field modulus validation")
{
    CHECK_THROWS_AS(PrimeFieldMatrix(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFieldMatrix(2, 1, 1), std::invalid_argument);  // p >= 3 required
    CHECK_THROWS_AS(PrimeFieldMatrix(1, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(PrimeFieldMatrix(3, 1, 1));
    CHECK_NOTHROW(PrimeFieldMatrix(101, 2, 2));
}

TEST_CASE("rank over Q dominates rank over GF(p)")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        IntegerMatrix m = random_integer_matrix(rng, 4, 4, 10);
        RationalMatrix q(4, 4);
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j) q(i, j) = Rational(m(i, j));
        int rq = rational_rank(q);
        for (std::int64_t p : {3, 5, 7, 11})
            CHECK(rq >= prime_field_rank(PrimeFieldMatrix(p, m)));
    }
}

TEST_CASE("primality testing")
{
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(7917));
    CHECK(is_prime(2147483647));  // 2^31 - 1
}

TEST_CASE("hermite normal form is canonical for the row lattice")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        IntegerMatrix m = random_integer_matrix(rng, 3, 4, 6);
        IntegerMatrix h = hermite_normal_form(m);
        IntegerMatrix u = random_unimodular(rng, 3, 8);
        IntegerMatrix h2 = hermite_normal_form((u * m).eval());
        CHECK(h == h2);
    }
}

TEST_CASE("integer kernel and row saturation")
{
    IntegerMatrix m = integer_from({{2, 4, 0}});
    IntegerMatrix k = integer_kernel(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).isZero(0));

    // span_Q((2,4,0)) intersect Z^3 is generated by (1,2,0)
    IntegerMatrix sat = saturate_row_lattice(m);
    REQUIRE(sat.rows() == 1);
    CHECK(sat(0, 0) == 1);
    CHECK(sat(0, 1) == 2);
    CHECK(sat(0, 2) == 0);
}
