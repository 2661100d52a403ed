#include <doctest.h>

#include "lindec/algmatrix.hpp"

using namespace lindec;

namespace {

const Perm kCycle3{1, 2, 0};

AlgMatrix scalar2x2(const AlgebraPtr& alg, std::vector<std::uint64_t> vals) {
    AlgMatrix m(alg, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.entry(i, j)[0] = vals[i * 2 + j];
    return m;
}

// Column j of M as a stacked coefficient vector in F^{n·r}.
FVector column_vector(const AlgMatrix& m, std::size_t j) {
    const std::size_t r = m.algebra()->dim();
    FVector v(m.field(), m.n() * r);
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t t = 0; t < r; ++t) v.data()[i * r + t] = m.entry(i, j)[t];
    return v;
}

} // namespace

TEST_SUITE("algmatrix") {

TEST_CASE("scalar-algebra matrices match plain matrix arithmetic") {
    auto alg = Algebra::scalars(PrimeField(5));
    auto a = scalar2x2(alg, {2, 1, 1, 1});
    auto b = scalar2x2(alg, {1, 2, 3, 0});
    CHECK(scalar_matrix(a * b) ==
          scalar_matrix(scalar2x2(alg, {0, 4, 4, 2})));
    CHECK(a + b == scalar2x2(alg, {3, 3, 4, 1}));
    CHECK(a - b == scalar2x2(alg, {1, 4, 3, 1}));
    CHECK(a.scaled(2) == scalar2x2(alg, {4, 2, 2, 2}));
    CHECK(AlgMatrix::identity(alg, 2) == scalar2x2(alg, {1, 0, 0, 1}));
    // Round trip through FMatrix.
    CHECK(from_scalar_matrix(alg, scalar_matrix(a)) == a);
}

TEST_CASE("flat layout places entry (i,j) coefficient k at (i·n+j)·r+k") {
    auto alg = Algebra::group(PrimeField(7), {kCycle3});
    AlgMatrix m(alg, 2);
    m.entry(1, 0)[2] = 5;
    CHECK(m.data()[(1 * 2 + 0) * 3 + 2] == 5);
    auto e = m.at(1, 0);
    CHECK(e.coeffs() == std::vector<std::uint64_t>{0, 0, 5});
    m.set(0, 1, AlgebraElement::basis(alg, 1));
    CHECK(m.data()[(0 * 2 + 1) * 3 + 1] == 1);
}

TEST_CASE("product over a group algebra against hand expansion") {
    auto alg = Algebra::group(PrimeField(7), {kCycle3});
    // 1x1 matrices multiply like elements.
    AlgMatrix a(alg, 1), b(alg, 1);
    a.entry(0, 0)[0] = 1;
    a.entry(0, 0)[1] = 2;
    a.entry(0, 0)[2] = 3;
    b.entry(0, 0)[0] = 4;
    b.entry(0, 0)[1] = 5;
    b.entry(0, 0)[2] = 6;
    auto c = a * b;
    auto expect = AlgebraElement(alg, {1, 2, 3}) * AlgebraElement(alg, {4, 5, 6});
    CHECK(c.at(0, 0) == expect);
}

TEST_CASE("identity and naive powers") {
    auto alg = Algebra::group(PrimeField(7), {kCycle3});
    Rng rng(3);
    auto m = random_alg_matrix(alg, 2, rng);
    CHECK(m * AlgMatrix::identity(alg, 2) == m);
    CHECK(AlgMatrix::identity(alg, 2) * m == m);
    CHECK(m.pow_naive(0) == AlgMatrix::identity(alg, 2));
    CHECK(m.pow_naive(1) == m);
    for (std::uint64_t e : {2ull, 5ull, 13ull}) CHECK(m.pow_naive(e) == m.pow(e));
}

TEST_CASE("naive powering cost grows with the exponent") {
    auto alg = Algebra::scalars(PrimeField(11));
    Rng rng(8);
    auto m = random_alg_matrix(alg, 3, rng);
    std::vector<std::uint64_t> cost;
    for (std::uint64_t e : {4ull, 8ull, 16ull, 32ull}) {
        reset_field_ops();
        m.pow_naive(e);
        cost.push_back(field_ops());
    }
    CHECK(cost[0] < cost[1]);
    CHECK(cost[1] < cost[2]);
    CHECK(cost[2] < cost[3]);
    // Linear growth: doubling the exponent roughly doubles the cost.
    CHECK(cost[3] < 3 * cost[2]);
}

TEST_CASE("regular representation over scalars is the matrix itself") {
    auto alg = Algebra::scalars(PrimeField(5));
    auto a = scalar2x2(alg, {2, 1, 1, 1});
    CHECK(regular_representation(a) == scalar_matrix(a));
}

TEST_CASE("regular representation acts as left multiplication on columns") {
    auto alg = Algebra::group(PrimeField(7), {kCycle3});
    Rng rng(17);
    auto m = random_alg_matrix(alg, 2, rng);
    auto x = random_alg_matrix(alg, 2, rng);
    auto theta = regular_representation(m);
    auto prod = m * x;
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(theta.mul_vec(column_vector(x, j)) == column_vector(prod, j));
}

TEST_CASE("inverse over a group algebra, verified two-sided") {
    auto alg = Algebra::group(PrimeField(7), {kCycle3});
    Rng rng(21);
    auto m = random_invertible(alg, 2, rng);
    auto mi = inverse(m);
    CHECK(m * mi == AlgMatrix::identity(alg, 2));
    CHECK(mi * m == AlgMatrix::identity(alg, 2));
}

TEST_CASE("zero divisors are rejected") {
    auto alg = Algebra::group(PrimeField(7), {kCycle3});
    // 1 + g + g² spans a one-dimensional ideal; never invertible.
    AlgMatrix m(alg, 1);
    m.entry(0, 0)[0] = 1;
    m.entry(0, 0)[1] = 1;
    m.entry(0, 0)[2] = 1;
    CHECK_FALSE(try_inverse(m).has_value());
    CHECK_THROWS_AS(inverse(m), NotInvertible);
    AlgMatrix z(alg, 2);
    CHECK_FALSE(try_inverse(z).has_value());
}

TEST_CASE("multiplicative orders in GL_n(F_p)") {
    auto alg = Algebra::scalars(PrimeField(5));
    // Scalars: ord(2) = ord(3) = 4, ord(4) = 2.
    AlgMatrix two(alg, 1);
    two.entry(0, 0)[0] = 2;
    CHECK(matrix_order(two) == 4);
    AlgMatrix four(alg, 1);
    four.entry(0, 0)[0] = 4;
    CHECK(matrix_order(four) == 2);

    // Fibonacci companion matrix over F_5: the Pisano period, 20. Confirmed
    // against brute-force iteration.
    auto fib = scalar2x2(alg, {0, 1, 1, 1});
    std::uint64_t ord = matrix_order(fib);
    CHECK(ord == 20);
    auto id = AlgMatrix::identity(alg, 2);
    auto acc = fib;
    for (std::uint64_t k = 1; k < ord; ++k) {
        CHECK_FALSE(acc == id);
        acc = acc * fib;
    }
    CHECK(acc == id);

    AlgMatrix sing(alg, 1);
    CHECK_THROWS_AS(matrix_order(sing), NotInvertible);
}

TEST_CASE("orders are minimal on random invertibles") {
    auto alg = Algebra::scalars(PrimeField(7));
    Rng rng(33);
    for (int t = 0; t < 8; ++t) {
        auto m = random_invertible(alg, 3, rng);
        std::uint64_t ord = matrix_order(m);
        auto id = AlgMatrix::identity(alg, 3);
        CHECK(m.pow(ord) == id);
        for (std::uint64_t q = 2; q <= ord; ++q)
            if (ord % q == 0) {
                // q prime factor: strict minimality at ord/q.
                bool isprime = true;
                for (std::uint64_t d = 2; d * d <= q; ++d)
                    if (q % d == 0) isprime = false;
                if (isprime) CHECK_FALSE(m.pow(ord / q) == id);
            }
    }
}

TEST_CASE("random invertible sampling returns invertibles") {
    auto alg = Algebra::group(PrimeField(5), {kCycle3});
    Rng rng(2);
    auto m = random_invertible(alg, 3, rng);
    CHECK(try_inverse(m).has_value());
}

} // TEST_SUITE
