#include <catch2/catch_amalgamated.hpp>

#include "cmtilt/matrix.hpp"
#include "cmtilt/poly.hpp"

using namespace cmtilt;
using QF = RationalField;
using Q = QF::Elt;

TEST_CASE("kernel basis on the spec cases") {
    QF K;
    SECTION("identity 3x3 has empty kernel") {
        auto ker = kernel_basis(Matrix<QF>::identity(K, 3));
        REQUIRE(ker.cols == 0);
    }
    SECTION("zero 2x3 has full kernel") {
        auto ker = kernel_basis(Matrix<QF>::zero(K, 2, 3));
        REQUIRE(ker.cols == 3);
    }
    SECTION("rank-1 symmetric 2x2") {
        Matrix<QF> m(K, 2, 2);
        m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = K.one();
        auto ker = kernel_basis(m);
        REQUIRE(ker.cols == 1);
        // proportional to (1, -1)
        REQUIRE(K.eq(K.add(ker.at(0, 0), ker.at(1, 0)), K.zero()));
        REQUIRE(!K.is_zero(ker.at(0, 0)));
    }
}

TEST_CASE("solve on the spec cases") {
    QF K;
    SECTION("identity returns rhs") {
        auto m = Matrix<QF>::identity(K, 4);
        std::vector<Q> b = {Q(1), Q(-2), Q(7, 3), Q(0)};
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        REQUIRE(*x == b);
    }
    SECTION("zero matrix with nonzero rhs is inconsistent") {
        auto m = Matrix<QF>::zero(K, 2, 2);
        std::vector<Q> b = {Q(1), Q(0)};
        REQUIRE(!solve(m, b).has_value());
    }
    SECTION("2x = 1 over GF(5)") {
        PrimeField P(5);
        Matrix<PrimeField> m(P, 1, 1);
        m.at(0, 0) = 2;
        std::vector<PrimeField::Elt> b = {1};
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        REQUIRE((*x)[0] == 3);
    }
}

TEMPLATE_TEST_CASE("rank-nullity and planted solutions on random matrices", "",
                   RationalField, PrimeField) {
    TestType K;
    if constexpr (TestType::is_prime) K = TestType(7);
    Rng rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> dim(1, 8);
        int r = dim(rng), c = dim(rng);
        Matrix<TestType> m(K, r, c);
        for (auto& x : m.a) x = K.random(rng);
        REQUIRE(rank(m) + kernel_basis(m).cols == c);

        std::vector<typename TestType::Elt> x0(c, K.zero());
        for (auto& x : x0) x = K.random(rng);
        auto b = m.apply(x0);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        REQUIRE(m.apply(*sol) == b);
    }
}

TEST_CASE("inverse and column space") {
    QF K;
    Matrix<QF> m(K, 2, 2);
    m.at(0, 0) = Q(2); m.at(0, 1) = Q(1);
    m.at(1, 0) = Q(1); m.at(1, 1) = Q(1);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    REQUIRE((*inv) * m == Matrix<QF>::identity(K, 2));

    Matrix<QF> s(K, 3, 2);
    s.at(0, 0) = Q(1); s.at(1, 0) = Q(2);
    s.at(0, 1) = Q(2); s.at(1, 1) = Q(4);
    auto cb = column_space(s);
    REQUIRE(cb.dim() == 1);
    auto c = coords_in(cb, std::vector<Q>{Q(3), Q(6), Q(0)});
    REQUIRE(c.has_value());
    REQUIRE(!coords_in(cb, std::vector<Q>{Q(0), Q(0), Q(1)}).has_value());
}

TEST_CASE("charpoly via Hessenberg") {
    QF K;
    // companion matrix of t^3 - 2t - 5
    Matrix<QF> m(K, 3, 3);
    m.at(0, 2) = Q(5);
    m.at(1, 0) = Q(1); m.at(1, 2) = Q(2);
    m.at(2, 1) = Q(1);
    auto p = charpoly(m);
    REQUIRE(p.size() == 4);
    CHECK(p[0] == Q(-5));
    CHECK(p[1] == Q(-2));
    CHECK(p[2] == Q(0));
    CHECK(p[3] == Q(1));

    PrimeField P(3);
    auto id = Matrix<PrimeField>::identity(P, 2);
    auto q = charpoly(id);  // (t-1)^2 = t^2 + t + 1 mod 3
    REQUIRE(q.size() == 3);
    CHECK(q[0] == 1);
    CHECK(q[1] == 1);
    CHECK(q[2] == 1);
}

TEST_CASE("rational root extraction") {
    QF K;
    SECTION("simple split poly") {
        // (t - 1/2)(t + 3)(t - 2)
        Poly<QF> p = poly_mul(K, poly_mul(K, Poly<QF>{Q(-1, 2), Q(1)}, Poly<QF>{Q(3), Q(1)}),
                              Poly<QF>{Q(-2), Q(1)});
        auto roots = rational_roots(K, p);
        REQUIRE(roots == std::vector<Q>{Q(-3), Q(1, 2), Q(2)});
    }
    SECTION("irrational roots are not reported") {
        Poly<QF> p = {Q(-2), Q(0), Q(1)};  // t^2 - 2
        REQUIRE(rational_roots(K, p).empty());
    }
    SECTION("mixed rational and irrational") {
        // (t^2 - 2)(t - 7/3)
        Poly<QF> p = poly_mul(K, Poly<QF>{Q(-2), Q(0), Q(1)}, Poly<QF>{Q(-7, 3), Q(1)});
        auto roots = rational_roots(K, p);
        REQUIRE(roots == std::vector<Q>{Q(7, 3)});
    }
    SECTION("repeated roots handled through squarefree part") {
        // (t - 1)^2 (t + 1)
        Poly<QF> p = poly_mul(K, poly_mul(K, Poly<QF>{Q(-1), Q(1)}, Poly<QF>{Q(-1), Q(1)}),
                              Poly<QF>{Q(1), Q(1)});
        auto roots = rational_roots(K, p);
        REQUIRE(roots == std::vector<Q>{Q(-1), Q(1)});
    }
    SECTION("close roots separated") {
        // (t - 100)(t - 10001/100)
        Poly<QF> p = poly_mul(K, Poly<QF>{Q(-100), Q(1)}, Poly<QF>{Q(-10001, 100), Q(1)});
        auto roots = rational_roots(K, p);
        REQUIRE(roots == std::vector<Q>{Q(100), Q(10001, 100)});
    }
}

TEST_CASE("prime field roots") {
    PrimeField P(5);
    Rng rng(7);
    // t^2 + 1 has roots 2, 3 mod 5
    Poly<PrimeField> p = {1, 0, 1};
    auto roots = prime_field_roots(P, p, rng);
    REQUIRE(roots == std::vector<PrimeField::Elt>{2, 3});
    // t^2 + 2 has no roots mod 5
    Poly<PrimeField> q = {2, 0, 1};
    REQUIRE(prime_field_roots(P, q, rng).empty());
}

TEST_CASE("simplest rational in interval") {
    using detail::simplest_in;
    CHECK(simplest_in(Q(1, 3), Q(1, 2)) == Q(1, 2));
    CHECK(simplest_in(Q(2, 7), Q(3, 7)) == Q(1, 3));
    CHECK(simplest_in(Q(-5, 2), Q(-7, 3)) == Q(-5, 2));
    CHECK(simplest_in(Q(15, 7), Q(18, 7)) == Q(5, 2));
}
