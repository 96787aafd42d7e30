#include "doctest.h"

#include "iqinv/errors.hpp"
#include "iqinv/qfield.hpp"

#include <random>

using namespace iqinv;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
    auto poly = [&] {
        std::vector<mpz_class> v;
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) v.emplace_back(coef(rng));
        return Poly(v);
    };
    Poly den = poly();
    while (den.is_zero()) den = poly();
    return Scalar::canonical(poly(), den);
}

}  // namespace

TEST_CASE("canonicalize cancels common factors") {
    CHECK(Scalar::canonical(P({-1, 0, 1}), P({-1, 1})) == Scalar::from_poly(P({1, 1})));
    Scalar z = Scalar::canonical(Poly(), Poly(7));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
    Scalar h = Scalar::canonical(P({0, 2}), Poly(4));
    CHECK(h.num() == P({0, 1}));
    CHECK(h.den() == Poly(2));
    CHECK(h.str() == "(q)/(2)");
    CHECK_THROWS_AS(Scalar::canonical(Poly(1), Poly()), DomainError);
}

TEST_CASE("sign and content of the denominator are normalized") {
    Scalar a = Scalar::canonical(P({1}), P({0, -2}));  // 1/(-2q)
    CHECK(a.den() == P({0, 2}));
    CHECK(a.num() == Poly(-1));
    Scalar b = Scalar::canonical(P({6, 0, 6}), P({0, 4}));
    CHECK(b.num() == P({3, 0, 3}));
    CHECK(b.den() == P({0, 2}));
}

TEST_CASE("field arithmetic examples") {
    Scalar q = Scalar::q();
    Scalar qi = Scalar::q_pow(-1);
    CHECK(q + qi == Scalar::canonical(P({1, 0, 1}), P({0, 1})));
    CHECK((q - qi) * q == Scalar::from_poly(P({-1, 0, 1})));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
    CHECK(q * qi == Scalar(1));
    CHECK((q + 1) / (q * q - 1) == Scalar(1) / (q - 1));
}

TEST_CASE("specialization at q = 1") {
    Scalar q = Scalar::q();
    CHECK(((q * q - 1) / (q - 1)).specialize_q1() == 2);
    CHECK(Scalar::q_pow(-1).specialize_q1() == 1);
    CHECK_THROWS_AS((Scalar(1) / (q - 1)).specialize_q1(), PoleError);
    CHECK((Scalar(3) / (q + 1)).specialize_q1() == mpq_class(3, 2));
}

TEST_CASE("gcd in Z[q]") {
    CHECK(gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
    CHECK(gcd(P({0, 2}), Poly(4)) == Poly(2));
    CHECK(gcd(P({0, 0, 6}), P({0, 4, 4})) == P({0, 2}));
    CHECK(gcd(P({2, 3, 1}), P({3, 4, 1})) == P({1, 1}));  // (q+1)(q+2), (q+1)(q+3)
    CHECK(gcd(Poly(), P({-3, -6})) == P({3, 6}));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 300; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        // outputs are canonical: re-canonicalizing is a no-op
        Scalar s = a * b + c;
        CHECK(Scalar::canonical(s.num(), s.den()) == s);
    }
}

TEST_CASE("specialization is multiplicative where defined") {
    std::mt19937_64 rng(99);
    int tested = 0;
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        try {
            mpq_class x = a.specialize_q1(), y = b.specialize_q1();
            CHECK((a * b).specialize_q1() == x * y);
            ++tested;
        } catch (const PoleError&) {
        }
    }
    CHECK(tested > 50);
}

TEST_CASE("text rendering and parsing agree") {
    Scalar q = Scalar::q();
    Scalar x = (q * q + 1) / q;
    CHECK(x.str() == "(q^2+1)/(q)");
    CHECK(Scalar::parse(x.str()) == x);
    CHECK(Scalar::parse("-3*q^2+q-7") == Scalar::from_poly(P({-7, 1, -3})));
    CHECK(Scalar::parse("(2*q)/(4)") == Scalar::canonical(P({0, 1}), Poly(2)));
    CHECK(Scalar(0).str() == "0");
    CHECK((-Scalar::q()).str() == "-q");
    CHECK_THROWS_AS(Scalar::parse("q+"), DomainError);
}
