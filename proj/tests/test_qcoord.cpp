#include "doctest.h"

#include "iqinv/errors.hpp"
#include "iqinv/qcoord.hpp"

#include <random>

using namespace iqinv;

namespace {

HalfInt H(int doubled) { return HalfInt::from_doubled(doubled); }

QPoly T(HalfInt n, HalfInt m, std::initializer_list<std::pair<int, int>> pairs) {
    Tuple i, j;
    for (auto [a, b] : pairs) {
        i.push_back(H(a));
        j.push_back(H(b));
    }
    return QPoly::t(n, m, i, j);
}

// all sequences of codes of length d, as a brute-force oracle
std::vector<Mono> all_monos(std::size_t g, int d) {
    std::vector<Mono> out{{}};
    for (int a = 0; a < d; ++a) {
        std::vector<Mono> next;
        for (const auto& m : out)
            for (PairCode c = 0; c < g; ++c) {
                Mono x = m;
                x.push_back(c);
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

QPoly raw(HalfInt n, HalfInt m, const Mono& mono) {
    QPoly p(n, m);
    p.add(mono, Scalar(1));
    return p;
}

}  // namespace

TEST_CASE("rewriting rules") {
    HalfInt n = H(2), m = H(2);
    Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
    // i < k, j < l with i=-1,k=0 and j=-1,l=1
    auto lhs = normal_form(T(n, m, {{0, 2}, {-2, -2}}));
    auto rhs = T(n, m, {{-2, -2}, {0, 2}}) - T(n, m, {{-2, 2}, {0, -2}}).scaled(q - qi);
    CHECK(lhs == rhs);
    CHECK(normal_form(T(n, m, {{0, -2}, {-2, 2}})) == T(n, m, {{-2, 2}, {0, -2}}));
    CHECK(normal_form(T(n, m, {{-2, 2}, {-2, -2}})) == T(n, m, {{-2, -2}, {-2, 2}}).scaled(qi));
    CHECK(normal_form(T(n, m, {{2, 0}, {-2, 0}})) == T(n, m, {{-2, 0}, {2, 0}}).scaled(qi));
    auto sorted = T(n, m, {{-2, 0}, {-2, 0}, {2, 2}});
    CHECK(normal_form(sorted) == sorted);
    // the unrearranged relations hold in the algebra
    auto a = T(n, m, {{-2, -2}, {0, 2}}), b = T(n, m, {{0, 2}, {-2, -2}});
    CHECK(normal_form(a) == normal_form(b + T(n, m, {{-2, 2}, {0, -2}}).scaled(q - qi)));
    CHECK(normal_form(T(n, m, {{0, 0}, {0, 2}})) == normal_form(T(n, m, {{0, 2}, {0, 0}}).scaled(q)));
    CHECK_THROWS_AS(rewrite_at(n, m, {0, 1}, 0), DomainError);
    CHECK_THROWS_AS(T(n, m, {{0, 0}}) + T(n, H(1), {{0, 1}}), DomainError);
}

TEST_CASE("local confluence on degree 3") {
    for (int n2 = 0; n2 <= 2; ++n2)
        for (int m2 = 0; m2 <= 2; ++m2) {
            HalfInt n = H(n2), m = H(m2);
            CoordScheme cs(n, m);
            for (const auto& mono : all_monos(cs.generators(), 3)) {
                auto nf = normal_form(raw(n, m, mono));
                CHECK(nf.is_normal());
                for (std::size_t pos = 0; pos + 1 < 3; ++pos)
                    if (mono[pos] > mono[pos + 1]) CHECK(normal_form(rewrite_at(n, m, mono, pos)) == nf);
            }
        }
}

TEST_CASE("normal monomials are counted by multisets") {
    for (int n2 = 0; n2 <= 2; ++n2)
        for (int m2 = 0; m2 <= 2; ++m2)
            for (int d = 0; d <= 4; ++d) {
                HalfInt n = H(n2), m = H(m2);
                CoordScheme cs(n, m);
                std::size_t brute = 0;
                for (const auto& mono : all_monos(cs.generators(), d)) brute += std::is_sorted(mono.begin(), mono.end());
                auto nb = normal_basis(n, m, d);
                CHECK(nb->size() == brute);
                CHECK(normal_count(n, m, d) == brute);
                CHECK(std::is_sorted(nb->monos.begin(), nb->monos.end()));
            }
    CHECK_THROWS_AS(normal_basis(H(3), H(3), 4, 100), BudgetExceeded);
}

TEST_CASE("multiplication is associative") {
    std::mt19937_64 rng(11);
    HalfInt n = H(2), m = H(3);
    CoordScheme cs(n, m);
    std::uniform_int_distribution<int> code(0, static_cast<int>(cs.generators()) - 1), len(0, 2);
    auto random_poly = [&] {
        QPoly p(n, m);
        for (int t = 0; t < 2; ++t) {
            Mono mono;
            for (int a = len(rng); a > 0; --a) mono.push_back(static_cast<PairCode>(code(rng)));
            p.add(mono, Scalar(t + 1) + Scalar::q_pow(t));
        }
        return normal_form(p);
    };
    for (int t = 0; t < 30; ++t) {
        auto a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(QPoly::one(n, m), a) == a);
    }
}

TEST_CASE("actions on generators") {
    HalfInt n = H(2), m = H(2);
    auto t = T(n, m, {{0, 2}});
    for (int a = -2; a <= 2; a += 2) {
        Scalar c = a == 2 ? Scalar::q() : Scalar(1);
        CHECK(act_left({{UKind::Dpos, H(a)}}, t) == t.scaled(c));
    }
    // E_{1/2} moves column 1 to column 0
    CHECK(act_left({{UKind::E, H(1)}}, t) == T(n, m, {{0, 0}}));
    CHECK(act_left({{UKind::E, H(-1)}}, t).is_zero());
    CHECK(act_left({}, t) == t);
    // F_{1/2} v_0 = v_1, so t_{1,1} F_{1/2} = t_{0,1} and t_{0,1} F_{1/2} = 0
    CHECK(act_right(T(n, m, {{2, 2}}), {{UKind::F, H(1)}}) == T(n, m, {{0, 2}}));
    CHECK(act_right(T(n, m, {{0, 2}}), {{UKind::F, H(1)}}).is_zero());
}

TEST_CASE("actions respect the relations and commute") {
    HalfInt n = H(1), m = H(2);
    CoordScheme cs(n, m);
    std::vector<UWord> left{{{UKind::E, H(1)}}, {{UKind::F, H(-1)}}, {{UKind::Dpos, H(0)}, {UKind::E, H(-1)}}};
    std::vector<UWord> right{{{UKind::E, H(0)}}, {{UKind::F, H(0)}, {UKind::Dneg, H(1)}}};
    for (const auto& mono : all_monos(cs.generators(), 3)) {
        auto r = raw(n, m, mono), nf = normal_form(r);
        for (const auto& x : left) {
            CHECK(act_left(x, r) == act_left(x, nf));
            for (const auto& y : right) CHECK(act_right(act_left(x, nf), y) == act_left(x, act_right(nf, y)));
        }
        for (const auto& y : right) CHECK(act_right(r, y) == act_right(nf, y));
    }
}

TEST_CASE("quantum minors") {
    HalfInt p = H(2), r = H(2);
    Scalar q = Scalar::q();
    CHECK(quantum_minor(p, r, {H(0)}, {H(2)}) == T(p, r, {{0, 2}}));
    auto d2 = quantum_minor(p, r, {H(-2), H(0)}, {H(0), H(2)});
    CHECK(d2 == normal_form(T(p, r, {{-2, 0}, {0, 2}}) - T(p, r, {{-2, 2}, {0, 0}}).scaled(q)));
    auto sw = sym_group(2).back();
    CHECK(minor_sigma(p, r, {H(-2), H(0)}, {H(0), H(2)}, sw) == d2.scaled(-q));
    CHECK(minor_any(p, r, {H(-2), H(0)}, {H(2), H(0)}) == d2.scaled(-q));
    CHECK_THROWS_AS(quantum_minor(p, r, {H(0), H(-2)}, {H(0), H(2)}), DomainError);
    // a full minor is killed by E and F and has weight one in every column
    auto det = quantum_minor(H(1), H(1), {H(-1), H(1)}, {H(-1), H(1)});
    CHECK(act_left({{UKind::E, H(0)}}, det).is_zero());
    CHECK(act_right(det, {{UKind::F, H(0)}}).is_zero());
    CHECK(act_left({{UKind::Dpos, H(1)}, {UKind::Dpos, H(-1)}}, det) == det.scaled(q * q));
}
