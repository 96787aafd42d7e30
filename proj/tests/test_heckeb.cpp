#include "doctest.h"

#include "iqinv/errors.hpp"
#include "iqinv/heckeb.hpp"

using namespace iqinv;

namespace {

HalfInt H(int doubled) { return HalfInt::from_doubled(doubled); }

HeckeWordOp word(std::vector<int> w, HalfInt m, int d) { return tw_word_action(w, m, d); }

mpz_class howe_sum(HalfInt a, HalfInt b, int d) {
    mpz_class s = 0;
    for (const auto& lam : bipartitions(std::min(a, b), d)) s += irrep_dim(lam, a) * irrep_dim(lam, b);
    return s;
}

}  // namespace

TEST_CASE("T_a on basis vectors") {
    HalfInt m = H(1);
    TensorSpace sp(m, 1);
    auto t0 = t_action(0, m, 1);
    CHECK(t0.op.cols[sp.index({H(1)})] == SparseVec::unit(sp.index({H(-1)})));
    auto want = SparseVec::from_entries({{sp.index({H(1)}), Scalar(1)}, {sp.index({H(-1)}), Scalar::q_pow(-1) - Scalar::q()}});
    CHECK(t0.op.cols[sp.index({H(-1)})] == want);
    TensorSpace s3(H(2), 1);
    CHECK(t_action(0, H(2), 1).op.cols[s3.index({H(0)})] == SparseVec::unit(s3.index({H(0)}), Scalar::q_pow(-1)));
    CHECK_THROWS_AS(t_action(2, m, 2), DomainError);
}

TEST_CASE("Hecke relations as operator identities") {
    Scalar qi = Scalar::q_pow(-1), q = Scalar::q();
    for (int m2 = 0; m2 <= 3; ++m2) {
        HalfInt m = H(m2);
        for (int d = 1; d <= 3; ++d) {
            auto id = hecke_identity(m, d);
            for (int a = 0; a < d; ++a) {
                auto t = t_action(a, m, d);
                // (T - q^{-1})(T + q) = T^2 + (q - q^{-1})T - 1
                auto quad = add(add(t.then(t).op, t.op, q - qi), id.op, Scalar(-1));
                CHECK(quad == zero_map(id.op.rows, id.op.rows));
                for (int b = a + 1; b < d; ++b) {
                    if (a == 0 && b == 1)
                        CHECK(word({0, 1, 0, 1}, m, d) == word({1, 0, 1, 0}, m, d));
                    else if (b == a + 1)
                        CHECK(word({a, b, a}, m, d) == word({b, a, b}, m, d));
                    else
                        CHECK(word({a, b}, m, d) == word({b, a}, m, d));
                }
            }
        }
    }
}

TEST_CASE("T_w does not depend on the reduced word") {
    for (int m2 = 0; m2 <= 3; ++m2)
        for (int d = 1; d <= 3; ++d)
            for (const auto& w : weyl_b(d)) {
                auto ref = tw_action(w, H(m2), d);
                for (const auto& rw : all_reduced_words(w)) CHECK(word(rw, H(m2), d) == ref);
            }
    CHECK(tw_action(weyl_b(2).front(), H(1), 2) == hecke_identity(H(1), 2));
}

TEST_CASE("u elements") {
    auto up = u_element(Sign::Plus, H(0));  // n+ = 1
    REQUIRE(up.coeffs.size() == 2);
    CHECK(up.coeffs[0].second == Scalar(1));
    CHECK(up.coeffs[1].second == Scalar::q_pow(-1));
    auto um = u_element(Sign::Minus, H(1));  // n- = 1
    REQUIRE(um.coeffs.size() == 2);
    CHECK(um.coeffs[1].second == -Scalar::q());
    CHECK_THROWS_AS(u_element(Sign::Plus, H(9)), CapExceeded);
}

TEST_CASE("u elements are central with the expected eigenvalues") {
    for (int n2 = 0; n2 <= 3; ++n2)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            if (sign_size(s, H(n2)) == 0) continue;
            auto u = u_element(s, H(n2));
            for (int m2 = 0; m2 <= 2; ++m2) {
                auto uop = u_operator(u, H(m2));
                for (int g = 0; g < u.rank; ++g) {
                    auto t = t_action(g, H(m2), u.rank);
                    auto scaled = scale(uop.op, u_eigenvalue(s, g));
                    CHECK(t.then(uop).op == scaled);
                    CHECK(uop.then(t).op == scaled);
                }
            }
        }
}

TEST_CASE("wedge spaces") {
    HalfInt h = H(1);
    TensorSpace sp(h, 1);
    auto wp = wedge_space(Sign::Plus, h, h);
    REQUIRE(wp.span.dim() == 1);
    auto vp = SparseVec::from_entries({{sp.index({H(1)}), Scalar(1)}, {sp.index({H(-1)}), Scalar::q_pow(-1)}});
    CHECK(wp.span.contains(vp));
    auto wm = wedge_space(Sign::Minus, h, h);
    REQUIRE(wm.span.dim() == 1);
    auto vm = SparseVec::from_entries({{sp.index({H(1)}), Scalar(1)}, {sp.index({H(-1)}), -Scalar::q()}});
    CHECK(wm.span.contains(vm));
    for (int n2 = 0; n2 <= 3; ++n2)
        for (int m2 = 0; m2 <= 3; ++m2)
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                if (sign_size(s, H(n2)) == 0) continue;
                auto w = wedge_space(s, H(m2), H(n2));
                CHECK(w.span.dim() == w.distinguished.size());
                CHECK(w.is_basis);
            }
}

TEST_CASE("commutant dimensions") {
    CHECK(hecke_commutant(H(1), H(1), 1).dim() == 2);
    CHECK(hecke_commutant(H(3), H(2), 0).dim() == 1);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int d = 0; d <= 2; ++d) CHECK(hecke_commutant(H(a), H(b), d).dim() == howe_sum(H(a), H(b), d));
    CHECK_THROWS_AS(hecke_commutant(H(3), H(3), 3, 100), BudgetExceeded);
}

TEST_CASE("commutant members intertwine") {
    HalfInt a = H(1), b = H(2);
    int d = 2;
    auto c = hecke_commutant(a, b, d);
    TensorSpace sa(a, d), sb(b, d);
    for (const auto& v : c.basis) {
        LinearMap phi = zero_map(sb.size, sa.size);
        std::vector<std::vector<SparseVec::Entry>> cols(sa.size);
        for (const auto& [k, x] : v) cols[k % sa.size].emplace_back(k / sa.size, x);
        for (std::size_t j = 0; j < sa.size; ++j) phi.cols[j] = SparseVec::from_entries(cols[j]);
        for (int g = 0; g < d; ++g)
            CHECK(compose(phi, t_action(g, a, d).op) == compose(t_action(g, b, d).op, phi));
    }
}

TEST_CASE("ıSchur commutation") {
    for (int n2 = 0; n2 <= 3; ++n2)
        for (int d = 1; d <= 3; ++d)
            for (const auto& g : i_generators(H(n2))) {
                auto x = tensor_action_iU(g, H(n2), d);
                for (int a = 0; a < d; ++a) {
                    auto t = t_action(a, H(n2), d);
                    CHECK(compose(x.map, t.op) == compose(t.op, x.map));
                }
            }
}

TEST_CASE("double centralizer on small cases") {
    CHECK(double_centralizer_check(H(1), 1).equal);
    auto r = double_centralizer_check(H(2), 2);
    CHECK(r.equal);
    CHECK(r.generated_dim == r.commutant_dim);
    CHECK(double_centralizer_check(H(1), 0).equal);
}
