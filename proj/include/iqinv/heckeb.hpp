#pragma once

#include "iqinv/qgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace iqinv {

// Right action of a Hecke element on V_M^{⊗d}: column i is v_i·T.
struct HeckeWordOp {
    HalfInt m;
    int d = 0;
    LinearMap op;

    // v·(xy) = (v·x)·y
    HeckeWordOp then(const HeckeWordOp& y) const;
    friend bool operator==(const HeckeWordOp& a, const HeckeWordOp& b) {
        return a.m == b.m && a.d == b.d && a.op == b.op;
    }
};

HeckeWordOp hecke_identity(HalfInt m, int d);
HeckeWordOp t_action(int a, HalfInt m, int d);  // cached
HeckeWordOp tw_word_action(const std::vector<int>& word, HalfInt m, int d);
HeckeWordOp tw_action(const SignedPerm& w, HalfInt m, int d);

struct UElement {
    Sign sign;
    HalfInt n;
    int rank = 0;  // n^±
    std::vector<std::pair<SignedPerm, Scalar>> coeffs;
};

UElement u_element(Sign s, HalfInt n, int cap = 4);
HeckeWordOp u_operator(const UElement& u, HalfInt m);
// the scalar c with T_g·u = u·T_g = c·u
Scalar u_eigenvalue(Sign s, int g);

struct WedgeReport {
    Subspace span;                  // span of v_i·u over all tuples
    std::vector<Tuple> distinguished;
    std::size_t distinguished_rank = 0;
    bool is_basis = false;
};

WedgeReport wedge_space(Sign s, HalfInt m, HalfInt n);

// Hom_H(V_src^{⊗d}, V_tgt^{⊗d}) as a subspace of flattened maps (key row*src + col)
Subspace hecke_commutant(HalfInt src, HalfInt tgt, int d, std::size_t budget = 0);

struct CentralizerReport {
    std::size_t generated_dim = 0;
    std::size_t commutant_dim = 0;
    int saturation_length = 0;
    bool equal = false;
};

CentralizerReport double_centralizer_check(HalfInt n, int d);

}  // namespace iqinv
