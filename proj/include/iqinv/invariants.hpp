#pragma once

#include "iqinv/icoord.hpp"

namespace iqinv {

// A ⊗ B with keys a*dim(B) + b; left = 𝒱_{P,N,d} side, right = 𝒱_{N,R,d} side.
struct PairSpace {
    std::shared_ptr<const CoordSpace> left, right;
    std::size_t size() const { return left->dim() * right->dim(); }
    Key key(Key a, Key b) const { return a * right->dim() + b; }
    std::string str(Key k) const;
};

struct InvariantSpace {
    PairSpace pair;
    Subspace space;
};

// v with (L_x ⊗ 1)v = (1 ⊗ R_x)v for every listed pair (L_x, R_x)
Subspace balanced_space(const std::vector<std::pair<LinearMap, LinearMap>>& gens, std::size_t dim_a, std::size_t dim_b);

// type A, with P = 2p+1, R = 2r+1, N = 2n+1
InvariantSpace X_A(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
// on normal monomials of 𝒱_{P,R,d}, as the product of the X_ij
LinearMap Psi_A(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
// degree-d part of the two-sided ideal generated by quantum k-minors
Subspace minor_ideal_A(HalfInt p, HalfInt r, int k, int d, std::size_t budget = 0);
// {v : x v = ε(x) v} under the action x(f⊗g) = x₍₁₎f ⊗ g S(x₍₂₎)
Subspace eps_invariants_A(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);

Verdict fft_A_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
Verdict sft_A_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
Verdict lemma_inv_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);

// ı side
InvariantSpace X_i(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
// on the classes of 𝒱ⁱ_{p,r,d}; throws Error if the lifted map misses the ideal
LinearMap Psi_i(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);

Verdict fft_i_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
Verdict sft_i_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
Verdict dims_fd_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
Verdict compose_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);
Verdict psi_module_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget = 0);

}  // namespace iqinv
