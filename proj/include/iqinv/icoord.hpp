#pragma once

#include "iqinv/heckeb.hpp"
#include "iqinv/qcoord.hpp"
#include "iqinv/verdict.hpp"

#include <memory>
#include <mutex>

namespace iqinv {

// Degree-1 generators of the right ideal defining the ı-coordinate algebra.
std::vector<QPoly> relation_generators(HalfInt n, HalfInt m);

// Degree-d component of the right ideal, in normal-monomial coordinates.
std::shared_ptr<const Subspace> ideal_component(HalfInt n, HalfInt m, int d, std::size_t budget = 0);

// A degree-d coordinate space: normal monomials modulo an ideal component.
// The type-A space uses the zero ideal, the ı space the component above.
class CoordSpace {
public:
    CoordSpace(std::shared_ptr<const NormalBasis> monos, Subspace ideal, bool twisted);

    HalfInt n() const { return monos_->scheme.n(); }
    HalfInt m() const { return monos_->scheme.m(); }
    int degree() const { return monos_->d; }
    bool twisted() const { return twisted_; }
    std::size_t dim() const { return section_.dim(); }
    const NormalBasis& monos() const { return *monos_; }
    const Subspace& ideal() const { return section_.ideal; }

    // the normal monomial representing basis class k
    const Mono& basis_mono(Key k) const { return monos_->monos[section_.basis_keys[k]]; }
    std::string basis_str(Key k) const { return monos_->scheme.mono_str(basis_mono(k)); }

    SparseVec project(const QPoly& p) const;        // any homogeneous degree-d polynomial
    const SparseVec& project_mono(const Mono& m) const;  // memoized, any monomial
    SparseVec project_normal(const SparseVec& v) const { return section_.project(v); }
    QPoly rep(const SparseVec& cls) const;          // combination of basis monomials

    // matrices on classes; the operators act on the column (left) or row (right)
    // tensor space at this degree
    LinearMap left_matrix(const LinearMap& column_op) const;
    LinearMap right_matrix(const LinearMap& row_op) const;

    // per-space memo for derived matrices, keyed by a caller-chosen tag
    const LinearMap& memo_matrix(const std::string& tag, const std::function<LinearMap()>& make) const;

private:
    std::shared_ptr<const NormalBasis> monos_;
    QuotientSection section_;
    bool twisted_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Mono, SparseVec, MonoHash> cache_;
    mutable std::map<std::string, LinearMap> matrices_;
};

using ICoordSpace = CoordSpace;

// 𝒱_{N,M,d} itself (zero ideal); cached
std::shared_ptr<const CoordSpace> plain_space(HalfInt n, HalfInt m, int d, std::size_t budget = 0);
// 𝒱ⁱ_{n,m,d}; cached
std::shared_ptr<const CoordSpace> quotient_space(HalfInt n, HalfInt m, int d, std::size_t budget = 0);

// x·c and c·y via the ı-generator tensor operators
SparseVec i_act_left(const IWord& x, const CoordSpace& s, const SparseVec& cls);
SparseVec i_act_right(const CoordSpace& s, const SparseVec& cls, const IWord& y);
// generator matrices on classes, cached per space
const LinearMap& i_left_matrix(const IGenerator& g, const CoordSpace& s);
const LinearMap& i_right_matrix(const CoordSpace& s, const IGenerator& g);

// ρ(α) for the k-th dual basis functional: V_M^{⊗d} -> V_N^{⊗d}
LinearMap rho_map(const CoordSpace& s, Key k);
// ρ of an arbitrary functional given by its values on the basis classes
LinearMap rho_functional(const CoordSpace& s, const SparseVec& alpha);

Verdict rho_check(HalfInt n, HalfInt m, int d, std::size_t budget = 0);
Verdict lemma_com_check(HalfInt n, HalfInt m, int d, std::size_t budget = 0);

// Σ_{|k|=j} c(k) Δ(i,k) in 𝒱_{P,R} before projection
QPoly i_minor_poly(Sign s, HalfInt p, HalfInt r, const Tuple& i, const Tuple& j);
// its class in 𝒱ⁱ_{p,r,n^±}; i, j must be admissible for (s, n)
SparseVec i_minor(Sign s, HalfInt n, HalfInt p, HalfInt r, const Tuple& i, const Tuple& j);

struct MinorSpaceReport {
    Subspace space;
    std::size_t expected_dim = 0;
    bool stable = false;
    bool ok() const { return space.dim() == expected_dim && stable; }
};

MinorSpaceReport minor_space(Sign s, HalfInt n, HalfInt p, HalfInt r);

// degree-d component of the right 𝒱_{P,R}-submodule generated by the ı-minors
Subspace module_I_component(HalfInt n, HalfInt p, HalfInt r, int d, std::size_t budget = 0);

}  // namespace iqinv
