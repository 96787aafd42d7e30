#pragma once

#include "iqinv/exactla.hpp"
#include "iqinv/qgroup.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace iqinv {

// A generator t_ij is stored as the code pos(i)*M + pos(j); code order is
// lexicographic order on (i, j).
using PairCode = std::uint16_t;
using Mono = std::vector<PairCode>;

struct MonoHash {
    std::size_t operator()(const Mono& m) const noexcept;
};

struct CoordScheme {
    IndexScheme rows;  // n
    IndexScheme cols;  // m

    CoordScheme(HalfInt n, HalfInt m);
    HalfInt n() const { return rows.n; }
    HalfInt m() const { return cols.n; }
    std::size_t generators() const { return static_cast<std::size_t>(rows.N) * cols.N; }
    PairCode code(HalfInt i, HalfInt j) const;
    HalfInt row(PairCode c) const { return rows.underline[c / cols.N]; }
    HalfInt col(PairCode c) const { return cols.underline[c % cols.N]; }
    Mono mono(const Tuple& i, const Tuple& j) const;  // t_{i1 j1}...t_{id jd}, unsorted
    Tuple row_tuple(const Mono& m) const;
    Tuple col_tuple(const Mono& m) const;
    std::string mono_str(const Mono& m) const;
    bool operator==(const CoordScheme& o) const { return rows.n == o.rows.n && cols.n == o.cols.n; }
};

class QPoly {
public:
    QPoly(HalfInt n, HalfInt m) : n_(n), m_(m) {}
    static QPoly one(HalfInt n, HalfInt m);
    static QPoly t(HalfInt n, HalfInt m, const Tuple& i, const Tuple& j, const Scalar& c = Scalar(1));
    static QPoly from_mono(HalfInt n, HalfInt m, const Mono& mono, const Scalar& c = Scalar(1));

    HalfInt n() const { return n_; }
    HalfInt m() const { return m_; }
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_normal() const;

    void add(const Mono& mono, const Scalar& c);
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly scaled(const Scalar& c) const;
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    HalfInt n_, m_;
    std::map<Mono, Scalar> terms_;
};

// one rewriting step at an adjacent descending pair (pos, pos+1)
QPoly rewrite_at(HalfInt n, HalfInt m, const Mono& mono, std::size_t pos);
// memoized normal form of a single monomial
const std::vector<std::pair<Mono, Scalar>>& normal_form_mono(HalfInt n, HalfInt m, const Mono& mono);
QPoly normal_form(const QPoly& p);
QPoly multiply(const QPoly& a, const QPoly& b);

// operator of a word at a given degree, in the relevant tensor space
using DegreeOp = std::function<LinearMap(int d)>;
// x t_ij = sum_k x_kj t_ik   (x acts on the column index)
QPoly act_left_with(const DegreeOp& x, const QPoly& p);
// t_ij y = sum_k y_ik t_kj   (y acts on the row index)
QPoly act_right_with(const QPoly& p, const DegreeOp& y);
QPoly act_left(const UWord& x, const QPoly& p);
QPoly act_right(const QPoly& p, const UWord& y);

// Δ(i, j) = sum_w (-q)^{l(w)} t_{i, jw}, for strictly increasing i, j
QPoly quantum_minor(HalfInt p, HalfInt r, const Tuple& i, const Tuple& j);
// (-q)^{l(σ)} Δ(i, j)
QPoly minor_sigma(HalfInt p, HalfInt r, const Tuple& i, const Tuple& j, const Perm& sigma);
// Δ(i, k) for any k with distinct entries: (-q)^{inv(k)} Δ(i, sort(k))
QPoly minor_any(HalfInt p, HalfInt r, const Tuple& i, const Tuple& k);

// Degree-d normal monomials in lexicographic order.
struct NormalBasis {
    CoordScheme scheme;
    int d = 0;
    std::vector<Mono> monos;
    std::unordered_map<Mono, Key, MonoHash> index;

    std::size_t size() const { return monos.size(); }
    Key key(const Mono& m) const;
    SparseVec vec(const QPoly& normal) const;  // homogeneous normal poly -> coordinates
    QPoly poly(const SparseVec& v) const;
};

// C(NM+d-1, d), without building anything
std::size_t normal_count(HalfInt n, HalfInt m, int d);
// cached; throws BudgetExceeded when budget > 0 and the count exceeds it
std::shared_ptr<const NormalBasis> normal_basis(HalfInt n, HalfInt m, int d, std::size_t budget = 0);

}  // namespace iqinv
