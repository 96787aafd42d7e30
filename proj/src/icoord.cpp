#include "iqinv/icoord.hpp"

#include "iqinv/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace iqinv {

std::vector<QPoly> relation_generators(HalfInt n, HalfInt m) {
    auto rs = index_scheme(n), cs = index_scheme(m);
    Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
    std::vector<QPoly> out;
    auto t = [&](HalfInt i, HalfInt j, const Scalar& c) { return QPoly::t(n, m, {i}, {j}, c); };
    for (HalfInt i : rs.underline) {
        if (i.doubled <= 0) continue;
        for (HalfInt j : cs.underline) {
            if (j.doubled <= 0) continue;
            out.push_back(t(i, j, Scalar(1)) + t(-i, -j, Scalar(-1)) + t(i, -j, qi - q));
            out.push_back(t(i, -j, Scalar(1)) + t(-i, j, Scalar(-1)));
        }
    }
    if (m.is_integer())
        for (HalfInt i : rs.underline)
            if (i.doubled > 0) out.push_back(t(i, HalfInt{}, Scalar(1)) + t(-i, HalfInt{}, -q));
    if (n.is_integer())
        for (HalfInt j : cs.underline)
            if (j.doubled > 0) out.push_back(t(HalfInt{}, j, Scalar(1)) + t(HalfInt{}, -j, -q));
    return out;
}

namespace {

// Rewriting preserves the multisets of |row| and |col| indices and so do the
// relation generators; the ideal splits along them.
std::vector<int> grade(const CoordScheme& cs, const Mono& m) {
    std::vector<int> rows, cols;
    for (PairCode c : m) {
        rows.push_back(std::abs(cs.row(c).doubled));
        cols.push_back(std::abs(cs.col(c).doubled));
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    rows.push_back(-1);
    rows.insert(rows.end(), cols.begin(), cols.end());
    return rows;
}

template <class V>
std::shared_ptr<const V> cached(std::mutex& mu, std::map<std::tuple<int, int, int>, std::shared_ptr<const V>>& cache,
                                std::tuple<int, int, int> key, const std::function<std::shared_ptr<const V>()>& make) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto v = make();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

std::shared_ptr<const Subspace> ideal_component(HalfInt n, HalfInt m, int d, std::size_t budget) {
    auto nb = normal_basis(n, m, d, budget);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const Subspace>> cache;
    return cached<Subspace>(mu, cache, {n.doubled, m.doubled, d}, [&] {
        if (d == 0) return std::make_shared<const Subspace>(zero_space(nb->size()));
        auto lower = normal_basis(n, m, d - 1);
        std::map<std::vector<int>, EchelonBuilder> blocks;
        for (const auto& r : relation_generators(n, m))
            for (const auto& mu_mono : lower->monos) {
                QPoly v = multiply(r, QPoly::from_mono(n, m, mu_mono));
                if (v.is_zero()) continue;
                auto g = grade(nb->scheme, v.terms().begin()->first);
                blocks.try_emplace(g, nb->size()).first->second.add(nb->vec(v));
            }
        std::vector<SparseVec> rows;
        for (auto& [g, b] : blocks)
            for (auto& v : b.finish().basis) rows.push_back(std::move(v));
        return std::make_shared<const Subspace>(merge_blocks(nb->size(), std::move(rows)));
    });
}

CoordSpace::CoordSpace(std::shared_ptr<const NormalBasis> monos, Subspace ideal, bool twisted)
    : monos_(std::move(monos)), section_(quotient_coords(monos_->size(), std::move(ideal))), twisted_(twisted) {}

const SparseVec& CoordSpace::project_mono(const Mono& m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
    }
    if (static_cast<int>(m.size()) != degree())
        throw DomainError("project: degree " + std::to_string(m.size()) + " into a degree-" + std::to_string(degree()) + " space");
    std::vector<SparseVec::Entry> e;
    for (const auto& [nm, c] : normal_form_mono(n(), this->m(), m)) e.emplace_back(monos_->key(nm), c);
    SparseVec v = section_.project(SparseVec::from_entries(std::move(e)));
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(m, std::move(v)).first->second;
}

SparseVec CoordSpace::project(const QPoly& p) const {
    if (p.n() != n() || p.m() != m()) throw DomainError("project: ambient mismatch");
    SparseAccumulator acc;
    for (const auto& [mono, c] : p.terms()) acc.add(project_mono(mono), c);
    return acc.take();
}

QPoly CoordSpace::rep(const SparseVec& cls) const {
    QPoly p(n(), m());
    for (const auto& [k, c] : cls) p.add(basis_mono(k), c);
    return p;
}

LinearMap CoordSpace::left_matrix(const LinearMap& column_op) const {
    const auto& cs = monos_->scheme;
    TensorSpace sp(m(), degree());
    LinearMap out{dim(), {}};
    for (Key k = 0; k < dim(); ++k) {
        const Mono& mono = basis_mono(k);
        Tuple i = cs.row_tuple(mono);
        SparseAccumulator acc;
        for (const auto& [kk, x] : column_op.cols.at(sp.index(cs.col_tuple(mono))))
            acc.add(project_mono(cs.mono(i, sp.tuple(kk))), x);
        out.cols.push_back(acc.take());
    }
    return out;
}

LinearMap CoordSpace::right_matrix(const LinearMap& row_op) const {
    const auto& cs = monos_->scheme;
    TensorSpace sp(n(), degree());
    LinearMap rows = transpose(row_op);
    LinearMap out{dim(), {}};
    for (Key k = 0; k < dim(); ++k) {
        const Mono& mono = basis_mono(k);
        Tuple j = cs.col_tuple(mono);
        SparseAccumulator acc;
        for (const auto& [kk, x] : rows.cols.at(sp.index(cs.row_tuple(mono))))
            acc.add(project_mono(cs.mono(sp.tuple(kk), j)), x);
        out.cols.push_back(acc.take());
    }
    return out;
}

const LinearMap& CoordSpace::memo_matrix(const std::string& tag, const std::function<LinearMap()>& make) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = matrices_.find(tag);
        if (it != matrices_.end()) return it->second;
    }
    LinearMap v = make();
    std::lock_guard<std::mutex> lock(mu_);
    return matrices_.emplace(tag, std::move(v)).first->second;
}

std::shared_ptr<const CoordSpace> plain_space(HalfInt n, HalfInt m, int d, std::size_t budget) {
    auto nb = normal_basis(n, m, d, budget);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const CoordSpace>> cache;
    return cached<CoordSpace>(mu, cache, {n.doubled, m.doubled, d},
                              [&] { return std::make_shared<const CoordSpace>(nb, zero_space(nb->size()), false); });
}

std::shared_ptr<const CoordSpace> quotient_space(HalfInt n, HalfInt m, int d, std::size_t budget) {
    auto nb = normal_basis(n, m, d, budget);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const CoordSpace>> cache;
    return cached<CoordSpace>(mu, cache, {n.doubled, m.doubled, d},
                              [&] { return std::make_shared<const CoordSpace>(nb, *ideal_component(n, m, d), true); });
}

SparseVec i_act_left(const IWord& x, const CoordSpace& s, const SparseVec& cls) {
    return s.left_matrix(tensor_action_iword(x, s.m(), s.degree()).map).apply(cls);
}

SparseVec i_act_right(const CoordSpace& s, const SparseVec& cls, const IWord& y) {
    // (c·y1)·y2 = c·(y1 y2), so the row operator of the whole word is used as is
    return s.right_matrix(tensor_action_iword(y, s.n(), s.degree()).map).apply(cls);
}

const LinearMap& i_left_matrix(const IGenerator& g, const CoordSpace& s) {
    return s.memo_matrix("iL" + g.str(), [&] { return s.left_matrix(tensor_action_iU(g, s.m(), s.degree()).map); });
}

const LinearMap& i_right_matrix(const CoordSpace& s, const IGenerator& g) {
    return s.memo_matrix("iR" + g.str(), [&] { return s.right_matrix(tensor_action_iU(g, s.n(), s.degree()).map); });
}

namespace {

// ρ of every dual basis functional at once
std::vector<LinearMap> rho_all(const CoordSpace& s) {
    TensorSpace rows(s.n(), s.degree()), cols(s.m(), s.degree());
    const auto& cs = s.monos().scheme;
    std::vector<std::vector<std::vector<SparseVec::Entry>>> e(s.dim(), std::vector<std::vector<SparseVec::Entry>>(cols.size));
    for (Key i = 0; i < rows.size; ++i) {
        Tuple ti = rows.tuple(i);
        for (Key j = 0; j < cols.size; ++j)
            for (const auto& [k, c] : s.project_mono(cs.mono(ti, cols.tuple(j)))) e[k][j].emplace_back(i, c);
    }
    std::vector<LinearMap> out;
    for (auto& per : e) {
        LinearMap f{rows.size, {}};
        for (auto& col : per) f.cols.push_back(SparseVec::from_entries(std::move(col)));
        out.push_back(std::move(f));
    }
    return out;
}

std::string tuple_pair(const Tuple& i, const Tuple& j) { return "t[" + tuple_str(i) + "," + tuple_str(j) + "]"; }

}  // namespace

LinearMap rho_map(const CoordSpace& s, Key k) { return rho_all(s).at(k); }

LinearMap rho_functional(const CoordSpace& s, const SparseVec& alpha) {
    auto all = rho_all(s);
    LinearMap out = zero_map(TensorSpace(s.n(), s.degree()).size, TensorSpace(s.m(), s.degree()).size);
    for (const auto& [k, c] : alpha) out = add(out, all.at(k), c);
    return out;
}

Verdict rho_check(HalfInt n, HalfInt m, int d, std::size_t budget) {
    Verdict v;
    auto s = quotient_space(n, m, d, budget);
    if (budget && TensorSpace(n, d).size * TensorSpace(m, d).size > budget)
        throw BudgetExceeded("rho: " + std::to_string(TensorSpace(n, d).size * TensorSpace(m, d).size) + " matrix entries exceed budget");
    auto rho = rho_all(*s);
    // (i) Hecke intertwiners
    for (Key k = 0; k < rho.size(); ++k)
        for (int a = 0; a < d; ++a)
            v.require(compose(rho[k], t_action(a, m, d).op) == compose(t_action(a, n, d).op, rho[k]),
                      "rho(alpha_" + std::to_string(k) + ") does not commute with T_" + std::to_string(a));
    // (ii) injective, (iii) image is the whole commutant
    std::vector<SparseVec> flat;
    for (const auto& f : rho) flat.push_back(flatten(f));
    Subspace image = echelonize(flat, TensorSpace(n, d).size * TensorSpace(m, d).size);
    v.require(image.dim() == s->dim(), "rho has rank " + std::to_string(image.dim()) + " on a space of dim " + std::to_string(s->dim()));
    Subspace comm = hecke_commutant(m, n, d, budget);
    v.require(subspace_equals(image, comm), "image dim " + std::to_string(image.dim()) + " vs commutant dim " + std::to_string(comm.dim()));
    // (iv) ρ(xαy) = X ρ(α) Y, with xαy computed from the action matrices on classes
    std::vector<std::optional<IGenerator>> xs{std::nullopt}, ys{std::nullopt};
    for (const auto& g : i_generators(n)) xs.emplace_back(g);
    for (const auto& g : i_generators(m)) ys.emplace_back(g);
    std::size_t checked = 0;
    for (const auto& x : xs)
        for (const auto& y : ys) {
            if (!x && !y) continue;
            LinearMap act = identity_map(s->dim());
            LinearMap X = identity_map(TensorSpace(n, d).size), Y = identity_map(TensorSpace(m, d).size);
            if (x) {
                act = compose(i_right_matrix(*s, *x), act);
                X = tensor_action_iU(*x, n, d).map;
            }
            if (y) {
                act = compose(i_left_matrix(*y, *s), act);
                Y = tensor_action_iU(*y, m, d).map;
            }
            auto act_rows = transpose(act);
            for (Key k = 0; k < s->dim(); ++k) {
                LinearMap lhs = zero_map(X.rows, Y.rows);
                for (const auto& [c, a] : act_rows.cols[k]) lhs = add(lhs, rho[c], a);
                LinearMap rhs = compose(X, compose(rho[k], Y));
                ++checked;
                v.require(lhs == rhs, "equivariance fails for alpha_" + std::to_string(k) + " with x=" + (x ? x->str() : "1") +
                                          ", y=" + (y ? y->str() : "1"));
            }
        }
    v.expected = "injective Hecke intertwiners onto a commutant of dim " + std::to_string(comm.dim());
    v.actual = "rank " + std::to_string(image.dim()) + ", dim " + std::to_string(s->dim()) + ", " + std::to_string(checked) + " equivariance identities";
    return v;
}

Verdict lemma_com_check(HalfInt n, HalfInt m, int d, std::size_t budget) {
    Verdict v;
    auto s = quotient_space(n, m, d, budget);
    const auto& cs = s->monos().scheme;
    TensorSpace rs(n, d), ms(m, d);
    Scalar qi = Scalar::q_pow(-1), coef = qi - Scalar::q();
    auto cls = [&](const Tuple& i, const Tuple& j) { return s->project_mono(cs.mono(i, j)); };
    std::size_t total = 0, failures = 0;
    auto check = [&](const SparseVec& lhs, const SparseVec& rhs, const std::string& what) {
        ++total;
        if (!(lhs == rhs)) {
            ++failures;
            v.fail(what);
        }
    };
    for (Key a = 0; a < rs.size; ++a) {
        Tuple i = rs.tuple(a);
        for (Key b = 0; b < ms.size; ++b) {
            Tuple j = ms.tuple(b);
            if (d >= 1) {
                Tuple i0 = i, j0 = j;
                i0[0] = -i0[0];
                j0[0] = -j0[0];
                int i1 = i[0].doubled, j1 = j[0].doubled;
                std::string w = "s0 at " + tuple_pair(i, j);
                if (i1 > 0 && j1 > 0)
                    check(cls(i0, j0), cls(i, j) + cls(i, j0).scaled(coef), w);
                else if (i1 > 0 && j1 < 0)
                    check(cls(i0, j0), cls(i, j), w);
                else if ((i1 > 0 && j1 == 0) || (i1 == 0 && j1 > 0))
                    check(cls(i0, j0), cls(i, j).scaled(qi), w);
            }
            for (int p = 0; p + 1 < d; ++p) {
                Tuple is = i, js = j;
                std::swap(is[p], is[p + 1]);
                std::swap(js[p], js[p + 1]);
                std::string w = "s" + std::to_string(p + 1) + " at " + tuple_pair(i, j);
                if (i[p] < i[p + 1] && j[p] < j[p + 1])
                    check(cls(is, js), cls(i, j) + cls(i, js).scaled(coef), w);
                else if (i[p] < i[p + 1] && j[p + 1] < j[p])
                    check(cls(is, js), cls(i, j), w);
                else if ((i[p] < i[p + 1] && j[p] == j[p + 1]) || (i[p] == i[p + 1] && j[p] < j[p + 1]))
                    check(cls(is, js), cls(i, j).scaled(qi), w);
            }
        }
    }
    v.expected = "0 failures";
    v.actual = std::to_string(failures) + " failures of " + std::to_string(total);
    return v;
}

QPoly i_minor_poly(Sign s, HalfInt p, HalfInt r, const Tuple& i, const Tuple& j) {
    QPoly out(p, r);
    std::size_t choices = 1;
    for (HalfInt x : j) choices *= x.doubled == 0 ? 1 : 2;
    for (std::size_t mask = 0; mask < choices; ++mask) {
        Tuple k = j;
        int l0 = 0;
        std::size_t bit = 0;
        for (auto& x : k) {
            if (x.doubled == 0) continue;
            if ((mask >> bit++) & 1) {
                x = -x;
                ++l0;
            }
        }
        Scalar c = s == Sign::Plus ? Scalar::q_pow(-l0) : Scalar::q_pow(l0);
        if (s == Sign::Minus && l0 % 2) c = -c;
        out += minor_any(p, r, i, k).scaled(c);
    }
    return out;
}

namespace {

void require_admissible(Sign s, HalfInt n, HalfInt side, const Tuple& t) {
    auto all = admissible_i(s, n, side);
    if (std::find(all.begin(), all.end(), t) == all.end())
        throw DomainError("ı-minor: " + tuple_str(t) + " is not admissible for sign " + sign_str(s) + ", n=" + n.str());
}

}  // namespace

SparseVec i_minor(Sign s, HalfInt n, HalfInt p, HalfInt r, const Tuple& i, const Tuple& j) {
    require_admissible(s, n, p, i);
    require_admissible(s, n, r, j);
    return quotient_space(p, r, sign_size(s, n))->project(i_minor_poly(s, p, r, i, j));
}

MinorSpaceReport minor_space(Sign s, HalfInt n, HalfInt p, HalfInt r) {
    int sz = sign_size(s, n);
    auto space = quotient_space(p, r, sz);
    auto as = admissible_i(s, n, p), bs = admissible_i(s, n, r);
    std::vector<SparseVec> vs;
    for (const auto& i : as)
        for (const auto& j : bs) vs.push_back(space->project(i_minor_poly(s, p, r, i, j)));
    MinorSpaceReport rep;
    rep.space = echelonize(vs, space->dim());
    rep.expected_dim = as.size() * bs.size();
    rep.stable = true;
    for (const auto& g : i_generators(r))
        for (const auto& v : rep.space.basis) rep.stable = rep.stable && rep.space.contains(i_left_matrix(g, *space).apply(v));
    for (const auto& g : i_generators(p))
        for (const auto& v : rep.space.basis) rep.stable = rep.stable && rep.space.contains(i_right_matrix(*space, g).apply(v));
    return rep;
}

Subspace module_I_component(HalfInt n, HalfInt p, HalfInt r, int d, std::size_t budget) {
    auto target = quotient_space(p, r, d, budget);
    EchelonBuilder b(target->dim());
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        int sz = sign_size(s, n);
        if (sz > d) continue;
        auto nus = normal_basis(p, r, d - sz, budget);
        for (const auto& i : admissible_i(s, n, p))
            for (const auto& j : admissible_i(s, n, r)) {
                QPoly mu = i_minor_poly(s, p, r, i, j);
                for (const auto& nu : nus->monos) b.add(target->project(multiply(mu, QPoly::from_mono(p, r, nu))));
            }
    }
    return b.finish();
}

}  // namespace iqinv
