#include "iqinv/heckeb.hpp"

#include "iqinv/errors.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace iqinv {

HeckeWordOp HeckeWordOp::then(const HeckeWordOp& y) const {
    if (m != y.m || d != y.d) throw DomainError("HeckeWordOp: incompatible operands");
    return {m, d, compose(y.op, op)};
}

HeckeWordOp hecke_identity(HalfInt m, int d) { return {m, d, identity_map(TensorSpace(m, d).size)}; }

namespace {

HeckeWordOp build_t(int a, HalfInt m, int d) {
    if (a < 0 || a >= d) throw DomainError("t_action: generator index out of range");
    TensorSpace sp(m, d);
    const Scalar qq = Scalar::q_pow(-1) - Scalar::q();
    HeckeWordOp h{m, d, zero_map(sp.size, sp.size)};
    for (Key k = 0; k < sp.size; ++k) {
        Tuple i = sp.tuple(k);
        Tuple s = act_tuple(i, a);
        // compare the two entries that s_a moves
        int cmp;
        if (a == 0)
            cmp = i[0].doubled > 0 ? -1 : (i[0].doubled == 0 ? 0 : 1);
        else
            cmp = i[a - 1] < i[a] ? -1 : (i[a - 1] == i[a] ? 0 : 1);
        std::vector<SparseVec::Entry> e;
        if (cmp < 0) {
            e.emplace_back(sp.index(s), Scalar(1));
        } else if (cmp == 0) {
            e.emplace_back(k, Scalar::q_pow(-1));
        } else {
            e.emplace_back(sp.index(s), Scalar(1));
            e.emplace_back(k, qq);
        }
        h.op.cols[k] = SparseVec::from_entries(std::move(e));
    }
    return h;
}

}  // namespace

HeckeWordOp t_action(int a, HalfInt m, int d) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, HeckeWordOp> cache;
    auto key = std::make_tuple(a, m.doubled, d);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    HeckeWordOp h = build_t(a, m, d);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(h)).first->second;
}

HeckeWordOp tw_word_action(const std::vector<int>& word, HalfInt m, int d) {
    HeckeWordOp h = hecke_identity(m, d);
    for (int g : word) h = h.then(t_action(g, m, d));
    return h;
}

HeckeWordOp tw_action(const SignedPerm& w, HalfInt m, int d) {
    if (w.d != d) throw DomainError("tw_action: degree mismatch");
    return tw_word_action(w.reduced_word, m, d);
}

UElement u_element(Sign s, HalfInt n, int cap) {
    UElement u;
    u.sign = s;
    u.n = n;
    u.rank = sign_size(s, n);
    if (u.rank > cap) throw CapExceeded("u_element: rank " + std::to_string(u.rank) + " exceeds cap");
    for (auto& w : weyl_b(u.rank)) {
        Scalar c = s == Sign::Plus ? Scalar::q_pow(-w.zero_count) * Scalar::q_pow(w.length - w.zero_count)
                                   : Scalar::q_pow(w.length);
        if ((s == Sign::Plus ? w.length - w.zero_count : w.length) % 2) c = -c;
        u.coeffs.emplace_back(std::move(w), std::move(c));
    }
    return u;
}

HeckeWordOp u_operator(const UElement& u, HalfInt m) {
    TensorSpace sp(m, u.rank);
    HeckeWordOp acc{m, u.rank, zero_map(sp.size, sp.size)};
    for (const auto& [w, c] : u.coeffs) acc.op = add(acc.op, tw_action(w, m, u.rank).op, c);
    return acc;
}

Scalar u_eigenvalue(Sign s, int g) {
    if (s == Sign::Plus && g == 0) return Scalar::q_pow(-1);
    return -Scalar::q();
}

WedgeReport wedge_space(Sign s, HalfInt m, HalfInt n) {
    UElement u = u_element(s, n);
    HeckeWordOp h = u_operator(u, m);
    TensorSpace sp(m, u.rank);
    WedgeReport r;
    r.span = h.op.image();
    r.distinguished = admissible_i(s, n, m);
    std::vector<SparseVec> dv;
    for (const auto& t : r.distinguished) dv.push_back(h.op.cols[sp.index(t)]);
    Subspace ds = echelonize(dv, sp.size);
    r.distinguished_rank = ds.dim();
    r.is_basis = ds.dim() == r.distinguished.size() && subspace_equals(ds, r.span);
    return r;
}

namespace {

std::vector<int> orbit_key(const Tuple& t) {
    std::vector<int> k;
    for (HalfInt x : t) k.push_back(std::abs(x.doubled));
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

Subspace hecke_commutant(HalfInt src, HalfInt tgt, int d, std::size_t budget) {
    TensorSpace ss(src, d), ts(tgt, d);
    const std::size_t S = ss.size, T = ts.size;
    if (budget && S * T > budget)
        throw BudgetExceeded("hecke_commutant: " + std::to_string(S * T) + " unknowns exceed budget");
    std::vector<HeckeWordOp> hs, ht;
    std::vector<LinearMap> ht_rows;  // transposes: column r lists row r of T_a
    for (int a = 0; a < d; ++a) {
        hs.push_back(t_action(a, src, d));
        ht.push_back(t_action(a, tgt, d));
        ht_rows.push_back(transpose(ht.back().op));
    }
    // T_a preserves W-orbits, so the system splits over orbit pairs
    std::map<std::vector<int>, std::vector<Key>> so, to;
    for (Key c = 0; c < S; ++c) so[orbit_key(ss.tuple(c))].push_back(c);
    for (Key r = 0; r < T; ++r) to[orbit_key(ts.tuple(r))].push_back(r);

    std::vector<SparseVec> basis;
    std::vector<Key> pivots;
    for (const auto& [ok, rows] : to)
        for (const auto& [ck, cols] : so) {
            // local unknown index, monotone in the global key r*S + c
            std::map<Key, Key> local;
            std::vector<Key> global;
            for (Key r : rows)
                for (Key c : cols) global.push_back(r * S + c);
            std::sort(global.begin(), global.end());
            for (Key k = 0; k < global.size(); ++k) local[global[k]] = k;
            std::vector<SparseVec> eqs;
            for (int a = 0; a < d; ++a)
                for (Key r : rows)
                    for (Key c : cols) {
                        std::vector<SparseVec::Entry> e;
                        for (const auto& [k, x] : hs[a].op.cols[c]) e.emplace_back(local.at(r * S + k), x);
                        for (const auto& [r2, x] : ht_rows[a].cols[r]) e.emplace_back(local.at(r2 * S + c), -x);
                        SparseVec v = SparseVec::from_entries(std::move(e));
                        if (!v.empty()) eqs.push_back(std::move(v));
                    }
            Subspace ker = kernel(eqs, global.size());
            for (const auto& v : ker.basis) {
                SparseVec g;
                for (const auto& [k, x] : v) g.push_back(global[k], x);
                pivots.push_back(g.lead_key());
                basis.push_back(std::move(g));
            }
        }
    std::vector<std::size_t> order(basis.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    Subspace out;
    out.ambient = S * T;
    for (std::size_t k : order) {
        out.pivots.push_back(pivots[k]);
        out.basis.push_back(std::move(basis[k]));
    }
    return out;
}

CentralizerReport double_centralizer_check(HalfInt n, int d) {
    TensorSpace sp(n, d);
    const std::size_t S = sp.size;
    std::vector<TensorOperator> gens;
    for (const auto& g : i_generators(n)) gens.push_back(tensor_action_iU(g, n, d));
    EchelonBuilder span(S * S);
    std::vector<TensorOperator> frontier{identity_operator(n, d)};
    span.add(flatten(frontier.front().map));
    CentralizerReport rep;
    std::size_t last = span.rank();
    int stable = 0;
    int len = 0;
    while (stable < 2) {
        ++len;
        std::vector<TensorOperator> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                TensorOperator y = g * x;
                if (span.add(flatten(y.map))) next.push_back(std::move(y));
            }
        frontier = std::move(next);
        stable = span.rank() == last ? stable + 1 : 0;
        last = span.rank();
    }
    rep.saturation_length = len;
    Subspace generated = span.finish();
    Subspace comm = hecke_commutant(n, n, d);
    rep.generated_dim = generated.dim();
    rep.commutant_dim = comm.dim();
    rep.equal = subspace_equals(generated, comm);
    return rep;
}

}  // namespace iqinv
