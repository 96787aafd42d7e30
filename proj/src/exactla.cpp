#include "iqinv/exactla.hpp"

#include "iqinv/errors.hpp"

#include <algorithm>
#include <numeric>

namespace iqinv {

SparseVec SparseVec::unit(Key k, Scalar c) {
    SparseVec v;
    if (!c.is_zero()) v.e_.emplace_back(k, std::move(c));
    return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& [k, c] : entries) {
        if (!v.e_.empty() && v.e_.back().first == k) {
            v.e_.back().second += c;
            if (v.e_.back().second.is_zero()) v.e_.pop_back();
        } else if (!c.is_zero()) {
            v.e_.emplace_back(k, std::move(c));
        }
    }
    return v;
}

SparseVec SparseVec::from_map(const std::map<Key, Scalar>& m) {
    SparseVec v;
    v.e_.reserve(m.size());
    for (const auto& [k, c] : m)
        if (!c.is_zero()) v.e_.emplace_back(k, c);
    return v;
}

Scalar SparseVec::get(Key k) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), k, [](const Entry& e, Key key) { return e.first < key; });
    if (it != e_.end() && it->first == k) return it->second;
    return Scalar();
}

void SparseVec::push_back(Key k, Scalar c) {
    if (!e_.empty() && e_.back().first >= k) throw DomainError("SparseVec::push_back: keys out of order");
    if (!c.is_zero()) e_.emplace_back(k, std::move(c));
}

SparseVec SparseVec::scaled(const Scalar& c) const {
    SparseVec r;
    if (c.is_zero()) return r;
    if (c.is_one()) return *this;
    r.e_.reserve(e_.size());
    for (const auto& [k, x] : e_) r.e_.emplace_back(k, x * c);
    return r;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& o) {
    if (c.is_zero() || o.e_.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == e_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar s = a->second + c * b->second;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
    SparseVec r(*this);
    r.axpy(Scalar(1), o);
    return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
    SparseVec r(*this);
    r.axpy(Scalar(-1), o);
    return r;
}

void SparseAccumulator::add(Key k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

void SparseAccumulator::add(const SparseVec& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : v) add(k, c.is_one() ? x : x * c);
}

SparseVec SparseAccumulator::take() {
    SparseVec v = SparseVec::from_map(m_);
    m_.clear();
    return v;
}

long Subspace::pivot_index(Key k) const {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), k);
    if (it != pivots.end() && *it == k) return it - pivots.begin();
    return -1;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    if (basis.empty() || v.empty()) return v;
    SparseVec r(v);
    for (const auto& [k, c] : v) {
        long p = pivot_index(k);
        if (p >= 0) r.axpy(-c, basis[p]);
    }
    return r;
}

SparseVec EchelonBuilder::forward_reduce(const SparseVec& v) const {
    if (rows_.empty() || v.empty()) return v;
    std::map<Key, Scalar> acc;
    for (const auto& [k, c] : v) acc.emplace(k, c);
    for (auto it = acc.begin(); it != acc.end();) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Scalar c = it->second;
        // the row has lead 1 at this key and larger keys elsewhere
        for (auto e = std::next(row->second.begin()); e != row->second.end(); ++e) {
            auto [pos, fresh] = acc.try_emplace(e->first, -(c * e->second));
            if (!fresh) {
                pos->second -= c * e->second;
                if (pos->second.is_zero()) acc.erase(pos);
            }
        }
        it = acc.erase(it);
    }
    return SparseVec::from_map(acc);
}

bool EchelonBuilder::add(const SparseVec& v) {
    for (const auto& [k, c] : v)
        if (k >= ambient_) throw DomainError("EchelonBuilder: key outside ambient space");
    SparseVec r = forward_reduce(v);
    if (r.empty()) return false;
    if (!r.lead().is_one()) r = r.scaled(r.lead().inverse());
    Key p = r.lead_key();
    rows_.emplace(p, std::move(r));
    return true;
}

bool EchelonBuilder::in_span(const SparseVec& v) const { return forward_reduce(v).empty(); }

Subspace EchelonBuilder::finish() const {
    Subspace s;
    s.ambient = ambient_;
    s.basis.resize(rows_.size());
    s.pivots.reserve(rows_.size());
    for (const auto& [p, row] : rows_) s.pivots.push_back(p);
    // back substitution from the largest pivot down
    std::size_t idx = rows_.size();
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        --idx;
        SparseVec r = it->second;
        for (const auto& [k, c] : it->second) {
            if (k == it->first) continue;
            long p = s.pivot_index(k);
            if (p >= 0) r.axpy(-c, s.basis[p]);
        }
        s.basis[idx] = std::move(r);
    }
    return s;
}

Subspace echelonize(const std::vector<SparseVec>& vs, std::size_t ambient) {
    EchelonBuilder b(ambient);
    for (const auto& v : vs) b.add(v);
    return b.finish();
}

Subspace zero_space(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    return s;
}

Subspace full_space(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    for (Key k = 0; k < ambient; ++k) {
        s.basis.push_back(SparseVec::unit(k));
        s.pivots.push_back(k);
    }
    return s;
}

Subspace kernel(const std::vector<SparseVec>& rows, std::size_t unknowns) {
    Subspace r = echelonize(rows, unknowns);
    // free column f -> list of (pivot row, coefficient at f)
    std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> col(unknowns);
    for (std::size_t i = 0; i < r.basis.size(); ++i)
        for (const auto& [k, c] : r.basis[i])
            if (k != r.pivots[i]) col[k].emplace_back(i, &c);
    std::vector<SparseVec> gens;
    for (Key f = 0; f < unknowns; ++f) {
        if (r.pivot_index(f) >= 0) continue;
        std::vector<SparseVec::Entry> e;
        e.emplace_back(f, Scalar(1));
        for (auto [i, c] : col[f]) e.emplace_back(r.pivots[i], -*c);
        gens.push_back(SparseVec::from_entries(std::move(e)));
    }
    return echelonize(gens, unknowns);
}

Subspace merge_blocks(std::size_t ambient, std::vector<SparseVec> rows) {
    std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.lead_key() < b.lead_key(); });
    Subspace out;
    out.ambient = ambient;
    for (auto& v : rows) {
        out.pivots.push_back(v.lead_key());
        out.basis.push_back(std::move(v));
    }
    return out;
}

Subspace block_kernel(const std::vector<SparseVec>& rows, std::size_t unknowns) {
    std::vector<std::size_t> parent(unknowns);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& r : rows)
        for (const auto& [k, c] : r) parent[find(k)] = find(r.lead_key());
    std::map<std::size_t, std::vector<Key>> members;  // ascending within each block
    for (Key k = 0; k < unknowns; ++k) members[find(k)].push_back(k);
    std::map<std::size_t, std::vector<const SparseVec*>> block_rows;
    for (const auto& r : rows)
        if (!r.empty()) block_rows[find(r.lead_key())].push_back(&r);

    std::vector<SparseVec> out;
    std::vector<Key> local(unknowns);
    for (const auto& [root, keys] : members) {
        for (Key a = 0; a < keys.size(); ++a) local[keys[a]] = a;
        std::vector<SparseVec> eqs;
        for (const SparseVec* r : block_rows[root]) {
            SparseVec v;
            for (const auto& [k, c] : *r) v.push_back(local[k], c);
            eqs.push_back(std::move(v));
        }
        for (const auto& v : kernel(eqs, keys.size()).basis) {
            SparseVec g;
            for (const auto& [k, c] : v) g.push_back(keys[k], c);
            out.push_back(std::move(g));
        }
    }
    return merge_blocks(unknowns, std::move(out));
}

namespace {

void check_same(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw DomainError("subspace operation on mismatched ambient spaces");
}

}  // namespace

bool subspace_equals(const Subspace& a, const Subspace& b) {
    check_same(a, b);
    return a.pivots == b.pivots && a.basis == b.basis;
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
    check_same(a, b);
    for (const auto& v : b.basis)
        if (!a.contains(v)) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    check_same(a, b);
    EchelonBuilder bld(a.ambient);
    for (const auto& v : a.basis) bld.add(v);
    for (const auto& v : b.basis) bld.add(v);
    return bld.finish();
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    check_same(a, b);
    // unknowns x_0..x_{da-1}, y_0..y_{db-1};  sum x_i a_i - sum y_j b_j = 0
    std::map<Key, std::vector<SparseVec::Entry>> eq;
    const std::size_t da = a.dim();
    for (std::size_t i = 0; i < da; ++i)
        for (const auto& [k, c] : a.basis[i]) eq[k].emplace_back(i, c);
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (const auto& [k, c] : b.basis[j]) eq[k].emplace_back(da + j, -c);
    std::vector<SparseVec> rows;
    for (auto& [k, e] : eq) rows.push_back(SparseVec::from_entries(std::move(e)));
    Subspace ker = kernel(rows, da + b.dim());
    std::vector<SparseVec> gens;
    for (const auto& v : ker.basis) {
        SparseVec w;
        for (const auto& [k, c] : v)
            if (k < da) w.axpy(c, a.basis[k]);
        gens.push_back(std::move(w));
    }
    return echelonize(gens, a.ambient);
}

SparseVec LinearMap::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [k, c] : v) out.axpy(c, cols.at(k));
    return out;
}

std::vector<SparseVec> LinearMap::transposed_rows() const {
    std::vector<std::vector<SparseVec::Entry>> r(rows);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, x] : cols[c]) r.at(k).emplace_back(c, x);
    std::vector<SparseVec> out;
    for (auto& e : r)
        if (!e.empty()) out.push_back(SparseVec::from_entries(std::move(e)));
    return out;
}

LinearMap identity_map(std::size_t n) {
    LinearMap m;
    m.rows = n;
    m.cols.reserve(n);
    for (Key k = 0; k < n; ++k) m.cols.push_back(SparseVec::unit(k));
    return m;
}

LinearMap zero_map(std::size_t rows, std::size_t cols) {
    LinearMap m;
    m.rows = rows;
    m.cols.resize(cols);
    return m;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
    if (a.cols.size() != b.rows) throw DomainError("compose: dimension mismatch");
    LinearMap m;
    m.rows = a.rows;
    m.cols.reserve(b.cols.size());
    for (const auto& c : b.cols) {
        if (c.size() == 1) {
            m.cols.push_back(a.cols[c.lead_key()].scaled(c.lead()));
            continue;
        }
        SparseAccumulator acc;
        for (const auto& [k, x] : c) acc.add(a.cols[k], x);
        m.cols.push_back(acc.take());
    }
    return m;
}

LinearMap add(const LinearMap& a, const LinearMap& b, const Scalar& cb) {
    if (a.rows != b.rows || a.cols.size() != b.cols.size()) throw DomainError("add: dimension mismatch");
    LinearMap m(a);
    for (std::size_t c = 0; c < m.cols.size(); ++c) m.cols[c].axpy(cb, b.cols[c]);
    return m;
}

LinearMap scale(const LinearMap& a, const Scalar& c) {
    LinearMap m;
    m.rows = a.rows;
    m.cols.reserve(a.cols.size());
    for (const auto& col : a.cols) m.cols.push_back(col.scaled(c));
    return m;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
    LinearMap m;
    m.rows = a.rows * b.rows;
    m.cols.reserve(a.cols.size() * b.cols.size());
    for (const auto& ca : a.cols)
        for (const auto& cb : b.cols) {
            SparseVec v;
            for (const auto& [ka, xa] : ca)
                for (const auto& [kb, xb] : cb) v.push_back(ka * b.rows + kb, xa * xb);
            m.cols.push_back(std::move(v));
        }
    return m;
}

LinearMap transpose(const LinearMap& a) {
    std::vector<std::vector<SparseVec::Entry>> r(a.rows);
    for (std::size_t c = 0; c < a.cols.size(); ++c)
        for (const auto& [k, x] : a.cols[c]) r[k].emplace_back(c, x);
    LinearMap m;
    m.rows = a.cols.size();
    for (auto& e : r) m.cols.push_back(SparseVec::from_entries(std::move(e)));
    return m;
}

SparseVec flatten(const LinearMap& a) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t c = 0; c < a.cols.size(); ++c)
        for (const auto& [k, x] : a.cols[c]) e.emplace_back(k * a.cols.size() + c, x);
    return SparseVec::from_entries(std::move(e));
}

Subspace LinearMap::kernel() const { return iqinv::kernel(transposed_rows(), cols.size()); }

SparseVec QuotientSection::project(const SparseVec& v) const {
    SparseVec r = ideal.reduce(v);
    SparseVec out;
    for (const auto& [k, c] : r) {
        long i = coord.at(k);
        if (i < 0) throw DomainError("QuotientSection: reduction left a pivot key");
        out.push_back(static_cast<Key>(i), c);
    }
    return out;
}

SparseVec QuotientSection::lift(const SparseVec& coords) const {
    SparseVec out;
    for (const auto& [i, c] : coords) out.push_back(basis_keys.at(i), c);
    return out;
}

QuotientSection quotient_coords(std::size_t ambient, Subspace ideal) {
    if (ideal.ambient != ambient) throw DomainError("quotient_coords: ideal lives in another space");
    QuotientSection q;
    q.ambient = ambient;
    q.coord.assign(ambient, -1);
    for (Key k = 0; k < ambient; ++k)
        if (ideal.pivot_index(k) < 0) {
            q.coord[k] = static_cast<long>(q.basis_keys.size());
            q.basis_keys.push_back(k);
        }
    q.ideal = std::move(ideal);
    return q;
}

}  // namespace iqinv
