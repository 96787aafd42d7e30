#include "iqinv/qcoord.hpp"

#include "iqinv/errors.hpp"

#include <algorithm>
#include <mutex>

namespace iqinv {

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (PairCode c : m) {
        h ^= c + 0x9e37u;
        h *= 1099511628211ull;
    }
    return h ^ m.size();
}

CoordScheme::CoordScheme(HalfInt n, HalfInt m) : rows(index_scheme(n)), cols(index_scheme(m)) {
    if (generators() > 0xffff) throw DomainError("CoordScheme: too many generators");
}

PairCode CoordScheme::code(HalfInt i, HalfInt j) const {
    return static_cast<PairCode>(rows.position(i) * cols.N + cols.position(j));
}

Mono CoordScheme::mono(const Tuple& i, const Tuple& j) const {
    if (i.size() != j.size()) throw DomainError("monomial: tuple lengths differ");
    Mono m(i.size());
    for (std::size_t a = 0; a < i.size(); ++a) m[a] = code(i[a], j[a]);
    return m;
}

Tuple CoordScheme::row_tuple(const Mono& m) const {
    Tuple t;
    for (PairCode c : m) t.push_back(row(c));
    return t;
}

Tuple CoordScheme::col_tuple(const Mono& m) const {
    Tuple t;
    for (PairCode c : m) t.push_back(col(c));
    return t;
}

std::string CoordScheme::mono_str(const Mono& m) const {
    if (m.empty()) return "1";
    std::string s;
    for (PairCode c : m) s += "t[" + row(c).str() + "," + col(c).str() + "]";
    return s;
}

QPoly QPoly::one(HalfInt n, HalfInt m) {
    QPoly p(n, m);
    p.add({}, Scalar(1));
    return p;
}

QPoly QPoly::t(HalfInt n, HalfInt m, const Tuple& i, const Tuple& j, const Scalar& c) {
    QPoly p(n, m);
    p.add(CoordScheme(n, m).mono(i, j), c);
    return p;
}

QPoly QPoly::from_mono(HalfInt n, HalfInt m, const Mono& mono, const Scalar& c) {
    QPoly p(n, m);
    p.add(mono, c);
    return p;
}

bool QPoly::is_normal() const {
    for (const auto& [mono, c] : terms_)
        if (!std::is_sorted(mono.begin(), mono.end())) return false;
    return true;
}

void QPoly::add(const Mono& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

void check_ambient(const QPoly& a, const QPoly& b) {
    if (a.n() != b.n() || a.m() != b.m()) throw DomainError("QPoly: ambient mismatch");
}

}  // namespace

QPoly& QPoly::operator+=(const QPoly& o) {
    check_ambient(*this, o);
    for (const auto& [mono, c] : o.terms_) add(mono, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    check_ambient(*this, o);
    for (const auto& [mono, c] : o.terms_) add(mono, -c);
    return *this;
}

QPoly QPoly::scaled(const Scalar& c) const {
    QPoly r(n_, m_);
    if (c.is_zero()) return r;
    for (const auto& [mono, x] : terms_) r.terms_.emplace(mono, x * c);
    return r;
}

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    CoordScheme cs(n_, m_);
    std::string s;
    for (const auto& [mono, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + c.str() + ")*";
        s += cs.mono_str(mono);
    }
    return s;
}

QPoly rewrite_at(HalfInt n, HalfInt m, const Mono& mono, std::size_t pos) {
    if (pos + 1 >= mono.size() || mono[pos] <= mono[pos + 1])
        throw DomainError("rewrite_at: no descending pair at this position");
    CoordScheme cs(n, m);
    const int M = cs.cols.N;
    PairCode hi = mono[pos], lo = mono[pos + 1];
    int k = hi / M, l = hi % M, i = lo / M, j = lo % M;
    Mono swapped(mono);
    std::swap(swapped[pos], swapped[pos + 1]);
    QPoly out(n, m);
    if (k > i && l > j) {
        // t_kl t_ij = t_ij t_kl - (q - q^{-1}) t_il t_kj
        out.add(swapped, Scalar(1));
        Mono cross(mono);
        cross[pos] = static_cast<PairCode>(i * M + l);
        cross[pos + 1] = static_cast<PairCode>(k * M + j);
        out.add(cross, Scalar::q_pow(-1) - Scalar::q());
    } else if (k > i && l < j) {
        out.add(swapped, Scalar(1));
    } else {
        // same column (k > i, l = j) or same row (k = i, l > j)
        out.add(swapped, Scalar::q_pow(-1));
    }
    return out;
}

namespace {

struct NFEngine {
    HalfInt n, m;
    std::mutex mu;
    std::unordered_map<Mono, std::vector<std::pair<Mono, Scalar>>, MonoHash> memo;

    const std::vector<std::pair<Mono, Scalar>>& get(const Mono& mono) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = memo.find(mono);
            if (it != memo.end()) return it->second;
        }
        std::vector<std::pair<Mono, Scalar>> result;
        std::size_t pos = 0;
        while (pos + 1 < mono.size() && mono[pos] <= mono[pos + 1]) ++pos;
        if (pos + 1 >= mono.size()) {
            result.emplace_back(mono, Scalar(1));
        } else {
            std::map<Mono, Scalar> acc;
            QPoly step = rewrite_at(n, m, mono, pos);
            for (const auto& [sub, c] : step.terms())
                for (const auto& [nm, x] : get(sub)) {
                    auto [it, fresh] = acc.try_emplace(nm, c * x);
                    if (!fresh) it->second += c * x;
                }
            for (auto& [nm, x] : acc)
                if (!x.is_zero()) result.emplace_back(nm, std::move(x));
        }
        std::lock_guard<std::mutex> lock(mu);
        return memo.emplace(mono, std::move(result)).first->second;
    }
};

NFEngine& engine(HalfInt n, HalfInt m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<NFEngine>> engines;
    std::lock_guard<std::mutex> lock(mu);
    auto& e = engines[{n.doubled, m.doubled}];
    if (!e) {
        e = std::make_unique<NFEngine>();
        e->n = n;
        e->m = m;
    }
    return *e;
}

}  // namespace

const std::vector<std::pair<Mono, Scalar>>& normal_form_mono(HalfInt n, HalfInt m, const Mono& mono) {
    return engine(n, m).get(mono);
}

QPoly normal_form(const QPoly& p) {
    QPoly out(p.n(), p.m());
    auto& eng = engine(p.n(), p.m());
    for (const auto& [mono, c] : p.terms())
        for (const auto& [nm, x] : eng.get(mono)) out.add(nm, c * x);
    return out;
}

QPoly multiply(const QPoly& a, const QPoly& b) {
    check_ambient(a, b);
    QPoly out(a.n(), a.m());
    auto& eng = engine(a.n(), a.m());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Mono cat(ma);
            cat.insert(cat.end(), mb.begin(), mb.end());
            Scalar c = ca * cb;
            for (const auto& [nm, x] : eng.get(cat)) out.add(nm, c * x);
        }
    return out;
}

QPoly act_left_with(const DegreeOp& x, const QPoly& p) {
    CoordScheme cs(p.n(), p.m());
    std::map<int, LinearMap> ops;
    QPoly raw(p.n(), p.m());
    for (const auto& [mono, c] : p.terms()) {
        int d = static_cast<int>(mono.size());
        auto it = ops.find(d);
        if (it == ops.end()) it = ops.emplace(d, x(d)).first;
        TensorSpace sp(p.m(), d);
        Tuple i = cs.row_tuple(mono);
        for (const auto& [k, coeff] : it->second.cols.at(sp.index(cs.col_tuple(mono))))
            raw.add(cs.mono(i, sp.tuple(k)), c * coeff);
    }
    return normal_form(raw);
}

QPoly act_right_with(const QPoly& p, const DegreeOp& y) {
    CoordScheme cs(p.n(), p.m());
    std::map<int, LinearMap> rows;  // transposed: column i lists row i
    QPoly raw(p.n(), p.m());
    for (const auto& [mono, c] : p.terms()) {
        int d = static_cast<int>(mono.size());
        auto it = rows.find(d);
        if (it == rows.end()) it = rows.emplace(d, transpose(y(d))).first;
        TensorSpace sp(p.n(), d);
        Tuple j = cs.col_tuple(mono);
        for (const auto& [k, coeff] : it->second.cols.at(sp.index(cs.row_tuple(mono))))
            raw.add(cs.mono(sp.tuple(k), j), c * coeff);
    }
    return normal_form(raw);
}

QPoly act_left(const UWord& x, const QPoly& p) {
    return act_left_with([&](int d) { return tensor_action_UN(x, p.m(), d).map; }, p);
}

QPoly act_right(const QPoly& p, const UWord& y) {
    return act_right_with(p, [&](int d) { return tensor_action_UN(y, p.n(), d).map; });
}

namespace {

void require_increasing(const Tuple& t, const IndexScheme& s) {
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (!s.contains(t[a])) throw DomainError("minor: index " + t[a].str() + " outside the scheme");
        if (a && !(t[a - 1] < t[a])) throw DomainError("minor: tuple " + tuple_str(t) + " is not strictly increasing");
    }
}

}  // namespace

QPoly quantum_minor(HalfInt p, HalfInt r, const Tuple& i, const Tuple& j) {
    if (i.size() != j.size()) throw DomainError("minor: tuple lengths differ");
    CoordScheme cs(p, r);
    require_increasing(i, cs.rows);
    require_increasing(j, cs.cols);
    QPoly raw(p, r);
    for (const auto& w : sym_group(static_cast<int>(j.size()))) {
        Scalar c = Scalar::q_pow(w.length);
        if (w.length % 2) c = -c;
        raw.add(cs.mono(i, permute_tuple(j, w)), c);
    }
    return normal_form(raw);
}

QPoly minor_sigma(HalfInt p, HalfInt r, const Tuple& i, const Tuple& j, const Perm& sigma) {
    Scalar c = Scalar::q_pow(sigma.length);
    if (sigma.length % 2) c = -c;
    return quantum_minor(p, r, i, j).scaled(c);
}

QPoly minor_any(HalfInt p, HalfInt r, const Tuple& i, const Tuple& k) {
    std::vector<int> seq;
    for (HalfInt x : k) seq.push_back(x.doubled);
    Tuple sorted = k;
    std::sort(sorted.begin(), sorted.end());
    int inv = inversions(seq);
    Scalar c = Scalar::q_pow(inv);
    if (inv % 2) c = -c;
    return quantum_minor(p, r, i, sorted).scaled(c);
}

Key NormalBasis::key(const Mono& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw DomainError("NormalBasis: " + scheme.mono_str(m) + " is not a normal degree-" + std::to_string(d) + " monomial");
    return it->second;
}

SparseVec NormalBasis::vec(const QPoly& normal) const {
    std::vector<SparseVec::Entry> e;
    e.reserve(normal.terms().size());
    for (const auto& [mono, c] : normal.terms()) e.emplace_back(key(mono), c);
    return SparseVec::from_entries(std::move(e));
}

QPoly NormalBasis::poly(const SparseVec& v) const {
    QPoly p(scheme.n(), scheme.m());
    for (const auto& [k, c] : v) p.add(monos.at(k), c);
    return p;
}

std::size_t normal_count(HalfInt n, HalfInt m, int d) {
    mpz_class c;
    std::size_t g = static_cast<std::size_t>(n.doubled + 1) * static_cast<std::size_t>(m.doubled + 1);
    if (d < 0) return 0;
    mpz_bin_uiui(c.get_mpz_t(), g + d - 1, d);
    if (!c.fits_ulong_p()) return static_cast<std::size_t>(-1);
    return c.get_ui();
}

std::shared_ptr<const NormalBasis> normal_basis(HalfInt n, HalfInt m, int d, std::size_t budget) {
    if (d < 0) throw DomainError("normal_basis: negative degree");
    std::size_t count = normal_count(n, m, d);
    if (budget && count > budget)
        throw BudgetExceeded("degree-" + std::to_string(d) + " monomials of V(" + n.str() + "," + m.str() + "): " +
                             std::to_string(count) + " exceed budget " + std::to_string(budget));
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const NormalBasis>> cache;
    auto key = std::make_tuple(n.doubled, m.doubled, d);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto nb = std::make_shared<NormalBasis>(NormalBasis{CoordScheme(n, m), d, {}, {}});
    const auto G = static_cast<PairCode>(nb->scheme.generators());
    Mono cur(d, 0);
    if (d == 0) {
        nb->monos.push_back({});
    } else if (G > 0) {
        // weakly increasing sequences in lexicographic order
        while (true) {
            nb->monos.push_back(cur);
            int a = d - 1;
            while (a >= 0 && cur[a] == G - 1) --a;
            if (a < 0) break;
            ++cur[a];
            for (int b = a + 1; b < d; ++b) cur[b] = cur[a];
        }
    }
    for (Key k = 0; k < nb->monos.size(); ++k) nb->index.emplace(nb->monos[k], k);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(nb)).first->second;
}

}  // namespace iqinv
