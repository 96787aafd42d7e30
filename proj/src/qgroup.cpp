#include "iqinv/qgroup.hpp"

#include "iqinv/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace iqinv {

TensorSpace::TensorSpace(HalfInt n, int d_) : scheme(index_scheme(n)), d(d_) {
    if (d < 0) throw DomainError("TensorSpace: negative degree");
    for (int a = 0; a < d; ++a) size *= static_cast<std::size_t>(scheme.N);
}

Key TensorSpace::index(const Tuple& t) const {
    if (static_cast<int>(t.size()) != d) throw DomainError("TensorSpace: tuple length mismatch");
    Key k = 0;
    for (HalfInt a : t) k = k * scheme.N + scheme.position(a);
    return k;
}

Tuple TensorSpace::tuple(Key k) const {
    Tuple t(d);
    for (int a = d - 1; a >= 0; --a) {
        t[a] = scheme.underline[k % scheme.N];
        k /= scheme.N;
    }
    return t;
}

Scalar TensorOperator::entry(const Tuple& i, const Tuple& j) const {
    TensorSpace sp(n, d);
    return map.entry(sp.index(i), sp.index(j));
}

TensorOperator TensorOperator::then(const TensorOperator& o) const { return o * *this; }

namespace {

void check_compatible(const TensorOperator& a, const TensorOperator& b) {
    if (a.n != b.n || a.d != b.d) throw DomainError("TensorOperator: incompatible operands");
}

}  // namespace

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    check_compatible(a, b);
    return {a.n, a.d, compose(a.map, b.map)};
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    check_compatible(a, b);
    return {a.n, a.d, add(a.map, b.map)};
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    check_compatible(a, b);
    return {a.n, a.d, add(a.map, b.map, Scalar(-1))};
}

TensorOperator operator*(const Scalar& c, const TensorOperator& a) { return {a.n, a.d, scale(a.map, c)}; }

TensorOperator identity_operator(HalfInt n, int d) { return {n, d, identity_map(TensorSpace(n, d).size)}; }

std::string UNGenerator::str() const {
    switch (kind) {
        case UKind::E: return "E[" + index.str() + "]";
        case UKind::F: return "F[" + index.str() + "]";
        case UKind::Dpos: return "D[" + index.str() + "]";
        case UKind::Dneg: return "D^-1[" + index.str() + "]";
    }
    return "?";
}

std::string word_str(const UWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) s += g.str();
    return s;
}

bool legal(const UNGenerator& g, const IndexScheme& s) {
    if (g.kind == UKind::E || g.kind == UKind::F) {
        for (HalfInt i : s.i_set)
            if (i == g.index) return true;
        return false;
    }
    return s.contains(g.index);
}

std::vector<UNGenerator> un_generators(HalfInt n) {
    auto s = index_scheme(n);
    std::vector<UNGenerator> out;
    for (HalfInt i : s.i_set) out.push_back({UKind::E, i});
    for (HalfInt i : s.i_set) out.push_back({UKind::F, i});
    for (HalfInt a : s.underline) out.push_back({UKind::Dpos, a});
    for (HalfInt a : s.underline) out.push_back({UKind::Dneg, a});
    return out;
}

UWord k_word(HalfInt i, bool inverse) {
    if (inverse) return {{UKind::Dneg, i - kHalf}, {UKind::Dpos, i + kHalf}};
    return {{UKind::Dpos, i - kHalf}, {UKind::Dneg, i + kHalf}};
}

namespace {

// exponent of q in K_i v_j
int k_exponent(HalfInt i, HalfInt j) { return (j == i - kHalf ? 1 : 0) - (j == i + kHalf ? 1 : 0); }

TensorOperator build_generator(const UNGenerator& g, HalfInt n, int d) {
    TensorSpace sp(n, d);
    if (!legal(g, sp.scheme)) throw DomainError("illegal generator " + g.str() + " for n=" + n.str());
    TensorOperator op{n, d, zero_map(sp.size, sp.size)};
    for (Key col = 0; col < sp.size; ++col) {
        Tuple j = sp.tuple(col);
        std::vector<SparseVec::Entry> e;
        switch (g.kind) {
            case UKind::Dpos:
            case UKind::Dneg: {
                int c = 0;
                for (HalfInt x : j) c += (x == g.index);
                e.emplace_back(col, Scalar::q_pow(g.kind == UKind::Dpos ? c : -c));
                break;
            }
            case UKind::E: {
                // sum_a 1^{a-1} ⊗ E ⊗ (K^{-1})^{d-a}
                for (int a = 0; a < d; ++a) {
                    if (j[a] != g.index + kHalf) continue;
                    int ex = 0;
                    for (int b = a + 1; b < d; ++b) ex -= k_exponent(g.index, j[b]);
                    Tuple i = j;
                    i[a] = g.index - kHalf;
                    e.emplace_back(sp.index(i), Scalar::q_pow(ex));
                }
                break;
            }
            case UKind::F: {
                // sum_a K^{a-1} ⊗ F ⊗ 1^{d-a}
                for (int a = 0; a < d; ++a) {
                    if (j[a] != g.index - kHalf) continue;
                    int ex = 0;
                    for (int b = 0; b < a; ++b) ex += k_exponent(g.index, j[b]);
                    Tuple i = j;
                    i[a] = g.index + kHalf;
                    e.emplace_back(sp.index(i), Scalar::q_pow(ex));
                }
                break;
            }
        }
        op.map.cols[col] = SparseVec::from_entries(std::move(e));
    }
    return op;
}

template <class K, class V>
struct Memo {
    std::mutex mu;
    std::map<K, V> data;

    template <class F>
    V get(const K& key, F&& make) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = data.find(key);
            if (it != data.end()) return it->second;
        }
        V v = make();
        std::lock_guard<std::mutex> lock(mu);
        return data.emplace(key, std::move(v)).first->second;
    }
};

using OpKey = std::tuple<int, int, int, int>;  // kind, index, n, d

Memo<OpKey, TensorOperator>& un_memo() {
    static Memo<OpKey, TensorOperator> m;
    return m;
}

Memo<OpKey, TensorOperator>& iu_memo() {
    static Memo<OpKey, TensorOperator> m;
    return m;
}

}  // namespace

TensorOperator fundamental_action(const UNGenerator& g, HalfInt n) { return generator_action(g, n, 1); }

TensorOperator generator_action(const UNGenerator& g, HalfInt n, int d) {
    OpKey key{static_cast<int>(g.kind), g.index.doubled, n.doubled, d};
    return un_memo().get(key, [&] { return build_generator(g, n, d); });
}

TensorOperator tensor_action_UN(const UWord& w, HalfInt n, int d) {
    if (w.empty()) return identity_operator(n, d);
    TensorOperator op = generator_action(w.back(), n, d);
    for (auto it = std::next(w.rbegin()); it != w.rend(); ++it) op = generator_action(*it, n, d) * op;
    return op;
}

Scalar matrix_coeff(const UWord& w, HalfInt n, const Tuple& i, const Tuple& j) {
    if (i.size() != j.size()) throw DomainError("matrix_coeff: tuple lengths differ");
    return tensor_action_UN(w, n, static_cast<int>(i.size())).entry(i, j);
}

Scalar counit(const UWord& w) {
    for (const auto& g : w)
        if (g.kind == UKind::E || g.kind == UKind::F) return Scalar(0);
    return Scalar(1);
}

std::string IGenerator::str() const {
    switch (kind) {
        case IKind::e: return "e[" + index.str() + "]";
        case IKind::f: return "f[" + index.str() + "]";
        case IKind::d: return "d[" + index.str() + "]";
        case IKind::t: return "t";
    }
    return "?";
}

bool legal(const IGenerator& g, const IndexScheme& s) {
    switch (g.kind) {
        case IKind::e:
        case IKind::f:
            for (HalfInt i : s.i_pos)
                if (i == g.index) return true;
            return false;
        case IKind::d: return g.index.doubled >= 0 && s.contains(g.index);
        case IKind::t: return !s.n.is_integer();
    }
    return false;
}

std::vector<IGenerator> i_generators(HalfInt n) {
    auto s = index_scheme(n);
    std::vector<IGenerator> out;
    for (HalfInt i : s.i_pos) out.push_back({IKind::e, i});
    for (HalfInt i : s.i_pos) out.push_back({IKind::f, i});
    for (HalfInt a : s.underline)
        if (a.doubled >= 0) out.push_back({IKind::d, a});
    if (!n.is_integer()) out.push_back({IKind::t, HalfInt{}});
    return out;
}

std::vector<std::pair<Scalar, UWord>> expand(const IGenerator& g, HalfInt n) {
    auto s = index_scheme(n);
    if (!legal(g, s)) {
        if (g.kind == IKind::t) throw DomainError("t does not exist for integer n=" + n.str());
        throw DomainError("illegal ı-generator " + g.str() + " for n=" + n.str());
    }
    auto cat = [](UWord a, const UWord& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    HalfInt i = g.index;
    switch (g.kind) {
        case IKind::e:  // E_i + K_i^{-1} F_{-i}
            return {{Scalar(1), {{UKind::E, i}}}, {Scalar(1), cat(k_word(i, true), {{UKind::F, -i}})}};
        case IKind::f:  // E_{-i} + F_i K_{-i}^{-1}
            return {{Scalar(1), {{UKind::E, -i}}}, {Scalar(1), cat({{UKind::F, i}}, k_word(-i, true))}};
        case IKind::d:  // D_a D_{-a}
            return {{Scalar(1), {{UKind::Dpos, i}, {UKind::Dpos, -i}}}};
        case IKind::t: {  // E_0 + q F_0 K_0^{-1} + K_0^{-1}
            HalfInt z{};
            return {{Scalar(1), {{UKind::E, z}}},
                    {Scalar::q(), cat({{UKind::F, z}}, k_word(z, true))},
                    {Scalar(1), k_word(z, true)}};
        }
    }
    return {};
}

TensorOperator tensor_action_iU(const IGenerator& g, HalfInt n, int d) {
    OpKey key{static_cast<int>(g.kind), g.index.doubled, n.doubled, d};
    return iu_memo().get(key, [&] {
        auto terms = expand(g, n);
        TensorOperator acc = terms.front().first * tensor_action_UN(terms.front().second, n, d);
        for (std::size_t k = 1; k < terms.size(); ++k)
            acc = acc + terms[k].first * tensor_action_UN(terms[k].second, n, d);
        return acc;
    });
}

TensorOperator tensor_action_iword(const IWord& w, HalfInt n, int d) {
    TensorOperator op = identity_operator(n, d);
    for (auto it = w.rbegin(); it != w.rend(); ++it) op = tensor_action_iU(*it, n, d) * op;
    return op;
}

LinearMap mixed_tensor_action(const UNGenerator& g, const WordAction& left, const WordAction& right) {
    auto cat = [](UWord a, const UWord& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    LinearMap idA = left({});
    LinearMap idB = right({});
    HalfInt i = g.index;
    switch (g.kind) {
        case UKind::E: {  // E f ⊗ g K - f ⊗ g E K
            auto k = k_word(i, false);
            return add(kron(left({g}), right(k)), kron(idA, right(cat({g}, k))), Scalar(-1));
        }
        case UKind::F: {  // F f ⊗ g - K f ⊗ g K^{-1} F
            auto k = k_word(i, false);
            auto kinv = k_word(i, true);
            return add(kron(left({g}), idB), kron(left(k), right(cat(kinv, {g}))), Scalar(-1));
        }
        case UKind::Dpos: return kron(left({g}), right({{UKind::Dneg, i}}));
        case UKind::Dneg: return kron(left({g}), right({{UKind::Dpos, i}}));
    }
    return {};
}

}  // namespace iqinv
