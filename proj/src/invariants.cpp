#include "iqinv/invariants.hpp"

#include "iqinv/errors.hpp"

#include <functional>
#include <unordered_map>

namespace iqinv {

std::string PairSpace::str(Key k) const {
    Key a = k / right->dim(), b = k % right->dim();
    return left->basis_str(a) + " (x) " + right->basis_str(b);
}

namespace {

// (which object, p, r, n, d)
using Params = std::tuple<char, int, int, int, int>;

template <class V>
std::shared_ptr<const V> memo(const Params& key, const std::function<V()>& make) {
    static std::mutex mu;
    static std::map<Params, std::shared_ptr<const V>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto v = std::make_shared<const V>(make());
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

Params params(char what, HalfInt p, HalfInt r, HalfInt n, int d) { return {what, p.doubled, r.doubled, n.doubled, d}; }

bool is_diagonal(const LinearMap& m) {
    for (Key k = 0; k < m.cols.size(); ++k)
        if (m.cols[k].size() != 1 || m.cols[k].lead_key() != k) return false;
    return true;
}

std::string dim_str(std::size_t d) { return "dim " + std::to_string(d); }

// solves over A ⊗ B get a larger allowance than a single space
constexpr std::size_t kPairAllowance = 16;

void pair_guard(std::size_t a, std::size_t b, std::size_t budget) {
    if (budget && a * b > kPairAllowance * budget)
        throw BudgetExceeded("pair space: " + std::to_string(a * b) + " basis elements exceed " + std::to_string(kPairAllowance) +
                             " x budget");
}

PairSpace pair_space(std::shared_ptr<const CoordSpace> left, std::shared_ptr<const CoordSpace> right, std::size_t budget) {
    pair_guard(left->dim(), right->dim(), budget);
    return PairSpace{std::move(left), std::move(right)};
}

// first basis vector of a not contained in b, rendered on the pair space
std::string missing(const Subspace& a, const Subspace& b, const std::function<std::string(Key)>& name) {
    for (const auto& v : a.basis)
        if (!b.contains(v)) {
            std::string s;
            std::size_t shown = 0;
            for (const auto& [k, c] : v) {
                if (shown++ == 3) {
                    s += " + ...";
                    break;
                }
                s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")*" + name(k));
            }
            return s;
        }
    return "";
}

void compare(Verdict& v, const Subspace& got, const Subspace& want, const std::string& got_name, const std::string& want_name,
             const std::function<std::string(Key)>& name) {
    v.expected = want_name + " " + dim_str(want.dim());
    v.actual = got_name + " " + dim_str(got.dim());
    if (subspace_equals(got, want)) return;
    std::string w = missing(got, want, name);
    if (!w.empty())
        v.fail(got_name + " not in " + want_name + ": " + w);
    else
        v.fail(want_name + " not in " + got_name + ": " + missing(want, got, name));
}

Subspace kernel_of(const LinearMap& m) { return block_kernel(m.transposed_rows(), m.cols.size()); }

}  // namespace

Subspace balanced_space(const std::vector<std::pair<LinearMap, LinearMap>>& gens, std::size_t dim_a, std::size_t dim_b) {
    std::vector<const std::pair<LinearMap, LinearMap>*> diag, other;
    for (const auto& g : gens) (is_diagonal(g.first) && is_diagonal(g.second) ? diag : other).push_back(&g);
    // diagonal generators only allow pairs with equal eigenvalues
    std::vector<Key> unknowns;
    for (Key a = 0; a < dim_a; ++a)
        for (Key b = 0; b < dim_b; ++b) {
            bool ok = true;
            for (const auto* g : diag) ok = ok && g->first.cols[a].lead() == g->second.cols[b].lead();
            if (ok) unknowns.push_back(a * dim_b + b);
        }
    std::unordered_map<Key, std::vector<SparseVec::Entry>> rows;
    const Key stride = dim_a * dim_b;
    for (std::size_t g = 0; g < other.size(); ++g) {
        const auto& [l, r] = *other[g];
        for (Key u = 0; u < unknowns.size(); ++u) {
            Key a = unknowns[u] / dim_b, b = unknowns[u] % dim_b;
            for (const auto& [a2, x] : l.cols[a]) rows[g * stride + a2 * dim_b + b].emplace_back(u, x);
            for (const auto& [b2, y] : r.cols[b]) rows[g * stride + a * dim_b + b2].emplace_back(u, -y);
        }
    }
    std::vector<Key> order;
    for (const auto& [k, e] : rows) order.push_back(k);
    std::sort(order.begin(), order.end());
    std::vector<SparseVec> eqs;
    for (Key k : order) {
        auto v = SparseVec::from_entries(std::move(rows[k]));
        if (!v.empty()) eqs.push_back(std::move(v));
    }
    std::vector<SparseVec> out;
    for (const auto& v : block_kernel(eqs, unknowns.size()).basis) {
        SparseVec g;
        for (const auto& [k, c] : v) g.push_back(unknowns[k], c);
        out.push_back(std::move(g));
    }
    return merge_blocks(dim_a * dim_b, std::move(out));
}

// ---------------------------------------------------------------- type A

InvariantSpace X_A(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    PairSpace ps = pair_space(plain_space(p, n, d, budget), plain_space(n, r, d, budget), budget);
    auto sp = memo<Subspace>(params('x', p, r, n, d), [&] {
        std::vector<std::pair<LinearMap, LinearMap>> gens;
        for (const auto& g : un_generators(n)) {
            auto op = generator_action(g, n, d).map;
            gens.emplace_back(ps.left->left_matrix(op), ps.right->right_matrix(op));
        }
        return balanced_space(gens, ps.left->dim(), ps.right->dim());
    });
    return {ps, *sp};
}

namespace {

using PairPoly = std::map<std::pair<Mono, Mono>, Scalar>;

// componentwise product of a 𝒫 element with X_ij = Σ_k t_ik ⊗ t_kj
PairPoly times_X(const PairPoly& f, HalfInt p, HalfInt r, HalfInt n, PairCode ij) {
    CoordScheme pr(p, r), pn(p, n), nr(n, r);
    HalfInt i = pr.row(ij), j = pr.col(ij);
    PairPoly out;
    for (HalfInt k : index_scheme(n).underline)
        for (const auto& [ab, c] : f) {
            Mono a = ab.first, b = ab.second;
            a.push_back(pn.code(i, k));
            b.push_back(nr.code(k, j));
            for (const auto& [na, x] : normal_form_mono(p, n, a))
                for (const auto& [nb, y] : normal_form_mono(n, r, b)) {
                    auto [it, fresh] = out.try_emplace({na, nb}, c * x * y);
                    if (!fresh) it->second += c * x * y;
                }
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

LinearMap Psi_A(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    auto dom = normal_basis(p, r, d, budget);
    PairSpace ps = pair_space(plain_space(p, n, d, budget), plain_space(n, r, d, budget), budget);
    return *memo<LinearMap>(params('y', p, r, n, d), [&] {
        LinearMap out{ps.size(), {}};
        for (const auto& mono : dom->monos) {
            PairPoly f{{{Mono{}, Mono{}}, Scalar(1)}};
            for (PairCode c : mono) f = times_X(f, p, r, n, c);
            std::vector<SparseVec::Entry> e;
            for (const auto& [ab, c] : f) e.emplace_back(ps.key(ps.left->monos().key(ab.first), ps.right->monos().key(ab.second)), c);
            out.cols.push_back(SparseVec::from_entries(std::move(e)));
        }
        return out;
    });
}

Subspace minor_ideal_A(HalfInt p, HalfInt r, int k, int d, std::size_t budget) {
    auto nb = normal_basis(p, r, d, budget);
    EchelonBuilder b(nb->size());
    if (k > d) return b.finish();
    auto rows = admissible_increasing(k, p), cols = admissible_increasing(k, r);
    std::vector<QPoly> minors;
    for (const auto& i : rows)
        for (const auto& j : cols) minors.push_back(quantum_minor(p, r, i, j));
    for (int l = 0; l <= d - k; ++l) {
        auto left = normal_basis(p, r, l), right = normal_basis(p, r, d - k - l);
        for (const auto& mu : left->monos)
            for (const auto& dm : minors) {
                QPoly md = multiply(QPoly::from_mono(p, r, mu), dm);
                for (const auto& nu : right->monos) b.add(nb->vec(multiply(md, QPoly::from_mono(p, r, nu))));
            }
    }
    return b.finish();
}

Subspace eps_invariants_A(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    auto left = plain_space(p, n, d, budget), right = plain_space(n, r, d, budget);
    pair_guard(left->dim(), right->dim(), budget);
    WordAction la = [&](const UWord& w) { return left->left_matrix(tensor_action_UN(w, n, d).map); };
    WordAction ra = [&](const UWord& w) { return right->right_matrix(tensor_action_UN(w, n, d).map); };
    std::size_t size = left->dim() * right->dim();
    std::vector<SparseVec> rows;
    for (const auto& g : un_generators(n)) {
        LinearMap act = mixed_tensor_action(g, la, ra);
        act = add(act, identity_map(size), -counit({g}));
        for (auto& row : act.transposed_rows())
            if (!row.empty()) rows.push_back(std::move(row));
    }
    return block_kernel(rows, size);
}

Verdict fft_A_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto x = X_A(p, r, n, d, budget);
    auto psi = Psi_A(p, r, n, d, budget);
    compare(v, psi.image(), x.space, "image", "invariants", [&](Key k) { return x.pair.str(k); });
    return v;
}

Verdict sft_A_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto psi = Psi_A(p, r, n, d, budget);
    int k = n.doubled + 2;  // quantum (N+1)-minors
    auto nb = normal_basis(p, r, d);
    compare(v, kernel_of(psi), minor_ideal_A(p, r, k, d, budget), "kernel", std::to_string(k) + "-minor ideal",
            [&](Key key) { return nb->scheme.mono_str(nb->monos[key]); });
    return v;
}

Verdict lemma_inv_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto x = X_A(p, r, n, d, budget);
    auto eps = eps_invariants_A(p, r, n, d, budget);
    compare(v, eps, x.space, "eps-invariants", "balanced", [&](Key k) { return x.pair.str(k); });
    // products of invariants of degrees 1 and d-1 stay invariant
    if (d >= 2 && v.pass) {
        auto x1 = X_A(p, r, n, 1, budget), xr = X_A(p, r, n, d - 1, budget);
        std::size_t tried = 0;
        for (std::size_t a = 0; a < std::min<std::size_t>(3, x1.space.dim()); ++a)
            for (std::size_t b = 0; b < std::min<std::size_t>(3, xr.space.dim()); ++b) {
                SparseAccumulator acc;
                for (const auto& [k1, c1] : x1.space.basis[a])
                    for (const auto& [k2, c2] : xr.space.basis[b]) {
                        Key l1 = k1 / x1.pair.right->dim(), r1 = k1 % x1.pair.right->dim();
                        Key l2 = k2 / xr.pair.right->dim(), r2 = k2 % xr.pair.right->dim();
                        Mono ml = x1.pair.left->basis_mono(l1), mr = x1.pair.right->basis_mono(r1);
                        const Mono& nl = xr.pair.left->basis_mono(l2);
                        const Mono& nr = xr.pair.right->basis_mono(r2);
                        ml.insert(ml.end(), nl.begin(), nl.end());
                        mr.insert(mr.end(), nr.begin(), nr.end());
                        for (const auto& [kl, y1] : x.pair.left->project_mono(ml))
                            for (const auto& [kr, y2] : x.pair.right->project_mono(mr)) acc.add(x.pair.key(kl, kr), c1 * c2 * y1 * y2);
                    }
                ++tried;
                v.require(eps.contains(acc.take()), "product of invariants " + std::to_string(a) + " and " + std::to_string(b) + " is not invariant");
            }
        v.actual += ", " + std::to_string(tried) + " products invariant";
    }
    return v;
}

// ---------------------------------------------------------------- ı side

InvariantSpace X_i(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    PairSpace ps = pair_space(quotient_space(p, n, d, budget), quotient_space(n, r, d, budget), budget);
    auto sp = memo<Subspace>(params('X', p, r, n, d), [&] {
        std::vector<std::pair<LinearMap, LinearMap>> gens;
        for (const auto& g : i_generators(n)) gens.emplace_back(i_left_matrix(g, *ps.left), i_right_matrix(*ps.right, g));
        return balanced_space(gens, ps.left->dim(), ps.right->dim());
    });
    return {ps, *sp};
}

namespace {

// Σ_k t̃_{ik} ⊗ t̃_{kj} for a (not necessarily normal) monomial t_ij of 𝒱_{P,R}
SparseVec psi_i_mono(const PairSpace& ps, const CoordScheme& pr, const Mono& mono, int d, HalfInt n) {
    Tuple i = pr.row_tuple(mono), j = pr.col_tuple(mono);
    CoordScheme pn(pr.n(), n), nr(n, pr.m());
    TensorSpace ks(n, d);
    SparseAccumulator acc;
    for (Key kk = 0; kk < ks.size; ++kk) {
        Tuple k = ks.tuple(kk);
        const auto& a = ps.left->project_mono(pn.mono(i, k));
        if (a.empty()) continue;
        const auto& b = ps.right->project_mono(nr.mono(k, j));
        for (const auto& [ka, x] : a)
            for (const auto& [kb, y] : b) acc.add(ps.key(ka, kb), x * y);
    }
    return acc.take();
}

}  // namespace

LinearMap Psi_i(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    auto dom = quotient_space(p, r, d, budget);
    PairSpace ps = pair_space(quotient_space(p, n, d, budget), quotient_space(n, r, d, budget), budget);
    return *memo<LinearMap>(params('Y', p, r, n, d), [&] {
        const auto& nb = dom->monos();
        LinearMap lifted{ps.size(), {}};
        for (const auto& mono : nb.monos) lifted.cols.push_back(psi_i_mono(ps, nb.scheme, mono, d, n));
        for (const auto& w : dom->ideal().basis)
            if (!lifted.apply(w).empty())
                throw Error("Psi_i does not vanish on the ideal element " + nb.poly(w).str());
        LinearMap out{ps.size(), {}};
        for (Key k = 0; k < dom->dim(); ++k) out.cols.push_back(lifted.cols[nb.key(dom->basis_mono(k))]);
        return out;
    });
}

Verdict fft_i_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto x = X_i(p, r, n, d, budget);
    auto psi = Psi_i(p, r, n, d, budget);
    compare(v, psi.image(), x.space, "image", "invariants", [&](Key k) { return x.pair.str(k); });
    // generators suffice: balanced also for words of length 2
    auto gens = i_generators(n);
    for (const auto& g1 : gens)
        for (const auto& g2 : gens) {
            auto op = tensor_action_iword({g1, g2}, n, d).map;
            auto l = kron(x.pair.left->left_matrix(op), identity_map(x.pair.right->dim()));
            auto rr = kron(identity_map(x.pair.left->dim()), x.pair.right->right_matrix(op));
            for (const auto& b : x.space.basis)
                v.require(l.apply(b) == rr.apply(b), "invariant not balanced for the word " + g1.str() + g2.str());
        }
    // equivariance under U_r (left, columns) and U_p (right, rows)
    auto dom = quotient_space(p, r, d, budget);
    for (const auto& g : i_generators(r))
        v.require(compose(psi, i_left_matrix(g, *dom)) == compose(kron(identity_map(x.pair.left->dim()), i_left_matrix(g, *x.pair.right)), psi),
                  "Psi does not commute with the left action of " + g.str());
    for (const auto& g : i_generators(p))
        v.require(compose(psi, i_right_matrix(*dom, g)) == compose(kron(i_right_matrix(*x.pair.left, g), identity_map(x.pair.right->dim())), psi),
                  "Psi does not commute with the right action of " + g.str());
    return v;
}

Verdict sft_i_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto psi = Psi_i(p, r, n, d, budget);
    auto dom = quotient_space(p, r, d, budget);
    // ı-minors with parameter n + 1, see the README
    auto want = module_I_component(n + HalfInt::from_doubled(2), p, r, d, budget);
    auto ker = kernel_of(psi);
    compare(v, ker, want, "kernel", "minor submodule", [&](Key k) { return dom->basis_str(k); });
    if (!(std::min(p, r) > n)) v.require(ker.dim() == 0, "kernel is nonzero although n >= min(p, r)");
    return v;
}

Verdict dims_fd_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto x = X_i(p, r, n, d, budget);
    mpz_class want = 0;
    for (const auto& lam : bipartitions(std::min({n, p, r}), d)) want += irrep_dim(lam, r) * irrep_dim(lam, p);
    v.expected = dim_str(want.get_ui());
    v.actual = dim_str(x.space.dim());
    v.require(want == x.space.dim(), "invariant dim " + std::to_string(x.space.dim()) + " vs bipartition sum " + want.get_str());
    return v;
}

Verdict compose_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    // one pairing per entry of a ρ matrix on V_R^{⊗d} → V_P^{⊗d}, budgeted like rho_check
    std::size_t entries = TensorSpace(p, d).size * TensorSpace(r, d).size;
    if (budget && entries > budget)
        throw BudgetExceeded("compose: " + std::to_string(entries) + " matrix entries exceed budget");
    auto psi = Psi_i(p, r, n, d, budget);
    auto dom = quotient_space(p, r, d, budget);
    PairSpace ps = pair_space(quotient_space(p, n, d, budget), quotient_space(n, r, d, budget), budget);
    const auto& pr = dom->monos().scheme;
    TensorSpace is(p, d), js(r, d);
    // entry (i,j) of ρ(α)∘ρ(β) is Σ_k ⟨α, t̃_ik⟩⟨β, t̃_kj⟩: the coefficient of α⊗β below
    std::size_t count = 0;
    for (Key a = 0; a < is.size; ++a)
        for (Key b = 0; b < js.size; ++b) {
            Mono mono = pr.mono(is.tuple(a), js.tuple(b));
            SparseVec comp = psi_i_mono(ps, pr, mono, d, n);
            ++count;
            v.require(psi.apply(dom->project_mono(mono)) == comp,
                      "pairing mismatch at t[" + tuple_str(is.tuple(a)) + "," + tuple_str(js.tuple(b)) + "]");
        }
    // the pairings are Ψ∘project and project is onto, so they span the image of Ψ
    std::size_t rank = psi.image().dim();
    auto x = X_i(p, r, n, d, budget);
    v.require(rank == x.space.dim(), "rank of composition " + std::to_string(rank) + " vs invariant dim " + std::to_string(x.space.dim()));
    v.expected = "rank " + std::to_string(x.space.dim());
    v.actual = "rank " + std::to_string(rank) + " over " + std::to_string(count) + " pairings";
    return v;
}

Verdict psi_module_check(HalfInt p, HalfInt r, HalfInt n, int d, std::size_t budget) {
    Verdict v;
    auto dom = quotient_space(p, r, d, budget), up = quotient_space(p, r, d + 1, budget);
    PairSpace ps = pair_space(quotient_space(p, n, d, budget), quotient_space(n, r, d, budget), budget);
    PairSpace ps1 = pair_space(quotient_space(p, n, d + 1, budget), quotient_space(n, r, d + 1, budget), budget);
    auto psi = Psi_i(p, r, n, d, budget), psi1 = Psi_i(p, r, n, d + 1, budget);
    CoordScheme pr(p, r), pn(p, n), nr(n, r);
    auto ks = index_scheme(n).underline;
    std::size_t count = 0;
    for (Key h = 0; h < dom->dim(); ++h) {
        SparseVec image = psi.apply(SparseVec::unit(h));
        for (PairCode ij = 0; ij < pr.generators(); ++ij) {
            Mono m = dom->basis_mono(h);
            m.push_back(ij);
            SparseVec lhs = psi1.apply(up->project_mono(m));
            // Ψ(h)·X_ij, componentwise
            SparseAccumulator acc;
            for (const auto& [key, c] : image) {
                Key a = key / ps.right->dim(), b = key % ps.right->dim();
                for (HalfInt k : ks) {
                    Mono ma = ps.left->basis_mono(a), mb = ps.right->basis_mono(b);
                    ma.push_back(pn.code(pr.row(ij), k));
                    mb.push_back(nr.code(k, pr.col(ij)));
                    const auto& xa = ps1.left->project_mono(ma);
                    if (xa.empty()) continue;
                    for (const auto& [ka, x] : xa)
                        for (const auto& [kb, y] : ps1.right->project_mono(mb)) acc.add(ps1.key(ka, kb), c * x * y);
                }
            }
            SparseVec rhs = acc.take();
            ++count;
            v.require(lhs == rhs, "module map fails for " + dom->basis_str(h) + " * " + pr.mono_str({ij}));
        }
    }
    // the right action is well defined on classes: ideal members times t_ij stay in the ideal
    for (const auto& w : dom->ideal().basis) {
        QPoly pw = dom->monos().poly(w);
        for (PairCode ij = 0; ij < pr.generators(); ++ij) {
            ++count;
            v.require(psi1.apply(up->project(multiply(pw, QPoly::from_mono(p, r, {ij})))).empty(),
                      "ideal member times " + pr.mono_str({ij}) + " has nonzero image");
        }
    }
    v.expected = "all identities hold";
    v.actual = std::to_string(count) + " identities checked";
    return v;
}

}  // namespace iqinv
