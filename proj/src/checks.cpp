#include "iqinv/checks.hpp"

#include "iqinv/errors.hpp"
#include "iqinv/heckeb.hpp"
#include "iqinv/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <thread>

namespace iqinv {

namespace {

using CheckFn = std::function<Verdict(const ParamSet&, std::size_t)>;

struct CheckDef {
    std::string name;
    std::string keys;  // subset of "nmprd"
    int dmin = 0;
    CheckFn fn;
};

std::string count_str(std::size_t k, const char* what) { return std::to_string(k) + " " + what; }

void budget_guard(std::size_t need, std::size_t budget, const std::string& what) {
    if (budget && need > budget) throw BudgetExceeded(what + ": " + std::to_string(need) + " exceeds budget " + std::to_string(budget));
}

// ---------------------------------------------------------------- lower-level checks

Scalar random_scalar(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), shift(-2, 2);
    auto poly = [&](bool nz) {
        for (;;) {
            std::vector<mpz_class> c(deg(rng) + 1);
            for (auto& x : c) x = coef(rng);
            Poly p(std::move(c));
            if (!nz || !p.is_zero()) return p;
        }
    };
    Poly num = poly(nonzero), den = poly(true);
    int s = shift(rng);
    if (s > 0) num = num * Poly::monomial(1, s);
    if (s < 0) den = den * Poly::monomial(1, -s);
    return Scalar::canonical(std::move(num), std::move(den));
}

Verdict field_axioms() {
    Verdict v;
    std::mt19937_64 rng(20240521);
    std::size_t count = 0;
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng, false), b = random_scalar(rng, false), c = random_scalar(rng, true);
        std::string w = " fails for a=" + a.str() + ", b=" + b.str() + ", c=" + c.str();
        v.require((a + b) + c == a + (b + c), "additive associativity" + w);
        v.require((a * b) * c == a * (b * c), "multiplicative associativity" + w);
        v.require(a + b == b + a && a * b == b * a, "commutativity" + w);
        v.require(a * (b + c) == a * b + a * c, "distributivity" + w);
        v.require(a + (-a) == Scalar(0), "additive inverse" + w);
        v.require(c * c.inverse() == Scalar(1) && (a / c) * c == a, "multiplicative inverse" + w);
        v.require(Scalar::canonical(a.num(), a.den()) == a, "canonical form not idempotent" + w);
        // specialization is multiplicative where defined
        try {
            v.require((a * b).specialize_q1() == a.specialize_q1() * b.specialize_q1(), "q=1 specialization" + w);
        } catch (const PoleError&) {
        }
        count += 8;
    }
    v.expected = "all identities hold";
    v.actual = count_str(count, "identities checked");
    return v;
}

Verdict hecke_relations(HalfInt m, int d) {
    Verdict v;
    Scalar qi = Scalar::q_pow(-1), q = Scalar::q();
    auto id = hecke_identity(m, d);
    auto word = [&](std::vector<int> w) { return tw_word_action(w, m, d); };
    std::size_t count = 0;
    for (int a = 0; a < d; ++a) {
        auto t = t_action(a, m, d);
        auto quad = add(add(t.then(t).op, t.op, q - qi), id.op, Scalar(-1));
        v.require(quad == zero_map(id.op.rows, id.op.rows), "quadratic relation fails for T" + std::to_string(a));
        ++count;
        for (int b = a + 1; b < d; ++b) {
            ++count;
            if (a == 0 && b == 1)
                v.require(word({0, 1, 0, 1}) == word({1, 0, 1, 0}), "type-B braid relation fails");
            else if (b == a + 1)
                v.require(word({a, b, a}) == word({b, a, b}), "braid relation fails for T" + std::to_string(a) + ", T" + std::to_string(b));
            else
                v.require(word({a, b}) == word({b, a}), "T" + std::to_string(a) + " and T" + std::to_string(b) + " do not commute");
        }
    }
    v.expected = "all relations hold";
    v.actual = count_str(count, "relations checked");
    return v;
}

Verdict braid_independence(HalfInt m, int d) {
    Verdict v;
    std::size_t count = 0;
    for (const auto& w : weyl_b(d)) {
        auto ref = tw_action(w, m, d);
        for (const auto& rw : all_reduced_words(w)) {
            ++count;
            if (!(tw_word_action(rw, m, d) == ref)) {
                std::string s;
                for (int g : rw) s += std::to_string(g);
                v.fail("reduced word " + s + " gives a different operator");
            }
        }
    }
    v.expected = "one operator per element";
    v.actual = count_str(count, "reduced words agree");
    return v;
}

Verdict u_central(HalfInt n, HalfInt m) {
    Verdict v;
    std::size_t count = 0;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        if (sign_size(s, n) == 0) continue;
        auto u = u_element(s, n);
        auto uop = u_operator(u, m);
        for (int g = 0; g < u.rank; ++g) {
            auto t = t_action(g, m, u.rank);
            auto scaled = scale(uop.op, u_eigenvalue(s, g));
            ++count;
            v.require(t.then(uop).op == scaled && uop.then(t).op == scaled,
                      "u" + sign_str(s) + " is not an eigenvector of T" + std::to_string(g));
        }
    }
    v.expected = "u+ and u- central";
    v.actual = count_str(count, "generator identities");
    return v;
}

Verdict wedge_basis(HalfInt n, HalfInt m) {
    Verdict v;
    std::vector<std::string> dims;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        if (sign_size(s, n) == 0) continue;
        auto w = wedge_space(s, m, n);
        dims.push_back(sign_str(s) + " " + std::to_string(w.span.dim()));
        v.require(w.is_basis && w.span.dim() == w.distinguished.size(),
                  "distinguished vectors are not a basis for sign " + sign_str(s) + ": rank " +
                      std::to_string(w.distinguished_rank) + ", count " + std::to_string(w.distinguished.size()) +
                      ", span " + std::to_string(w.span.dim()));
    }
    v.expected = "distinguished vectors form a basis";
    v.actual = "wedge dims";
    for (const auto& s : dims) v.actual += " " + s;
    return v;
}

Verdict double_centralizer(HalfInt n, int d, std::size_t budget) {
    std::size_t dim = TensorSpace(n, d).size;
    budget_guard(dim * dim, budget, "double centralizer");
    Verdict v;
    auto r = double_centralizer_check(n, d);
    v.expected = "commutant dim " + std::to_string(r.commutant_dim);
    v.actual = "generated dim " + std::to_string(r.generated_dim);
    v.require(r.equal, "generated span " + std::to_string(r.generated_dim) + " differs from commutant " +
                           std::to_string(r.commutant_dim));
    return v;
}

Verdict coord_dim(HalfInt n, HalfInt m, int d, std::size_t budget) {
    Verdict v;
    auto s = quotient_space(n, m, d, budget);
    auto c = hecke_commutant(m, n, d, budget);
    v.expected = "commutant dim " + std::to_string(c.dim());
    v.actual = "quotient dim " + std::to_string(s->dim());
    v.require(s->dim() == c.dim(), "quotient and commutant dimensions differ");
    return v;
}

Verdict ihowe_dim(HalfInt n, HalfInt m, int d, std::size_t budget) {
    Verdict v;
    auto s = quotient_space(n, m, d, budget);
    mpz_class want = 0;
    for (const auto& lam : bipartitions(std::min(n, m), d)) want += irrep_dim(lam, m) * irrep_dim(lam, n);
    v.expected = "bipartition sum " + want.get_str();
    v.actual = "quotient dim " + std::to_string(s->dim());
    v.require(want == s->dim(), "quotient dimension differs from the bipartition sum");
    return v;
}

// ---------------------------------------------------------------- registry

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        auto invariant = [&](const char* name, Verdict (*f)(HalfInt, HalfInt, HalfInt, int, std::size_t)) {
            v.push_back({name, "nprd", 0, [f](const ParamSet& ps, std::size_t b) { return f(*ps.p, *ps.r, *ps.n, *ps.d, b); }});
        };
        v.push_back({"field-axioms", "", 0, [](const ParamSet&, std::size_t) { return field_axioms(); }});
        v.push_back({"hecke-relations", "md", 1, [](const ParamSet& ps, std::size_t) { return hecke_relations(*ps.m, *ps.d); }});
        v.push_back({"braid-independence", "md", 1, [](const ParamSet& ps, std::size_t) { return braid_independence(*ps.m, *ps.d); }});
        v.push_back({"u-central", "nm", 0, [](const ParamSet& ps, std::size_t) { return u_central(*ps.n, *ps.m); }});
        v.push_back({"wedge-basis", "nm", 0, [](const ParamSet& ps, std::size_t) { return wedge_basis(*ps.n, *ps.m); }});
        v.push_back({"double-centralizer", "nd", 0, [](const ParamSet& ps, std::size_t b) { return double_centralizer(*ps.n, *ps.d, b); }});
        v.push_back({"coord-dim", "nmd", 0, [](const ParamSet& ps, std::size_t b) { return coord_dim(*ps.n, *ps.m, *ps.d, b); }});
        v.push_back({"ihowe-dim", "nmd", 0, [](const ParamSet& ps, std::size_t b) { return ihowe_dim(*ps.n, *ps.m, *ps.d, b); }});
        v.push_back({"lemma-com", "nmd", 0, [](const ParamSet& ps, std::size_t b) { return lemma_com_check(*ps.n, *ps.m, *ps.d, b); }});
        v.push_back({"rho", "nmd", 0, [](const ParamSet& ps, std::size_t b) { return rho_check(*ps.n, *ps.m, *ps.d, b); }});
        invariant("fft-a", fft_A_check);
        invariant("sft-a", sft_A_check);
        invariant("lemma-inv", lemma_inv_check);
        invariant("fft-i", fft_i_check);
        invariant("sft-i", sft_i_check);
        invariant("dims-fd", dims_fd_check);
        invariant("compose", compose_check);
        invariant("psi-module", psi_module_check);
        return v;
    }();
    return defs;
}

const CheckDef& find_def(std::string_view name) {
    for (const auto& d : registry())
        if (d.name == name) return d;
    throw DomainError("unknown check: " + std::string(name));
}

const std::vector<HalfInt> kGrid = {HalfInt::from_doubled(0), HalfInt::from_doubled(1), HalfInt::from_doubled(2),
                                    HalfInt::from_doubled(3)};

void expand(const CheckDef& def, const ParamSet& fixed, const RunOptions& opts, std::vector<Task>& out) {
    auto values = [&](char key, const std::optional<HalfInt>& f) {
        if (def.keys.find(key) == std::string::npos) return std::vector<std::optional<HalfInt>>{std::nullopt};
        if (f) return std::vector<std::optional<HalfInt>>{f};
        return std::vector<std::optional<HalfInt>>(kGrid.begin(), kGrid.end());
    };
    std::vector<std::optional<int>> ds{std::nullopt};
    if (def.keys.find('d') != std::string::npos) {
        ds.clear();
        if (fixed.d)
            ds.push_back(fixed.d);
        else
            for (int d = def.dmin; d <= opts.dmax; ++d) ds.push_back(d);
    }
    // d outermost so that a cut at small dmax is a prefix of the larger grid
    for (const auto& d : ds)
        for (const auto& n : values('n', fixed.n))
            for (const auto& m : values('m', fixed.m))
                for (const auto& p : values('p', fixed.p))
                    for (const auto& r : values('r', fixed.r)) out.push_back({def.name, ParamSet{n, m, p, r, d}});
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& d : registry()) v.push_back(d.name);
        v.push_back("all");
        return v;
    }();
    return names;
}

bool known_check(std::string_view name) {
    const auto& v = check_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

std::vector<std::string> check_param_names(std::string_view name) {
    std::vector<std::string> out;
    for (char c : find_def(name).keys) out.emplace_back(1, c);
    return out;
}

std::vector<Task> plan(const std::string& check, const ParamSet& fixed, const RunOptions& opts) {
    std::vector<Task> out;
    if (check == "all") {
        for (const auto& def : registry()) expand(def, fixed, opts, out);
    } else {
        expand(find_def(check), fixed, opts, out);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> param_list(const Task& t) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto& ps = t.params;
    if (ps.n) out.emplace_back("n", ps.n->str());
    if (ps.m) out.emplace_back("m", ps.m->str());
    if (ps.p) out.emplace_back("p", ps.p->str());
    if (ps.r) out.emplace_back("r", ps.r->str());
    if (ps.d) out.emplace_back("d", std::to_string(*ps.d));
    return out;
}

Verdict evaluate(const Task& t, std::size_t budget) {
    const auto& def = find_def(t.check);
    for (char c : def.keys) {
        bool set = (c == 'n' && t.params.n) || (c == 'm' && t.params.m) || (c == 'p' && t.params.p) ||
                   (c == 'r' && t.params.r) || (c == 'd' && t.params.d);
        if (!set) throw DomainError(t.check + " needs the parameter " + std::string(1, c));
        if (c == 'd' && *t.params.d < 0) throw DomainError("negative degree");
        if (c != 'd') {
            const auto& h = c == 'n' ? t.params.n : c == 'm' ? t.params.m : c == 'p' ? t.params.p : t.params.r;
            if (h->doubled < 0) throw DomainError("negative half-integer parameter");
        }
    }
    return def.fn(t.params, budget);
}

std::size_t RunResult::passed() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

RunResult run(const std::vector<Task>& tasks, const RunOptions& opts) {
    struct Slot {
        std::optional<CheckRecord> record;
        std::optional<SkipRecord> skip;
    };
    std::vector<Slot> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            const Task& t = tasks[i];
            auto start = std::chrono::steady_clock::now();
            CheckRecord rec{t.check, param_list(t), "", "", false, 0, ""};
            try {
                Verdict v = evaluate(t, opts.budget);
                rec.expected = v.expected;
                rec.actual = v.actual;
                rec.pass = v.pass;
                rec.witness = v.pass ? "" : (v.witness.empty() ? "check failed" : v.witness);
            } catch (const BudgetExceeded& e) {
                slots[i].skip = SkipRecord{t.check, rec.params, e.what()};
                continue;
            } catch (const std::exception& e) {
                rec.expected = "no error";
                rec.actual = "error";
                rec.witness = e.what();
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            rec.elapsed_ms = opts.timing ? ms : 0;
            slots[i].record = std::move(rec);
        }
    };
    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || tasks.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < std::min<std::size_t>(jobs, tasks.size()); ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    RunResult out;
    for (auto& s : slots) {
        if (s.record) out.records.push_back(std::move(*s.record));
        if (s.skip) out.skipped.push_back(std::move(*s.skip));
    }
    return out;
}

RunResult run(const std::string& check, const ParamSet& fixed, const RunOptions& opts) {
    return run(plan(check, fixed, opts), opts);
}

}  // namespace iqinv
