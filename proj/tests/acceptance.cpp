// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
// Usage: iqinv_acceptance <path to iqinv>
#include "iqinv/checks.hpp"
#include "iqinv/combinat.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace iqinv;

namespace {

HalfInt H(int doubled) { return HalfInt::from_doubled(doubled); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
    int id;
    std::string what;
};

int failures = 0;

void report(const Line& l, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << l.id << " " << l.what << ": " << detail << std::endl;
    if (!ok) ++failures;
}

// runs the tasks unbudgeted; returns the pass flag and a detail string
std::pair<bool, std::string> run_all(const std::vector<Task>& tasks, double limit_s = 0) {
    RunOptions opts;
    opts.budget = 0;
    auto start = Clock::now();
    RunResult res = run(tasks, opts);
    double s = seconds_since(start);
    std::ostringstream os;
    os << res.passed() << "/" << res.records.size() << " records in " << static_cast<long>(s * 1000) << " ms";
    bool ok = res.ok() && res.skipped.empty() && !res.records.empty();
    for (const auto& r : res.records)
        if (!r.pass) {
            os << "; first failure " << r.check;
            for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
            os << ": " << r.witness;
            break;
        }
    if (limit_s > 0 && s > limit_s) {
        ok = false;
        os << "; over the " << limit_s << " s limit";
    }
    return {ok, os.str()};
}

const std::vector<int> kGrid4 = {0, 1, 2, 3};  // doubled values 0, 1/2, 1, 3/2

std::vector<Task> nm_grid(const std::string& check, const std::vector<int>& ns, const std::vector<int>& ms, int dmin, int dmax) {
    std::vector<Task> out;
    for (int n : ns)
        for (int m : ms)
            for (int d = dmin; d <= dmax; ++d) out.push_back({check, ParamSet{H(n), H(m), std::nullopt, std::nullopt, d}});
    return out;
}

Task invariant_task(const std::string& check, int n, int p, int r, int d) {
    return {check, ParamSet{H(n), std::nullopt, H(p), H(r), d}};
}

// n, p, r in {1/2, 1, 3/2}, d <= 2, and d = 3 when N, P, R <= 3
std::vector<Task> fft_grid(const std::string& check) {
    std::vector<Task> out;
    for (int n : {1, 2, 3})
        for (int p : {1, 2, 3})
            for (int r : {1, 2, 3}) {
                int top = (n <= 2 && p <= 2 && r <= 2) ? 3 : 2;
                for (int d = 0; d <= top; ++d) out.push_back(invariant_task(check, n, p, r, d));
            }
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: iqinv_acceptance <iqinv binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    {
        auto [ok, s] = run_all(nm_grid("coord-dim", kGrid4, kGrid4, 0, 3), 300);
        report({1, "quotient dim = Hecke commutant dim, n,m <= 3/2, d <= 3"}, ok, s);
    }
    {
        auto [ok, s] = run_all(nm_grid("ihowe-dim", kGrid4, kGrid4, 0, 3));
        report({2, "quotient dim = bipartition sum, n,m <= 3/2, d <= 3"}, ok, s);
    }
    {
        auto [ok, s] = run_all(fft_grid("fft-i"));
        report({3, "image of Psi_i = invariants"}, ok, s);
    }
    {
        std::vector<Task> t;
        for (int p : {2, 3})
            for (int d = 0; d <= 3; ++d) t.push_back(invariant_task("sft-i", 1, p, p, d));
        // the kernel vanishes for n >= min(p, r); sft-i asserts it on every such point
        for (const auto& x : fft_grid("sft-i"))
            if (x.params.n->doubled >= std::min(x.params.p->doubled, x.params.r->doubled)) t.push_back(x);
        auto [ok, s] = run_all(t);
        report({4, "kernel of Psi_i = minor submodule, and zero for n >= min(p,r)"}, ok, s);
    }
    {
        auto [ok, s] = run_all(fft_grid("dims-fd"));
        report({5, "invariant dims = bipartition sums"}, ok, s);
    }
    {
        std::vector<Task> t;
        for (const char* c : {"fft-a", "sft-a"})
            for (int n : {0, 1})
                for (int p : {1, 2})
                    for (int d = 0; d <= 3; ++d) t.push_back(invariant_task(c, n, p, p, d));
        auto [ok, s] = run_all(t);
        report({6, "type A image and kernel, N in {1,2}, P=R in {2,3}, d <= 3"}, ok, s);
    }
    {
        // every n with n+ and n- at most 3
        std::vector<int> ns;
        for (int n = 0; sign_size(Sign::Plus, H(n)) <= 3 && sign_size(Sign::Minus, H(n)) <= 3; ++n) ns.push_back(n);
        auto t = nm_grid("u-central", ns, kGrid4, 0, 0);
        auto w = nm_grid("wedge-basis", ns, kGrid4, 0, 0);
        for (auto& x : t) x.params.d.reset();
        for (auto& x : w) x.params.d.reset();
        t.insert(t.end(), w.begin(), w.end());
        auto [ok, s] = run_all(t);
        report({7, "u+ and u- central, wedge bases, n+- <= 3, m <= 3/2"}, ok, s);
    }
    {
        std::vector<Task> t;
        for (int n : {1, 2})
            for (int d = 0; d <= 3; ++d) t.push_back({"double-centralizer", ParamSet{H(n), std::nullopt, std::nullopt, std::nullopt, d}});
        auto [ok, s] = run_all(t);
        report({8, "double centralizer, N in {2,3}, d <= 3"}, ok, s);
    }
    {
        std::vector<Task> t;
        for (const char* c : {"hecke-relations", "braid-independence"})
            for (int m : kGrid4)
                for (int d = 1; d <= 3; ++d) t.push_back({c, ParamSet{std::nullopt, H(m), std::nullopt, std::nullopt, d}});
        auto [ok, s] = run_all(t);
        report({9, "Hecke relations and reduced-word independence, d <= 3, m <= 3/2"}, ok, s);
    }
    {
        auto [ok, s] = run_all(nm_grid("lemma-com", {1, 2}, {1, 2}, 0, 3));
        report({10, "straightening identities, n,m in {1/2,1}, d <= 3"}, ok, s);
    }
    {
        std::vector<Task> t;
        for (int n : {0, 1})
            for (int d = 0; d <= 2; ++d) t.push_back(invariant_task("lemma-inv", n, 1, 1, d));
        auto [ok, s] = run_all(t);
        report({11, "eps-invariants = balanced tensors, with product closure"}, ok, s);
    }
    {
        auto t = fft_grid("compose");
        auto m = fft_grid("psi-module");
        t.insert(t.end(), m.begin(), m.end());
        auto [ok, s] = run_all(t);
        report({12, "composition duality and module map"}, ok, s);
    }
    {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / ("iqinv_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        auto start = Clock::now();
        bool ran = true;
        for (const char* name : {"a.json", "b.json"}) {
            std::string cmd = "\"" + cli + "\" verify all --dmax 2 --no-timing --format json --out \"" + (dir / name).string() + "\" 2>/dev/null";
            ran = ran && std::system(cmd.c_str()) == 0;
        }
        double s = seconds_since(start);
        std::string a = slurp(dir / "a.json"), b = slurp(dir / "b.json");
        bool same = !a.empty() && a == b;
        std::ostringstream os;
        os << "two runs " << (same ? "byte-identical" : "differ") << ", " << (ran ? "all passed" : "nonzero exit") << ", "
           << static_cast<long>(s * 1000) << " ms";
        report({13, "verify all --dmax 2 is deterministic and under 10 minutes"}, same && ran && s < 600, os.str());
        fs::remove_all(dir);
    }

    std::cout << (13 - failures) << "/13 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
