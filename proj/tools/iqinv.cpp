// iqinv: batch verification of the invariant-theory checks.
#include "iqinv/checks.hpp"
#include "iqinv/errors.hpp"
#include "iqinv/heckeb.hpp"
#include "iqinv/icoord.hpp"
#include "iqinv/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace iqinv;

namespace {

constexpr int kUsageError = 2;

std::optional<HalfInt> half(const std::string& s) {
    if (s.empty()) return std::nullopt;
    HalfInt h = HalfInt::parse(s);
    if (h.doubled < 0) throw DomainError("parameters are nonnegative: " + s);
    return h;
}

int verify(const std::string& check, const std::string& n, const std::string& m, const std::string& p, const std::string& r,
           int d, const RunOptions& opts, const std::string& format, const std::string& out_path) {
    if (!known_check(check)) {
        std::cerr << "unknown check: " << check << "\nknown checks:";
        for (const auto& c : check_names()) std::cerr << " " << c;
        std::cerr << "\n";
        return kUsageError;
    }
    ParamSet fixed;
    Format fmt;
    try {
        fixed = ParamSet{half(n), half(m), half(p), half(r), d >= 0 ? std::optional<int>(d) : std::nullopt};
        fmt = parse_format(format);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }
    RunResult res = run(check, fixed, opts);
    std::string text = render(res, fmt);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return kUsageError;
        }
        f << text;
    }
    if (fmt != Format::Text || !out_path.empty()) {
        std::cerr << summary_line(res);
        if (!res.skipped.empty()) std::cerr << " (" << res.skipped.size() << " skipped over budget)";
        std::cerr << "\n";
    }
    return res.ok() ? 0 : 1;
}

int dims(const std::string& n_s, const std::string& m_s, int dmax, std::size_t budget) {
    HalfInt n, m;
    try {
        n = *half(n_s);
        m = *half(m_s);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }
    std::cout << "n=" << n.str() << " m=" << m.str() << "\n";
    std::cout << "d\tquotient\tbipartition-sum\n";
    for (int d = 0; d <= dmax; ++d) {
        mpz_class want = 0;
        for (const auto& lam : bipartitions(std::min(n, m), d)) want += irrep_dim(lam, m) * irrep_dim(lam, n);
        std::cout << d << "\t";
        try {
            std::cout << quotient_space(n, m, d, budget)->dim();
        } catch (const BudgetExceeded&) {
            std::cout << "over-budget";
        }
        std::cout << "\t" << want.get_str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of quantum and ıquantum invariant theory"};
    app.require_subcommand(1);

    auto* ver = app.add_subcommand("verify", "run a named check over its parameter grid");
    std::string check, n, m, p, r, format = "text", out;
    int d = -1;
    RunOptions opts;
    bool no_timing = false;
    ver->add_option("check", check, "check name, or all")->required();
    ver->add_option("--n", n, "half-integer, k/2 or k");
    ver->add_option("--m", m, "half-integer");
    ver->add_option("--p", p, "half-integer");
    ver->add_option("--r", r, "half-integer");
    ver->add_option("--d", d, "degree");
    ver->add_option("--dmax", opts.dmax, "largest degree on the grid")->capture_default_str();
    ver->add_option("--budget", opts.budget, "maximum basis size per space, 0 for none")->capture_default_str();
    ver->add_option("--format", format, "json, csv or text")->capture_default_str();
    ver->add_option("--out", out, "write the report here instead of stdout");
    ver->add_option("--jobs", opts.jobs, "worker threads")->capture_default_str();
    ver->add_flag("--no-timing", no_timing, "write elapsed_ms as 0 for byte comparison");

    auto* dm = app.add_subcommand("dims", "dimension table of the ı-coordinate quotients");
    std::string dn = "1/2", dmm = "1/2";
    int dd = 3;
    std::size_t dbudget = 2000;
    dm->add_option("--n", dn, "half-integer")->capture_default_str();
    dm->add_option("--m", dmm, "half-integer")->capture_default_str();
    dm->add_option("--dmax", dd, "largest degree")->capture_default_str();
    dm->add_option("--budget", dbudget, "maximum basis size, 0 for none")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }
    opts.timing = !no_timing;
    if (*ver) return verify(check, n, m, p, r, d, opts, format, out);
    return dims(dn, dmm, dd, dbudget);
}
