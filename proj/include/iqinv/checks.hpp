#pragma once

#include "iqinv/combinat.hpp"
#include "iqinv/verdict.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iqinv {

// Parameter values of one verification; unset values are expanded over a grid.
struct ParamSet {
    std::optional<HalfInt> n, m, p, r;
    std::optional<int> d;
};

struct CheckRecord {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;  // n, m, p, r, d order
    std::string expected;
    std::string actual;
    bool pass = false;
    long long elapsed_ms = 0;
    std::string witness;  // empty when passing
};

struct SkipRecord {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::string reason;
};

struct RunOptions {
    std::size_t budget = 2000;  // 0 = unlimited
    int dmax = 3;
    unsigned jobs = 1;
    bool timing = true;  // false zeroes elapsed_ms
};

struct RunResult {
    std::vector<CheckRecord> records;
    std::vector<SkipRecord> skipped;
    std::size_t passed() const;
    bool ok() const { return passed() == records.size(); }
};

struct Task {
    std::string check;
    ParamSet params;
};

// every runnable name, then "all"
const std::vector<std::string>& check_names();
bool known_check(std::string_view name);
// parameter names the check reads, in report order
std::vector<std::string> check_param_names(std::string_view name);

// The grid for a check: n, m, p, r over {0, 1/2, 1, 3/2} and d over its range
// up to dmax, with any value set in `fixed` pinned.
std::vector<Task> plan(const std::string& check, const ParamSet& fixed, const RunOptions& opts);
// throws BudgetExceeded when a space is over budget
Verdict evaluate(const Task& t, std::size_t budget);
RunResult run(const std::vector<Task>& tasks, const RunOptions& opts);
RunResult run(const std::string& check, const ParamSet& fixed, const RunOptions& opts);

std::vector<std::pair<std::string, std::string>> param_list(const Task& t);

}  // namespace iqinv
