#pragma once

#include <string>

namespace iqinv {

// Outcome of one verification: what was expected, what was found, and the
// first counterexample if any.
struct Verdict {
    bool pass = true;
    std::string expected;
    std::string actual;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
    void require(bool ok, const std::string& w) {
        if (!ok) fail(w);
    }
};

}  // namespace iqinv
