#ifndef CDIM_SELFTEST_HPP
#define CDIM_SELFTEST_HPP

#include <ostream>
#include <string>

#include <json.hpp>

namespace cdim {

struct SelftestOptions {
    uint64_t seed = 42;
    size_t trials = 100;   // randomized suites scale with this; 0 runs only
                           // the deterministic suites
    size_t jobs = 1;
    bool inject_fault = false;  // harness sanity: negates one predicate
};

// Runs every cross-module property suite. One deterministic line per suite
// on `out`; returns a machine-readable summary. Exit status convention:
// all passed <=> ok.
nlohmann::json run_selftest(const SelftestOptions& opt, std::ostream& out);

}  // namespace cdim

#endif
