#ifndef SREES_VERIFY_HPP
#define SREES_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srees/instance.hpp"

namespace srees {

struct CheckResult {
    std::string name;
    std::string window;
    bool pass = true;
    std::string counterexample;  // empty when passing
};

// Brute-force verification of the closed formulas on one instance:
// kernel membership of every Rees generator, bidegree-window ideal equality,
// the pi-substitution identities, Hilbert/Betti/regularity agreement with the
// rank oracles, reduction number and postulation evidence, generator degrees,
// and seeded randomized self-checks of the rank machinery.
std::vector<CheckResult> run_verification(const Instance& inst, long long window_u,
                                          long long window_s, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace srees

#endif
