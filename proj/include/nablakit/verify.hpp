// Seeded property suites covering every module, for the CLI's verify-all
// command.  Each check is deterministic given the seed and re-derives its
// expectations independently of the code under test where a second route
// exists (brute-force interpolation, exhaustive retraction search, the
// alternating-weight identity).
#ifndef NABLAKIT_VERIFY_HPP
#define NABLAKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nablakit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // instance counts, or the first failure found
};

std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}  // namespace nablakit

#endif
