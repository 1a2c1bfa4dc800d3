#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xorsat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    std::uint64_t seed = 1;
    int threads = 2;
    std::string out_dir; // artifacts land here when non-empty
};

// Runs the full acceptance suite; one result per criterion, logged to `log`
// as "[PASS]/[FAIL] C<N> <name> -- <detail>" lines when non-null.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt, std::ostream* log);

} // namespace xorsat
