#pragma once

// The exact-identity verification suite: every top-level correctness claim of
// the library, each checked by two independent routes where one exists.

#include <string>
#include <vector>

namespace cq {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // short note: counts checked, escalations, failures
};

// Run the named suite ("small" is the only one); throws std::invalid_argument
// for an unknown suite name.
std::vector<CriterionResult> run_acceptance(const std::string& suite);

}  // namespace cq
