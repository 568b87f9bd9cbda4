#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace superschur {

struct SelftestOptions {
    int max_dim = 6;
    std::uint64_t seed = 0x5eedULL;
    int random_algebras = 100;
    int random_actions = 50;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // counts on success, first witness on failure
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;
    double seconds = 0.0;
    bool all_passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

/// Runs the regression suite; one line per criterion when out != nullptr.
SelftestReport run_selftest(const SelftestOptions& options, std::ostream* out);

}  // namespace superschur
