// Acceptance suite: runs every criterion of the regression checklist at its
// stated tolerance (exact integer equality throughout) and prints one
// pass/fail line per criterion.
#include <cstdlib>
#include <iostream>

#include "superschur/selftest.hpp"

int main(int argc, char** argv) {
    superschur::SelftestOptions options;
    if (argc > 1) options.max_dim = std::atoi(argv[1]);

    const superschur::SelftestReport report = superschur::run_selftest(options, &std::cout);

    bool ok = report.all_passed();
    if (report.criteria.size() != 9) {
        std::cout << "FAIL  expected 9 criteria, ran " << report.criteria.size() << "\n";
        ok = false;
    }
    // criterion 10: the suite itself must finish within the time budget
    if (report.seconds >= 60.0) {
        std::cout << "FAIL  criterion 10  selftest under 60 seconds (" << report.seconds
                  << "s)\n";
        ok = false;
    } else {
        std::cout << "PASS  criterion 10  selftest under 60 seconds (" << report.seconds
                  << "s)\n";
    }
    return ok ? 0 : 1;
}
