// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdlib>
#include <iostream>
#include <string>

#include "surfcore/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = surfcore::verify::kDefaultSeed;
    if (argc > 1) seed = std::stoull(argv[1]);
    int failed = 0;
    for (int id = 1; id <= 9; ++id) {
        const auto r = surfcore::verify::criterion(id, seed);
        std::cout << surfcore::verify::format_result(r) << std::endl;
        if (!r.passed) ++failed;
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 9" : std::string("ALL 9 PASSED"))
              << std::endl;
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
