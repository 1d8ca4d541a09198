// Acceptance suite: runs every criterion at its exact tolerance and prints
// one pass/fail line per criterion. Exit status 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "galdef/selftest.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 7;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

    bool all = true;
    for (const galdef::CriterionResult& r : galdef::run_acceptance(seed)) {
        std::printf("%s criterion %d: %s (%s; %.2fs)\n", r.pass ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
