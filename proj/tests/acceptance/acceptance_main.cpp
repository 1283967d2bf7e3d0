// Acceptance suite: runs every reproduction criterion at full strength and
// prints one pass/fail line per criterion.  Exit code is the failure count.

#include <cstdio>

#include "gyro/reproduce.hpp"

int main() {
    gyro::ReproduceOptions opt;
    opt.skip_slow = false;
    auto results = gyro::run_reproduction(opt);

    for (const auto& r : results) {
        std::printf("%-4s %2d  %-55s %8.2fs  expected: %s | computed: %s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.expected.c_str(), r.computed.c_str(),
                    r.flagged ? " [flagged]" : "");
        std::fflush(stdout);
    }
    int fails = gyro::count_failures(results);
    std::printf(fails ? "%d criterion(s) FAILED\n" : "all %d criteria passed\n",
                fails ? fails : (int)results.size());
    return fails;
}
