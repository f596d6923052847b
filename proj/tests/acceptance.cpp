// One line per acceptance criterion; exit status is non-zero if any row fails.
#include "isc/bench.hpp"

#include <cstdio>

int main()
{
    int failed = 0;
    isc::run_acceptance([&](const isc::AcceptanceRow& row) {
        std::printf("%s %-28s %s (%.1fs)\n", row.passed ? "PASS" : "FAIL", row.name.c_str(), row.detail.c_str(),
                    row.seconds);
        std::fflush(stdout);
        failed += row.passed ? 0 : 1;
    });
    std::printf("%d of %zu rows failed\n", failed, isc::acceptance_row_names().size());
    return failed == 0 ? 0 : 1;
}
