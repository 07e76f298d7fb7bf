// Standalone acceptance battery: runs the ten verification parts with the
// default seed and prints one pass/fail line per part, then a summary.
// Exit status 0 when every part passes, 1 otherwise.

#include "cnx/acceptance.hpp"

#include <cstdio>

int main() {
    const auto reports = cnx::run_acceptance_suite(42);
    int failed = 0;
    int index = 0;
    for (const cnx::Report& r : reports) {
        ++index;
        const bool ok = r.passed();
        if (!ok) ++failed;
        int gating = 0, info = 0;
        for (const cnx::Check& c : r.checks) (c.informational() ? info : gating)++;
        std::printf("[%2d/10] %-4s %-28s %3d checks, %d informational (%lld ms)\n", index,
                    ok ? "pass" : "FAIL", r.command.c_str(), gating, info, r.wall_time_ms);
        if (!ok) std::fputs(cnx::render_text(r).c_str(), stdout);
    }
    std::printf("%d/10 parts passed\n", static_cast<int>(reports.size()) - failed);
    return failed == 0 ? 0 : 1;
}
