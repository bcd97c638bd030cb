// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "twoalg/selftest.hpp"

#include <cstdio>

int main() {
    auto results = twoalg::run_acceptance(TWOALG_CORPUS_DIR);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s (%s) [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
