// Verification suite: one pass/fail line per criterion. Intended to run
// at the full default budget under ctest; --samples trims it for quick
// local runs (agreement bands widen accordingly).

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "conicgeom/acceptance.hpp"

int main(int argc, char** argv) {
    conicgeom::accept::Config cfg;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--samples") == 0 && i + 1 < argc)
            cfg.samples = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            cfg.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            cfg.threads = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--samples N] [--seed S] [--threads T]\n";
            return 2;
        }
    }

    const auto results = conicgeom::accept::run_all(cfg, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << (failed == 0 ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " ("
              << results.size() - failed << "/" << results.size() << ")\n";
    return failed == 0 ? 0 : 1;
}
