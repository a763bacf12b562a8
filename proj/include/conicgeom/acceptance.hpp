#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace conicgeom::accept {

/// One verification check: named, pass/fail, with a human-readable detail
/// line carrying the worst observed deviations.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Budget for the randomized checks. `samples` scales the heavy 1e6-trial
/// comparisons; smaller counts (polygon sweeps, subspace sweeps) scale
/// proportionally. Below the full budget the Monte Carlo agreement bands
/// widen from 4 to 6 standard errors.
struct Config {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0x1905;
    int threads = 0;  // 0 = library default

    double band() const { return samples < 1'000'000 ? 6.0 : 4.0; }
    std::uint64_t mid() const { return std::max<std::uint64_t>(samples / 10, 10'000); }
    std::uint64_t small() const { return std::max<std::uint64_t>(samples / 100, 1'000); }
};

/// Run all verification checks; if `progress` is non-null, one line is
/// printed per check as it finishes.
std::vector<CheckResult> run_all(const Config& cfg, std::ostream* progress = nullptr);

}  // namespace conicgeom::accept
