#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "conicgeom/core.hpp"

namespace conicgeom {

/// Counter-based splittable generator. Each (seed, stream, index) triple
/// keys an independent SplitMix64 sequence, so estimators can hand out
/// one generator per sample and stay bit-identical no matter how the
/// sample range is partitioned across workers.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ull);
        state_ = mix(state_ ^ mix(stream + 0xbf58476d1ce4e5b9ull));
        state_ = mix(state_ ^ mix(index + 0x94d049bb133111ebull));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform in the open interval (0, 1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (second value cached).
    double next_normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Deterministic parallel reduction over the sample range [0, samples).
/// The range is cut into fixed-size chunks; workers grab whole chunks and
/// write a per-chunk accumulator, which is then folded in chunk order.
/// The result depends only on (samples, chunk function), never on the
/// worker count. Acc needs default construction and operator+=.
template <typename Acc, typename ChunkFn>
Acc chunked_reduce(std::uint64_t samples, ChunkFn&& fn, int threads = 0) {
    constexpr std::uint64_t kChunk = 8192;
    if (threads <= 0) threads = default_threads();
    const std::uint64_t nchunks = (samples + kChunk - 1) / kChunk;
    std::vector<Acc> partial(nchunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::uint64_t lo = c * kChunk;
            const std::uint64_t hi = std::min(samples, lo + kChunk);
            fn(lo, hi, partial[c]);
        }
    };
    if (threads <= 1 || nchunks <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int nworkers = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), nchunks));
        pool.reserve(nworkers);
        for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Acc total{};
    for (auto& p : partial) total += p;
    return total;
}

/// Accumulator for a mean with standard error.
struct MeanAcc {
    double sum = 0.0;
    double sumsq = 0.0;
    std::uint64_t count = 0;

    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++count;
    }
    MeanAcc& operator+=(const MeanAcc& o) {
        sum += o.sum;
        sumsq += o.sumsq;
        count += o.count;
        return *this;
    }
    Estimate estimate(std::uint64_t seed) const {
        Estimate e;
        e.samples = count;
        e.seed = seed;
        if (count == 0) return e;
        e.mean = sum / static_cast<double>(count);
        if (count > 1) {
            const double var =
                (sumsq - sum * e.mean) / static_cast<double>(count - 1);
            e.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(count));
        }
        return e;
    }
};

/// Accumulator for Bernoulli counts.
struct CountAcc {
    std::uint64_t hits = 0;
    std::uint64_t total = 0;

    CountAcc& operator+=(const CountAcc& o) {
        hits += o.hits;
        total += o.total;
        return *this;
    }
    Estimate estimate(std::uint64_t seed) const {
        Estimate e;
        e.samples = total;
        e.seed = seed;
        if (total == 0) return e;
        const double p = static_cast<double>(hits) / static_cast<double>(total);
        e.mean = p;
        e.stderr_ = std::sqrt(p * (1.0 - p) / static_cast<double>(total));
        return e;
    }
};

}  // namespace conicgeom
