#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "twistlab/util.hpp"

namespace twistlab {

// Counter-based stream generator built on SplitMix64: output i of stream k is
// mix64(k + (i+1)*gamma) with the canonical odd gamma. Streams are cheap to
// derive and independent draws commute, so sharded sampling merges
// order-independently.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() {
        counter_ += kGamma;
        return mix64(key_ + counter_);
    }

    // uniform in (0,1], never 0 (safe under log)
    double next_unit() {
        const std::uint64_t u = next_u64() >> 11;  // 53 bits
        return (static_cast<double>(u) + 1.0) * 0x1.0p-53;
    }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = kTwoPi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    // Stream id from a list of identifying fields (kind, dim, seed, shard, ...).
    static std::uint64_t derive(std::initializer_list<std::uint64_t> fields) {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t f : fields) h = mix64(h + kGamma * (f + 1));
        return h;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace twistlab
