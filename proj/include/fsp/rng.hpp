#pragma once

#include <cstdint>
#include <random>

namespace fsp {

// mt19937_64 is bit-identical everywhere; the standard distributions are not,
// so ranges are reduced by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // uniform in [0, n), n > 0; rejection sampling keeps it unbiased
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= lim);
        return x % n;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace fsp
