#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace ribbonspec {

/// Philox4x32-10 counter-based generator.  A stream is fully determined by
/// (seed, trial, substream); draws from different triples are independent
/// and can be produced in any order or on any thread.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t trial, std::uint32_t substream = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          trial_(trial), substream_(substream)
    {
    }

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()()
    {
        if (cursor_ == 2) refill();
        return buffer_[cursor_++];
    }

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform_open()
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard exponential by inversion of the uniform stream.
    double exponential() { return -std::log(uniform_open()); }

    /// Uniform integer in [0, bound), bound >= 1, without modulo bias.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return ((*this)() >> 63) != 0; }

    std::uint64_t blocks_drawn() const { return block_; }

    /// One raw Philox4x32-10 block, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                              std::array<std::uint32_t, 2> key);

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t trial_;
    std::uint32_t substream_;
    std::uint32_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int cursor_ = 2;
};

/// Deterministic Fisher-Yates shuffle driven by a PhiloxStream.
template <class It>
void shuffle(It first, It last, PhiloxStream& rng)
{
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
        const auto j = rng.below(i);
        std::swap(first[i - 1], first[j]);
    }
}

}  // namespace ribbonspec
