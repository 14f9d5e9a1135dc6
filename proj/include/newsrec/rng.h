#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace newsrec
{

/// Seeded generator with platform-independent distributions.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distribution classes do not, so the helpers below map raw draws onto
/// ranges themselves. Every simulation owns one of these.
class Rng
{
public:
    explicit Rng(std::uint64_t seed = 0) : m_engine(seed) {}

    std::uint64_t next() { return m_engine(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    template <class RandomIt>
    void shuffle(RandomIt first, RandomIt last)
    {
        auto n = last - first;
        for (auto i = n - 1; i > 0; --i) {
            auto j = static_cast<decltype(i)>(below(static_cast<std::uint64_t>(i) + 1));
            using std::swap;
            swap(first[i], first[j]);
        }
    }

private:
    std::mt19937_64 m_engine;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for repetition `rep` of sweep cell `cell`; no shared generator state.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t rep);

} // namespace newsrec
