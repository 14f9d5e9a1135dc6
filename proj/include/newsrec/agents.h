#pragma once

#include "newsrec/rng.h"
#include "newsrec/types.h"

#include <cstdint>
#include <optional>
#include <vector>

namespace newsrec
{

/// Binary taste (or news attribute) vector of dimension D <= 64.
class TasteVector
{
public:
    TasteVector() = default;
    TasteVector(std::uint64_t bits, unsigned dimension);

    /// Builds from explicit 0/1 coordinates.
    static TasteVector from_coords(const std::vector<int>& coords);

    std::uint64_t bits() const { return m_bits; }
    unsigned dimension() const { return m_dimension; }
    unsigned ones() const;

    friend bool operator==(const TasteVector&, const TasteVector&) = default;

private:
    std::uint64_t m_bits = 0;
    unsigned m_dimension = 0;
};

/// Scalar product of two binary vectors. Throws std::invalid_argument on
/// dimension mismatch.
unsigned overlap(const TasteVector& a, const TasteVector& b);
unsigned hamming(const TasteVector& a, const TasteVector& b);

std::uint64_t binomial(unsigned n, unsigned k);

/// Every weight-`ones` vector of dimension `dim` when `cap` is absent or
/// equals C(dim, ones), otherwise `cap` distinct ones sampled uniformly.
/// The order of the result (which user gets which id) is randomized.
std::vector<TasteVector> build_population(unsigned dim, unsigned ones, std::optional<std::size_t> cap, Rng& rng);

struct NewsItem {
    NewsId id;
    UserId originator;
    TasteVector attributes;
    double quality;
    Step birth;
};

inline constexpr double kMinQuality = 0.5;
inline constexpr double kMaxQuality = 1.5;

/// News carrying the originator's tastes; quality is uniform on [0.5, 1.5]
/// unless overridden.
NewsItem make_news(NewsId id, UserId originator, const TasteVector& tastes, Step birth, Rng& rng,
                   std::optional<double> quality = std::nullopt);

/// Q * (t . a) + x * E with E uniform on (-1, 1). No draw is made when x == 0.
double satisfaction(const TasteVector& tastes, const NewsItem& news, double noise, Rng& rng);

/// Approval iff omega >= threshold.
inline Vote decide(double omega, double threshold)
{
    return omega >= threshold ? Vote::Approve : Vote::Disapprove;
}

struct AgentParams {
    double activity = 0.02;   ///< pA
    double submission = 0.01; ///< pS, applied to active users only
    std::size_t reads = 3;    ///< R
    double threshold = 3.0;   ///< Delta
    double noise = 0.0;       ///< x
    /// Optional per-user values; empty means "use the global one".
    std::vector<double> activity_override;
    std::vector<double> noise_override;

    double activity_of(UserId u) const { return activity_override.empty() ? activity : activity_override[u]; }
    double noise_of(UserId u) const { return noise_override.empty() ? noise : noise_override[u]; }

    void validate(std::size_t users) const;
};

} // namespace newsrec
