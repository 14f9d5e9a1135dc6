#include "newsrec/agents.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace newsrec
{

TasteVector::TasteVector(std::uint64_t bits, unsigned dimension)
    : m_bits(bits)
    , m_dimension(dimension)
{
    if (dimension == 0 || dimension > 64) {
        throw std::invalid_argument("taste dimension must be in [1, 64]");
    }
    if (dimension < 64 && (bits >> dimension) != 0) {
        throw std::invalid_argument("taste bits exceed the dimension");
    }
}

TasteVector TasteVector::from_coords(const std::vector<int>& coords)
{
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] != 0 && coords[k] != 1) {
            throw std::invalid_argument("taste coordinates must be 0 or 1");
        }
        bits |= std::uint64_t(coords[k]) << k;
    }
    return TasteVector(bits, static_cast<unsigned>(coords.size()));
}

unsigned TasteVector::ones() const
{
    return static_cast<unsigned>(std::popcount(m_bits));
}

unsigned overlap(const TasteVector& a, const TasteVector& b)
{
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("taste vectors differ in dimension");
    }
    return static_cast<unsigned>(std::popcount(a.bits() & b.bits()));
}

unsigned hamming(const TasteVector& a, const TasteVector& b)
{
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("taste vectors differ in dimension");
    }
    return static_cast<unsigned>(std::popcount(a.bits() ^ b.bits()));
}

std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        const std::uint64_t f = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / f) {
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        }
        r = r * f / i;
    }
    return r;
}

namespace
{

// Gosper's hack: next larger integer with the same popcount.
std::uint64_t next_combination(std::uint64_t x)
{
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

constexpr std::uint64_t kEnumerationLimit = 20'000'000;

} // namespace

std::vector<TasteVector> build_population(unsigned dim, unsigned ones, std::optional<std::size_t> cap, Rng& rng)
{
    if (dim > 63) {
        throw std::invalid_argument("population dimension must be <= 63");
    }
    if (ones == 0 || ones >= dim) {
        throw std::invalid_argument("need 0 < D1 < D");
    }
    const std::uint64_t total = binomial(dim, ones);
    if (cap && *cap > total) {
        throw std::invalid_argument("population cap " + std::to_string(*cap) + " exceeds C(D, D1) = " +
                                    std::to_string(total));
    }
    const std::size_t want = cap.value_or(total);

    std::vector<TasteVector> out;
    if (total <= kEnumerationLimit) {
        std::vector<std::uint64_t> all;
        all.reserve(total);
        const std::uint64_t last = ((std::uint64_t(1) << ones) - 1) << (dim - ones);
        for (std::uint64_t x = (std::uint64_t(1) << ones) - 1;; x = next_combination(x)) {
            all.push_back(x);
            if (x == last) {
                break;
            }
        }
        // a partial Fisher-Yates both samples and randomizes id order
        for (std::size_t k = 0; k < want; ++k) {
            const std::size_t j = k + rng.below(all.size() - k);
            std::swap(all[k], all[j]);
        }
        out.reserve(want);
        for (std::size_t k = 0; k < want; ++k) {
            out.emplace_back(all[k], dim);
        }
        return out;
    }

    std::unordered_set<std::uint64_t> seen;
    std::vector<unsigned> coords(dim);
    for (unsigned k = 0; k < dim; ++k) {
        coords[k] = k;
    }
    while (out.size() < want) {
        std::uint64_t bits = 0;
        for (unsigned k = 0; k < ones; ++k) {
            const unsigned j = k + static_cast<unsigned>(rng.below(dim - k));
            std::swap(coords[k], coords[j]);
            bits |= std::uint64_t(1) << coords[k];
        }
        if (seen.insert(bits).second) {
            out.emplace_back(bits, dim);
        }
    }
    return out;
}

NewsItem make_news(NewsId id, UserId originator, const TasteVector& tastes, Step birth, Rng& rng,
                   std::optional<double> quality)
{
    double q = quality ? *quality : rng.uniform(kMinQuality, kMaxQuality);
    if (!(q > 0.0)) {
        throw std::invalid_argument("news quality must be positive");
    }
    return NewsItem{id, originator, tastes, q, birth};
}

double satisfaction(const TasteVector& tastes, const NewsItem& news, double noise, Rng& rng)
{
    const double base = news.quality * static_cast<double>(overlap(tastes, news.attributes));
    if (noise == 0.0) {
        return base;
    }
    return base + noise * rng.uniform(-1.0, 1.0);
}

void AgentParams::validate(std::size_t users) const
{
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(activity)) {
        throw std::invalid_argument("pA must lie in [0, 1]");
    }
    if (!prob(submission)) {
        throw std::invalid_argument("pS must lie in [0, 1]");
    }
    if (!(noise >= 0.0)) {
        throw std::invalid_argument("noise amplitude must be >= 0");
    }
    if (!activity_override.empty()) {
        if (activity_override.size() != users) {
            throw std::invalid_argument("activity overrides must cover every user");
        }
        if (!std::all_of(activity_override.begin(), activity_override.end(), prob)) {
            throw std::invalid_argument("per-user pA must lie in [0, 1]");
        }
    }
    if (!noise_override.empty()) {
        if (noise_override.size() != users) {
            throw std::invalid_argument("noise overrides must cover every user");
        }
        if (!std::all_of(noise_override.begin(), noise_override.end(), [](double x) { return x >= 0.0; })) {
            throw std::invalid_argument("per-user noise must be >= 0");
        }
    }
}

} // namespace newsrec
