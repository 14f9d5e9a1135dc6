#pragma once

#include <cstdint>
#include <vector>

namespace newsrec
{

struct SimilarityParams {
    double theta = 1.0;    ///< penalty on pairs with few co-evaluated news
    double epsilon = 0.001; ///< base similarity, also the lower clamp

    /// Throws std::invalid_argument unless theta >= 0 and 0 < epsilon < 1.
    void validate() const;
};

/// Agreement counters of a user pair over their co-evaluated news.
struct PairCounters {
    std::uint32_t agree = 0;
    std::uint32_t disagree = 0;

    std::uint32_t total() const { return agree + disagree; }
    friend bool operator==(const PairCounters&, const PairCounters&) = default;
};

/// Agreement ratio shrunk by theta / sqrt(m + M), clamped from below at
/// epsilon. Returns epsilon when the pair has nothing in common.
double similarity(std::uint32_t agree, std::uint32_t disagree, const SimilarityParams& params);

inline double similarity(PairCounters c, const SimilarityParams& params)
{
    return similarity(c.agree, c.disagree, params);
}

/// Precomputed similarity for small counter values; falls back to the
/// closed form beyond the table. Results are bit-identical to similarity().
class SimilarityTable
{
public:
    static constexpr std::uint32_t kSide = 64;

    explicit SimilarityTable(const SimilarityParams& params);

    double operator()(PairCounters c) const
    {
        if ((c.agree | c.disagree) < kSide) {
            return small(c.agree, c.disagree);
        }
        return similarity(c, m_params);
    }

    /// Requires both counters below kSide.
    double small(std::uint32_t agree, std::uint32_t disagree) const { return m_values[agree * kSide + disagree]; }

    const SimilarityParams& params() const { return m_params; }

private:
    SimilarityParams m_params;
    std::vector<double> m_values;
};

} // namespace newsrec
