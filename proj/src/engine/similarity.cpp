#include "newsrec/engine/similarity.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newsrec
{

void SimilarityParams::validate() const
{
    if (!(theta >= 0.0)) {
        throw std::invalid_argument("theta must be >= 0");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
}

double similarity(std::uint32_t agree, std::uint32_t disagree, const SimilarityParams& params)
{
    const std::uint32_t n = agree + disagree;
    if (n == 0) {
        return params.epsilon;
    }
    const double nd = static_cast<double>(n);
    const double raw = (static_cast<double>(agree) / nd) * (1.0 - params.theta / std::sqrt(nd));
    return std::max(params.epsilon, raw);
}

SimilarityTable::SimilarityTable(const SimilarityParams& params)
    : m_params(params)
    , m_values(kSide * kSide)
{
    for (std::uint32_t m = 0; m < kSide; ++m) {
        for (std::uint32_t mm = 0; mm < kSide; ++mm) {
            m_values[m * kSide + mm] = similarity(m, mm, params);
        }
    }
}

} // namespace newsrec
