#pragma once

#include "newsrec/engine/ledger.h"
#include "newsrec/rng.h"
#include "newsrec/types.h"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace newsrec
{

enum class Recommender {
    Adaptive,
    Random,
    AbsPopularity,
    RelPopularity,
};

std::string to_string(Recommender r);
std::optional<Recommender> parse_recommender(std::string_view name);

struct PopularityCount {
    std::uint32_t approvals = 0;
    std::uint32_t evaluations = 0;
};

/// Reader evaluations per news. Originator approvals are not counted, so a
/// fresh news starts at 0/0.
class PopularityTally
{
public:
    void record(NewsId news, Vote vote);
    PopularityCount get(NewsId news) const
    {
        return news < m_counts.size() ? m_counts[news] : PopularityCount{};
    }

private:
    std::vector<PopularityCount> m_counts;
};

/// News from `catalog` (ascending ids) that `user` has not voted on.
std::vector<NewsId> available_pool(const EvaluationLedger& ledger, UserId user, std::span<const NewsId> catalog);

/// min(count, |pool|) items sampled uniformly without replacement.
std::vector<NewsId> recommend_random(std::span<const NewsId> pool, std::size_t count, Rng& rng);

/// Top `count` by approvals; ties to the smaller id.
std::vector<NewsId> recommend_abs_popularity(std::span<const NewsId> pool, const PopularityTally& tally,
                                             std::size_t count);

/// Top `count` by approvals / evaluations; never-evaluated news score
/// `prior`. Ties to the smaller id.
std::vector<NewsId> recommend_rel_popularity(std::span<const NewsId> pool, const PopularityTally& tally,
                                             std::size_t count, double prior = 0.001);

} // namespace newsrec
