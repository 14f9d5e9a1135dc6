#include "newsrec/baselines.h"

#include <algorithm>

namespace newsrec
{

std::string to_string(Recommender r)
{
    switch (r) {
    case Recommender::Adaptive:
        return "adaptive";
    case Recommender::Random:
        return "random";
    case Recommender::AbsPopularity:
        return "absPop";
    case Recommender::RelPopularity:
        return "relPop";
    }
    return "unknown";
}

std::optional<Recommender> parse_recommender(std::string_view name)
{
    if (name == "adaptive") {
        return Recommender::Adaptive;
    }
    if (name == "random") {
        return Recommender::Random;
    }
    if (name == "absPop") {
        return Recommender::AbsPopularity;
    }
    if (name == "relPop") {
        return Recommender::RelPopularity;
    }
    return std::nullopt;
}

void PopularityTally::record(NewsId news, Vote vote)
{
    if (news >= m_counts.size()) {
        m_counts.resize(std::size_t(news) + 1);
    }
    auto& c = m_counts[news];
    ++c.evaluations;
    if (vote == Vote::Approve) {
        ++c.approvals;
    }
}

std::vector<NewsId> available_pool(const EvaluationLedger& ledger, UserId user, std::span<const NewsId> catalog)
{
    std::vector<NewsId> voted;
    for (const auto& [news, vote] : ledger.votes_of(user)) {
        voted.push_back(news);
    }
    std::sort(voted.begin(), voted.end());
    std::vector<NewsId> pool;
    pool.reserve(catalog.size());
    std::set_difference(catalog.begin(), catalog.end(), voted.begin(), voted.end(), std::back_inserter(pool));
    return pool;
}

std::vector<NewsId> recommend_random(std::span<const NewsId> pool, std::size_t count, Rng& rng)
{
    std::vector<NewsId> items(pool.begin(), pool.end());
    const std::size_t n = std::min(count, items.size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = k + rng.below(items.size() - k);
        std::swap(items[k], items[j]);
    }
    items.resize(n);
    return items;
}

namespace
{

template <class Score>
std::vector<NewsId> top_by(std::span<const NewsId> pool, std::size_t count, Score score)
{
    std::vector<std::pair<double, NewsId>> ranked;
    ranked.reserve(pool.size());
    for (auto id : pool) {
        ranked.emplace_back(score(id), id);
    }
    const std::size_t n = std::min(count, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end(),
                      [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    std::vector<NewsId> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(ranked[k].second);
    }
    return out;
}

} // namespace

std::vector<NewsId> recommend_abs_popularity(std::span<const NewsId> pool, const PopularityTally& tally,
                                             std::size_t count)
{
    return top_by(pool, count, [&](NewsId id) { return static_cast<double>(tally.get(id).approvals); });
}

std::vector<NewsId> recommend_rel_popularity(std::span<const NewsId> pool, const PopularityTally& tally,
                                             std::size_t count, double prior)
{
    return top_by(pool, count, [&](NewsId id) {
        const auto c = tally.get(id);
        return c.evaluations == 0 ? prior : static_cast<double>(c.approvals) / static_cast<double>(c.evaluations);
    });
}

} // namespace newsrec
