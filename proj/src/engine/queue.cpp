#include "newsrec/engine/queue.h"

#include <algorithm>
#include <stdexcept>

namespace newsrec
{

void DecayParams::validate() const
{
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("lambda must be >= 0");
    }
}

namespace
{

auto lower(std::vector<QueueEntry>& v, NewsId news)
{
    return std::lower_bound(v.begin(), v.end(), news, [](const QueueEntry& e, NewsId n) { return e.news < n; });
}

} // namespace

void RecommendationQueue::add(NewsId news, double amount)
{
    if (!(amount > 0.0)) {
        throw std::invalid_argument("queue increments must be positive");
    }
    auto it = lower(m_entries, news);
    if (it != m_entries.end() && it->news == news) {
        it->score += amount;
    } else {
        m_entries.insert(it, QueueEntry{news, amount});
    }
}

bool RecommendationQueue::erase(NewsId news)
{
    auto it = lower(m_entries, news);
    if (it != m_entries.end() && it->news == news) {
        m_entries.erase(it);
        return true;
    }
    return false;
}

std::optional<double> RecommendationQueue::score(NewsId news) const
{
    auto it = std::lower_bound(m_entries.begin(), m_entries.end(), news,
                               [](const QueueEntry& e, NewsId n) { return e.news < n; });
    if (it != m_entries.end() && it->news == news) {
        return it->score;
    }
    return std::nullopt;
}

void RecommendationQueue::shift_down(double amount)
{
    for (auto& e : m_entries) {
        e.score -= amount;
    }
    std::erase_if(m_entries, [](const QueueEntry& e) { return e.score <= 0.0; });
}

std::vector<NewsId> top_news(const RecommendationQueue& queue, std::size_t count)
{
    std::vector<QueueEntry> ranked(queue.entries().begin(), queue.entries().end());
    const std::size_t n = std::min(count, ranked.size());
    auto better = [](const QueueEntry& a, const QueueEntry& b) {
        return a.score != b.score ? a.score > b.score : a.news < b.news;
    };
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end(), better);
    std::vector<NewsId> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(ranked[k].news);
    }
    return out;
}

bool apply_decay(RecommendationQueue& queue, const DecayParams& params)
{
    if (params.lambda == 0.0 || queue.size() <= params.threshold) {
        return false;
    }
    queue.shift_down(params.lambda);
    return true;
}

} // namespace newsrec
