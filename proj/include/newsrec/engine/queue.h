#pragma once

#include "newsrec/types.h"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace newsrec
{

struct DecayParams {
    std::size_t threshold = 10; ///< Q: decay only acts on queues longer than this
    double lambda = 0.1;        ///< score decrement per step; 0 disables decay

    void validate() const;
};

struct QueueEntry {
    NewsId news;
    double score;
};

/// A user's pending recommendations. Entries are kept sorted by news id;
/// every stored score is strictly positive.
class RecommendationQueue
{
public:
    /// Adds `amount` (> 0) to the score of `news`, inserting it if absent.
    void add(NewsId news, double amount);
    bool erase(NewsId news);
    std::optional<double> score(NewsId news) const;

    std::size_t size() const { return m_entries.size(); }
    bool empty() const { return m_entries.empty(); }
    std::span<const QueueEntry> entries() const { return m_entries; }

    /// Subtracts `amount` from all scores and drops entries at or below zero.
    void shift_down(double amount);

private:
    std::vector<QueueEntry> m_entries;
};

/// The min(count, size) highest-scored news, descending; ties go to the
/// smaller news id.
std::vector<NewsId> top_news(const RecommendationQueue& queue, std::size_t count);

/// Applies one step of decay. Returns true if the queue was modified.
bool apply_decay(RecommendationQueue& queue, const DecayParams& params);

} // namespace newsrec
