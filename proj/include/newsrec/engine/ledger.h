#pragma once

#include "newsrec/engine/similarity.h"
#include "newsrec/types.h"

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace newsrec
{

struct Evaluation {
    UserId user;
    Vote vote;
};

/// Byte-sized counters as stored in the dense table. A field equal to
/// kSpilled means the pair has outgrown a byte and lives in a side map.
struct CompactCounters {
    static constexpr std::uint8_t kSpilled = 255;

    std::uint8_t agree = 0;
    std::uint8_t disagree = 0;
};

/// All votes cast so far, plus agreement counters for every user pair.
///
/// Counters are updated incrementally: a new vote on a news touches only
/// the pairs formed with earlier voters of that news. They are stored as a
/// dense symmetric U x U byte table so that a user's whole row is
/// contiguous; the few pairs with 255 or more co-evaluations spill over.
class EvaluationLedger
{
public:
    explicit EvaluationLedger(std::size_t users, bool track_pairs = true);

    /// Throws DuplicateVoteError if (user, news) already has a vote.
    void record(UserId user, NewsId news, Vote vote);

    std::optional<Vote> vote(UserId user, NewsId news) const;
    bool has_voted(UserId user, NewsId news) const;

    PairCounters counters(UserId a, UserId b) const;

    /// Stored counters of `user` against every user, indexed by the other
    /// id. Entries holding kSpilled must be read through counters().
    std::span<const CompactCounters> row(UserId user) const;

    std::span<const Evaluation> evaluations(NewsId news) const;
    const std::unordered_map<NewsId, Vote>& votes_of(UserId user) const { return m_by_user.at(user); }

    std::size_t users() const { return m_users; }
    std::size_t total_votes() const { return m_total_votes; }
    bool tracks_pairs() const { return m_track_pairs; }

private:
    std::size_t m_users;
    bool m_track_pairs;
    std::size_t m_total_votes = 0;
    std::vector<std::unordered_map<NewsId, Vote>> m_by_user;
    std::unordered_map<NewsId, std::vector<Evaluation>> m_by_news;
    void bump(UserId a, UserId b, bool agree);

    std::vector<CompactCounters> m_pairs;
    std::unordered_map<std::uint64_t, PairCounters> m_spill;
};

} // namespace newsrec
