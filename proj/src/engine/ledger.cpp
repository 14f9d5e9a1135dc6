#include "newsrec/engine/ledger.h"

#include <stdexcept>
#include <string>

namespace newsrec
{

EvaluationLedger::EvaluationLedger(std::size_t users, bool track_pairs)
    : m_users(users)
    , m_track_pairs(track_pairs)
    , m_by_user(users)
{
    if (track_pairs) {
        m_pairs.resize(users * users);
    }
}

void EvaluationLedger::record(UserId user, NewsId news, Vote vote)
{
    auto& mine = m_by_user.at(user);
    if (!mine.emplace(news, vote).second) {
        throw DuplicateVoteError("user " + std::to_string(user) + " already voted on news " +
                                 std::to_string(news));
    }
    auto& voters = m_by_news[news];
    if (m_track_pairs) {
        for (const auto& other : voters) {
            bump(user, other.user, other.vote == vote);
        }
    }
    voters.push_back({user, vote});
    ++m_total_votes;
}

namespace
{

std::uint64_t pair_key(UserId a, UserId b)
{
    return a < b ? (std::uint64_t(a) << 32) | b : (std::uint64_t(b) << 32) | a;
}

} // namespace

void EvaluationLedger::bump(UserId a, UserId b, bool agree)
{
    auto& ab = m_pairs[std::size_t(a) * m_users + b];
    auto& ba = m_pairs[std::size_t(b) * m_users + a];
    if (ab.agree == CompactCounters::kSpilled) {
        auto& c = m_spill.at(pair_key(a, b));
        ++(agree ? c.agree : c.disagree);
        return;
    }
    std::uint8_t& slot = agree ? ab.agree : ab.disagree;
    if (slot + 1 == CompactCounters::kSpilled) {
        PairCounters c{ab.agree, ab.disagree};
        ++(agree ? c.agree : c.disagree);
        m_spill.emplace(pair_key(a, b), c);
        ab = {CompactCounters::kSpilled, CompactCounters::kSpilled};
    } else {
        ++slot;
    }
    ba = ab;
}

std::optional<Vote> EvaluationLedger::vote(UserId user, NewsId news) const
{
    const auto& mine = m_by_user.at(user);
    auto it = mine.find(news);
    if (it == mine.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool EvaluationLedger::has_voted(UserId user, NewsId news) const
{
    return m_by_user.at(user).contains(news);
}

PairCounters EvaluationLedger::counters(UserId a, UserId b) const
{
    if (!m_track_pairs) {
        throw std::logic_error("ledger does not track pair counters");
    }
    if (a >= m_users || b >= m_users) {
        throw std::out_of_range("user id out of range");
    }
    const auto c = m_pairs[std::size_t(a) * m_users + b];
    if (c.agree == CompactCounters::kSpilled) {
        return m_spill.at(pair_key(a, b));
    }
    return {c.agree, c.disagree};
}

std::span<const CompactCounters> EvaluationLedger::row(UserId user) const
{
    if (!m_track_pairs) {
        throw std::logic_error("ledger does not track pair counters");
    }
    if (user >= m_users) {
        throw std::out_of_range("user id out of range");
    }
    return {m_pairs.data() + std::size_t(user) * m_users, m_users};
}

std::span<const Evaluation> EvaluationLedger::evaluations(NewsId news) const
{
    auto it = m_by_news.find(news);
    if (it == m_by_news.end()) {
        return {};
    }
    return it->second;
}

} // namespace newsrec
