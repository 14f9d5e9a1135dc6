#pragma once

#include "newsrec/engine/events.h"
#include "newsrec/engine/ledger.h"
#include "newsrec/engine/network.h"
#include "newsrec/engine/queue.h"
#include "newsrec/engine/similarity.h"

#include <unordered_set>
#include <vector>

namespace newsrec
{

struct EngineParams {
    SimilarityParams similarity;
    DecayParams decay;

    void validate() const
    {
        similarity.validate();
        decay.validate();
    }
};

/// Spreading state: votes, the authority overlay and one queue per user.
///
/// Knows nothing about how votes are produced. All mutation is sequential;
/// an Engine may be moved to another thread between calls.
class Engine
{
public:
    Engine(AuthorityNetwork network, EngineParams params, bool track_pairs = true);

    /// Records the originator's approval and pushes the news to its
    /// followers, each with increment s(originator, follower).
    /// Throws DuplicateNewsError if the id was seen before.
    void submit_news(UserId originator, NewsId news);

    /// Records a reader's vote, drops the news from the reader's queue and,
    /// on approval, propagates it to the reader's followers.
    void evaluate(UserId user, NewsId news, Vote vote);

    /// Adds s(follower, approver) to the queue of every follower that has
    /// not voted on the news yet.
    void propagate_approval(UserId approver, NewsId news);

    /// Vote bookkeeping only: no queue changes and no propagation. Used
    /// by recommenders that ignore the overlay.
    void submit_news_unrouted(UserId originator, NewsId news);
    void evaluate_unrouted(UserId user, NewsId news, Vote vote);

    /// One decay pass over every queue.
    void decay_all();

    double similarity(UserId a, UserId b) const { return m_table(m_ledger.counters(a, b)); }
    const SimilarityTable& similarity_table() const { return m_table; }

    /// Rewiring entry points; they keep follower lists consistent and log.
    void set_authorities(UserId user, std::vector<UserId> authorities);
    void replace_authority(UserId user, UserId old_authority, UserId new_authority);

    const EvaluationLedger& ledger() const { return m_ledger; }
    const AuthorityNetwork& network() const { return m_network; }
    const RecommendationQueue& queue(UserId user) const { return m_queues.at(user); }
    const EngineParams& params() const { return m_params; }
    std::size_t users() const { return m_queues.size(); }
    bool is_submitted(NewsId news) const { return m_submitted.contains(news); }

    double mean_queue_length() const;

    /// Events are appended to `log` while attached; pass nullptr to detach.
    /// Attaching emits the current authority sets as RewireEvents.
    void attach_log(EventLog* log);
    void set_step(Step step) { m_step = step; }
    Step step() const { return m_step; }

private:
    void emit(Event e)
    {
        if (m_log != nullptr) {
            m_log->events.push_back(std::move(e));
        }
    }
    void emit_authorities(UserId user);

    EngineParams m_params;
    SimilarityTable m_table;
    EvaluationLedger m_ledger;
    AuthorityNetwork m_network;
    std::vector<RecommendationQueue> m_queues;
    std::unordered_set<NewsId> m_submitted;
    EventLog* m_log = nullptr;
    Step m_step = 0;
};

} // namespace newsrec
