#pragma once

#include "newsrec/engine/engine.h"

#include <vector>

namespace testing
{

using namespace newsrec;

/// Engine over explicit authority lists, no decay.
inline Engine make_engine(const std::vector<std::vector<UserId>>& authorities, double lambda = 0.0)
{
    EngineParams p;
    p.decay.lambda = lambda;
    return Engine(AuthorityNetwork::from_lists(authorities), p);
}

/// Votes of user a and b on `count` fresh news such that the pair ends with
/// `agree` matches and `disagree` mismatches. News ids start at `first`.
inline NewsId seed_pair(EvaluationLedger& ledger, UserId a, UserId b, unsigned agree, unsigned disagree,
                        NewsId first)
{
    NewsId id = first;
    for (unsigned k = 0; k < agree; ++k, ++id) {
        ledger.record(a, id, Vote::Approve);
        ledger.record(b, id, Vote::Approve);
    }
    for (unsigned k = 0; k < disagree; ++k, ++id) {
        ledger.record(a, id, Vote::Approve);
        ledger.record(b, id, Vote::Disapprove);
    }
    return id;
}

} // namespace testing

namespace testing
{

/// Same as seed_pair but through an Engine, without touching any queue.
inline NewsId seed_engine_pair(Engine& engine, UserId a, UserId b, unsigned agree, unsigned disagree,
                               NewsId first)
{
    NewsId id = first;
    for (unsigned k = 0; k < agree + disagree; ++k, ++id) {
        engine.submit_news_unrouted(a, id);
        engine.evaluate_unrouted(b, id, k < agree ? Vote::Approve : Vote::Disapprove);
    }
    return id;
}

} // namespace testing
