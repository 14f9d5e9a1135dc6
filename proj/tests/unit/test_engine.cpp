#include <doctest.h>

#include "helpers.h"

#include <stdexcept>

using namespace newsrec;
using testing::make_engine;
using testing::seed_engine_pair;

TEST_CASE("submission reaches every follower with the originator's similarity")
{
    // followers of 0 are 1 and 2
    auto e = make_engine({{1}, {0}, {0}});
    NewsId next = seed_engine_pair(e, 0, 1, 3, 1, 1000);
    next = seed_engine_pair(e, 0, 2, 4, 0, next);
    e.submit_news(0, 1);
    CHECK(*e.queue(1).score(1) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(*e.queue(2).score(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e.queue(0).empty());
    CHECK(e.ledger().vote(0, 1) == Vote::Approve);
}

TEST_CASE("submission without followers only records the vote")
{
    auto e = make_engine({{1}, {0}, {0}});
    e.submit_news(2, 5);
    for (UserId u = 0; u < 3; ++u) {
        CHECK(e.queue(u).empty());
    }
    CHECK(e.ledger().vote(2, 5) == Vote::Approve);
    CHECK(e.is_submitted(5));
}

TEST_CASE("fresh pairs deliver at the base similarity")
{
    auto e = make_engine({{1}, {0}});
    e.submit_news(0, 0);
    CHECK(*e.queue(1).score(0) == 0.001);
}

TEST_CASE("duplicate news and unknown news are rejected")
{
    auto e = make_engine({{1}, {0}});
    e.submit_news(0, 3);
    CHECK_THROWS_AS(e.submit_news(1, 3), DuplicateNewsError);
    CHECK_THROWS_AS(e.evaluate(1, 4, Vote::Approve), std::invalid_argument);
    e.evaluate(1, 3, Vote::Approve);
    CHECK_THROWS_AS(e.evaluate(1, 3, Vote::Approve), DuplicateVoteError);
}

TEST_CASE("multi-authority accumulation")
{
    // 4 follows 1 and 3, 5 follows 3 only (apart from 0, which stays silent)
    auto e = make_engine({{1, 2}, {0, 2}, {0, 1}, {0, 1}, {1, 3}, {0, 3}});
    NewsId next = seed_engine_pair(e, 4, 1, 3, 1, 1000);
    next = seed_engine_pair(e, 4, 3, 4, 0, next);
    next = seed_engine_pair(e, 5, 3, 9, 0, next);
    const double s41 = 0.375;
    const double s43 = 0.5;
    const double s53 = 1.0 - 1.0 / 3.0;
    REQUIRE(e.similarity(4, 1) == doctest::Approx(s41));
    REQUIRE(e.similarity(4, 3) == doctest::Approx(s43));
    REQUIRE(e.similarity(5, 3) == doctest::Approx(s53));

    e.submit_news(2, 1);
    CHECK(e.queue(4).empty());
    e.evaluate(1, 1, Vote::Approve);
    CHECK(*e.queue(4).score(1) == doctest::Approx(s41));
    CHECK_FALSE(e.queue(5).score(1).has_value());
    e.evaluate(3, 1, Vote::Approve);
    CHECK(*e.queue(4).score(1) == doctest::Approx(s41 + s43));
    CHECK(*e.queue(5).score(1) == doctest::Approx(s53));
    CHECK_FALSE(e.queue(3).score(1).has_value());
}

TEST_CASE("a follower that already voted receives nothing")
{
    // 2 follows 0 and 1
    auto e = make_engine({{1, 2}, {0, 2}, {0, 1}});
    e.submit_news(0, 7);
    REQUIRE(e.queue(2).score(7).has_value());
    e.evaluate(2, 7, Vote::Disapprove);
    CHECK(e.queue(2).empty());
    e.evaluate(1, 7, Vote::Approve);
    CHECK(e.queue(2).empty());
}

TEST_CASE("disapproval does not propagate")
{
    auto e = make_engine({{1}, {2}, {0}});
    e.submit_news(1, 0);
    REQUIRE(e.queue(0).score(0).has_value());
    e.evaluate(0, 0, Vote::Disapprove);
    CHECK(e.queue(2).empty());
}

TEST_CASE("decay_all acts on every queue")
{
    EngineParams p;
    p.decay.threshold = 1;
    p.decay.lambda = 0.0005;
    Engine d(AuthorityNetwork::from_lists({{1}, {0}}), p);
    d.submit_news(0, 0);
    d.submit_news(0, 1);
    d.decay_all();
    CHECK(*d.queue(1).score(0) == doctest::Approx(0.0005));
    d.decay_all();
    CHECK(d.queue(1).empty());
    CHECK(d.mean_queue_length() == 0.0);
}

TEST_CASE("events are logged while attached")
{
    auto e = make_engine({{1}, {0}});
    EventLog log;
    e.attach_log(&log);
    CHECK(log.events.size() == 2);
    e.set_step(4);
    e.submit_news(0, 0);
    e.evaluate(1, 0, Vote::Approve);
    e.decay_all();
    REQUIRE(log.events.size() == 5);
    CHECK(std::get<SubmitEvent>(log.events[2]).step == 4);
    CHECK(std::get<VoteEvent>(log.events[3]).user == 1);
    CHECK(std::holds_alternative<DecayEvent>(log.events[4]));
    e.attach_log(nullptr);
    e.submit_news(1, 1);
    CHECK(log.events.size() == 5);
}
