#include <doctest.h>

#include "newsrec/engine/queue.h"
#include "newsrec/rng.h"

#include <algorithm>
#include <stdexcept>

using namespace newsrec;

TEST_CASE("add accumulates and keeps ids sorted")
{
    RecommendationQueue q;
    q.add(5, 0.25);
    q.add(2, 0.5);
    q.add(5, 0.25);
    CHECK(q.size() == 2);
    CHECK(q.score(5) == 0.5);
    CHECK(q.entries()[0].news == 2);
    CHECK_FALSE(q.score(3).has_value());
    CHECK_THROWS_AS(q.add(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(q.add(1, -1.0), std::invalid_argument);
    CHECK(q.erase(2));
    CHECK_FALSE(q.erase(2));
    CHECK(q.size() == 1);
}

TEST_CASE("top_news examples")
{
    RecommendationQueue q;
    q.add(0, 0.9);
    q.add(1, 0.5);
    q.add(2, 0.2);
    CHECK(top_news(q, 2) == std::vector<NewsId>{0, 1});
    CHECK(top_news(q, 10) == std::vector<NewsId>{0, 1, 2});
    CHECK(top_news(q, 0).empty());
    CHECK(top_news(RecommendationQueue{}, 3).empty());

    RecommendationQueue tie;
    tie.add(8, 0.5);
    tie.add(3, 0.5);
    CHECK(top_news(tie, 1) == std::vector<NewsId>{3});
}

TEST_CASE("top_news matches a full sort")
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        RecommendationQueue q;
        const auto n = rng.below(40);
        for (std::uint64_t k = 0; k < n; ++k) {
            // coarse scores so that ties are common
            q.add(static_cast<NewsId>(rng.below(100)), 0.1 * double(1 + rng.below(5)));
        }
        std::vector<QueueEntry> all(q.entries().begin(), q.entries().end());
        std::sort(all.begin(), all.end(), [](const QueueEntry& a, const QueueEntry& b) {
            return a.score != b.score ? a.score > b.score : a.news < b.news;
        });
        const std::size_t r = rng.below(8);
        auto got = top_news(q, r);
        REQUIRE(got.size() == std::min<std::size_t>(r, all.size()));
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k] == all[k].news);
        }
    }
}

TEST_CASE("decay on a queue longer than Q")
{
    RecommendationQueue q;
    q.add(0, 0.05);
    for (NewsId id = 1; id <= 10; ++id) {
        q.add(id, 1.0 + id);
    }
    REQUIRE(q.size() == 11);
    CHECK(apply_decay(q, DecayParams{10, 0.1}));
    CHECK(q.size() == 10);
    CHECK_FALSE(q.score(0).has_value());
    for (NewsId id = 1; id <= 10; ++id) {
        CHECK(*q.score(id) == doctest::Approx(0.9 + id));
    }
}

TEST_CASE("decay leaves a queue of exactly Q alone")
{
    RecommendationQueue q;
    for (NewsId id = 0; id < 10; ++id) {
        q.add(id, 0.05);
    }
    CHECK_FALSE(apply_decay(q, DecayParams{10, 0.1}));
    CHECK(q.size() == 10);
    CHECK(*q.score(0) == 0.05);
}

TEST_CASE("lambda zero disables decay")
{
    RecommendationQueue q;
    for (NewsId id = 0; id < 30; ++id) {
        q.add(id, 0.01);
    }
    CHECK_FALSE(apply_decay(q, DecayParams{0, 0.0}));
    CHECK(q.size() == 30);
}

TEST_CASE("Q zero decays any non-empty queue")
{
    RecommendationQueue q;
    q.add(4, 0.3);
    CHECK(apply_decay(q, DecayParams{0, 0.1}));
    CHECK(*q.score(4) == doctest::Approx(0.2));
}

TEST_CASE("decay keeps the order of survivors")
{
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        RecommendationQueue q;
        const auto n = 1 + rng.below(30);
        for (std::uint64_t k = 0; k < n; ++k) {
            q.add(static_cast<NewsId>(k), rng.uniform(0.001, 1.0));
        }
        const auto before = top_news(q, q.size());
        apply_decay(q, DecayParams{static_cast<std::size_t>(rng.below(10)), rng.uniform(0.0, 0.5)});
        const auto after = top_news(q, q.size());
        std::vector<NewsId> kept;
        for (auto id : before) {
            if (q.score(id)) {
                kept.push_back(id);
            }
        }
        CHECK(kept == after);
        for (const auto& e : q.entries()) {
            CHECK(e.score > 0.0);
        }
    }
}

TEST_CASE("decay params are validated")
{
    CHECK_NOTHROW(DecayParams{}.validate());
    CHECK_THROWS_AS((DecayParams{10, -0.1}.validate()), std::invalid_argument);
}
