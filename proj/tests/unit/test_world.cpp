#include <doctest.h>

#include "newsrec/world.h"

#include <set>

using namespace newsrec;

namespace
{

World desk_world(WorldParams params, std::uint64_t seed = 1)
{
    Rng rng(seed);
    auto pop = build_population(12, 4, std::nullopt, rng);
    return World(std::move(pop), std::move(params), rng);
}

} // namespace

TEST_CASE("an inactive world only decays and rewires")
{
    WorldParams p;
    p.agents.activity = 0.0;
    auto w = desk_world(p);
    for (int t = 0; t < 20; ++t) {
        auto tally = w.step();
        CHECK(tally.active == 0);
        CHECK(tally.assessments == 0);
        CHECK(tally.submissions == 0);
    }
    CHECK(w.news_count() == 0);
    CHECK(w.engine().ledger().total_votes() == 0);
    CHECK(w.current_step() == 20);
}

TEST_CASE("everyone active with nothing to read")
{
    WorldParams p;
    p.agents.activity = 1.0;
    p.agents.submission = 0.0;
    auto w = desk_world(p);
    auto tally = w.step();
    CHECK(tally.active == 495);
    CHECK(tally.assessments == 0);
    CHECK(w.engine().ledger().total_votes() == 0);
}

TEST_CASE("reads are capped by R and never repeat a pair")
{
    WorldParams p;
    p.agents.activity = 0.3;
    p.agents.submission = 0.2;
    p.agents.reads = 2;
    auto w = desk_world(p);
    std::size_t votes = 0;
    std::size_t news = 0;
    for (int t = 0; t < 30; ++t) {
        const auto before = w.engine().ledger().total_votes();
        auto tally = w.step();
        CHECK(tally.assessments <= 2 * tally.active);
        CHECK(tally.approvals <= tally.assessments);
        CHECK(w.engine().ledger().total_votes() - before == tally.assessments + tally.submissions);
        votes += tally.assessments;
        news += tally.submissions;
    }
    CHECK(w.news_count() == news);
    CHECK(votes > 0);
}

TEST_CASE("expected submissions per step")
{
    // U * pA * pS is the mean number of submissions per step
    WorldParams p;
    p.agents.activity = 0.5;
    p.agents.submission = 0.2;
    p.agents.reads = 0;
    auto w = desk_world(p, 4);
    const int steps = 400;
    double total = 0.0;
    for (int t = 0; t < steps; ++t) {
        total += w.step().submissions;
    }
    const double mean = 495 * 0.5 * 0.2;
    const double sd = std::sqrt(495 * 0.1 * 0.9 / steps);
    CHECK(std::abs(total / steps - mean) < 4 * sd);
}

TEST_CASE("full-scale defaults give about 1.6 submissions per step")
{
    CHECK(8008 * 0.02 * 0.01 == doctest::Approx(1.6016));
}

TEST_CASE("noise-free votes follow the threshold rule")
{
    WorldParams p;
    p.agents.activity = 0.5;
    p.agents.submission = 0.1;
    p.agents.threshold = 2.0;
    auto w = desk_world(p);
    for (int t = 0; t < 15; ++t) {
        w.step();
    }
    REQUIRE(w.news_count() > 0);
    std::size_t checked = 0;
    for (NewsId id = 0; id < w.news_count(); ++id) {
        const auto& item = w.news(id);
        for (const auto& e : w.engine().ledger().evaluations(id)) {
            const double omega = item.quality * overlap(w.population()[e.user], item.attributes);
            CHECK(e.vote == (e.user == item.originator ? Vote::Approve : decide(omega, 2.0)));
            ++checked;
        }
    }
    CHECK(checked > w.news_count());
}

TEST_CASE("injection tags the first news after the step")
{
    WorldParams p;
    p.agents.activity = 0.2;
    p.agents.submission = 0.1;
    p.injection = InjectionSpec{3, 2, 1.5};
    auto w = desk_world(p);
    for (int t = 0; t < 10; ++t) {
        auto tally = w.step();
        CHECK(tally.tagged_readers.size() == 3);
    }
    REQUIRE(w.tagged().size() == 3);
    for (auto id : w.tagged()) {
        CHECK(w.news(id).quality == 1.5);
        CHECK(w.news(id).birth > 2);
    }
}

TEST_CASE("baseline worlds do not track pairs and never decay")
{
    WorldParams p;
    p.recommender = Recommender::AbsPopularity;
    p.agents.activity = 0.3;
    p.agents.submission = 0.1;
    auto w = desk_world(p);
    for (int t = 0; t < 20; ++t) {
        w.step();
    }
    CHECK_FALSE(w.engine().ledger().tracks_pairs());
    CHECK(w.engine().mean_queue_length() == 0.0);
    CHECK(w.engine().ledger().total_votes() > w.news_count());
}
