#include "newsrec/world.h"

#include <stdexcept>

namespace newsrec
{

namespace
{

AuthorityNetwork initial_network(std::size_t users, std::size_t per_user, Rng& rng)
{
    return AuthorityNetwork::random(users, per_user, rng);
}

} // namespace

World::World(std::vector<TasteVector> population, WorldParams params, Rng rng)
    : m_population(std::move(population))
    , m_params(std::move(params))
    , m_rng(rng)
    , m_engine(initial_network(m_population.size(), m_params.authorities, m_rng), m_params.engine,
               m_params.recommender == Recommender::Adaptive)
{
    m_params.agents.validate(m_population.size());
    if (m_params.period == 0) {
        throw std::invalid_argument("rewiring period must be >= 1");
    }
}

NewsId World::submit(UserId originator, std::optional<double> quality)
{
    const auto id = static_cast<NewsId>(m_news.size());
    m_news.push_back(make_news(id, originator, m_population.at(originator), m_step, m_rng, quality));
    m_catalog.push_back(id);
    if (m_params.recommender == Recommender::Adaptive) {
        m_engine.submit_news(originator, id);
    } else {
        // baselines bypass the overlay; only the vote is kept
        m_engine.submit_news_unrouted(originator, id);
    }
    return id;
}

NewsId World::submit_scheduled(UserId originator)
{
    const auto& inj = m_params.injection;
    if (m_tagged.size() < inj.count && m_step > inj.after_step) {
        const NewsId id = submit(originator, inj.quality);
        m_tag_index.emplace(id, m_tagged.size());
        m_tagged.push_back(id);
        return id;
    }
    return submit(originator);
}

std::vector<NewsId> World::select_reads(UserId user)
{
    const std::size_t count = m_params.agents.reads;
    switch (m_params.recommender) {
    case Recommender::Adaptive:
        return top_news(m_engine.queue(user), count);
    case Recommender::Random:
        return recommend_random(available_pool(m_engine.ledger(), user, m_catalog), count, m_rng);
    case Recommender::AbsPopularity:
        return recommend_abs_popularity(available_pool(m_engine.ledger(), user, m_catalog), m_tally, count);
    case Recommender::RelPopularity:
        return recommend_rel_popularity(available_pool(m_engine.ledger(), user, m_catalog), m_tally, count,
                                        m_params.popularity_prior);
    }
    return {};
}

StepTally World::step()
{
    ++m_step;
    m_engine.set_step(m_step);
    StepTally tally;
    tally.step = m_step;
    tally.tagged_readers.assign(m_params.injection.count, 0);

    const std::size_t users = m_population.size();
    std::vector<UserId> active;
    for (UserId i = 0; i < users; ++i) {
        if (m_rng.bernoulli(m_params.agents.activity_of(i))) {
            active.push_back(i);
        }
    }
    tally.active = static_cast<std::uint32_t>(active.size());

    const bool adaptive = m_params.recommender == Recommender::Adaptive;
    for (auto i : active) {
        const double noise = m_params.agents.noise_of(i);
        for (auto id : select_reads(i)) {
            const auto& item = m_news[id];
            const Vote v = decide(satisfaction(m_population[i], item, noise, m_rng), m_params.agents.threshold);
            if (adaptive) {
                m_engine.evaluate(i, id, v);
            } else {
                m_engine.evaluate_unrouted(i, id, v);
            }
            m_tally.record(id, v);
            ++tally.assessments;
            if (v == Vote::Approve) {
                ++tally.approvals;
            }
            if (auto it = m_tag_index.find(id); it != m_tag_index.end()) {
                ++tally.tagged_readers[it->second];
            }
        }
    }

    for (auto i : active) {
        if (m_rng.bernoulli(m_params.agents.submission)) {
            submit_scheduled(i);
            ++tally.submissions;
        }
    }

    if (adaptive) {
        m_engine.decay_all();
        if (m_step % m_params.period == 0) {
            rewire_all(m_engine, m_params.strategy, m_rng, m_params.ties);
        }
    }
    return tally;
}

} // namespace newsrec
