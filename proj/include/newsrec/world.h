#pragma once

#include "newsrec/agents.h"
#include "newsrec/baselines.h"
#include "newsrec/engine/engine.h"
#include "newsrec/engine/rewiring.h"
#include "newsrec/rng.h"

#include <optional>
#include <unordered_map>
#include <vector>

namespace newsrec
{

/// The first `count` news submitted after step `after_step` get `quality`
/// and are tracked individually.
struct InjectionSpec {
    std::size_t count = 0;
    Step after_step = 0;
    double quality = kMaxQuality;
};

struct WorldParams {
    AgentParams agents;
    EngineParams engine;
    std::size_t authorities = 10; ///< S
    RewireStrategy strategy = RewireStrategy::Optimal;
    Step period = 10;
    TieBreak ties = TieBreak::Incumbent;
    Recommender recommender = Recommender::Adaptive;
    double popularity_prior = 0.001;
    InjectionSpec injection;
};

struct StepTally {
    Step step = 0;
    std::uint32_t approvals = 0;
    std::uint32_t assessments = 0;
    std::uint32_t submissions = 0;
    std::uint32_t active = 0;
    /// Reads of each tagged news in this step, by tag order.
    std::vector<std::uint32_t> tagged_readers;
};

/// Agent population driving an Engine, one call to step() per time step.
///
/// Phases of a step: activity draws, reads (with propagation), submissions,
/// decay, then rewiring when the step is a multiple of the period. Users
/// are visited in ascending id within each phase.
class World
{
public:
    World(std::vector<TasteVector> population, WorldParams params, Rng rng);

    StepTally step();

    /// Submits a news for `originator` outside the stochastic schedule.
    NewsId submit(UserId originator, std::optional<double> quality = std::nullopt);

    const Engine& engine() const { return m_engine; }
    Engine& engine() { return m_engine; }
    const std::vector<TasteVector>& population() const { return m_population; }
    const WorldParams& params() const { return m_params; }
    const NewsItem& news(NewsId id) const { return m_news.at(id); }
    std::size_t news_count() const { return m_news.size(); }
    const std::vector<NewsId>& tagged() const { return m_tagged; }
    const PopularityTally& popularity() const { return m_tally; }
    Step current_step() const { return m_step; }

    void attach_log(EventLog* log) { m_engine.attach_log(log); }

private:
    std::vector<NewsId> select_reads(UserId user);
    NewsId submit_scheduled(UserId originator);

    std::vector<TasteVector> m_population;
    WorldParams m_params;
    Rng m_rng;
    Engine m_engine;
    std::vector<NewsItem> m_news;
    std::vector<NewsId> m_catalog;
    PopularityTally m_tally;
    std::vector<NewsId> m_tagged;
    std::unordered_map<NewsId, std::size_t> m_tag_index;
    Step m_step = 0;
};

} // namespace newsrec
