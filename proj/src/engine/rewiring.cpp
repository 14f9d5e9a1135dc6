#include "newsrec/engine/rewiring.h"

#include <algorithm>
#include <vector>

namespace newsrec
{

std::string to_string(RewireStrategy s)
{
    switch (s) {
    case RewireStrategy::Optimal:
        return "optimal";
    case RewireStrategy::Random:
        return "random";
    case RewireStrategy::Bara:
        return "bara";
    }
    return "unknown";
}

std::optional<RewireStrategy> parse_strategy(std::string_view name)
{
    if (name == "optimal") {
        return RewireStrategy::Optimal;
    }
    if (name == "random") {
        return RewireStrategy::Random;
    }
    if (name == "bara") {
        return RewireStrategy::Bara;
    }
    return std::nullopt;
}

std::string to_string(TieBreak t)
{
    return t == TieBreak::Incumbent ? "incumbent" : "smallest_id";
}

std::optional<TieBreak> parse_tie_break(std::string_view name)
{
    if (name == "incumbent") {
        return TieBreak::Incumbent;
    }
    if (name == "smallest_id") {
        return TieBreak::SmallestId;
    }
    return std::nullopt;
}

Step default_period(RewireStrategy s)
{
    return s == RewireStrategy::Optimal ? 10 : 1;
}

bool rewire_optimal(Engine& engine, UserId user, TieBreak ties)
{
    const auto& net = engine.network();
    const std::size_t want = net.per_user();
    if (want == 0) {
        return false;
    }
    const auto row = engine.ledger().row(user);
    const auto& table = engine.similarity_table();
    const auto current = net.authorities(user);
    const bool prefer_incumbents = ties == TieBreak::Incumbent;

    struct Candidate {
        double score;
        bool incumbent;
        UserId id;
    };
    // among equal scores incumbents lead, then the earlier-inserted (smaller) id
    auto ahead = [](const Candidate& a, const Candidate& b) {
        return a.score != b.score ? a.score > b.score : a.incumbent && !b.incumbent;
    };

    std::vector<Candidate> best;
    best.reserve(want + 1);
    if (prefer_incumbents) {
        for (auto j : current) {
            const Candidate c{engine.similarity(user, j), true, j};
            best.insert(std::upper_bound(best.begin(), best.end(), c, ahead), c);
        }
    }
    // a newcomer must score strictly above the current last place; while
    // the list is still filling the floor stays below every possible score
    double floor = best.size() == want ? best.back().score : -1.0;
    const CompactCounters* counters = row.data();
    const auto n = static_cast<UserId>(row.size());
    for (UserId j = 0; j < n; ++j) {
        const CompactCounters c = counters[j];
        const double s = (c.agree | c.disagree) < SimilarityTable::kSide
                             ? table.small(c.agree, c.disagree)
                             : table(engine.ledger().counters(user, j));
        if (!(s > floor)) [[likely]] {
            continue;
        }
        if (j == user || (prefer_incumbents && std::binary_search(current.begin(), current.end(), j))) {
            continue;
        }
        const Candidate cand{s, false, j};
        best.insert(std::upper_bound(best.begin(), best.end(), cand, ahead), cand);
        if (best.size() > want) {
            best.pop_back();
        }
        if (best.size() == want) {
            floor = best.back().score;
        }
    }

    std::vector<UserId> chosen;
    chosen.reserve(want);
    for (const auto& c : best) {
        chosen.push_back(c.id);
    }
    std::sort(chosen.begin(), chosen.end());
    if (std::equal(chosen.begin(), chosen.end(), current.begin(), current.end())) {
        return false;
    }
    engine.set_authorities(user, std::move(chosen));
    return true;
}

namespace
{

// Least similar authority; ties resolve to the smaller id.
UserId worst_authority(const Engine& engine, UserId user, double& score)
{
    auto auth = engine.network().authorities(user);
    UserId worst = auth.front();
    score = engine.similarity(user, worst);
    for (auto j : auth.subspan(1)) {
        const double s = engine.similarity(user, j);
        if (s < score) {
            score = s;
            worst = j;
        }
    }
    return worst;
}

bool replace_worst_if_better(Engine& engine, UserId user, UserId candidate)
{
    double worst_score = 0.0;
    const UserId worst = worst_authority(engine, user, worst_score);
    if (engine.similarity(user, candidate) > worst_score) {
        engine.replace_authority(user, worst, candidate);
        return true;
    }
    return false;
}

} // namespace

bool rewire_random(Engine& engine, UserId user, Rng& rng)
{
    const auto& net = engine.network();
    const std::size_t users = net.users();
    if (net.per_user() == 0 || net.per_user() + 1 >= users) {
        return false;
    }
    UserId candidate;
    do {
        candidate = static_cast<UserId>(rng.below(users));
    } while (candidate == user || net.is_authority(user, candidate));
    return replace_worst_if_better(engine, user, candidate);
}

bool rewire_bara(Engine& engine, UserId user, Rng& rng)
{
    const auto& net = engine.network();
    if (net.per_user() == 0) {
        return false;
    }
    auto auth = net.authorities(user);
    UserId best = auth.front();
    double best_score = engine.similarity(user, best);
    for (auto j : auth.subspan(1)) {
        const double s = engine.similarity(user, j);
        if (s > best_score) {
            best_score = s;
            best = j;
        }
    }

    std::vector<UserId> pool;
    for (auto k : net.authorities(best)) {
        if (k != user && !net.is_authority(user, k)) {
            pool.push_back(k);
        }
    }
    if (pool.empty()) {
        return false;
    }
    const UserId candidate = pool[rng.below(pool.size())];
    return replace_worst_if_better(engine, user, candidate);
}

std::size_t rewire_all(Engine& engine, RewireStrategy strategy, Rng& rng, TieBreak ties)
{
    std::size_t changed = 0;
    for (UserId i = 0; i < engine.users(); ++i) {
        switch (strategy) {
        case RewireStrategy::Optimal:
            changed += rewire_optimal(engine, i, ties);
            break;
        case RewireStrategy::Random:
            changed += rewire_random(engine, i, rng);
            break;
        case RewireStrategy::Bara:
            changed += rewire_bara(engine, i, rng);
            break;
        }
    }
    return changed;
}

} // namespace newsrec
