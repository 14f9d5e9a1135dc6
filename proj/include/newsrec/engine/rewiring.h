#pragma once

#include "newsrec/engine/engine.h"
#include "newsrec/rng.h"

#include <optional>
#include <string>
#include <string_view>

namespace newsrec
{

enum class RewireStrategy {
    Optimal, ///< the S most similar users, recomputed from scratch
    Random,  ///< replace the worst authority by a random better user
    Bara,    ///< like Random, candidate drawn from the best authority's authorities
};

std::string to_string(RewireStrategy s);
std::optional<RewireStrategy> parse_strategy(std::string_view name);

/// How rewire_optimal orders candidates of equal similarity.
enum class TieBreak {
    Incumbent,  ///< current authorities first, then smaller id
    SmallestId, ///< smaller id only
};

std::string to_string(TieBreak t);
std::optional<TieBreak> parse_tie_break(std::string_view name);

/// Steps between rewiring passes when the config does not override it.
Step default_period(RewireStrategy s);

/// Each returns true if the authority set of `user` changed.
bool rewire_optimal(Engine& engine, UserId user, TieBreak ties = TieBreak::Incumbent);
bool rewire_random(Engine& engine, UserId user, Rng& rng);
bool rewire_bara(Engine& engine, UserId user, Rng& rng);

/// One rewiring pass over all users in ascending id order.
std::size_t rewire_all(Engine& engine, RewireStrategy strategy, Rng& rng, TieBreak ties = TieBreak::Incumbent);

} // namespace newsrec
