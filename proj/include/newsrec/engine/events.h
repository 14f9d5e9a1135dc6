#pragma once

#include "newsrec/types.h"

#include <variant>
#include <vector>

namespace newsrec
{

struct SubmitEvent {
    Step step;
    UserId originator;
    NewsId news;
};

/// A vote cast by reading a news; originator approvals appear as SubmitEvent.
struct VoteEvent {
    Step step;
    UserId user;
    NewsId news;
    Vote vote;
};

/// Marks the per-step decay pass over all queues.
struct DecayEvent {
    Step step;
};

/// Authority set of `user` after a rewiring change (or initial assignment).
struct RewireEvent {
    Step step;
    UserId user;
    std::vector<UserId> authorities;
};

using Event = std::variant<SubmitEvent, VoteEvent, DecayEvent, RewireEvent>;

struct EventLog {
    std::vector<Event> events;
};

} // namespace newsrec
