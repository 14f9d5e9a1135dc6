#pragma once

#include "newsrec/agents.h"
#include "newsrec/engine/events.h"
#include "newsrec/engine/network.h"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace newsrec
{

/// approvals / assessments, or nullopt when nothing was assessed.
/// Throws std::invalid_argument if approvals > assessments.
std::optional<double> approval_fraction(std::uint64_t approvals, std::uint64_t assessments);

/// Trailing-window approval fraction: ratio of the window sums, not the
/// mean of per-step ratios. Entry t covers steps max(0, t-window+1)..t.
std::vector<std::optional<double>> windowed_approval_fraction(std::span<const double> approvals,
                                                              std::span<const double> assessments,
                                                              std::size_t window);

/// Mean Hamming distance over all (user, authority) links.
double mean_authority_distance(const AuthorityNetwork& network, std::span<const TasteVector> tastes);

/// Mean link distance minus the minimum possible distance 2.
double excess_differences(const AuthorityNetwork& network, std::span<const TasteVector> tastes);

/// Average Hamming distance between two distinct weight-`ones` vectors of
/// dimension `dim`, in closed form.
double expected_random_differences(unsigned dim, unsigned ones);

struct FollowerStats {
    double mean = 0.0;
    std::size_t max = 0;
    std::size_t without_followers = 0;
};

FollowerStats follower_stats(const AuthorityNetwork& network);

/// Per tagged news, the number of reads in each step 1..steps (index
/// step - 1). Throws std::invalid_argument for an id never submitted.
std::vector<std::vector<std::uint32_t>> track_readership(const EventLog& log, std::span<const NewsId> tagged,
                                                         Step steps);

/// One output row per simulated step. Counts are doubles so that the
/// repetition mean fits the same shape.
struct MetricsRow {
    Step step = 0;
    double approvals = 0.0;
    double assessments = 0.0;
    std::optional<double> approval_fraction;
    std::optional<double> approval_fraction_window;
    double excess_differences = 0.0;
    double mean_queue_length = 0.0;
    std::vector<double> tagged_readers;
};

using MetricsSeries = std::vector<MetricsRow>;

/// Fills both approval-fraction columns of `series` from its counts.
void fill_approval_fractions(MetricsSeries& series, std::size_t window);

} // namespace newsrec
