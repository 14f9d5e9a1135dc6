#include "newsrec/metrics.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace newsrec
{

std::optional<double> approval_fraction(std::uint64_t approvals, std::uint64_t assessments)
{
    if (approvals > assessments) {
        throw std::invalid_argument("approvals exceed assessments");
    }
    if (assessments == 0) {
        return std::nullopt;
    }
    return static_cast<double>(approvals) / static_cast<double>(assessments);
}

std::vector<std::optional<double>> windowed_approval_fraction(std::span<const double> approvals,
                                                              std::span<const double> assessments,
                                                              std::size_t window)
{
    if (approvals.size() != assessments.size()) {
        throw std::invalid_argument("series lengths differ");
    }
    if (window == 0) {
        throw std::invalid_argument("window must be >= 1");
    }
    std::vector<std::optional<double>> out(approvals.size());
    for (std::size_t t = 0; t < approvals.size(); ++t) {
        const std::size_t first = t + 1 >= window ? t + 1 - window : 0;
        double a = 0.0;
        double n = 0.0;
        for (std::size_t k = first; k <= t; ++k) {
            a += approvals[k];
            n += assessments[k];
        }
        if (n > 0.0) {
            out[t] = a / n;
        }
    }
    return out;
}

double mean_authority_distance(const AuthorityNetwork& network, std::span<const TasteVector> tastes)
{
    if (tastes.size() != network.users()) {
        throw std::invalid_argument("need one taste vector per user");
    }
    std::uint64_t total = 0;
    std::uint64_t links = 0;
    for (UserId i = 0; i < network.users(); ++i) {
        for (auto j : network.authorities(i)) {
            total += hamming(tastes[i], tastes[j]);
            ++links;
        }
    }
    return links == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(links);
}

double excess_differences(const AuthorityNetwork& network, std::span<const TasteVector> tastes)
{
    return mean_authority_distance(network, tastes) - 2.0;
}

double expected_random_differences(unsigned dim, unsigned ones)
{
    if (ones == 0 || ones >= dim) {
        throw std::invalid_argument("need 0 < D1 < D");
    }
    // a vector at distance 2d differs in d of its ones and d of its zeros
    std::uint64_t weighted = 0;
    for (unsigned d = 1; d <= std::min(ones, dim - ones); ++d) {
        weighted += d * binomial(ones, d) * binomial(dim - ones, d);
    }
    return 2.0 * static_cast<double>(weighted) / static_cast<double>(binomial(dim, ones) - 1);
}

FollowerStats follower_stats(const AuthorityNetwork& network)
{
    FollowerStats st;
    if (network.users() == 0) {
        return st;
    }
    std::size_t total = 0;
    for (UserId i = 0; i < network.users(); ++i) {
        const auto n = network.followers(i).size();
        total += n;
        st.max = std::max(st.max, n);
        st.without_followers += n == 0;
    }
    st.mean = static_cast<double>(total) / static_cast<double>(network.users());
    return st;
}

std::vector<std::vector<std::uint32_t>> track_readership(const EventLog& log, std::span<const NewsId> tagged,
                                                         Step steps)
{
    std::unordered_map<NewsId, std::size_t> index;
    for (std::size_t k = 0; k < tagged.size(); ++k) {
        index.emplace(tagged[k], k);
    }
    std::vector<bool> known(tagged.size(), false);
    std::vector<std::vector<std::uint32_t>> out(tagged.size(), std::vector<std::uint32_t>(steps, 0));
    for (const auto& ev : log.events) {
        if (const auto* s = std::get_if<SubmitEvent>(&ev)) {
            if (auto it = index.find(s->news); it != index.end()) {
                known[it->second] = true;
            }
        } else if (const auto* v = std::get_if<VoteEvent>(&ev)) {
            auto it = index.find(v->news);
            if (it != index.end() && v->step >= 1 && v->step <= steps) {
                ++out[it->second][v->step - 1];
            }
        }
    }
    for (std::size_t k = 0; k < tagged.size(); ++k) {
        if (!known[k]) {
            throw std::invalid_argument("news " + std::to_string(tagged[k]) + " does not appear in the log");
        }
    }
    return out;
}

void fill_approval_fractions(MetricsSeries& series, std::size_t window)
{
    std::vector<double> a;
    std::vector<double> n;
    for (const auto& row : series) {
        a.push_back(row.approvals);
        n.push_back(row.assessments);
    }
    auto windowed = windowed_approval_fraction(a, n, window);
    for (std::size_t t = 0; t < series.size(); ++t) {
        series[t].approval_fraction = n[t] > 0.0 ? std::optional<double>(a[t] / n[t]) : std::nullopt;
        series[t].approval_fraction_window = windowed[t];
    }
}

} // namespace newsrec
