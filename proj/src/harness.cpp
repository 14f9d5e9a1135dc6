#include "newsrec/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace newsrec
{

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) {
            job(k);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (std::size_t t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t k = next++; k < count; k = next++) {
                    try {
                        job(k);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

RunRecord run_once(const ScenarioConfig& config, std::uint64_t seed, EventLog* log)
{
    check(config);
    Rng rng(seed);
    auto population = build_population(config.D, config.D1, config.U, rng);
    World world(std::move(population), to_world_params(config), rng);
    if (log != nullptr) {
        world.attach_log(log);
    }

    RunRecord rec;
    rec.config_hash = config_hash(config);
    rec.seed = seed;
    rec.network.initial_excess_differences = excess_differences(world.engine().network(), world.population());
    rec.rows.reserve(config.T);
    for (Step t = 0; t < config.T; ++t) {
        const StepTally tally = world.step();
        MetricsRow row;
        row.step = tally.step;
        row.approvals = tally.approvals;
        row.assessments = tally.assessments;
        row.excess_differences = excess_differences(world.engine().network(), world.population());
        row.mean_queue_length = world.engine().mean_queue_length();
        row.tagged_readers.assign(tally.tagged_readers.begin(), tally.tagged_readers.end());
        rec.rows.push_back(std::move(row));
    }
    fill_approval_fractions(rec.rows, config.window);
    rec.network.final_excess_differences = excess_differences(world.engine().network(), world.population());
    rec.network.followers = follower_stats(world.engine().network());
    rec.network.news = static_cast<double>(world.news_count());
    rec.network.votes = static_cast<double>(world.engine().ledger().total_votes());
    rec.tagged = world.tagged();
    return rec;
}

RunRecord aggregate_mean(const std::vector<RunRecord>& runs)
{
    RunRecord mean;
    if (runs.empty()) {
        return mean;
    }
    const double n = static_cast<double>(runs.size());
    mean.config_hash = runs.front().config_hash;
    mean.seed = runs.front().seed;
    const std::size_t steps = runs.front().rows.size();
    const std::size_t tags = steps > 0 ? runs.front().rows.front().tagged_readers.size() : 0;
    mean.rows.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        auto& out = mean.rows[t];
        out.step = runs.front().rows[t].step;
        out.tagged_readers.assign(tags, 0.0);
        double af = 0.0;
        double afw = 0.0;
        std::size_t naf = 0;
        std::size_t nafw = 0;
        for (const auto& r : runs) {
            const auto& row = r.rows.at(t);
            out.approvals += row.approvals;
            out.assessments += row.assessments;
            out.excess_differences += row.excess_differences;
            out.mean_queue_length += row.mean_queue_length;
            for (std::size_t k = 0; k < tags; ++k) {
                out.tagged_readers[k] += row.tagged_readers.at(k);
            }
            if (row.approval_fraction) {
                af += *row.approval_fraction;
                ++naf;
            }
            if (row.approval_fraction_window) {
                afw += *row.approval_fraction_window;
                ++nafw;
            }
        }
        out.approvals /= n;
        out.assessments /= n;
        out.excess_differences /= n;
        out.mean_queue_length /= n;
        for (auto& v : out.tagged_readers) {
            v /= n;
        }
        if (naf > 0) {
            out.approval_fraction = af / static_cast<double>(naf);
        }
        if (nafw > 0) {
            out.approval_fraction_window = afw / static_cast<double>(nafw);
        }
    }
    auto& net = mean.network;
    std::size_t max_followers = 0;
    std::size_t without = 0;
    for (const auto& r : runs) {
        net.initial_excess_differences += r.network.initial_excess_differences / n;
        net.final_excess_differences += r.network.final_excess_differences / n;
        net.followers.mean += r.network.followers.mean / n;
        net.news += r.network.news / n;
        net.votes += r.network.votes / n;
        max_followers = std::max(max_followers, r.network.followers.max);
        without = std::max(without, r.network.followers.without_followers);
    }
    // counts are worst case over repetitions
    net.followers.max = max_followers;
    net.followers.without_followers = without;
    return mean;
}

ScenarioResult run_scenario(const ScenarioConfig& config, std::size_t cell, RunOptions options)
{
    check(config);
    ScenarioResult result;
    result.config = config;
    result.repetitions.resize(config.repetitions);
    parallel_for(config.repetitions, options.threads, [&](std::size_t rep) {
        result.repetitions[rep] = run_once(config, derive_seed(config.seed, cell, rep));
    });
    result.mean = aggregate_mean(result.repetitions);
    return result;
}

ScenarioResult run_injection(const ScenarioConfig& config, RunOptions options)
{
    return run_scenario(config, 0, options);
}

std::vector<std::vector<double>> readership(const RunRecord& record)
{
    const std::size_t tags = record.rows.empty() ? 0 : record.rows.front().tagged_readers.size();
    std::vector<std::vector<double>> out(tags);
    for (const auto& row : record.rows) {
        for (std::size_t k = 0; k < tags; ++k) {
            out[k].push_back(row.tagged_readers[k]);
        }
    }
    return out;
}

SweepAxis parse_axis(const std::string& spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
        throw ConfigError({"axis '" + spec + "': expected param=v1,v2,..."});
    }
    SweepAxis axis;
    axis.parameter = spec.substr(0, eq);
    std::size_t start = eq + 1;
    while (start <= spec.size()) {
        auto comma = spec.find(',', start);
        if (comma == std::string::npos) {
            comma = spec.size();
        }
        const std::string item = spec.substr(start, comma - start);
        if (item.empty()) {
            throw ConfigError({"axis '" + axis.parameter + "': empty value"});
        }
        auto parsed = nlohmann::json::parse(item, nullptr, false);
        axis.values.push_back(parsed.is_discarded() || !parsed.is_primitive() ? nlohmann::json(item) : parsed);
        start = comma + 1;
    }
    return axis;
}

SweepResult run_sweep(const ScenarioConfig& base, const std::vector<SweepAxis>& axes, SweepOptions options)
{
    check(base);
    SweepResult result;
    std::size_t cells = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty()) {
            throw ConfigError({axis.parameter + ": axis has no values"});
        }
        // validates the parameter name up front
        (void)with_parameter(base, axis.parameter, axis.values.front());
        result.parameters.push_back(axis.parameter);
        cells *= axis.values.size();
        if (cells > options.max_cells) {
            throw ConfigError({"sweep: grid exceeds the cap of " + std::to_string(options.max_cells) + " cells"});
        }
    }

    std::vector<ScenarioConfig> configs(cells, base);
    result.cells.resize(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rest = c;
        auto& cell = result.cells[c];
        cell.index = c;
        // last axis varies fastest
        std::vector<std::size_t> pick(axes.size());
        for (std::size_t a = axes.size(); a-- > 0;) {
            pick[a] = rest % axes[a].values.size();
            rest /= axes[a].values.size();
        }
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const auto& value = axes[a].values[pick[a]];
            configs[c] = with_parameter(configs[c], axes[a].parameter, value);
            cell.assignment.emplace_back(axes[a].parameter, value);
        }
    }

    // flatten (cell, repetition) so every simulation is one job
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t c = 0; c < cells; ++c) {
        result.cells[c].result.config = configs[c];
        result.cells[c].result.repetitions.resize(configs[c].repetitions);
        for (std::size_t r = 0; r < configs[c].repetitions; ++r) {
            jobs.emplace_back(c, r);
        }
    }
    parallel_for(jobs.size(), options.threads, [&](std::size_t k) {
        const auto [c, r] = jobs[k];
        result.cells[c].result.repetitions[r] = run_once(configs[c], derive_seed(configs[c].seed, c, r));
    });
    for (auto& cell : result.cells) {
        cell.result.mean = aggregate_mean(cell.result.repetitions);
    }
    return result;
}

std::optional<double> tail_approval_fraction(const RunRecord& record, std::size_t steps)
{
    const std::size_t n = record.rows.size();
    const std::size_t first = n > steps ? n - steps : 0;
    double a = 0.0;
    double total = 0.0;
    for (std::size_t t = first; t < n; ++t) {
        a += record.rows[t].approvals;
        total += record.rows[t].assessments;
    }
    if (total <= 0.0) {
        return std::nullopt;
    }
    return a / total;
}

} // namespace newsrec
