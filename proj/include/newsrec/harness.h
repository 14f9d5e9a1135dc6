#pragma once

#include "newsrec/config.h"
#include "newsrec/metrics.h"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace newsrec
{

struct NetworkSummary {
    double initial_excess_differences = 0.0;
    double final_excess_differences = 0.0;
    FollowerStats followers;
    double news = 0.0;
    double votes = 0.0;
};

struct RunRecord {
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    MetricsSeries rows;
    NetworkSummary network;
    std::vector<NewsId> tagged;
};

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<RunRecord> repetitions;
    RunRecord mean;
};

struct RunOptions {
    std::size_t threads = 1;
};

/// One repetition with an explicit seed. `log`, when given, receives every
/// engine event of the run.
RunRecord run_once(const ScenarioConfig& config, std::uint64_t seed, EventLog* log = nullptr);

/// All repetitions of `config` (seeds derived from the master seed and
/// `cell`) plus their column-wise mean. Throws ConfigError on bad input.
ScenarioResult run_scenario(const ScenarioConfig& config, std::size_t cell = 0, RunOptions options = {});

/// Column-wise arithmetic mean; undefined approval fractions are skipped.
RunRecord aggregate_mean(const std::vector<RunRecord>& runs);

/// run_scenario for a config carrying an injection spec.
ScenarioResult run_injection(const ScenarioConfig& config, RunOptions options = {});

/// Readers per step of each tagged news, taken from the record's rows.
std::vector<std::vector<double>> readership(const RunRecord& record);

struct SweepAxis {
    std::string parameter;
    std::vector<nlohmann::json> values;
};

/// Parses "param=v1,v2,..."; numbers become JSON numbers, the rest strings.
SweepAxis parse_axis(const std::string& spec);

struct SweepCell {
    std::size_t index = 0;
    std::vector<std::pair<std::string, nlohmann::json>> assignment;
    ScenarioResult result;
};

struct SweepOptions {
    std::size_t max_cells = 1000;
    std::size_t threads = 1;
};

struct SweepResult {
    std::vector<std::string> parameters;
    std::vector<SweepCell> cells;
};

/// Cartesian product of the axes; cell c uses seeds derived from
/// (master seed, c, rep) so results do not depend on scheduling.
SweepResult run_sweep(const ScenarioConfig& base, const std::vector<SweepAxis>& axes, SweepOptions options = {});

/// Ratio of approvals to assessments over the last `steps` rows.
std::optional<double> tail_approval_fraction(const RunRecord& record, std::size_t steps);

/// Runs `count` independent jobs on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job);

} // namespace newsrec
