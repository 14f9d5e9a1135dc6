#pragma once

#include "newsrec/baselines.h"
#include "newsrec/engine/rewiring.h"
#include "newsrec/world.h"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace newsrec
{

struct UserOverride {
    UserId user = 0;
    std::optional<double> activity;
    std::optional<double> noise;
};

/// Full parameterization of one experiment. JSON field names match the
/// member names.
struct ScenarioConfig {
    unsigned D = 16;
    unsigned D1 = 6;
    std::optional<std::size_t> U; ///< absent: every C(D, D1) taste vector
    std::size_t S = 10;
    double pA = 0.02;
    double pS = 0.01;
    std::size_t R = 3;
    double delta = 3.0;
    double theta = 1.0;
    double epsilon = 0.001;
    RewireStrategy strategy = RewireStrategy::Optimal;
    std::optional<Step> period; ///< absent: the strategy's default
    TieBreak ties = TieBreak::Incumbent;
    std::size_t Q = 10;
    double lambda = 0.1;
    double x = 0.0;
    Recommender recommender = Recommender::Adaptive;
    Step T = 1000;
    std::size_t repetitions = 1;
    std::uint64_t seed = 1;
    InjectionSpec injection;
    std::size_t window = 10;
    std::vector<UserOverride> overrides;

    std::size_t users() const;
    Step resolved_period() const { return period.value_or(default_period(strategy)); }
};

/// Rejected configuration; one message per offending field.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(std::vector<std::string> diagnostics);
    const std::vector<std::string>& diagnostics() const { return m_diagnostics; }

private:
    std::vector<std::string> m_diagnostics;
};

nlohmann::json to_json(const ScenarioConfig& config);

/// Missing fields keep their defaults. Throws ConfigError listing every
/// unknown, mistyped or out-of-range field.
ScenarioConfig config_from_json(const nlohmann::json& j);

ScenarioConfig load_config(const std::string& path);

std::vector<std::string> validate(const ScenarioConfig& config);
void check(const ScenarioConfig& config);

/// FNV-1a of the canonical JSON form.
std::uint64_t config_hash(const ScenarioConfig& config);

/// Sets one field (by JSON name, "injection.count" style for nested ones)
/// and revalidates. Throws ConfigError for unknown names or bad values.
ScenarioConfig with_parameter(const ScenarioConfig& config, const std::string& name, const nlohmann::json& value);

WorldParams to_world_params(const ScenarioConfig& config);

} // namespace newsrec
