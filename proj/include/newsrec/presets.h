#pragma once

#include "newsrec/config.h"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace newsrec
{

struct PresetOptions {
    std::size_t repetitions = 10;
    std::optional<Step> steps; ///< default 800
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    bool desk = false; ///< D=12, D1=4 (495 users) instead of the full population
};

std::vector<std::string> preset_names();

/// Defaults shared by every figure: S=10, pA=0.02, pS=0.01, R=3, Delta=3,
/// epsilon=0.001, Q=10, lambda=0.1, T=800.
ScenarioConfig preset_base(const PresetOptions& options);

/// Runs figure `id` (fig2, fig3, fig4, fig5a, fig5b, fig6) and writes its
/// CSV bundle under `out / id`. fig2 runs without decay. Throws std::invalid_argument for an unknown id.
void run_figure(const std::string& id, const std::filesystem::path& out, const PresetOptions& options);

} // namespace newsrec
