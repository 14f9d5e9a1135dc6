#include "newsrec/presets.h"

#include "newsrec/harness.h"
#include "newsrec/output.h"

#include <stdexcept>

namespace newsrec
{

using nlohmann::json;

std::vector<std::string> preset_names()
{
    return {"fig2", "fig3", "fig4", "fig5a", "fig5b", "fig6"};
}

ScenarioConfig preset_base(const PresetOptions& options)
{
    ScenarioConfig c;
    if (options.desk) {
        c.D = 12;
        c.D1 = 4;
    }
    c.T = options.steps.value_or(800);
    c.repetitions = options.repetitions;
    c.seed = options.seed;
    return c;
}

void run_figure(const std::string& id, const std::filesystem::path& out, const PresetOptions& options)
{
    const ScenarioConfig base = preset_base(options);
    const RunOptions run{options.threads};
    const SweepOptions sweep{1000, options.threads};
    const auto dir = out / id;

    if (id == "fig2") {
        for (auto s : {RewireStrategy::Optimal, RewireStrategy::Random, RewireStrategy::Bara}) {
            auto c = base;
            c.strategy = s;
            c.lambda = 0.0; // no decay in the rewiring comparison
            write_bundle(dir / to_string(s), run_scenario(c, 0, run));
        }
    } else if (id == "fig3") {
        std::vector<SweepAxis> axes = {
            {"Q", {1, 5, 10, 20, 50}},
            {"lambda", {0.0, 0.01, 0.03, 0.1, 0.3, 1.0}},
        };
        write_sweep(dir, run_sweep(base, axes, sweep));
    } else if (id == "fig4") {
        struct Setting {
            const char* name;
            double lambda;
        };
        for (auto [name, lambda] : {Setting{"no_decay", 0.0}, Setting{"medium_decay", 0.1}, Setting{"strong_decay", 4.0}}) {
            auto c = base;
            c.Q = 10;
            c.lambda = lambda;
            c.injection = {10, std::min<Step>(500, c.T > 0 ? c.T - 1 : 0), kMaxQuality};
            write_bundle(dir / name, run_injection(c, run));
        }
    } else if (id == "fig5a" || id == "fig5b") {
        auto c = base;
        if (id == "fig5b") {
            c.D = options.desk ? 18 : 24;
            c.D1 = options.desk ? 4 : 6;
            c.U = options.desk ? 495 : 8008;
        }
        std::vector<SweepAxis> axes = {
            {"recommender", {"adaptive", "random", "absPop", "relPop"}},
            {"delta", {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}},
        };
        write_sweep(dir, run_sweep(c, axes, sweep));
    } else if (id == "fig6") {
        std::vector<SweepAxis> axes = {{"x", {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0}}};
        write_sweep(dir, run_sweep(base, axes, sweep));
    } else {
        throw std::invalid_argument("unknown figure preset '" + id + "'");
    }
}

} // namespace newsrec
