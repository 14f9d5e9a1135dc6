// newsrec: command-line driver for the adaptive news-spreading simulator.
//
//   newsrec run     --config cfg.json --out results/ [--steps N --seed S ...]
//   newsrec sweep   --axis Q=5,10,20 --axis lambda=0.01,0.1 --out results/
//   newsrec inject  --count 10 --at-step 500 --quality 1.5 --out results/
//   newsrec figures fig2 --out results/ [--reps 10 --desk]

#include "newsrec/config.h"
#include "newsrec/harness.h"
#include "newsrec/output.h"
#include "newsrec/presets.h"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace newsrec;

namespace
{

/// Flags shared by run, sweep and inject. Anything set on the command line
/// overrides the config file.
struct ScenarioFlags {
    std::string config_path;
    std::string out = "results";
    std::size_t threads = 1;
    std::optional<std::uint64_t> seed;
    std::optional<Step> steps;
    std::optional<std::size_t> reps;
    std::optional<std::string> strategy;
    std::optional<Step> period;
    std::optional<std::size_t> q;
    std::optional<double> lambda;
    std::optional<double> delta;
    std::optional<double> noise;
    std::optional<std::string> recommender;
    std::optional<std::size_t> users;
    std::optional<unsigned> dim;
    std::optional<unsigned> ones;
    std::optional<std::size_t> authorities;

    void attach(CLI::App* app)
    {
        app->add_option("--config", config_path, "JSON scenario config");
        app->add_option("--out", out, "output directory")->capture_default_str();
        app->add_option("--threads", threads, "parallel simulations")->capture_default_str();
        app->add_option("--seed", seed, "master seed");
        app->add_option("--steps", steps, "time steps T");
        app->add_option("--reps", reps, "repetitions");
        app->add_option("--strategy", strategy, "optimal | random | bara");
        app->add_option("--period", period, "steps between rewiring passes");
        app->add_option("--q", q, "decay queue threshold Q");
        app->add_option("--lambda", lambda, "decay per step");
        app->add_option("--delta", delta, "approval threshold");
        app->add_option("--noise", noise, "evaluation error amplitude x");
        app->add_option("--recommender", recommender, "adaptive | random | absPop | relPop");
        app->add_option("--users", users, "population cap U");
        app->add_option("--D", dim, "taste dimension");
        app->add_option("--D1", ones, "ones per taste vector");
        app->add_option("--S", authorities, "authorities per user");
    }

    ScenarioConfig resolve() const
    {
        ScenarioConfig c = config_path.empty() ? ScenarioConfig{} : load_config(config_path);
        auto j = to_json(c);
        auto set = [&](const char* key, const auto& opt) {
            if (opt) {
                j[key] = *opt;
            }
        };
        set("seed", seed);
        set("T", steps);
        set("repetitions", reps);
        set("strategy", strategy);
        set("period", period);
        set("Q", q);
        set("lambda", lambda);
        set("delta", delta);
        set("x", noise);
        set("recommender", recommender);
        set("U", users);
        set("D", dim);
        set("D1", ones);
        set("S", authorities);
        return config_from_json(j);
    }
};

void report(const ScenarioResult& r, const std::string& out)
{
    const auto& mean = r.mean;
    std::cout << "wrote " << out << "  (" << r.repetitions.size() << " repetition(s), " << mean.rows.size()
              << " steps)\n";
    if (!mean.rows.empty()) {
        std::cout << "  final approval fraction (w" << r.config.window
                  << "): " << format_number(mean.rows.back().approval_fraction_window.value_or(NAN)) << '\n';
    }
    std::cout << "  excess differences: " << format_number(mean.network.initial_excess_differences) << " -> "
              << format_number(mean.network.final_excess_differences) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Adaptive news recommendation simulator"};
    app.require_subcommand(1);

    ScenarioFlags run_flags;
    auto* run = app.add_subcommand("run", "run one scenario");
    run_flags.attach(run);

    ScenarioFlags sweep_flags;
    std::vector<std::string> axes;
    std::size_t max_cells = 1000;
    auto* sweep = app.add_subcommand("sweep", "Cartesian parameter sweep");
    sweep_flags.attach(sweep);
    sweep->add_option("--axis", axes, "param=v1,v2,... (repeatable)")->required();
    sweep->add_option("--max-cells", max_cells, "grid size cap")->capture_default_str();

    ScenarioFlags inject_flags;
    std::size_t inject_count = 10;
    Step inject_step = 500;
    double inject_quality = kMaxQuality;
    auto* inject = app.add_subcommand("inject", "run with tagged high-quality news");
    inject_flags.attach(inject);
    inject->add_option("--count", inject_count, "number of tagged news")->capture_default_str();
    inject->add_option("--at-step", inject_step, "tag news submitted after this step")->capture_default_str();
    inject->add_option("--quality", inject_quality, "quality of tagged news")->capture_default_str();

    std::string figure;
    std::string figure_out = "results";
    PresetOptions preset;
    std::optional<Step> figure_steps;
    auto* figures = app.add_subcommand("figures", "emit the CSV bundle of a figure preset");
    figures->add_option("figure", figure, "fig2 | fig3 | fig4 | fig5a | fig5b | fig6")
        ->required()
        ->check(CLI::IsMember(preset_names()));
    figures->add_option("--out", figure_out, "output directory")->capture_default_str();
    figures->add_option("--reps", preset.repetitions, "repetitions per cell")->capture_default_str();
    figures->add_option("--steps", figure_steps, "time steps (default 800)");
    figures->add_option("--seed", preset.seed, "master seed")->capture_default_str();
    figures->add_option("--threads", preset.threads, "parallel simulations")->capture_default_str();
    figures->add_flag("--desk", preset.desk, "small population (D=12, D1=4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            auto config = run_flags.resolve();
            auto result = run_scenario(config, 0, {run_flags.threads});
            write_bundle(run_flags.out, result);
            report(result, run_flags.out);
        } else if (sweep->parsed()) {
            auto config = sweep_flags.resolve();
            std::vector<SweepAxis> parsed;
            for (const auto& a : axes) {
                parsed.push_back(parse_axis(a));
            }
            auto result = run_sweep(config, parsed, {max_cells, sweep_flags.threads});
            write_sweep(sweep_flags.out, result);
            write_grid_summary(std::cout, result, 100);
        } else if (inject->parsed()) {
            auto config = inject_flags.resolve();
            config.injection = {inject_count, inject_step, inject_quality};
            check(config);
            auto result = run_injection(config, {inject_flags.threads});
            write_bundle(inject_flags.out, result);
            report(result, inject_flags.out);
        } else if (figures->parsed()) {
            preset.steps = figure_steps;
            run_figure(figure, figure_out, preset);
            std::cout << "wrote " << (std::filesystem::path(figure_out) / figure).string() << '\n';
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
