#include "newsrec/output.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace newsrec
{

using nlohmann::json;

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "NA";
    }
    if (v == 0.0) {
        return "0"; // folds -0
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

namespace
{

std::string format_optional(const std::optional<double>& v)
{
    return v ? format_number(*v) : "NA";
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

json summary_json(const RunRecord& r)
{
    return {{"seed", r.seed},
            {"config_hash", r.config_hash},
            {"initial_excess_differences", r.network.initial_excess_differences},
            {"final_excess_differences", r.network.final_excess_differences},
            {"mean_followers", r.network.followers.mean},
            {"max_followers", r.network.followers.max},
            {"users_without_followers", r.network.followers.without_followers},
            {"news", r.network.news},
            {"votes", r.network.votes},
            {"tagged", r.tagged}};
}

} // namespace

void write_csv(std::ostream& out, const RunRecord& record, std::size_t window)
{
    const std::size_t tags = record.rows.empty() ? 0 : record.rows.front().tagged_readers.size();
    out << "step,approvals,assessments,approval_fraction,approval_fraction_w" << window
        << ",excess_differences,mean_queue_len";
    for (std::size_t k = 0; k < tags; ++k) {
        out << ",tagged_" << k;
    }
    out << '\n';
    for (const auto& row : record.rows) {
        out << row.step << ',' << format_number(row.approvals) << ',' << format_number(row.assessments) << ','
            << format_optional(row.approval_fraction) << ',' << format_optional(row.approval_fraction_window) << ','
            << format_number(row.excess_differences) << ',' << format_number(row.mean_queue_length);
        for (auto v : row.tagged_readers) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void write_bundle(const std::filesystem::path& dir, const ScenarioResult& result)
{
    std::filesystem::create_directories(dir);
    const std::size_t window = result.config.window;
    json meta;
    meta["config"] = to_json(result.config);
    meta["config_hash"] = config_hash(result.config);
    meta["repetitions"] = json::array();
    for (std::size_t r = 0; r < result.repetitions.size(); ++r) {
        char name[32];
        std::snprintf(name, sizeof name, "rep_%03zu.csv", r);
        auto out = open_out(dir / name);
        write_csv(out, result.repetitions[r], window);
        auto s = summary_json(result.repetitions[r]);
        s["file"] = name;
        meta["repetitions"].push_back(s);
    }
    auto out = open_out(dir / "mean.csv");
    write_csv(out, result.mean, window);
    meta["mean"] = summary_json(result.mean);
    meta["mean"].erase("seed");
    meta["mean"].erase("tagged");
    auto js = open_out(dir / "run.json");
    js << meta.dump(2) << '\n';
}

void write_grid_summary(std::ostream& out, const SweepResult& sweep, std::size_t tail_steps)
{
    out << "cell";
    for (const auto& p : sweep.parameters) {
        out << ',' << p;
    }
    out << ",approval_fraction_final,approval_fraction_tail" << tail_steps << ",excess_differences_final\n";
    for (const auto& cell : sweep.cells) {
        out << cell.index;
        for (const auto& [name, value] : cell.assignment) {
            out << ',' << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        const auto& mean = cell.result.mean;
        const std::optional<double> final_af =
            mean.rows.empty() ? std::nullopt : mean.rows.back().approval_fraction_window;
        out << ',' << format_optional(final_af) << ',' << format_optional(tail_approval_fraction(mean, tail_steps))
            << ',' << format_number(mean.network.final_excess_differences) << '\n';
    }
}

void write_sweep(const std::filesystem::path& dir, const SweepResult& sweep, std::size_t tail_steps)
{
    std::filesystem::create_directories(dir);
    for (const auto& cell : sweep.cells) {
        char name[32];
        std::snprintf(name, sizeof name, "cell_%03zu", cell.index);
        write_bundle(dir / name, cell.result);
    }
    auto out = open_out(dir / "grid_summary.csv");
    write_grid_summary(out, sweep, tail_steps);
}

} // namespace newsrec
