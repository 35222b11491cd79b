#ifndef PPSM2M_CAMPAIGN_HPP
#define PPSM2M_CAMPAIGN_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppsm2m/engine.hpp"

namespace ppsm2m {

/// A batch of runs: every (problem, algorithm, run index) triple under
/// shared tunables. Seed of run i is base_seed + i.
struct CampaignConfig {
    std::vector<std::string> problems;
    std::vector<Algorithm> algorithms;
    std::size_t runs = 1;
    std::uint64_t base_seed = 1;
    std::string out_dir;  // empty: fall back to env/cwd
    RunConfig tunables;   // problem/algorithm/seed fields ignored

    RunConfig run_config(const std::string& problem, Algorithm algorithm,
                         std::size_t run_index) const;
};

bool operator==(const CampaignConfig& a, const CampaignConfig& b);

/// Flat key-value campaign file. Unknown keys are hard errors so a
/// typo cannot silently fall back to a default.
CampaignConfig parse_campaign_config(std::istream& in, const std::string& source_name);
CampaignConfig load_campaign_config(const std::filesystem::path& path);
std::string serialize_campaign_config(const CampaignConfig& config);

/// Precedence: CLI --out, config out_dir, $PPSM2M_OUT_ROOT, cwd.
std::filesystem::path resolve_out_dir(const CampaignConfig& config, const std::string& cli_out);

std::string record_filename(const std::string& problem, Algorithm algorithm, std::uint64_t seed);

/// Execute the whole campaign on `workers` threads and write one
/// record file per run into out_dir. Returns the written paths in
/// job order.
std::vector<std::filesystem::path> cmd_run(const CampaignConfig& config,
                                           const std::filesystem::path& out_dir,
                                           std::size_t workers);

/// One (problem, algorithm) cell of the summary table. Metrics are
/// absent when the reference front is unavailable or no run produced a
/// feasible front.
struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::size_t runs = 0;
    bool has_metrics = false;
    double igd_mean = 0.0;
    double igd_std = 0.0;
    double hv_mean = 0.0;
    double hv_std = 0.0;
};

struct Summary {
    std::vector<SummaryRow> rows;  // problems outer, algorithms inner
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    bool friedman_available = false;
    std::vector<double> igd_mean_ranks;  // per algorithm, when available
    std::vector<double> hv_mean_ranks;
};

Summary summarize_records(const std::vector<RunRecord>& records);
std::string serialize_summary(const Summary& summary);
Summary parse_summary(std::istream& in, const std::string& source_name);

/// Scan dir for *.run files, summarize, write the table to out_path.
Summary cmd_summarize(const std::filesystem::path& dir, const std::filesystem::path& out_path);

/// Record input: objective scatter of the final front with the
/// reference front overlaid (SVG for two objectives, plain data files
/// for three) plus an SVG trace of the stage/epsilon/change-rate
/// history. Summary input: per-problem bar data of mean IGD.
/// Returns the written paths.
std::vector<std::filesystem::path> cmd_plot(const std::filesystem::path& input,
                                            const std::filesystem::path& out_dir);

}  // namespace ppsm2m

#endif  // PPSM2M_CAMPAIGN_HPP
