#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "ppsm2m/campaign.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Constrained multi-objective optimization experiment harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string run_out;
    std::size_t workers = 1;
    CLI::App* run = app.add_subcommand("run", "Execute every run of a campaign config");
    run->add_option("--config", config_path, "campaign config file")->required();
    run->add_option("--workers", workers, "worker threads");
    run->add_option("--out", run_out, "output directory (overrides config and $PPSM2M_OUT_ROOT)");

    std::string record_dir;
    std::string summary_out;
    CLI::App* summarize = app.add_subcommand("summarize", "Summarize a directory of .run records");
    summarize->add_option("--dir", record_dir, "directory holding .run files")->required();
    summarize->add_option("--out", summary_out, "summary table output file")->required();

    std::string plot_input;
    std::string plot_out;
    CLI::App* plot = app.add_subcommand("plot", "Plot a run record or a summary table");
    plot->add_option("--input", plot_input, "run record or summary file")->required();
    plot->add_option("--out", plot_out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            ppsm2m::CampaignConfig config = ppsm2m::load_campaign_config(config_path);
            std::filesystem::path out_dir = ppsm2m::resolve_out_dir(config, run_out);
            auto files = ppsm2m::cmd_run(config, out_dir, workers);
            std::printf("wrote %zu record(s) to %s\n", files.size(), out_dir.string().c_str());
        } else if (summarize->parsed()) {
            ppsm2m::cmd_summarize(record_dir, summary_out);
            std::printf("wrote %s\n", summary_out.c_str());
        } else if (plot->parsed()) {
            for (const auto& f : ppsm2m::cmd_plot(plot_input, plot_out))
                std::printf("wrote %s\n", f.string().c_str());
        }
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
    return 0;
}
