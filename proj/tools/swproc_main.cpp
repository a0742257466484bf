#include <cstdint>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swproc/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Process-model experiment harness for LLM-backed agent teams"};
    app.require_subcommand(1);

    std::string run_config;
    std::optional<std::string> run_out;
    std::optional<std::uint64_t> run_seed;
    CLI::App* cmd_run = app.add_subcommand("run", "Execute the full experiment matrix");
    cmd_run->add_option("config", run_config, "Experiment config file")->required();
    cmd_run->add_option("--out", run_out, "Override the config's output_dir");
    cmd_run->add_option("--seed", run_seed, "Override every cell's seed");

    std::string ingest_kind;
    std::string ingest_file;
    std::string ingest_runs;
    CLI::App* cmd_ingest =
        app.add_subcommand("ingest", "Attach external quality inputs to a persisted run");
    cmd_ingest->add_option("kind", ingest_kind, "issues or manual")
        ->required()
        ->check(CLI::IsMember({"issues", "manual"}));
    cmd_ingest->add_option("file", ingest_file, "Input file")->required();
    cmd_ingest->add_option("--runs", ingest_runs, "Runs directory")->required();

    std::string report_runs;
    std::string report_out;
    CLI::App* cmd_report = app.add_subcommand("report", "Emit CSV and Markdown reports");
    cmd_report->add_option("--runs", report_runs, "Runs directory")->required();
    cmd_report->add_option("--out", report_out, "Report output directory")->required();

    std::string validate_config;
    CLI::App* cmd_validate = app.add_subcommand("validate", "Check a config without running");
    cmd_validate->add_option("config", validate_config, "Experiment config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (cmd_run->parsed()) return swproc::cmd_run(run_config, run_out, run_seed);
    if (cmd_ingest->parsed()) return swproc::cmd_ingest(ingest_kind, ingest_file, ingest_runs);
    if (cmd_report->parsed()) return swproc::cmd_report(report_runs, report_out);
    if (cmd_validate->parsed()) return swproc::cmd_validate(validate_config);
    return 1;
}
