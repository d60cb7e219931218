// shrike: experiment-matrix driver.
//
//   shrike list
//   shrike run --config <file> [--jobs N] [--output DIR]
//   shrike summarize --input <dir>
//   shrike seed-check --config <file>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "shrike/harness/config.hpp"
#include "shrike/harness/results_io.hpp"
#include "shrike/harness/runner.hpp"
#include "shrike/harness/summary.hpp"
#include "shrike/registry.hpp"

namespace {

using namespace shrike;

int cmd_list(const Registry& reg) {
    std::printf("%-16s %-12s %4s  %-22s %s\n", "name", "family", "dim", "bounds", "known_min");
    for (const auto& name : reg.names()) {
        const auto& p = reg.get(name);
        const auto& b = p.bounds();
        std::string range = "[" + format_double(b.lower(0)) + ", " + format_double(b.upper(0)) + "]";
        std::printf("%-16s %-12s %4zu  %-22s %s%s\n", name.c_str(), reg.family(name).c_str(), p.dimension(),
                    range.c_str(), p.known_min() ? format_double(*p.known_min()).c_str() : "-",
                    p.constraints().empty() ? "" : "  (constrained)");
    }
    return 0;
}

int cmd_run(const Registry& reg, const std::string& config, std::size_t jobs, const std::string& output) {
    auto cfg = harness::load_config(config, reg);
    if (!output.empty()) cfg.output_dir = output;
    const auto m = harness::run_matrix(cfg, reg, jobs);
    harness::write_run(cfg.output_dir, cfg, m);
    std::size_t failed = 0;
    for (const auto& r : m.rows) failed += r.error ? 1 : 0;
    std::printf("%zu cells written to %s", m.rows.size(), cfg.output_dir.string().c_str());
    if (failed) std::printf(" (%zu failed, see errors.csv)", failed);
    std::printf("\n");
    return 0;
}

int cmd_summarize(const std::string& input) {
    const auto rep = harness::summarize_directory(input);
    std::cout << harness::format_summary_text(rep);
    return 0;
}

int cmd_seed_check(const Registry& reg, const std::string& config) {
    const auto cfg = harness::load_config(config, reg);
    const auto cells = harness::enumerate_cells(cfg, reg);
    const auto clashes = harness::seed_collisions(cells);
    for (const auto& [a, b] : clashes) {
        const auto& x = cells[a];
        const auto& y = cells[b];
        std::printf("collision: %s/%s/%zu and %s/%s/%zu share seed %llu\n", cfg.algorithms[x.algorithm].label.c_str(),
                    cfg.problems[x.problem].c_str(), x.round, cfg.algorithms[y.algorithm].label.c_str(),
                    cfg.problems[y.problem].c_str(), y.round, static_cast<unsigned long long>(x.seed));
    }
    std::printf("%zu cells, %zu distinct seeds\n", cells.size(), cells.size() - clashes.size());
    return clashes.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SHOA experiment harness"};
    app.require_subcommand(1);
    std::string data_dir;
    app.add_option("--data-dir", data_dir, "Directory holding the shipped data files");

    auto* list = app.add_subcommand("list", "List registered problems");

    std::string config, output, input;
    std::size_t jobs = 1;
    auto* run = app.add_subcommand("run", "Run an experiment matrix");
    run->add_option("--config", config, "Experiment config file")->required()->check(CLI::ExistingFile);
    run->add_option("--jobs", jobs, "Concurrent cells (0 = hardware concurrency)");
    run->add_option("--output", output, "Override output_dir from the config");

    auto* summarize = app.add_subcommand("summarize", "Build report tables from a run directory");
    summarize->add_option("--input", input, "Run directory")->required()->check(CLI::ExistingDirectory);

    auto* seed_check = app.add_subcommand("seed-check", "Verify that every cell gets a distinct seed");
    seed_check->add_option("--config", config, "Experiment config file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*summarize) return cmd_summarize(input);
        const Registry reg = data_dir.empty() ? Registry() : Registry(data_dir);
        if (*list) return cmd_list(reg);
        if (*run) {
            if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
            return cmd_run(reg, config, jobs, output);
        }
        if (*seed_check) return cmd_seed_check(reg, config);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
