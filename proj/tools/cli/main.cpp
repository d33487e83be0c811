#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

void add_common(CLI::App* sub, fracbound::cli::RunConfig& c) {
    sub->add_option("--alpha", c.alpha, "fractional order in (1, 2]");
    sub->add_option("--bc", c.bc, "boundary pair: DD, DN, ND, NN, N*D, N*N");
    sub->add_option("--n", c.n, "number of states");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("-o,--output-dir", c.output_dir, "output directory (default $FRACBOUND_OUTPUT_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
    using fracbound::cli::RunConfig;
    RunConfig c;
    std::string manifest;
    bool output_dir_given = false;

    CLI::App app{"Grünwald-type schemes for fractional diffusion on an interval"};
    app.add_option("--manifest", manifest, "rerun the config stored in a manifest.json")->check(CLI::ExistingFile);
    app.add_option("-o,--output-dir", c.output_dir, "output directory for a manifest rerun");
    app.require_subcommand(0, 1);

    auto* bm = app.add_subcommand("build-matrix", "write the rate matrix and one interpolation matrix");
    add_common(bm, c);
    bm->add_option("--lambda", c.lambda, "interpolation parameter in [0, 1]");

    auto* solve = app.add_subcommand("solve", "evolve the forward or backward equation");
    add_common(solve, c);
    solve->add_option("--t", c.t_final, "final time");
    solve->add_option("--times", c.output_times, "extra snapshot times")->delimiter(',');
    solve->add_option("--initial", c.initial, "delta@x, uniform, poly:c0,c1,..., file:path");
    solve->add_option("--direction", c.direction, "forward or backward");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo paths of the finite-state chain");
    add_common(sim, c);
    sim->add_option("--t", c.t_final, "final time");
    sim->add_option("--times", c.output_times, "observation times")->delimiter(',');
    sim->add_option("--initial", c.initial, "delta@x");
    sim->add_option("--paths", c.n_paths, "number of paths");
    sim->add_option("--bins", c.bins, "histogram bins (divides n; default n)");
    sim->add_option("--record", c.record_paths, "trajectories written to paths.csv");

    auto* conv = app.add_subcommand("converge", "self-convergence study at one time");
    add_common(conv, c);
    conv->add_option("--t", c.t_final, "probe time");
    conv->add_option("--direction", c.direction, "forward or backward");
    conv->add_option("--n-seq", c.n_sequence, "increasing grid sizes")->delimiter(',');

    auto* ver = app.add_subcommand("verify", "property checks with a JSON report");
    add_common(ver, c);
    ver->add_option("--suite", c.suite, "all, grunwald, rate, resolvent, restart, semigroup, theta, range");

    auto* cmp = app.add_subcommand("compare", "Monte Carlo against the forward equation");
    add_common(cmp, c);
    cmp->add_option("--t", c.t_final, "final time");
    cmp->add_option("--initial", c.initial, "delta@x");
    cmp->add_option("--paths", c.n_paths, "number of paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    output_dir_given = app.count("--output-dir") > 0;
    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
        output_dir_given = output_dir_given || sub->count("--output-dir") > 0;
    }
    if (!manifest.empty()) {
        std::ifstream is(manifest);
        std::stringstream ss;
        ss << is.rdbuf();
        const std::string dir = c.output_dir;
        try {
            c = fracbound::cli::config_from_json(ss.str());
        } catch (const std::exception& e) {
            std::cerr << "config error: cannot read manifest: " << e.what() << '\n';
            return 2;
        }
        if (output_dir_given) c.output_dir = dir;
    } else if (c.command.empty()) {
        std::cerr << app.help();
        return 2;
    }
    return fracbound::cli::run(c, std::cerr);
}
