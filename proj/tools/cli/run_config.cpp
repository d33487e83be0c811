#include "run_config.hpp"

#include "fracbound/generators.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace fracbound::cli {

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"build-matrix", "solve", "simulate", "converge", "verify", "compare"};
    return c;
}

namespace {

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

void check_initial(const RunConfig& c, std::vector<std::string>& err) {
    const std::string& s = c.initial;
    if (starts_with(s, "delta@")) {
        char* end = nullptr;
        const double x = std::strtod(s.c_str() + 6, &end);
        if (end == s.c_str() + 6 || *end != '\0') err.push_back("initial: cannot read the point in '" + s + "'");
        else if (!(x >= -1.0 && x <= 1.0)) err.push_back("initial: delta point must lie in [-1, 1]");
        if (c.command == "solve" && c.direction == "backward")
            err.push_back("initial: a delta datum is a density, use it with --direction forward");
    } else if (s == "uniform") {
    } else if (starts_with(s, "poly:")) {
        std::stringstream ss(s.substr(5));
        std::string tok;
        int count = 0;
        while (std::getline(ss, tok, ',')) {
            char* end = nullptr;
            std::strtod(tok.c_str(), &end);
            if (tok.empty() || *end != '\0') err.push_back("initial: bad polynomial coefficient '" + tok + "'");
            ++count;
        }
        if (count == 0) err.push_back("initial: empty polynomial");
    } else if (starts_with(s, "file:")) {
        if (!std::filesystem::is_regular_file(s.substr(5))) err.push_back("initial: no such file '" + s.substr(5) + "'");
    } else {
        err.push_back("initial: expected delta@x, uniform, poly:c0,c1,... or file:path, got '" + s + "'");
    }
    if ((c.command == "simulate" || c.command == "compare") && !starts_with(s, "delta@"))
        err.push_back("initial: " + c.command + " starts every path in one state, use delta@x");
}

}  // namespace

std::vector<std::string> validate(const RunConfig& c) {
    std::vector<std::string> err;
    if (std::find(commands().begin(), commands().end(), c.command) == commands().end())
        err.push_back("command: unknown '" + c.command + "'");
    if (!(c.alpha > 1.0 && c.alpha <= 2.0)) err.push_back("alpha: must lie in (1, 2]");
    try {
        BoundaryPair::parse(c.bc);
    } catch (const std::exception&) {
        err.push_back("bc: '" + c.bc + "' is not one of DD, DN, ND, NN, N*D, N*N");
    }
    if (c.n < 3) err.push_back("n: must be at least 3");
    if (!(c.t_final >= 0.0)) err.push_back("t: must be >= 0");
    for (double t : c.output_times)
        if (!(t >= 0.0 && t <= c.t_final)) {
            err.push_back("times: every output time must lie in [0, t]");
            break;
        }
    if (c.direction != "forward" && c.direction != "backward")
        err.push_back("direction: expected forward or backward");
    static const std::vector<std::string> suites{"all", "grunwald", "rate", "resolvent", "restart",
                                                 "semigroup", "theta", "range"};
    if (c.command == "verify" && std::find(suites.begin(), suites.end(), c.suite) == suites.end())
        err.push_back("suite: unknown '" + c.suite + "'");
    if ((c.command == "simulate" || c.command == "compare") && c.n_paths == 0) err.push_back("paths: must be positive");
    if (c.command == "converge") {
        if (c.n_sequence.size() < 3) err.push_back("n-seq: need at least three levels");
        for (std::size_t k = 1; k < c.n_sequence.size(); ++k)
            if (c.n_sequence[k] <= c.n_sequence[k - 1]) {
                err.push_back("n-seq: levels must increase");
                break;
            }
    }
    if (!(c.lambda >= 0.0 && c.lambda <= 1.0)) err.push_back("lambda: must lie in [0, 1]");
    if (c.bins < 0 || (c.bins > 0 && c.n % c.bins != 0)) err.push_back("bins: must divide n");
    if (c.command != "build-matrix" && c.command != "verify" && c.command != "converge") check_initial(c, err);

    std::error_code ec;
    const std::filesystem::path dir = resolved_output_dir(c);
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        err.push_back("output-dir: cannot create '" + dir.string() + "'");
    } else {
        const auto probe = dir / ".write-probe";
        if (FILE* f = std::fopen(probe.c_str(), "w")) {
            std::fclose(f);
            std::filesystem::remove(probe, ec);
        } else {
            err.push_back("output-dir: '" + dir.string() + "' is not writable");
        }
    }
    return err;
}

std::string resolved_output_dir(const RunConfig& c) {
    if (!c.output_dir.empty()) return c.output_dir;
    if (const char* env = std::getenv("FRACBOUND_OUTPUT_DIR"); env && *env) return env;
    return "fracbound-out";
}

std::vector<double> snapshot_times(const RunConfig& c) {
    std::vector<double> t = c.output_times;
    if (t.empty())
        for (int k = 0; k <= 10; ++k) t.push_back(c.t_final * k / 10.0);
    t.push_back(c.t_final);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

std::string to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    j["alpha"] = c.alpha;
    j["bc"] = c.bc;
    j["n"] = c.n;
    j["t_final"] = c.t_final;
    j["output_times"] = c.output_times;
    j["initial"] = c.initial;
    j["n_paths"] = c.n_paths;
    j["seed"] = c.seed;
    j["output_dir"] = c.output_dir;
    j["direction"] = c.direction;
    j["suite"] = c.suite;
    j["n_sequence"] = c.n_sequence;
    j["lambda"] = c.lambda;
    j["bins"] = c.bins;
    j["record_paths"] = c.record_paths;
    return j.dump();
}

RunConfig config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("config") && j["config"].is_object()) j = j["config"];
    RunConfig c;
    c.command = j.value("command", c.command);
    c.alpha = j.value("alpha", c.alpha);
    c.bc = j.value("bc", c.bc);
    c.n = j.value("n", c.n);
    c.t_final = j.value("t_final", c.t_final);
    c.output_times = j.value("output_times", c.output_times);
    c.initial = j.value("initial", c.initial);
    c.n_paths = j.value("n_paths", c.n_paths);
    c.seed = j.value("seed", c.seed);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.direction = j.value("direction", c.direction);
    c.suite = j.value("suite", c.suite);
    c.n_sequence = j.value("n_sequence", c.n_sequence);
    c.lambda = j.value("lambda", c.lambda);
    c.bins = j.value("bins", c.bins);
    c.record_paths = j.value("record_paths", c.record_paths);
    return c;
}

}  // namespace fracbound::cli
