#include "commands.hpp"

#include "suites.hpp"

#include "fracbound/errors.hpp"
#include "fracbound/generators.hpp"
#include "fracbound/semigroup.hpp"
#include "fracbound/stochastic.hpp"
#include "fracbound/verify.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

namespace fracbound::cli {

namespace fs = std::filesystem;

namespace {

constexpr int artifact_version = 1;

class Outputs {
public:
    explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

    void write(const std::string& name, const std::string& content) {
        std::ofstream os(dir_ / name, std::ios::binary);
        if (!os) throw Error("cannot write " + (dir_ / name).string());
        os << content;
        files_.push_back({name, content.size()});
    }
    const fs::path& dir() const { return dir_; }
    const std::vector<std::pair<std::string, std::size_t>>& files() const { return files_; }

private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::size_t>> files_;
};

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class F>
std::string to_text(F&& writer) {
    std::ostringstream os;
    writer(os);
    return os.str();
}

double delta_point(const std::string& initial) { return std::stod(initial.substr(6)); }

std::vector<std::pair<double, double>> read_xy(const std::string& path) {
    std::ifstream is(path);
    std::vector<std::pair<double, double>> xy;
    std::string line;
    while (std::getline(is, line)) {
        double x, y;
        if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) == 2) xy.emplace_back(x, y);
    }
    if (xy.empty()) throw DomainError("initial file '" + path + "' has no x,value rows");
    std::sort(xy.begin(), xy.end());
    return xy;
}

GridFunction initial_datum(const RunConfig& c, const Grid& grid, Direction dir) {
    const Space space = dir == Direction::forward ? Space::L1 : Space::C0;
    const std::string& s = c.initial;
    if (s.rfind("delta@", 0) == 0) return delta_initial(grid, delta_point(s));
    if (s == "uniform") {
        const double v = dir == Direction::forward ? 0.5 : 1.0;
        return sample(grid, [v](double) { return v; }, space);
    }
    if (s.rfind("poly:", 0) == 0) {
        std::vector<double> k;
        std::stringstream ss(s.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) k.push_back(std::stod(tok));
        return sample(
            grid,
            [&](double x) {
                double v = 0.0;
                for (auto it = k.rbegin(); it != k.rend(); ++it) v = v * x + *it;
                return v;
            },
            space);
    }
    const auto xy = read_xy(s.substr(5));
    return sample(
        grid,
        [&](double x) {
            if (x <= xy.front().first) return xy.front().second;
            if (x >= xy.back().first) return xy.back().second;
            const auto it = std::lower_bound(xy.begin(), xy.end(), std::pair<double, double>{x, -INFINITY});
            const auto& [x1, y1] = *it;
            const auto& [x0, y0] = *(it - 1);
            return x1 == x0 ? y1 : y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        },
        space);
}

std::string gnuplot_header(const std::string& png) {
    return "set datafile separator ','\nset terminal pngcairo size 900,600\nset output '" + png +
           "'\nset key outside right\nset grid\n";
}

int cmd_build_matrix(const RunConfig& c, Outputs& out, std::ostream& log) {
    const GeneratorContext ctx(FractionalOrder(c.alpha), BoundaryPair::parse(c.bc), c.n);
    out.write("rate_matrix.json", ctx.rate().to_json() + "\n");
    out.write("rate_matrix.csv", to_text([&](std::ostream& os) { ctx.rate().write_csv(os); }));
    const Eigen::MatrixXd G = ctx.interpolation_matrix(c.lambda);
    out.write("interpolation_matrix.csv", to_text([&](std::ostream& os) {
                  os << "row,col,value\n";
                  for (int i = 0; i < G.rows(); ++i)
                      for (int j = 0; j < G.cols(); ++j)
                          if (G(i, j) != 0.0) os << i + 1 << ',' << j + 1 << ',' << g17(G(i, j)) << '\n';
              }));
    out.write("rate_matrix.gp", gnuplot_header("rate_matrix.png") +
                                    "set title 'rate matrix entries'\nset xlabel 'column'\nset ylabel 'row'\n"
                                    "set yrange [*:*] reverse\nplot 'rate_matrix.csv' every ::1 using 2:1:3 "
                                    "with image title ''\n");
    const Eigen::VectorXd rs = ctx.rate().row_sums();
    log << "rate matrix " << c.bc << " n=" << c.n << " alpha=" << c.alpha << ": max row sum " << rs.maxCoeff()
        << ", min row sum " << rs.minCoeff() << '\n';
    return 0;
}

int cmd_solve(const RunConfig& c, Outputs& out, std::ostream& log) {
    const Direction dir = c.direction == "forward" ? Direction::forward : Direction::backward;
    auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(c.alpha), BoundaryPair::parse(c.bc), c.n);
    const bool density = dir == Direction::forward && (c.initial == "uniform" || c.initial.rfind("delta@", 0) == 0);
    const EvolutionProblem p{dir, ctx, initial_datum(c, ctx->grid(), dir), snapshot_times(c), density};
    const Solution sol = evolve(p);
    out.write("density.csv", to_text([&](std::ostream& os) { sol.write_csv(os); }));
    out.write("mass.csv", to_text([&](std::ostream& os) {
                  os << "t,mass,l1_norm,sup_norm,defect\n";
                  for (std::size_t k = 0; k < sol.times.size(); ++k)
                      os << g17(sol.times[k]) << ',' << g17(sol.mass[k]) << ',' << g17(sol.l1_norm[k]) << ','
                         << g17(sol.sup_norm[k]) << ',' << g17(sol.defect[k]) << '\n';
              }));
    out.write("summary.json", sol.summary_json() + "\n");
    std::string gp = gnuplot_header("density.png") + "set xlabel 'x'\nset ylabel 'u(t,x)'\nplot \\\n";
    for (std::size_t k = 0; k < sol.times.size(); ++k) {
        const std::string t = g17(sol.times[k]);
        gp += "  'density.csv' every ::1 using 2:($1==" + t + " ? $3 : 1/0) with lines title 't=" + t + "'";
        gp += k + 1 < sol.times.size() ? ", \\\n" : "\n";
    }
    gp += "set output 'mass.png'\nset xlabel 't'\nset ylabel 'mass'\nplot 'mass.csv' every ::1 using 1:2 with "
          "linespoints title 'mass'\n";
    out.write("solve.gp", gp);
    log << "solved " << c.direction << ' ' << c.bc << " to t=" << c.t_final << ": mass " << sol.mass.back()
        << ", max defect " << *std::max_element(sol.defect.begin(), sol.defect.end()) << '\n';
    return 0;
}

int cmd_simulate(const RunConfig& c, Outputs& out, std::ostream& log) {
    const RateMatrix rm(FractionalOrder(c.alpha), BoundaryPair::parse(c.bc), c.n);
    const JumpChain chain(rm);
    const Grid grid(c.n);
    const int start = std::min(grid.grid_number(delta_point(c.initial)), c.n);
    SimulationOptions opt;
    opt.observation_times = snapshot_times(c);
    opt.record_limit = c.record_paths;
    const PathEnsemble e = simulate(chain, start, c.t_final, c.n_paths, c.seed, opt);
    const Histogram hist = empirical_density(e, c.t_final, c.bins == 0 ? c.n : c.bins);
    out.write("histogram.csv", to_text([&](std::ostream& os) { hist.write_csv(os); }));
    out.write("survival.csv", to_text([&](std::ostream& os) {
                  os << "t,alive_fraction\n";
                  for (double t : e.observation_times) os << g17(t) << ',' << g17(1.0 - e.killed_fraction(t)) << '\n';
              }));
    if (c.record_paths > 0) out.write("paths.csv", to_text([&](std::ostream& os) { e.write_paths_csv(os); }));
    out.write("simulate.gp", gnuplot_header("histogram.png") +
                                 "set xlabel 'x'\nset ylabel 'density'\nplot 'histogram.csv' every ::1 using "
                                 "1:2:3 with yerrorbars title 'empirical'\n"
                                 "set output 'survival.png'\nset xlabel 't'\nset ylabel 'alive'\nplot "
                                 "'survival.csv' every ::1 using 1:2 with linespoints title 'alive fraction'\n");
    log << "simulated " << c.n_paths << " paths of " << c.bc << " from state " << start << ": killed fraction "
        << hist.killed << '\n';
    return 0;
}

int cmd_converge(const RunConfig& c, Outputs& out, std::ostream& log) {
    ConvergenceStudy st;
    st.bc = BoundaryPair::parse(c.bc);
    st.alpha = c.alpha;
    st.direction = c.direction == "forward" ? Direction::forward : Direction::backward;
    st.n_sequence = c.n_sequence;
    st.t_probe = c.t_final;
    self_convergence(st);
    out.write("convergence.csv", to_text([&](std::ostream& os) {
                  os << "n_coarse,n_fine,h_coarse,difference,order\n";
                  for (std::size_t k = 0; k < st.differences.size(); ++k) {
                      os << st.n_sequence[k] << ',' << st.n_sequence[k + 1] << ','
                         << g17(2.0 / (st.n_sequence[k] + 1)) << ',' << g17(st.differences[k]) << ',';
                      if (k > 0) os << g17(st.orders[k - 1]);
                      os << '\n';
                  }
              }));
    out.write("convergence.gp", gnuplot_header("convergence.png") +
                                    "set logscale xy\nset xlabel 'h'\nset ylabel 'successive difference'\nplot "
                                    "'convergence.csv' every ::1 using 3:4 with linespoints title 'difference'\n");
    log << "self-convergence " << c.bc << ' ' << c.direction << ": estimated order " << st.estimated_order
        << (st.monotone ? "" : " (differences not monotone)") << '\n';
    return st.estimated_order > 0.0 ? 0 : 1;
}

int cmd_verify(const RunConfig& c, Outputs& out, std::ostream& log) {
    const std::vector<CheckReport> reports = run_suite(c.suite, c.alpha, c.seed);
    out.write("report.json", reports_json(reports) + "\n");
    bool ok = true;
    for (const CheckReport& r : reports) {
        log << (r.pass ? "PASS " : "FAIL ") << r.check;
        for (const auto& [k, v] : r.params) log << ' ' << k << '=' << v;
        log << "  measured=" << r.measured << " threshold=" << r.threshold << '\n';
        ok = ok && r.pass;
    }
    log << reports.size() << " checks, " << (ok ? "all passed" : "some failed") << '\n';
    return ok ? 0 : 1;
}

int cmd_compare(const RunConfig& c, Outputs& out, std::ostream& log) {
    const McPdeComparison cmp =
        mc_pde_compare(c.alpha, BoundaryPair::parse(c.bc), c.n, delta_point(c.initial), c.t_final, c.n_paths, c.seed);
    out.write("compare.csv", to_text([&](std::ostream& os) { cmp.write_csv(os); }));
    nlohmann::ordered_json j;
    j["max_abs_z"] = cmp.max_abs_z;
    j["pde_killed"] = cmp.pde_killed;
    j["mc_killed"] = cmp.mc_killed;
    j["killed_z"] = cmp.killed_z;
    j["paths"] = cmp.paths;
    j["initial_state"] = cmp.initial_state;
    out.write("compare_summary.json", j.dump(2) + "\n");
    out.write("compare.gp", gnuplot_header("compare.png") +
                                "set xlabel 'x'\nset ylabel 'density'\nplot 'compare.csv' every ::1 using 1:2 with "
                                "lines title 'PDE', 'compare.csv' every ::1 using 1:3:4 with yerrorbars title 'MC'\n");
    const bool ok = cmp.max_abs_z <= 4.0 && std::abs(cmp.killed_z) <= 3.0;
    log << "compare " << c.bc << ": max |z| = " << cmp.max_abs_z << ", killed " << cmp.mc_killed << " vs "
        << cmp.pde_killed << " (z = " << cmp.killed_z << ")" << (ok ? "" : "  DISAGREEMENT") << '\n';
    return ok ? 0 : 1;
}

void write_manifest(const RunConfig& c, Outputs& out) {
    nlohmann::ordered_json m;
    m["config"] = nlohmann::ordered_json::parse(to_json(c));
    m["seed"] = c.seed;
    m["artifact_version"] = artifact_version;
    m["versions"] = {{"fracbound", FRACBOUND_VERSION},
                     {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                   std::to_string(EIGEN_MINOR_VERSION)}};
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& [name, bytes] : out.files()) files.push_back({{"name", name}, {"bytes", bytes}});
    m["files"] = files;
    std::ofstream os(out.dir() / "manifest.json", std::ios::binary);
    os << m.dump(2) << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
    const std::vector<std::string> errors = validate(config);
    if (!errors.empty()) {
        for (const auto& e : errors) log << "config error: " << e << '\n';
        return static_cast<int>(ExitCode::config_error);
    }
    Outputs out{fs::path(resolved_output_dir(config))};
    static const std::map<std::string, int (*)(const RunConfig&, Outputs&, std::ostream&)> table{
        {"build-matrix", cmd_build_matrix}, {"solve", cmd_solve},   {"simulate", cmd_simulate},
        {"converge", cmd_converge},         {"verify", cmd_verify}, {"compare", cmd_compare}};
    int code = 0;
    try {
        code = table.at(config.command)(config, out, log);
    } catch (const DomainError& e) {
        log << "config error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::config_error);
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        code = static_cast<int>(ExitCode::check_failed);
    }
    write_manifest(config, out);
    return code;
}

}  // namespace fracbound::cli
