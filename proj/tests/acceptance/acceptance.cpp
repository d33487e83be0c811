// Acceptance criteria 1–10. One PASS/FAIL line per criterion; exit status 0 iff all pass.

#include "fracbound/fraccalc.hpp"
#include "fracbound/generators.hpp"
#include "fracbound/semigroup.hpp"
#include "fracbound/stochastic.hpp"
#include "fracbound/verify.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace fracbound;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double G(double q, long k) { return static_cast<double>(oracle::grunwald(q, k)); }

// 1 ------------------------------------------------------------------------
Outcome grunwald_identities() {
    Outcome o;
    constexpr long K = 10000;
    double worst = 0.0;
    for (double a : {1.1, 1.5, 1.9, 2.0}) {
        const GrunwaldTable g(a, K), g1(a - 1.0, K);
        double e = std::max(relative_error(g(0), 1.0), relative_error(g(1), -a));
        for (long k = 0; k < K; ++k) e = std::max(e, relative_error(g(k + 1), g(k) * (k - a) / (k + 1.0)));
        for (long k = 0; k <= K; ++k) {
            e = std::max(e, relative_error(g(k), G(a, k)));
            e = std::max(e, relative_error(g.partial_sum(k), G(a - 1.0, k)));
            e = std::max(e, relative_error(g.partial_sum(k), g1(k)));
        }
        for (double Q : {a - 1.0, 0.5}) {
            for (long k : {1L, 2L, 5L, 17L, 100L, 999L, 4096L, K}) {
                const auto [lhs, rhs] = grunwald_convolve_check(a, Q, std::size_t(k));
                e = std::max(e, relative_error(lhs, G(a + Q, k)));
                e = std::max(e, relative_error(lhs, rhs));
            }
        }
        o.require(e <= 1e-10, fmt("alpha=%g rel error %.2e", a, e));
        worst = std::max(worst, e);
    }
    if (o.pass) o.detail = fmt("max relative error %.2e over k <= 10^4", worst);
    return o;
}

// 2 ------------------------------------------------------------------------
Outcome rate_structure() {
    Outcome o;
    double worst = 0.0;
    long matrices = 0;
    Eigen::VectorXd rows, mins;
    for (const BoundaryPair& bc : all_pairs()) {
        for (int n = 4; n <= 512; ++n) {
            const GeneratorContext ctx(FractionalOrder(1.5), bc, n);
            const double tol = 1e-12 * ctx.rate().scale();
            for (int l = 0; l <= 100; ++l) {
                rows.setZero(n + 1);
                mins.setZero(n + 1);
                double* r = rows.data();
                double* mn = mins.data();
                // Row sums and the smallest off-diagonal entry of each row, one column at a time.
                ctx.for_each_column(l / 100.0, [&](int c, const Eigen::VectorXd& col) {
                    const double* v = col.data();
                    const double diag_min = mn[c];
                    for (int i = 0; i <= n; ++i) {
                        r[i] += v[i];
                        mn[i] = v[i] < mn[i] ? v[i] : mn[i];
                    }
                    mn[c] = diag_min;
                });
                const double neg = -mins.minCoeff();
                const double row = bc.conservative() ? rows.cwiseAbs().maxCoeff() : std::max(rows.maxCoeff(), 0.0);
                worst = std::max(worst, std::max(neg, row) / ctx.rate().scale());
                if (neg > tol || row > tol) o.require(false, fmt("%s n=%d lambda=%g", bc.name().c_str(), n, l / 100.0));
                ++matrices;
            }
        }
    }
    if (o.pass) o.detail = fmt("%ld matrices, worst violation %.2e (units of h^-alpha)", matrices, worst);
    return o;
}

// 3 ------------------------------------------------------------------------
Outcome stopped_resolvent() {
    Outcome o;
    double worst = 0.0;
    for (double a : {1.3, 1.5, 1.8}) {
        for (double mu : {0.05, 0.1, 1.0}) {
            const StoppedResolventReport r = stopped_resolvent_check(a, mu, 2000);
            const auto [lo, hi] = boost::math::tools::toms748_solve(
                [&](double x) { return std::exp(x) * std::pow(-std::expm1(-x), a) - mu; }, 1e-300, 50.0,
                boost::math::tools::eps_tolerance<double>(52), *std::make_unique<std::uintmax_t>(200));
            const double s = 0.5 * (lo + hi);
            o.require(std::abs(r.psi_inverse_value - s) <= 1e-12 * s, fmt("psi inverse a=%g mu=%g", a, mu));
            o.require(r.max_error <= 1e-8, fmt("a=%g mu=%g error %.2e", a, mu, r.max_error));
            worst = std::max(worst, r.max_error);
        }
    }
    if (o.pass) o.detail = fmt("max sup error %.2e on 2000 sites", worst);
    return o;
}

// 4 ------------------------------------------------------------------------
Outcome restart_law() {
    Outcome o;
    constexpr std::size_t N = 100000;
    const double crit = oracle::chi2_critical(20, 0.01);
    std::string stats;
    for (double a : {1.3, 1.7}) {
        const ReentrySample s = first_reentry_sample(a, N, 2024);
        double stat = 0.0, rest = 1.0;
        for (int i = 1; i <= 20; ++i) {
            const double p = -G(a - 1.0, i), e = N * p;
            stat += (double(s.counts[i - 1]) - e) * (double(s.counts[i - 1]) - e) / e;
            rest -= p;
        }
        stat += (double(s.overflow) - N * rest) * (double(s.overflow) - N * rest) / (N * rest);
        o.require(stat <= crit, fmt("alpha=%g chi2 %.2f > %.2f", a, stat, crit));
        stats += fmt("%salpha=%g chi2=%.2f", stats.empty() ? "" : ", ", a, stat);
    }
    if (o.pass) o.detail = stats + fmt(" (critical %.2f, 20 states + pooled)", crit);
    return o;
}

// 5 ------------------------------------------------------------------------
Outcome semigroup_properties() {
    Outcome o;
    const int n = 64;
    double comp = 0, dual = 0, drift = 0;
    for (const BoundaryPair& bc : all_pairs()) {
        auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(1.5), bc, n);
        const Grid& grid = ctx->grid();
        const std::string tag = bc.name();
        const GridFunction f = sample(
            grid,
            [&](double x) {
                double v = 1.0 + 0.5 * std::sin(3.0 * x);
                if (bc.left == LeftBC::D) v *= 1.0 + x;
                if (bc.right == RightBC::D) v *= 1.0 - x;
                return v;
            },
            Space::C0);
        const GridFunction g = sample(grid, [](double x) { return std::sin(2.0 * x) + 0.3; }, Space::L1);

        const Solution b = evolve({Direction::backward, ctx, f, {0.2, 0.5}});
        const Solution b2 = evolve({Direction::backward, ctx, b.states[0], {0.3}});
        const Solution fw = evolve({Direction::forward, ctx, g, {0.5}});
        const Solution fd = evolve({Direction::forward, ctx, delta_initial(grid, 0.3), {0.0, 0.5, 1, 2, 3, 4, 5}, true});

        o.require(b.states[1].min() >= -1e-12 * f.sup_norm(), tag + " backward positivity");
        for (const GridFunction& u : fd.states)
            o.require(u.min() >= -1e-12 * u.sup_norm(), tag + " forward positivity");
        o.require(b.sup_norm[1] <= f.sup_norm() * (1 + 1e-12), tag + " sup contraction");
        o.require(fw.l1_norm[0] <= g.l1_norm() * (1 + 1e-12), tag + " L1 contraction");

        const double c = (b.states[1] - b2.states[0]).sup_norm() / f.sup_norm();
        comp = std::max(comp, c);
        o.require(c <= 1e-8, tag + fmt(" composition %.2e", c));

        const double d = std::abs(b.states[1].inner(g) - f.inner(fw.states[0])) / (f.sup_norm() * g.l1_norm());
        dual = std::max(dual, d);
        o.require(d <= 1e-8, tag + fmt(" duality %.2e", d));

        if (bc.conservative()) {
            for (double m : fd.mass) drift = std::max(drift, std::abs(m - 1.0));
            o.require(drift <= 1e-10, tag + fmt(" mass drift %.2e", drift));
        }
    }
    if (o.pass) o.detail = fmt("composition %.2e, duality %.2e, mass drift %.2e", comp, dual, drift);
    return o;
}

// 6 ------------------------------------------------------------------------
Outcome mc_pde() {
    Outcome o;
    std::string d;
    for (const BoundaryPair& bc : all_pairs()) {
        const McPdeComparison c = mc_pde_compare(1.5, bc, 64, 0.0, 0.5, 100000, 7);
        o.require(c.max_abs_z <= 4.0, bc.name() + fmt(" max|z| %.2f", c.max_abs_z));
        o.require(std::abs(c.killed_z) <= 3.0, bc.name() + fmt(" killed z %.2f", c.killed_z));
        d += fmt("%s%s |z|<=%.2f kz=%.2f", d.empty() ? "" : ", ", bc.name().c_str(), c.max_abs_z, c.killed_z);
    }
    if (o.pass) o.detail = d;
    return o;
}

// 7 ------------------------------------------------------------------------
double bvp_closed_form(BoundaryPair bc, Space space, double x) {
    // φ − φ'' = P on (−1,1) with φ = 0 at D ends and φ' = 0 at N ends.
    const bool c0 = space == Space::C0;
    auto part = [&](double t) { return c0 ? (1 - t) - 0.5 * (1 - t) * (1 - t) - 1.0 : 1.0; };
    auto dpart = [&](double t) { return c0 ? -1.0 + (1 - t) : 0.0; };
    double A[2][2], r[2];
    auto row = [&](int k, bool dirichlet, double t) {
        if (dirichlet) {
            A[k][0] = std::cosh(t), A[k][1] = std::sinh(t), r[k] = -part(t);
        } else {
            A[k][0] = std::sinh(t), A[k][1] = std::cosh(t), r[k] = -dpart(t);
        }
    };
    row(0, bc.left == LeftBC::D, -1.0);
    row(1, bc.right == RightBC::D, 1.0);
    const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    const double ca = (r[0] * A[1][1] - A[0][1] * r[1]) / det, cb = (A[0][0] * r[1] - r[0] * A[1][0]) / det;
    return part(x) + ca * std::cosh(x) + cb * std::sinh(x);
}

Outcome classical_oracle() {
    Outcome o;
    const int n = 128;
    auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(2.0), BoundaryPair::parse("DD"), n);
    const GridFunction u0 = sample(ctx->grid(), [](double x) { return 1.0 - x * x; }, Space::L1);
    const Solution s = evolve({Direction::forward, ctx, u0, {0.5}});
    std::vector<double> b(400);
    for (int k = 1; k <= 400; ++k)
        b[k - 1] = boost::math::quadrature::gauss<double, 30>::integrate(
            [&](double x) { return (1 - x * x) * std::sin(k * M_PI * (x + 1) / 2); }, -1.0, 0.0) +
                   boost::math::quadrature::gauss<double, 30>::integrate(
                       [&](double x) { return (1 - x * x) * std::sin(k * M_PI * (x + 1) / 2); }, 0.0, 1.0);
    const GridFunction& u = s.states[0];
    double err = 0.0;
    for (int j = 1; j <= n + 1; ++j)
        for (int m = 0; m < u.M(); ++m) {
            const double x = ctx->grid().point(j, u.lambda(m));
            double ref = 0.0;
            for (int k = 1; k <= 400; ++k)
                ref += b[k - 1] * std::exp(-std::pow(k * M_PI / 2, 2) * 0.5) * std::sin(k * M_PI * (x + 1) / 2);
            err = std::max(err, std::abs(u.sample(j, m) - ref));
        }
    const double h = ctx->grid().h();
    o.require(err <= 5 * h, fmt("heat oracle sup error %.2e > 5h = %.2e", err, 5 * h));

    double range_err = 0.0, disc = 0.0;
    for (Space sp : {Space::L1, Space::C0})
        for (const BoundaryPair& bc : all_pairs()) {
            const RangeSolution phi = range_solution(2.0, bc, sp, default_range_polynomial(sp));
            for (int i = 0; i <= 200; ++i) {
                const double x = -1.0 + i * 0.01;
                range_err = std::max(range_err, std::abs(phi(x) - bvp_closed_form(bc, sp, x)));
            }
            disc = std::max(disc, range_identity_check(2.0, bc, sp, default_range_polynomial(sp), 64).residual);
        }
    o.require(range_err <= 1e-6, fmt("range solution vs BVP %.2e", range_err));
    o.detail += fmt("%sheat sup error %.2e (5h = %.2e), range vs BVP %.2e, discrete residual at n=64 %.2e",
                    o.detail.empty() ? "" : "; ", err, 5 * h, range_err, disc);
    return o;
}

// 8 ------------------------------------------------------------------------
Outcome theta_suite() {
    Outcome o;
    const ThetaKind kinds[] = {ThetaKind::alpha, ThetaKind::alpha_minus_1, ThetaKind::zero, ThetaKind::alpha_minus_2};
    const int ns[] = {32, 64, 128, 256};
    double worst = 0.0;
    int probes = 0;
    for (double a : {1.2, 1.5, 1.8}) {
        for (Space sp : {Space::L1, Space::C0}) {
            const char* sname = sp == Space::L1 ? "L1" : "C0";
            for (const BoundaryPair& bc : all_pairs())
                for (ThetaKind k : kinds) {
                    if (!theta_combination_supported(bc, k, sp)) continue;
                    double prev_l1 = INFINITY;
                    for (int n : ns) {
                        const ThetaProbeReport r = theta_probe(a, bc, k, sp, n);
                        ++probes;
                        if (r.asymptotic) {
                            // only the L1 limit is claimed here
                            o.require(r.interior_l1 < prev_l1, fmt("a=%g %s %s beta=%s n=%d L1 residual not shrinking", a,
                                                                   sname, bc.name().c_str(), to_string(k).c_str(), n));
                            prev_l1 = r.interior_l1;
                        } else {
                            worst = std::max(worst, r.interior_residual);
                            o.require(r.interior_residual <= 1e-10,
                                      fmt("a=%g %s %s beta=%s n=%d residual %.2e", a, sname, bc.name().c_str(),
                                          to_string(k).c_str(), n, r.interior_residual));
                        }
                    }
                }
            for (ThetaKind k : kinds) {
                if (sp == Space::C0 && k == ThetaKind::alpha_minus_2) continue;
                double prev = INFINITY;
                for (int n : ns) {
                    const double d = theta_distance(a, k, sp, n);
                    o.require(d <= prev, fmt("a=%g %s beta=%s distance grows at n=%d", a, sname, to_string(k).c_str(), n));
                    prev = d;
                }
            }
        }
    }
    if (o.pass) o.detail = fmt("%d probes, worst interior residual %.2e", probes, worst);
    return o;
}

// 9 ------------------------------------------------------------------------
Outcome self_convergence_suite() {
    Outcome o;
    double lowest = INFINITY;
    for (const BoundaryPair& bc : all_pairs())
        for (Direction d : {Direction::forward, Direction::backward}) {
            ConvergenceStudy st;
            st.bc = bc;
            st.alpha = 1.5;
            st.direction = d;
            const double order = self_convergence(st);
            lowest = std::min(lowest, order);
            o.require(order > 0.3, fmt("%s %s order %.3f", bc.name().c_str(),
                                       d == Direction::forward ? "forward" : "backward", order));
        }
    if (o.pass) o.detail = fmt("lowest observed order %.3f", lowest);
    return o;
}

// 10 -----------------------------------------------------------------------
std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

bool same_csvs(const fs::path& a, const fs::path& b, int& compared) {
    bool ok = true;
    for (const auto& e : fs::directory_iterator(a)) {
        if (e.path().extension() != ".csv") continue;
        ++compared;
        ok = ok && fs::exists(b / e.path().filename()) && slurp(e.path()) == slurp(b / e.path().filename());
    }
    return ok;
}

Outcome determinism() {
    Outcome o;
    const fs::path root = fs::temp_directory_path() / "fracbound_acceptance";
    fs::remove_all(root);
    fs::create_directories(root);
    const std::string cli = FRACBOUND_CLI_PATH;
    const std::vector<std::string> runs{
        "solve --alpha 1.5 --bc DD --n 64 --t 0.5 --initial delta@0",
        "simulate --alpha 1.7 --bc N*D --n 32 --t 1 --paths 20000 --seed 11 --initial delta@0.2",
        "compare --alpha 1.5 --bc NN --n 32 --t 0.5 --paths 20000 --seed 5 --initial delta@0",
        "converge --alpha 1.5 --bc DN --t 0.5 --n-seq 16,32,64",
        "build-matrix --alpha 1.3 --bc N*N --n 40 --lambda 0.3",
    };
    int compared = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const fs::path a = root / fmt("run%zu_a", r), b = root / fmt("run%zu_b", r), c = root / fmt("run%zu_c", r);
        const std::string base = "'" + cli + "' " + runs[r];
        const int ra = std::system((base + " -o '" + a.string() + "' 2>/dev/null").c_str());
        const int rb = std::system((base + " -o '" + b.string() + "' 2>/dev/null").c_str());
        const int rc = std::system(("'" + cli + "' --manifest '" + (a / "manifest.json").string() + "' -o '" +
                                    c.string() + "' 2>/dev/null").c_str());
        o.require(ra == 0 && rb == 0 && rc == 0, "exit status of: " + runs[r]);
        o.require(same_csvs(a, b, compared), "repeat differs: " + runs[r]);
        o.require(same_csvs(a, c, compared), "manifest rerun differs: " + runs[r]);
    }
    if (o.pass) o.detail = fmt("%d CSV files byte-identical across repeats and manifest reruns", compared);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;  ///< 0: no runtime limit
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "Grunwald identities", 1.0, grunwald_identities},
        {2, "rate-matrix structure", 30.0, rate_structure},
        {3, "stopped-process resolvent", 10.0, stopped_resolvent},
        {4, "restart distribution", 60.0, restart_law},
        {5, "semigroup properties", 60.0, semigroup_properties},
        {6, "MC-PDE agreement", 300.0, mc_pde},
        {7, "alpha = 2 classical oracle", 30.0, classical_oracle},
        {8, "approximate power functions", 30.0, theta_suite},
        {9, "self-convergence", 300.0, self_convergence_suite},
        {10, "determinism", 0.0, determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) o.require(false, fmt("runtime %.1f s over %.0f s", secs, c.limit_s));
        std::printf("%s %2d %-28s %6.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
