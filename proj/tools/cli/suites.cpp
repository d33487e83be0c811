#include "suites.hpp"

#include "fracbound/generators.hpp"
#include "fracbound/semigroup.hpp"
#include "fracbound/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>

namespace fracbound::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

CheckReport report(std::string check, std::vector<std::pair<std::string, std::string>> params, double measured,
                   double threshold, bool pass, std::string note = {}) {
    return CheckReport{std::move(check), std::move(params), measured, threshold, pass, std::move(note)};
}

void grunwald_suite(double alpha, std::vector<CheckReport>& out) {
    constexpr std::size_t K = 10000;
    const GrunwaldTable g(alpha, K), g1(alpha - 1.0, K);
    double rec = 0.0, part = 0.0, conv = 0.0;
    for (std::size_t k = 0; k < K; ++k)
        rec = std::max(rec, relative_error(g(long(k) + 1), g(long(k)) * (double(k) - alpha) / double(k + 1)));
    for (std::size_t k = 0; k <= K; ++k) part = std::max(part, relative_error(g.partial_sum(long(k)), g1(long(k))));
    for (std::size_t k : {std::size_t(1), std::size_t(10), std::size_t(100), std::size_t(1000), K}) {
        const auto [lhs, rhs] = grunwald_convolve_check(alpha, alpha - 1.0, k);
        conv = std::max(conv, relative_error(lhs, rhs));
    }
    const std::vector<std::pair<std::string, std::string>> p{{"alpha", fmt(alpha)}, {"k_max", "10000"}};
    out.push_back(report("grunwald.first", p, std::max(std::abs(g(0) - 1.0), std::abs(g(1) + alpha)), 1e-15,
                         std::abs(g(0) - 1.0) <= 1e-15 && std::abs(g(1) + alpha) <= 1e-15));
    out.push_back(report("grunwald.recursion", p, rec, 1e-10, rec <= 1e-10));
    out.push_back(report("grunwald.partial_sum", p, part, 1e-10, part <= 1e-10));
    out.push_back(report("grunwald.convolution", p, conv, 1e-10, conv <= 1e-10));
}

void rate_suite(double alpha, std::vector<CheckReport>& out) {
    Eigen::MatrixXd G;
    for (const BoundaryPair& bc : all_pairs()) {
        double worst_off = 0.0, worst_row = 0.0;
        bool ok = true;
        for (int n : {4, 8, 16, 32, 64, 128}) {
            const GeneratorContext ctx(FractionalOrder(alpha), bc, n);
            const double tol = 1e-12 * ctx.rate().scale();
            for (int l = 0; l <= 100; ++l) {
                ctx.interpolation_matrix(l / 100.0, G);
                const Eigen::VectorXd rows = G.rowwise().sum();
                G.diagonal().setZero();
                const double off = -std::min(G.minCoeff(), 0.0);
                const double row = bc.conservative() ? rows.cwiseAbs().maxCoeff() : std::max(rows.maxCoeff(), 0.0);
                worst_off = std::max(worst_off, off / ctx.rate().scale());
                worst_row = std::max(worst_row, row / ctx.rate().scale());
                ok = ok && off <= tol && row <= tol;
            }
        }
        out.push_back(report("rate.structure", {{"alpha", fmt(alpha)}, {"bc", bc.name()}},
                             std::max(worst_off, worst_row), 1e-12, ok, "scaled by h^alpha"));
    }
}

void resolvent_suite(double alpha, std::vector<CheckReport>& out) {
    for (double mu : {0.05, 0.1, 1.0}) {
        const StoppedResolventReport r = stopped_resolvent_check(alpha, mu, 2000);
        out.push_back(report("resolvent.stopped", {{"alpha", fmt(alpha)}, {"mu", fmt(mu)}, {"sites", "2000"}},
                             r.max_error, 1e-8, r.max_error <= 1e-8));
    }
}

void restart_suite(double alpha, std::uint64_t seed, std::vector<CheckReport>& out) {
    const std::vector<std::pair<std::string, std::string>> p{{"alpha", fmt(alpha)}, {"samples", "100000"}};
    if (alpha >= 2.0) {
        out.push_back(report("restart.chi_square", p, 0.0, 0.0, true, "alpha = 2 re-enters at state 1 only"));
        return;
    }
    const ReentrySample s = first_reentry_sample(alpha, 100000, seed);
    const ChiSquareResult c = chi_square_test(s.counts, s.overflow, restart_distribution(alpha, 20), 0.01);
    out.push_back(report("restart.chi_square", p, c.statistic, c.critical, c.pass));
}

void semigroup_suite(double alpha, std::vector<CheckReport>& out) {
    for (const BoundaryPair& bc : all_pairs()) {
        const std::vector<std::pair<std::string, std::string>> p{{"alpha", fmt(alpha)}, {"bc", bc.name()}, {"n", "32"}};
        const AdjointnessReport a = adjointness_check(alpha, bc, 32);
        out.push_back(report("semigroup.adjointness", p, a.max_defect, 1e-12, a.max_defect <= 1e-12));

        auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(alpha), bc, 32);
        const GridFunction f = random_test_function(ctx->grid(), bc, Space::C0, 11, 0);
        const Solution b = evolve({Direction::backward, ctx, f, {0.5}});
        const double growth = b.sup_norm.back() - f.sup_norm();
        out.push_back(report("semigroup.contraction", p, growth, 1e-12 * f.sup_norm(), growth <= 1e-12 * f.sup_norm()));

        const Solution fw = evolve({Direction::forward, ctx, delta_initial(ctx->grid(), 0.0), {0.0, 1.0}, true});
        const double neg = -std::min(fw.states.back().min(), 0.0);
        out.push_back(report("semigroup.positivity", p, neg, 1e-12, neg <= 1e-12));
        if (bc.conservative()) {
            const double drift = std::abs(fw.mass.back() - fw.mass.front());
            out.push_back(report("semigroup.mass", p, drift, 1e-10, drift <= 1e-10));
        }
    }
}

void theta_suite(double alpha, std::vector<CheckReport>& out) {
    const ThetaKind kinds[] = {ThetaKind::alpha, ThetaKind::alpha_minus_1, ThetaKind::zero, ThetaKind::alpha_minus_2};
    for (Space sp : {Space::L1, Space::C0}) {
        const std::string sname = sp == Space::L1 ? "L1" : "C0";
        for (const BoundaryPair& bc : all_pairs())
            for (ThetaKind k : kinds) {
                if (!theta_combination_supported(bc, k, sp)) continue;
                const std::vector<std::pair<std::string, std::string>> p{
                    {"alpha", fmt(alpha)}, {"bc", bc.name()}, {"beta", to_string(k)}, {"space", sname}, {"n", "128"}};
                const ThetaProbeReport r = theta_probe(alpha, bc, k, sp, 128);
                if (r.asymptotic) {
                    const double coarse = theta_probe(alpha, bc, k, sp, 64).interior_l1;
                    out.push_back(report("theta.residual_l1_decreasing", p, r.interior_l1, coarse, r.interior_l1 < coarse));
                } else {
                    out.push_back(report("theta.residual", p, r.interior_residual, 1e-10, r.interior_residual <= 1e-10));
                }
            }
        for (ThetaKind k : kinds) {
            if (sp == Space::C0 && k == ThetaKind::alpha_minus_2) continue;
            const double d32 = theta_distance(alpha, k, sp, 32), d64 = theta_distance(alpha, k, sp, 64),
                         d128 = theta_distance(alpha, k, sp, 128);
            const bool ok = d64 <= d32 && d128 <= d64;
            out.push_back(report("theta.distance_nonincreasing",
                                 {{"alpha", fmt(alpha)}, {"beta", to_string(k)}, {"space", sname}}, d128, d32, ok));
        }
    }
}

void range_suite(double alpha, std::vector<CheckReport>& out) {
    for (Space sp : {Space::L1, Space::C0})
        for (const BoundaryPair& bc : all_pairs()) {
            const auto k = default_range_polynomial(sp);
            double prev = INFINITY, last = 0.0;
            int down = 0;
            for (int n : {16, 32, 64}) {
                last = range_identity_check(alpha, bc, sp, k, n).residual;
                if (last < prev) ++down;
                prev = last;
            }
            out.push_back(report("range.residual_decreasing",
                                 {{"alpha", fmt(alpha)}, {"bc", bc.name()}, {"space", sp == Space::L1 ? "L1" : "C0"}},
                                 last, 0.0, down == 3, "residual at n = 64, decreasing over 16, 32, 64"));
        }
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& suite, double alpha, std::uint64_t seed) {
    std::vector<CheckReport> out;
    const bool all = suite == "all";
    if (all || suite == "grunwald") grunwald_suite(alpha, out);
    if (all || suite == "rate") rate_suite(alpha, out);
    if (all || suite == "resolvent") resolvent_suite(alpha, out);
    if (all || suite == "restart") restart_suite(alpha, seed, out);
    if (all || suite == "semigroup") semigroup_suite(alpha, out);
    if (all || suite == "theta") theta_suite(alpha, out);
    if (all || suite == "range") range_suite(alpha, out);
    return out;
}

}  // namespace fracbound::cli
