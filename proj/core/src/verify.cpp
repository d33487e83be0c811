#include "fracbound/verify.hpp"

#include "fracbound/errors.hpp"
#include "fracbound/rng.hpp"
#include "fracbound/stochastic.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace fracbound {

std::string CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["measured"] = measured;
    j["threshold"] = threshold;
    j["pass"] = pass;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
    return arr.dump(2);
}

// ---------------------------------------------------------------------------
// Shifted Grünwald formula on power functions

OrderEstimate grunwald_convergence_check(double alpha, double beta, int shift, const std::vector<int>& n_sequence,
                                         NormKind norm) {
    if (norm == NormKind::sup && !(beta > alpha)) throw DomainError("sup mode needs beta > alpha");
    if (norm == NormKind::l1 && !(beta > alpha - 1.0)) throw DomainError("L1 mode needs beta > alpha - 1");
    OrderEstimate out;
    for (int n : n_sequence) {
        const double h = 2.0 / (n + 1);
        const GrunwaldTable g(alpha, static_cast<std::size_t>(n + 3 + std::abs(shift)));
        const double scale = std::pow(h, -alpha);
        const double gb = std::tgamma(beta + 1.0);
        auto approx = [&](double x) {
            double s = 0.0;
            for (long k = 0; k < static_cast<long>(g.size()); ++k) {
                const double y = x - (k - shift) * h;
                if (y <= -1.0) break;
                s += g(k) * std::pow(1.0 + y, beta) / gb;  // the power function continues past x = 1
            }
            return scale * s;
        };
        double err = 0.0;
        if (norm == NormKind::sup) {
            for (int i = 0; i <= n + 1; ++i) {
                const double x = std::min(-1.0 + i * h, 1.0);
                err = std::max(err, std::abs(approx(x) - power_eval(beta - alpha, Side::plus, x)));
            }
        } else {
            for (int i = 0; i <= n; ++i) {
                const double x = -1.0 + (i + 0.5) * h;
                err += h * std::abs(approx(x) - power_eval(beta - alpha, Side::plus, x));
            }
        }
        out.n.push_back(n);
        out.errors.push_back(err);
    }
    for (std::size_t k = 0; k + 1 < out.errors.size(); ++k) {
        const double hr = double(out.n[k + 1] + 1) / double(out.n[k] + 1);
        out.orders.push_back(std::log(out.errors[k] / out.errors[k + 1]) / std::log(hr));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Approximate power functions

double theta_beta(double alpha, ThetaKind kind) {
    switch (kind) {
    case ThetaKind::alpha: return alpha;
    case ThetaKind::alpha_minus_1: return alpha - 1.0;
    case ThetaKind::zero: return 0.0;
    case ThetaKind::alpha_minus_2: return alpha - 2.0;
    }
    return 0.0;
}

std::string to_string(ThetaKind kind) {
    switch (kind) {
    case ThetaKind::alpha: return "alpha";
    case ThetaKind::alpha_minus_1: return "alpha-1";
    case ThetaKind::zero: return "0";
    case ThetaKind::alpha_minus_2: return "alpha-2";
    }
    return "?";
}

namespace {

struct ThetaEval {
    double alpha;
    ThetaKind kind;
    Space space;
    double h;
    GrunwaldTable g;  // order −β−1

    ThetaEval(double a, ThetaKind k, Space s, const Grid& grid)
        : alpha(a), kind(k), space(s), h(grid.h()),
          g(-theta_beta(a, k) - 1.0, static_cast<std::size_t>(grid.n() + 2)) {
        if (k == ThetaKind::alpha_minus_2 && s == Space::C0)
            throw UnsupportedPair("the alpha-2 approximate power function is defined on L1 only");
    }

    double operator()(int j, double lam) const {
        const double beta = theta_beta(alpha, kind);
        const double lp = 1.0 - lam;
        const bool l1 = space == Space::L1;
        int tau = 0;
        double th = 1.0;
        switch (kind) {
        case ThetaKind::alpha:
            if (j == 1) return -std::pow(h, alpha) * lp * g(0);
            tau = 1;
            th = l1 ? 1.0 : lam;
            break;
        case ThetaKind::alpha_minus_1:
            if (j == 1)
                return l1 ? std::pow(h, alpha - 1.0) / alpha * (lp * g(0) + lam * g(1))
                          : std::pow(h, alpha - 1.0) * lam * g(0);
            th = lam;
            break;
        case ThetaKind::zero:
            if (j == 1) return l1 ? lam * g(0) : g(0);
            break;
        case ThetaKind::alpha_minus_2:
            th = lam / ((alpha - 1.0) * lp + lam);
            if (j == 1) return std::pow(h, alpha - 2.0) * th * g(0);
            break;
        }
        return std::pow(h, beta) * ((1.0 - th) * g(j - 2 - tau) + th * g(j - 1 - tau));
    }

    /// Value of the space-specific function (ϑ_{+h} or ϑ_{−h}) on grid j at λ.
    double oriented(int j, double lam, int n) const {
        return space == Space::L1 ? (*this)(j, lam) : (*this)(n + 2 - j, 1.0 - lam);
    }
};

}  // namespace

double theta_local(double alpha, ThetaKind kind, Space space, const Grid& grid, int j, double lambda) {
    return ThetaEval(alpha, kind, space, grid)(j, lambda);
}

GridFunction approx_power_function(double alpha, ThetaKind kind, Space space, const Grid& grid, int M) {
    const ThetaEval th(alpha, kind, space, grid);
    return sample_local(grid, [&](int j, double l) { return th.oriented(j, l, grid.n()); }, space, M);
}

GridFunction power_function(double beta, Space space, const Grid& grid, int M) {
    const Side side = space == Space::L1 ? Side::plus : Side::minus;
    return sample(grid, [&](double x) { return power_eval(beta, side, x); }, space, M);
}

bool theta_combination_supported(BoundaryPair bc, ThetaKind kind, Space space) {
    if (space == Space::L1) {
        switch (kind) {
        case ThetaKind::alpha_minus_1: return bc.left == LeftBC::D;
        case ThetaKind::zero: return bc.left == LeftBC::N;
        case ThetaKind::alpha_minus_2: return bc.left == LeftBC::Nstar;
        case ThetaKind::alpha: return bc.left != LeftBC::D && bc.right == RightBC::N;
        }
    } else {
        switch (kind) {
        case ThetaKind::alpha_minus_1: return bc.right == RightBC::D;
        case ThetaKind::zero: return bc.right == RightBC::N;
        case ThetaKind::alpha: return bc.right == RightBC::N;
        case ThetaKind::alpha_minus_2: return false;
        }
    }
    return false;
}

namespace {

/// Grid indices (1-based, inclusive) where ι(±x) < n.
std::pair<int, int> lemma_region(Space space, int n) {
    return space == Space::L1 ? std::pair{1, n - 1} : std::pair{3, n + 1};
}

}  // namespace

ThetaProbeReport theta_probe(double alpha, BoundaryPair bc, ThetaKind kind, Space space, int n, int M) {
    if (!theta_combination_supported(bc, kind, space))
        throw UnsupportedPair("theta probe: combination (" + bc.name() + ", " + to_string(kind) + ") not covered");
    const GeneratorContext ctx(FractionalOrder(alpha), bc, n);
    const GridFunction th = approx_power_function(alpha, kind, space, ctx.grid(), M);
    const GridFunction Gth = space == Space::L1 ? apply_forward(ctx, th) : apply_backward(ctx, th);

    ThetaProbeReport r;
    r.alpha = alpha;
    r.bc = bc;
    r.kind = kind;
    r.space = space;
    r.n = n;
    r.target = kind == ThetaKind::alpha ? 1.0 : 0.0;
    r.asymptotic = kind == ThetaKind::alpha && space == Space::L1 && bc.left == LeftBC::Nstar;
    const Eigen::MatrixXd res = (Gth.samples().array() - r.target).matrix();
    const Eigen::VectorXd w = lambda_weights(M);
    const auto [lo, hi] = lemma_region(space, n);
    for (int j = 1; j <= n + 1; ++j) {
        const double gr = res.row(j - 1).cwiseAbs().maxCoeff();
        r.grid_residual.push_back(gr);
        if (j >= lo && j <= hi) {
            r.interior_residual = std::max(r.interior_residual, gr);
            r.interior_l1 += ctx.grid().h() * res.row(j - 1).cwiseAbs().dot(w);
        }
    }
    return r;
}

double theta_distance(double alpha, ThetaKind kind, Space space, int n, int M) {
    (void)M;
    const Grid grid(n);
    const ThetaEval th(alpha, kind, space, grid);
    const double beta = theta_beta(alpha, kind);
    const Side side = space == Space::L1 ? Side::plus : Side::minus;
    // 8-point Gauss–Legendre per grid: the nodes avoid the grid ends, so the integrable
    // singularity of p_{α−2} is never evaluated.
    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                                 0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                                 0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    double d = 0.0;
    for (int j = 1; j <= grid.grids(); ++j) {
        if (space == Space::L1) {
            for (int q = 0; q < 8; ++q) {
                const double lam = 0.5 * (gx[q] + 1.0);
                const double x = grid.point(j, lam);
                d += 0.5 * gw[q] * grid.h() * std::abs(th.oriented(j, lam, n) - power_eval(beta, side, x));
            }
        } else {
            constexpr int S = 64;
            for (int q = 0; q <= S; ++q) {
                const double lam = double(q) / S;
                const double x = std::clamp(grid.point(j, lam), -1.0, 1.0);
                const double p = power_eval(beta, side, x);
                if (!std::isfinite(p)) continue;
                d = std::max(d, std::abs(th.oriented(j, lam, n) - p));
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Range identity

namespace {

double H(double alpha, double beta, double y) {
    // H_{α,β} evaluated at distance y = 1 ± x from the anchor.
    return mittag_h(alpha, beta, Side::plus, y - 1.0);
}

double sum_k(const std::vector<double>& k, const std::function<double(int)>& f) {
    double s = 0.0;
    for (std::size_t m = 0; m < k.size(); ++m)
        if (k[m] != 0.0) s += k[m] * f(static_cast<int>(m));
    return s;
}

}  // namespace

RangeSolution range_solution(double alpha, BoundaryPair bc, Space space, const std::vector<double>& k) {
    FractionalOrder a(alpha);
    if (k.empty()) throw DomainError("range identity needs at least one polynomial coefficient");
    RangeSolution s;
    s.alpha = alpha;
    s.space = space;
    s.k = k;
    s.eta = (space == Space::L1 && bc.left == LeftBC::Nstar) ? alpha - 2.0 : 0.0;
    const double eta = s.eta;
    // Far-end values: H^+(1) and H^−(−1) are both H at distance 2.
    auto Hf = [&](double beta) { return H(alpha, beta, 2.0); };
    auto num_alpha_m = [&] { return sum_k(k, [&](int m) { return Hf(alpha + m); }); };
    auto num_m1 = [&] { return sum_k(k, [&](int m) { return Hf(m + 1.0); }); };
    auto num_alpha_m1 = [&] { return sum_k(k, [&](int m) { return Hf(alpha + m - 1.0); }); };

    if (space == Space::L1) {
        if (bc.left == LeftBC::D && bc.right == RightBC::D) s.r = num_alpha_m() / Hf(alpha - 1.0);
        else if (bc.left == LeftBC::D) s.r = num_m1() / Hf(0.0);
        else if (bc.right == RightBC::D) s.s = num_alpha_m() / Hf(eta);
        else s.s = num_m1() / Hf(eta + 1.0);
    } else {
        const std::string t = bc.name();
        if (t == "DD") s.r = num_alpha_m() / Hf(alpha - 1.0);
        else if (t == "ND") s.r = num_m1() / Hf(0.0);
        else if (t == "N*D") s.r = num_alpha_m1() / Hf(alpha - 2.0);
        else if (t == "DN") s.s = num_alpha_m() / Hf(eta);
        else if (t == "NN") s.s = num_m1() / Hf(eta + 1.0);
        else s.s = num_alpha_m1() / Hf(alpha - 1.0);
    }
    return s;
}

double RangeSolution::operator()(double x) const {
    const double y = space == Space::L1 ? 1.0 + x : 1.0 - x;
    double v = -sum_k(k, [&](int m) { return H(alpha, alpha + m, y); });
    if (r != 0.0) v += r * H(alpha, alpha - 1.0, y);
    if (s != 0.0) v += s * H(alpha, eta, y);
    return v;
}

std::vector<double> default_range_polynomial(Space space) {
    return space == Space::L1 ? std::vector<double>{1.0} : std::vector<double>{0.0, 1.0, -1.0};
}

RangeIdentityReport range_identity_check(double alpha, BoundaryPair bc, Space space, const std::vector<double>& k,
                                         int n, int M) {
    const RangeSolution phi = range_solution(alpha, bc, space, k);
    const GeneratorContext ctx(FractionalOrder(alpha), bc, n);
    const Grid& grid = ctx.grid();
    const bool c0 = space == Space::C0;
    if (c0) {
        const double Pm = sum_k(k, [&](int m) { return power_eval(m, Side::minus, -1.0); });
        if (bc.left == LeftBC::D && std::abs(Pm) > 1e-12) throw DomainError("P must vanish at a Dirichlet end");
        if (bc.right == RightBC::D && std::abs(k[0]) > 1e-12) throw DomainError("P must vanish at a Dirichlet end");
    }

    // Coefficients of the singular power terms, replaced by approximate power functions.
    const double a = c0 ? -k[0] + phi.s : 0.0;  // p_α, singular on C0 only
    const double eta = phi.eta;
    const ThetaKind eta_kind = eta == 0.0 ? ThetaKind::zero : ThetaKind::alpha_minus_2;

    const ThetaEval th_a(alpha, ThetaKind::alpha, space, grid);
    const ThetaEval th_a1(alpha, ThetaKind::alpha_minus_1, space, grid);
    const ThetaEval th_eta(alpha, eta_kind, space, grid);

    auto regular = [&](double y) {
        // φ with p_α (C0), p_{α−1} and p_η removed through H_{α,β} = p_β + H_{α,β+α}.
        double v = 0.0;
        for (std::size_t m = 0; m < k.size(); ++m) {
            if (k[m] == 0.0) continue;
            const double beta = alpha + double(m);
            v -= k[m] * ((m == 0 && c0) ? H(alpha, beta + alpha, y) : H(alpha, beta, y));
        }
        if (phi.r != 0.0) v += phi.r * H(alpha, 2.0 * alpha - 1.0, y);
        if (phi.s != 0.0) v += phi.s * (c0 ? H(alpha, 2.0 * alpha, y) : H(alpha, eta + alpha, y));
        return v;
    };

    const int n_ = n;
    const GridFunction phi_h = sample_local(
        grid,
        [&](int j, double lam) {
            const double x = std::clamp(grid.point(j, lam), -1.0, 1.0);
            const double y = std::max(c0 ? 1.0 - x : 1.0 + x, 0.0);
            double v = regular(y);
            if (a != 0.0) v += a * th_a.oriented(j, lam, n_);
            if (phi.r != 0.0) v += phi.r * th_a1.oriented(j, lam, n_);
            if (phi.s != 0.0) v += phi.s * th_eta.oriented(j, lam, n_);
            return v;
        },
        space, M);
    const GridFunction P = sample(
        grid, [&](double x) { return sum_k(k, [&](int m) { return power_eval(m, c0 ? Side::minus : Side::plus, x); }); },
        space, M);
    const GridFunction Gphi = c0 ? apply_backward(ctx, phi_h) : apply_forward(ctx, phi_h);
    const Eigen::MatrixXd res = phi_h.samples() - Gphi.samples() - P.samples();

    RangeIdentityReport r;
    r.alpha = alpha;
    r.bc = bc;
    r.space = space;
    r.n = n;
    r.r = phi.r;
    r.s = phi.s;
    r.eta = eta;
    const auto [lo, hi] = lemma_region(space, n);
    const Eigen::VectorXd w = lambda_weights(M);
    double l1 = 0.0, sup = 0.0;
    for (int j = lo; j <= hi; ++j) {
        l1 += grid.h() * res.row(j - 1).cwiseAbs().dot(w);
        sup = std::max(sup, res.row(j - 1).cwiseAbs().maxCoeff());
    }
    r.residual = c0 ? sup : l1;
    r.residual_sup = sup;
    return r;
}

// ---------------------------------------------------------------------------
// Adjointness

GridFunction random_test_function(const Grid& grid, BoundaryPair bc, Space space, std::uint64_t seed, int index,
                                  int M) {
    Philox rng(seed, static_cast<std::uint64_t>(index));
    double c[4], ph[4];
    for (int k = 0; k < 4; ++k) {
        c[k] = 2.0 * rng.uniform() - 1.0;
        ph[k] = 2.0 * std::numbers::pi * rng.uniform();
    }
    const double quad = 2.0 * rng.uniform() - 1.0;
    const bool kill_left = space == Space::C0 && bc.left == LeftBC::D;
    const bool kill_right = space == Space::C0 && bc.right == RightBC::D;
    return sample(
        grid,
        [&](double x) {
            double v = quad * x * x;
            for (int k = 0; k < 4; ++k) v += c[k] * std::cos(0.5 * (k + 1) * std::numbers::pi * x + ph[k]);
            if (kill_left) v *= (1.0 + x);
            if (kill_right) v *= (1.0 - x);
            return v;
        },
        space, M);
}

AdjointnessReport adjointness_check(double alpha, BoundaryPair bc, int n, int trials, std::uint64_t seed, int M) {
    const GeneratorContext ctx(FractionalOrder(alpha), bc, n);
    AdjointnessReport rep;
    for (int t = 0; t < trials; ++t) {
        const GridFunction f = random_test_function(ctx.grid(), bc, Space::C0, seed, 2 * t, M);
        const GridFunction g = random_test_function(ctx.grid(), bc, Space::L1, seed, 2 * t + 1, M);
        const GridFunction Gf = apply_backward(ctx, f);
        const GridFunction Gg = apply_forward(ctx, g);
        const double lhs = Gf.inner(g), rhs = f.inner(Gg);
        const double scale = std::abs(Gf.sup_norm() * g.l1_norm()) + std::abs(f.sup_norm() * Gg.l1_norm());
        rep.max_defect = std::max(rep.max_defect, scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs));

        // Explicit transpose, entry by entry, against the forward assembly.
        Eigen::MatrixXd G;
        for (int m = 0; m < M; ++m) {
            ctx.interpolation_matrix(f.lambda(m), G);
            for (int j = 0; j < G.cols(); ++j) {
                double s = 0.0;
                for (int i = 0; i < G.rows(); ++i) s += G(i, j) * g.samples()(i, m);
                rep.transpose_defect = std::max(rep.transpose_defect, std::abs(s - Gg.samples()(j, m)));
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Self-convergence

double study_initial(InitialKind kind, double x) {
    if (kind == InitialKind::smooth) {
        const double c = std::cos(0.5 * std::numbers::pi * x);
        return c * c;
    }
    return std::abs(x) < 0.1 ? 5.0 : 0.0;
}

double self_convergence(ConvergenceStudy& st) {
    if (st.n_sequence.size() < 3) throw DomainError("self-convergence needs at least three levels");
    for (std::size_t k = 1; k < st.n_sequence.size(); ++k)
        if (st.n_sequence[k] <= st.n_sequence[k - 1]) throw DomainError("n_sequence must be strictly increasing");
    const bool forward = st.direction == Direction::forward;
    const Space space = forward ? Space::L1 : Space::C0;

    constexpr int Q = 2000;
    std::vector<Eigen::VectorXd> values;
    for (int n : st.n_sequence) {
        auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(st.alpha), st.bc, n);
        EvolutionProblem p{st.direction, ctx,
                           sample(ctx->grid(), [&](double x) { return study_initial(st.initial, x); }, space),
                           {st.t_probe}};
        const Solution sol = evolve(p);
        Eigen::VectorXd v(Q);
        for (int q = 0; q < Q; ++q) v(q) = sol.states.back()(-1.0 + (q + 0.5) * 2.0 / Q);
        values.push_back(std::move(v));
    }
    st.differences.clear();
    st.orders.clear();
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const Eigen::VectorXd d = values[k] - values[k + 1];
        st.differences.push_back(forward ? d.cwiseAbs().mean() * 2.0 : d.cwiseAbs().maxCoeff());
    }
    st.monotone = true;
    for (std::size_t k = 0; k + 1 < st.differences.size(); ++k) {
        if (st.differences[k + 1] > st.differences[k]) st.monotone = false;
        const double hr = double(st.n_sequence[k + 1] + 1) / double(st.n_sequence[k] + 1);
        st.orders.push_back(st.differences[k + 1] > 0.0 ? std::log(st.differences[k] / st.differences[k + 1]) / std::log(hr)
                                                        : 0.0);
    }
    st.estimated_order = st.orders.empty() ? 0.0 : st.orders.back();
    return st.estimated_order;
}

// ---------------------------------------------------------------------------
// Monte Carlo vs forward PDE

GridFunction delta_initial(const Grid& grid, double x0, int M) {
    const int j = std::min(grid.grid_number(x0), grid.n());
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(grid.grids(), M);
    v.row(j - 1).setConstant(1.0 / grid.h());
    return GridFunction(grid, std::move(v), Space::L1);
}

McPdeComparison mc_pde_compare(double alpha, BoundaryPair bc, int n, double x0, double t, std::size_t paths,
                               std::uint64_t seed) {
    auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(alpha), bc, n);
    const Grid& grid = ctx->grid();
    McPdeComparison c;
    c.alpha = alpha;
    c.bc = bc;
    c.n = n;
    c.t = t;
    c.paths = paths;
    c.initial_state = std::min(grid.grid_number(x0), n);

    EvolutionProblem p{Direction::forward, ctx, delta_initial(grid, x0), {t}, true};
    const Solution sol = evolve(p);
    const GridFunction& u = sol.states.back();

    const JumpChain chain(ctx->rate());
    const PathEnsemble ens = simulate(chain, c.initial_state, t, paths, seed);
    const Histogram hist = empirical_density(ens, t, n);

    const double N = double(paths);
    double pde_alive = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double P = grid.h() * u.sample(i, u.M() - 1);  // state i is grid i at λ = 1
        const double phat = hist.probability[i - 1];
        const double se = std::sqrt(std::max(P, 1.0 / N) * std::max(1.0 - P, 0.0) / N);
        pde_alive += P;
        c.x.push_back(hist.x[i - 1]);
        c.pde_probability.push_back(P);
        c.mc_probability.push_back(phat);
        c.stderr_prob.push_back(se);
        const double z = se > 0.0 ? (phat - P) / se : 0.0;
        c.z.push_back(z);
        c.max_abs_z = std::max(c.max_abs_z, std::abs(z));
    }
    c.pde_killed = std::max(0.0, 1.0 - pde_alive);
    c.mc_killed = hist.killed;
    c.killed_se = std::sqrt(std::max(c.pde_killed, 1.0 / N) * std::max(1.0 - c.pde_killed, 0.0) / N);
    c.killed_z = (c.mc_killed - c.pde_killed) / c.killed_se;
    return c;
}

void McPdeComparison::write_csv(std::ostream& os) const {
    char buf[160];
    const double h = 2.0 / (n + 1);
    os << "x,pde_density,mc_density,stderr,z\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", x[i], pde_probability[i] / h,
                      mc_probability[i] / h, stderr_prob[i] / h, z[i]);
        os << buf;
    }
}

}  // namespace fracbound
