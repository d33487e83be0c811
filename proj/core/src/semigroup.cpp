#include "fracbound/semigroup.hpp"

#include "fracbound/errors.hpp"

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fracbound {

namespace {

double inf_norm(const Eigen::MatrixXd& A) { return A.cwiseAbs().rowwise().sum().maxCoeff(); }

}  // namespace

Solution evolve(const EvolutionProblem& p) {
    if (!p.context) throw DomainError("evolve: missing generator context");
    const GeneratorContext& ctx = *p.context;
    if (!(p.initial.grid() == ctx.grid())) throw ShapeMismatch("evolve: initial datum on another grid");
    for (std::size_t k = 0; k < p.output_times.size(); ++k) {
        if (!(p.output_times[k] >= 0.0)) throw DomainError("evolve: output times must be >= 0");
        if (k > 0 && p.output_times[k] < p.output_times[k - 1]) throw DomainError("evolve: output times must be sorted");
    }
    const bool forward = p.direction == Direction::forward;
    if (p.density_mode) {
        if (!forward) throw DomainError("density mode applies to forward problems only");
        if (p.initial.min() < 0.0) throw DomainError("density initial datum is negative somewhere");
        if (std::abs(p.initial.integral() - 1.0) > 1e-10) throw DomainError("density initial datum does not integrate to 1");
    }

    const Space space = forward ? Space::L1 : Space::C0;
    const int M = p.initial.M();
    const int N = ctx.grid().grids();
    const Eigen::MatrixXd& f = p.initial.samples();

    std::vector<Eigen::MatrixXd> out(p.output_times.size(), Eigen::MatrixXd(N, M));
    std::vector<double> defect(p.output_times.size(), 0.0);
    Eigen::MatrixXd A;
    for (int m = 0; m < M; ++m) {
        ctx.interpolation_matrix(p.initial.lambda(m), A);
        if (forward) A.transposeInPlace();
        const Eigen::VectorXd v = f.col(m);
        const Eigen::VectorXd Av = A * v;
        const double scale = inf_norm(A) * v.cwiseAbs().maxCoeff();
        for (std::size_t k = 0; k < p.output_times.size(); ++k) {
            const double t = p.output_times[k];
            if (t == 0.0) {
                out[k].col(m) = v;
                continue;
            }
            const Eigen::MatrixXd E = (t * A).exp();
            const Eigen::VectorXd Ev = E * v;
            out[k].col(m) = Ev;
            if (scale > 0.0) {
                const double d = (E * Av - A * Ev).cwiseAbs().maxCoeff() / scale;
                if (!std::isfinite(d) || d > evolve_defect_tolerance) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "matrix exponential defect %.3e at t=%g, lambda=%g (n=%d, %s)", d, t,
                                  p.initial.lambda(m), ctx.n(), ctx.bc().name().c_str());
                    throw StepFailure(buf);
                }
                defect[k] = std::max(defect[k], d);
            }
        }
    }

    Solution s;
    s.times = p.output_times;
    s.defect = defect;
    for (auto& v : out) {
        GridFunction u(ctx.grid(), std::move(v), space);
        s.sup_norm.push_back(u.sup_norm());
        s.l1_norm.push_back(u.l1_norm());
        s.mass.push_back(u.integral());
        s.states.push_back(std::move(u));
    }
    return s;
}

std::string Solution::summary_json() const {
    nlohmann::json j;
    j["times"] = times;
    j["sup_norm"] = sup_norm;
    j["l1_norm"] = l1_norm;
    j["mass"] = mass;
    j["defect"] = defect;
    return j.dump(2);
}

void Solution::write_csv(std::ostream& os) const {
    char buf[96];
    os << "t,x,u\n";
    for (std::size_t k = 0; k < states.size(); ++k) {
        const GridFunction& u = states[k];
        for (int j = 1; j <= u.grid().grids(); ++j) {
            for (int m = 0; m < u.M(); ++m) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", times[k], u.grid().point(j, u.lambda(m)),
                              u.sample(j, m));
                os << buf;
            }
        }
    }
}

GridFunction resolvent(const GeneratorContext& ctx, double mu, const GridFunction& f, Direction direction) {
    if (!(mu > 0.0)) throw SingularSystem("resolvent needs mu > 0");
    if (!(f.grid() == ctx.grid())) throw ShapeMismatch("resolvent: datum on another grid");
    const int N = ctx.grid().grids();
    Eigen::MatrixXd out(N, f.M());
    Eigen::MatrixXd A;
    for (int m = 0; m < f.M(); ++m) {
        ctx.interpolation_matrix(f.lambda(m), A);
        if (direction == Direction::forward) A.transposeInPlace();
        const Eigen::MatrixXd B = mu * Eigen::MatrixXd::Identity(N, N) - A;
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
        const Eigen::VectorXd b = f.samples().col(m);
        Eigen::VectorXd x = lu.solve(b);
        x += lu.solve(b - B * x);
        const double res = (B * x - b).cwiseAbs().maxCoeff();
        const double bn = b.cwiseAbs().maxCoeff();
        if (!x.allFinite() || res > 1e-10 * std::max(bn, 1e-300) + 1e-300)
            throw SingularSystem("resolvent residual too large");
        out.col(m) = x;
    }
    return GridFunction(ctx.grid(), std::move(out), direction == Direction::forward ? Space::L1 : Space::C0);
}

double psi(double alpha, double x) { return std::exp(x) * std::pow(-std::expm1(-x), alpha); }

double psi_inverse(double alpha, double value) {
    if (!(value > 0.0)) throw ConvergenceError("psi_inverse needs a positive value");
    double lo = 0.0, hi = 50.0;
    if (psi(alpha, hi) < value) throw ConvergenceError("psi_inverse: value beyond the bracket (0, 50)");
    double x = std::min(std::pow(value, 1.0 / alpha), 0.5 * hi);
    for (int it = 0; it < 200; ++it) {
        const double f = psi(alpha, x) - value;
        if (f == 0.0) return x;
        if (f < 0.0) lo = x; else hi = x;
        const double em = -std::expm1(-x);
        const double d = std::pow(em, alpha - 1.0) * (std::expm1(x) + alpha);
        double next = x - f / d;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 4e-16 * std::max(1.0, x)) return next;
        x = next;
    }
    throw ConvergenceError("psi_inverse: no convergence");
}

StoppedResolventReport stopped_resolvent_check(double alpha, double mu, int n_trunc) {
    if (!(mu > 0.0)) throw DomainError("stopped resolvent needs mu > 0");
    if (n_trunc < 4) throw DomainError("stopped resolvent needs n_trunc >= 4");
    const int L = n_trunc;
    const GrunwaldTable g(alpha, static_cast<std::size_t>(4 * L + 2));

    // Unknowns y_m, m = −L+1..0, reversed: index r = −m, so r = 0 is site 0.
    // Row for site n reads (μ − 𝒢_1) y_n − Σ_{m ≤ min(n+1,0), m ≠ n} 𝒢_{n−m+1} y_m = δ_{n0};
    // in reversed indices that matrix is upper Hessenberg.
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(L, L);
    for (int r = 0; r < L; ++r) {
        const int n = -r;
        for (int c = std::max(r - 1, 0); c < L; ++c) {
            const int m = -c;
            if (m > n + 1) continue;
            B(r, c) = (r == c ? mu : 0.0) - g(n - m + 1);
        }
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(L);
    rhs(0) = 1.0;

    // Hessenberg elimination with row pivoting.
    Eigen::MatrixXd U = B;
    Eigen::VectorXd b = rhs;
    for (int k = 0; k + 1 < L; ++k) {
        if (std::abs(U(k + 1, k)) > std::abs(U(k, k))) {
            U.row(k).swap(U.row(k + 1));
            std::swap(b(k), b(k + 1));
        }
        if (U(k, k) == 0.0) throw SingularSystem("stopped resolvent system is singular");
        const double l = U(k + 1, k) / U(k, k);
        if (l != 0.0) {
            U.row(k + 1).tail(L - k) -= l * U.row(k).tail(L - k);
            b(k + 1) -= l * b(k);
        }
    }
    const Eigen::VectorXd y = U.triangularView<Eigen::Upper>().solve(b);

    StoppedResolventReport rep;
    rep.alpha = alpha;
    rep.mu = mu;
    rep.n_trunc = L;
    rep.residual = (B * y - rhs).cwiseAbs().maxCoeff();
    const double s = psi_inverse(alpha, mu);
    rep.psi_inverse_value = s;

    for (int r = 0; r < L; ++r) {
        const int n = -r;
        const double e = std::abs(y(r) - std::exp((n - 1) * s));
        rep.max_error_left = std::max(rep.max_error_left, e);
    }
    for (int n = 1; n <= L; ++n) {
        double num = 0.0;
        for (int r = 0; r < L; ++r) num += g(n + r + 1) * y(r);
        num /= mu;
        double exact = 0.0;
        for (int k = n; k < n + 2 * L; ++k) {
            const double t = g(k + 1) * std::exp(-(k - n + 1) * s);
            exact += t;
            if (std::abs(t) < 1e-22 * std::abs(exact)) break;
        }
        exact /= mu;
        rep.max_error_right = std::max(rep.max_error_right, std::abs(num - exact));
    }
    rep.max_error = std::max(rep.max_error_left, rep.max_error_right);
    return rep;
}

std::vector<double> restart_distribution(double alpha, int N) {
    if (N < 1) throw DomainError("restart distribution needs N >= 1");
    const GrunwaldTable g(alpha - 1.0, static_cast<std::size_t>(N));
    std::vector<double> z(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) z[i - 1] = -g(i);
    return z;
}

bool is_stationary(const GeneratorContext& ctx, const GridFunction& u, Direction direction, double tol) {
    const GridFunction Gu = direction == Direction::forward ? apply_forward(ctx, u) : apply_backward(ctx, u);
    return Gu.sup_norm() <= tol * u.sup_norm();
}

}  // namespace fracbound
