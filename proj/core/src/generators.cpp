#include "fracbound/generators.hpp"

#include "fracbound/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace fracbound {

BoundaryPair BoundaryPair::parse(const std::string& tag) {
    std::string t;
    for (char c : tag) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto starts = [&](const std::string& p) { return t.rfind(p, 0) == 0; };
    BoundaryPair bc;
    std::string rest;
    if (starts("N*")) {
        bc.left = LeftBC::Nstar;
        rest = t.substr(2);
    } else if (starts("NSTAR")) {
        bc.left = LeftBC::Nstar;
        rest = t.substr(5);
    } else if (starts("N")) {
        bc.left = LeftBC::N;
        rest = t.substr(1);
    } else if (starts("D")) {
        bc.left = LeftBC::D;
        rest = t.substr(1);
    } else {
        throw UnsupportedPair("unknown boundary pair '" + tag + "'");
    }
    if (rest == "D") {
        bc.right = RightBC::D;
    } else if (rest == "N") {
        bc.right = RightBC::N;
    } else {
        throw UnsupportedPair("unknown boundary pair '" + tag + "' (expected DD, DN, ND, NN, N*D or N*N)");
    }
    return bc;
}

std::string BoundaryPair::name() const {
    std::string s = left == LeftBC::D ? "D" : left == LeftBC::N ? "N" : "N*";
    s += right == RightBC::D ? "D" : "N";
    return s;
}

const std::array<BoundaryPair, 6>& all_pairs() {
    static const std::array<BoundaryPair, 6> pairs{{
        {LeftBC::D, RightBC::D},
        {LeftBC::D, RightBC::N},
        {LeftBC::N, RightBC::D},
        {LeftBC::N, RightBC::N},
        {LeftBC::Nstar, RightBC::D},
        {LeftBC::Nstar, RightBC::N},
    }};
    return pairs;
}

BoundaryWeights boundary_weights(double alpha, BoundaryPair bc, int n) {
    if (n < 3) throw DomainError("boundary weights need n >= 3");
    const auto un = static_cast<std::size_t>(n);
    const GrunwaldTable ga(alpha, un), ga1(alpha - 1.0, un), ga2(alpha - 2.0, un);

    BoundaryWeights w;
    w.left.resize(un + 1);
    for (int i = 0; i <= n; ++i) {
        switch (bc.left) {
        case LeftBC::D: w.left[i] = ga(i); break;
        case LeftBC::N: w.left[i] = i == 0 ? 0.0 : -ga1(i - 1); break;
        case LeftBC::Nstar: w.left[i] = i == 0 ? 0.0 : i == 1 ? ga1(1) : ga(i); break;
        }
    }
    w.right.resize(un - 1);
    for (int i = 1; i <= n - 1; ++i) w.right[i - 1] = bc.right == RightBC::D ? ga(i) : -ga1(i - 1);

    if (bc.right == RightBC::D) {
        w.corner = w.left[un];
    } else if (bc.left == LeftBC::N) {
        w.corner = ga2(n - 2);
    } else {
        long double s = 0;
        for (int i = 0; i < n; ++i) s += w.left[i];
        w.corner = -static_cast<double>(s);
    }
    return w;
}

RateMatrix::RateMatrix(FractionalOrder alpha, BoundaryPair bc, int n)
    : alpha_(alpha.value()), bc_(bc), n_(n), h_(2.0 / (n + 1)), scale_(std::pow(h_, -alpha.value())) {
    if (n < 3) throw DomainError("rate matrix needs n >= 3");
    const GrunwaldTable ga(alpha_, static_cast<std::size_t>(n));
    band_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) band_[k] = scale_ * ga(k);
    w_ = boundary_weights(alpha_, bc, n);
    for (double& x : w_.left) x *= scale_;
    for (double& x : w_.right) x *= scale_;
    w_.corner *= scale_;

    const Eigen::MatrixXd g = dense();
    const double tol = 1e-12 * scale_;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i != j && g(i, j) < -1e-14 * scale_)
                throw InvariantViolation("negative off-diagonal rate in " + bc.name());
            s += g(i, j);
        }
        if (s > tol || (bc.conservative() && std::abs(s) > tol))
            throw InvariantViolation("row sum violates rate-matrix sign in " + bc.name());
    }
}

double RateMatrix::operator()(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("rate matrix index out of range");
    if (i == 1) return j < n_ ? w_.left[j] : w_.corner;
    if (j == n_) return w_.right[n_ - i];
    const int k = j - i + 1;
    return k < 0 ? 0.0 : band_[k];
}

Eigen::MatrixXd RateMatrix::dense() const {
    Eigen::MatrixXd g(n_, n_);
    for (int j = 1; j <= n_; ++j)
        for (int i = 1; i <= n_; ++i) g(i - 1, j - 1) = (*this)(i, j);
    return g;
}

Eigen::VectorXd RateMatrix::row_sums() const { return dense().rowwise().sum(); }

std::string RateMatrix::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha_;
    j["bc"] = bc_.name();
    j["n"] = n_;
    j["interior_band"] = band_;
    j["left_row"] = std::vector<double>(w_.left.begin() + 1, w_.left.end());
    j["right_col"] = w_.right;
    j["corner"] = w_.corner;
    return j.dump(2);
}

void RateMatrix::write_csv(std::ostream& os) const {
    char buf[32];
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
            os << buf << (j == n_ ? '\n' : ',');
        }
    }
}

RateMatrix rate_matrix(FractionalOrder alpha, BoundaryPair bc, int n) { return RateMatrix(alpha, bc, n); }

InterpolatingFunctions interpolating_functions(double alpha, BoundaryPair bc) {
    InterpolatingFunctions f;
    auto one = [](double) { return 1.0; };
    if (bc.left == LeftBC::D) {
        f.Dl = [alpha](double l) { return l * alpha / (1.0 - l + l * alpha); };
        f.Nl = one;
    } else {
        f.Dl = one;
        f.Nl = [](double l) { return l; };
    }
    if (bc.right == RightBC::D) {
        f.Dr = [alpha](double l) { return (1.0 - l) * alpha / (l + (1.0 - l) * alpha); };
        f.Nr = one;
    } else {
        f.Dr = one;
        f.Nr = [](double l) { return 1.0 - l; };
    }
    return f;
}

GeneratorContext::GeneratorContext(FractionalOrder alpha, BoundaryPair bc, int n)
    : grid_(n), rm_(alpha, bc, n), g_(rm_.dense()), fn_(interpolating_functions(alpha, bc)) {}

void GeneratorContext::for_each_column(double lambda, const ColumnVisitor& visit) const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("interpolation matrix: lambda outside [0,1]");
    const int n = rm_.n();
    const double dl = fn_.Dl(lambda), nl = fn_.Nl(lambda), dr = fn_.Dr(lambda), nr = fn_.Nr(lambda);
    const double lp = 1.0 - lambda;
    Eigen::VectorXd col(n + 1);

    // column 1
    col(0) = g_(0, 0);
    col.segment(1, n - 1) = nl * g_.col(0).segment(1, n - 1);
    col(n) = 0.0;
    visit(0, col);
    // columns 2..n
    double* out = col.data();
    for (int c = 1; c < n; ++c) {
        const double* left = g_.col(c - 1).data();
        const double* here = g_.col(c).data();
        out[0] = dl * g_(0, c);
        for (int i = 1; i < n; ++i) out[i] = lp * left[i - 1] + lambda * here[i];
        out[n] = dr * g_(n - 1, c - 1);
        visit(c, col);
    }
    // column n+1
    col(0) = 0.0;
    col.segment(1, n - 1) = nr * g_.col(n - 1).head(n - 1);
    col(n) = g_(n - 1, n - 1);
    visit(n, col);
}

void GeneratorContext::interpolation_matrix(double lambda, Eigen::MatrixXd& out) const {
    out.resize(rm_.n() + 1, rm_.n() + 1);
    for_each_column(lambda, [&out](int c, const Eigen::VectorXd& col) { out.col(c) = col; });
}

Eigen::MatrixXd GeneratorContext::interpolation_matrix(double lambda) const {
    Eigen::MatrixXd out;
    interpolation_matrix(lambda, out);
    return out;
}

Eigen::MatrixXd interpolation_matrix(FractionalOrder alpha, BoundaryPair bc, int n, double lambda) {
    return GeneratorContext(alpha, bc, n).interpolation_matrix(lambda);
}

namespace {

GridFunction apply(const GeneratorContext& ctx, const GridFunction& f, bool transpose) {
    if (!(f.grid() == ctx.grid())) throw ShapeMismatch("generator applied to a function on another grid");
    Eigen::MatrixXd out(f.samples().rows(), f.samples().cols());
    Eigen::MatrixXd G;
    for (int m = 0; m < f.M(); ++m) {
        ctx.interpolation_matrix(f.lambda(m), G);
        if (transpose)
            out.col(m).noalias() = G.transpose() * f.samples().col(m);
        else
            out.col(m).noalias() = G * f.samples().col(m);
    }
    return GridFunction(f.grid(), std::move(out), transpose ? Space::L1 : Space::C0);
}

}  // namespace

GridFunction apply_backward(const GeneratorContext& ctx, const GridFunction& f) { return apply(ctx, f, false); }

GridFunction apply_forward(const GeneratorContext& ctx, const GridFunction& f) { return apply(ctx, f, true); }

}  // namespace fracbound
