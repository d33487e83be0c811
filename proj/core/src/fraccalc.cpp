#include "fracbound/fraccalc.hpp"

#include "fracbound/errors.hpp"
#include "fracbound/grid.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace fracbound {

namespace {

#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using wide = __float128;
#else
using wide = long double;
#endif

std::vector<wide> wide_coeffs(double q, std::size_t k_max) {
    std::vector<wide> c(k_max + 1);
    c[0] = 1;
    for (std::size_t k = 0; k < k_max; ++k)
        c[k + 1] = c[k] * (wide(static_cast<double>(k)) - wide(q)) / wide(static_cast<double>(k + 1));
    return c;
}

}  // namespace

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw DomainError("fractional order must satisfy 1 < alpha <= 2, got " + std::to_string(alpha));
    }
}

GrunwaldTable::GrunwaldTable(double q, std::size_t k_max) : q_(q) {
    coeffs_.resize(k_max + 1);
    partial_.resize(k_max + 1);
    wide c = 1;
    wide s = 0;
    const wide wq = q;
    for (std::size_t k = 0; k <= k_max; ++k) {
        s += c;
        coeffs_[k] = static_cast<double>(c);
        partial_[k] = static_cast<double>(s);
        c = c * (wide(static_cast<double>(k)) - wq) / wide(static_cast<double>(k + 1));
    }
}

GrunwaldTable grunwald_table(double q, std::size_t k_max) { return GrunwaldTable(q, k_max); }

std::pair<double, double> grunwald_convolve_check(double q, double Q, std::size_t k) {
    // The sum cancels by many orders of magnitude for large k, so the factors stay in wide
    // precision rather than being rounded to double first.
    const std::vector<wide> a = wide_coeffs(q, k), b = wide_coeffs(Q, k);
    const GrunwaldTable c(q + Q, k);
    wide s = 0;
    for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
    return {static_cast<double>(s), c.coeffs()[k]};
}

double relative_error(double a, double b) {
    if (b == 0.0) return std::abs(a);
    return std::abs(a - b) / std::abs(b);
}

double power_eval(double beta, Side side, double x) {
    if (!(beta > -1.0)) throw DomainError("power function needs beta > -1");
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("power function argument outside [-1,1]");
    const double y = side == Side::plus ? 1.0 + x : 1.0 - x;
    if (beta == 0.0) return 1.0;
    if (y == 0.0) return beta > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    if (beta < 150.0) return std::pow(y, beta) / std::tgamma(beta + 1.0);
    return std::exp(beta * std::log(y) - std::lgamma(beta + 1.0));
}

GridFunction frac_integral(double nu, const GridFunction& f, Side side) {
    if (!(nu > 0.0)) throw DomainError("fractional integral needs nu > 0");
    const Grid& g = f.grid();
    const int J = g.grids();
    const int M = f.M();
    const double h = g.h();
    const double d = h / (M - 1);
    const double gnu = std::tgamma(nu);

    // Mirror so that the integral always runs from the left end.
    Eigen::MatrixXd v = f.samples();
    if (side == Side::minus) v = v.reverse().eval();

    Eigen::MatrixXd out(J, M);
    for (int j = 0; j < J; ++j) {
        for (int m = 0; m < M; ++m) {
            const double x = (j + double(m) / (M - 1)) * h;  // distance from the left end
            double acc = 0.0;
            for (int jj = 0; jj <= j; ++jj) {
                const int last = (jj == j) ? m : M - 1;
                for (int k = 0; k < last; ++k) {
                    const double a = jj * h + k * d;
                    const double b = a + d;
                    const double u2 = x - a;
                    const double u1 = std::max(x - b, 0.0);
                    const double k0 = (std::pow(u2, nu) - std::pow(u1, nu)) / nu;
                    const double k1 = u2 * k0 - (std::pow(u2, nu + 1.0) - std::pow(u1, nu + 1.0)) / (nu + 1.0);
                    const double fa = v(jj, k), fb = v(jj, k + 1);
                    acc += fa * k0 + (fb - fa) * k1 / d;
                }
            }
            out(j, m) = acc / gnu;
        }
    }
    if (side == Side::minus) out = out.reverse().eval();
    return GridFunction(g, std::move(out), f.space());
}

MittagLefflerH::MittagLefflerH(double alpha, double beta, Side side, double tol)
    : alpha_(alpha), beta_(beta), side_(side), tol_(tol) {
    if (!(beta > -1.0)) throw DomainError("H series needs beta > -1");
    if (!(alpha > 0.0)) throw DomainError("H series needs alpha > 0");
    if (!(tol > 0.0)) throw DomainError("H series needs tol > 0");
}

double MittagLefflerH::operator()(double x) const {
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("H series argument outside [-1,1]");
    const double y = side_ == Side::plus ? 1.0 + x : 1.0 - x;
    if (y == 0.0) return power_eval(beta_, side_, x);
    const double ly = std::log(y);
    auto term = [&](int m) {
        const double b = m * alpha_ + beta_;
        return std::exp(b * ly - std::lgamma(b + 1.0));
    };
    double sum = 0.0;
    double prev = term(0);
    sum += prev;
    for (int m = 1; m < 2000; ++m) {
        const double t = term(m);
        sum += t;
        // Ratio test with safety factor 2: once consecutive ratios stay below 1/2 the
        // remaining tail is bounded by the last term.
        const double ratio = prev > 0.0 ? t / prev : 0.0;
        if (ratio <= 0.5 && t <= tol_ * std::abs(sum)) return sum;
        prev = t;
    }
    throw ConvergenceError("H series did not converge");
}

double mittag_h(double alpha, double beta, Side side, double x, double tol) {
    return MittagLefflerH(alpha, beta, side, tol)(x);
}

}  // namespace fracbound
