#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fracbound {

class GridFunction;

/// Order of the stable generator, 1 < α ≤ 2.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);
    double value() const noexcept { return alpha_; }
    operator double() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Which endpoint a power function or fractional integral is anchored to.
/// `plus` is anchored at −1 (p⁺_β(x) = (1+x)^β/Γ(β+1)), `minus` at +1.
enum class Side { plus, minus };

/**
 * Grünwald coefficients 𝒢^q_k = (−1)^k binom(q, k), k = 0..k_max.
 *
 * Built with the forward recursion in quad precision. Partial sums are
 * accumulated in the same precision, so tail sums such as
 * Σ_{k≤K} 𝒢^α_k (which cancel down to ~K^{1−α}) keep full relative accuracy.
 */
class GrunwaldTable {
public:
    GrunwaldTable() = default;
    GrunwaldTable(double q, std::size_t k_max);

    double order() const noexcept { return q_; }
    std::size_t k_max() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// 𝒢^q_k; zero for negative k.
    double operator()(long k) const {
        return k < 0 ? 0.0 : coeffs_.at(static_cast<std::size_t>(k));
    }
    /// Σ_{j=0}^{k} 𝒢^q_j (zero for negative k).
    double partial_sum(long k) const {
        return k < 0 ? 0.0 : partial_.at(static_cast<std::size_t>(k));
    }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

private:
    double q_ = 0.0;
    std::vector<double> coeffs_;
    std::vector<double> partial_;
};

GrunwaldTable grunwald_table(double q, std::size_t k_max);

/// Σ_{n=0}^{k} 𝒢^q_n 𝒢^Q_{k−n} (lhs) and 𝒢^{q+Q}_k (rhs), both from independent tables.
std::pair<double, double> grunwald_convolve_check(double q, double Q, std::size_t k);

/// |a − b| / |b|, or |a| when b is zero.
double relative_error(double a, double b);

/// p^±_β(x). For β < 0 the value at the anchored endpoint is +∞.
double power_eval(double beta, Side side, double x);

/// Fractional integral I^ν_± f by product integration against the piecewise-linear
/// reconstruction of f. Result is sampled on f's grid.
GridFunction frac_integral(double nu, const GridFunction& f, Side side);

/// Series H_{α,β}(x) = Σ_{m≥0} p_{mα+β}(x).
class MittagLefflerH {
public:
    MittagLefflerH(double alpha, double beta, Side side, double tol = 1e-16);
    double operator()(double x) const;

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    Side side() const noexcept { return side_; }

private:
    double alpha_, beta_;
    Side side_;
    double tol_;
};

double mittag_h(double alpha, double beta, Side side, double x, double tol = 1e-16);

}  // namespace fracbound
