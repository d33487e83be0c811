#include "oracles.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>

namespace oracle {

long double grunwald(long double q, long k) {
    if (k < 0) return 0.0L;
    if (k == 0) return 1.0L;
    // Integer orders terminate.
    if (q == std::floor(q) && q >= 0 && k > q) return 0.0L;
    if (q == std::floor(q) && q >= 0) {
        long double b = 1.0L;
        for (long j = 0; j < k; ++j) b *= (q - j) / (j + 1);
        return (k % 2 ? -1.0L : 1.0L) * b;
    }
    // Γ(k−q) / (Γ(−q) Γ(k+1)); both Γ(k−q) and Γ(−q) may be negative for small k.
    const long double z = k - q;
    const long double sign_num = z > 0 ? 1.0L : (std::tgamma(static_cast<double>(z)) < 0 ? -1.0L : 1.0L);
    const long double sign_den = std::tgamma(static_cast<double>(-q)) < 0 ? -1.0L : 1.0L;
    const long double lg = std::lgammal(z) - std::lgammal(-q) - std::lgammal(k + 1.0L);
    return sign_num * sign_den * std::exp(lg);
}

Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd& A) {
    const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    while (norm / std::ldexp(1.0, s) > 0.25) ++s;
    const Eigen::MatrixXd B = A / std::ldexp(1.0, s);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(A.rows(), A.cols());
    Eigen::MatrixXd E = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * B / double(k);
        E += term;
    }
    for (int k = 0; k < s; ++k) E = E * E;
    return E;
}

double chi2_critical(int dof, double significance) {
    return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), significance));
}

}  // namespace oracle
