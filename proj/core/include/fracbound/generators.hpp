#pragma once

#include "fracbound/fraccalc.hpp"
#include "fracbound/grid.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fracbound {

enum class LeftBC { D, N, Nstar };
enum class RightBC { D, N };

/// One of DD, DN, ND, NN, N*D, N*N.
struct BoundaryPair {
    LeftBC left = LeftBC::D;
    RightBC right = RightBC::D;

    /// Accepts "DD", "DN", "ND", "NN", "N*D", "N*N"; "NstarD" and "NstarN" are aliases.
    static BoundaryPair parse(const std::string& tag);
    std::string name() const;
    /// Both row-sum defects vanish (no killing anywhere).
    bool conservative() const noexcept { return left != LeftBC::D && right == RightBC::N; }
    /// Forward operator is the Riemann–Liouville type (η = α − 2) for N* on the left.
    bool riemann_liouville() const noexcept { return left == LeftBC::Nstar; }

    bool operator==(const BoundaryPair&) const = default;
};

/// The six pairs in the order DD, DN, ND, NN, N*D, N*N.
const std::array<BoundaryPair, 6>& all_pairs();

/// Unscaled boundary weights; the matrix applies 1/h^α.
struct BoundaryWeights {
    std::vector<double> left;   ///< b^l_0 .. b^l_n
    std::vector<double> right;  ///< b^r_1 .. b^r_{n−1} stored at index i−1
    double corner = 0.0;        ///< b_n
};

BoundaryWeights boundary_weights(double alpha, BoundaryPair bc, int n);

/**
 * G^{LR}_{n×n}: Toeplitz band 𝒢^α_{j−i+1} with a boundary first row and last column.
 * Entries include the 1/h^α factor.
 */
class RateMatrix {
public:
    RateMatrix(FractionalOrder alpha, BoundaryPair bc, int n);

    int n() const noexcept { return n_; }
    double alpha() const noexcept { return alpha_; }
    double h() const noexcept { return h_; }
    double scale() const noexcept { return scale_; }
    BoundaryPair bc() const noexcept { return bc_; }

    /// 1-based entry (i, j).
    double operator()(int i, int j) const;
    Eigen::MatrixXd dense() const;
    Eigen::VectorXd row_sums() const;

    const std::vector<double>& interior_band() const noexcept { return band_; }
    const BoundaryWeights& weights() const noexcept { return w_; }

    /// Structured JSON: {alpha, bc, n, interior_band, left_row, right_col, corner}.
    std::string to_json() const;
    void write_csv(std::ostream& os) const;

private:
    double alpha_;
    BoundaryPair bc_;
    int n_;
    double h_, scale_;
    std::vector<double> band_;  ///< 𝒢^α_0..𝒢^α_n, scaled
    BoundaryWeights w_;         ///< scaled
};

RateMatrix rate_matrix(FractionalOrder alpha, BoundaryPair bc, int n);

struct InterpolatingFunctions {
    std::function<double(double)> Dl, Nl, Dr, Nr;
};

InterpolatingFunctions interpolating_functions(double alpha, BoundaryPair bc);

/**
 * Everything needed to act with G^{LR}_{±h} on a fixed grid: the rate matrix,
 * its dense copy, and the interpolation functions. Immutable once built.
 */
class GeneratorContext {
public:
    GeneratorContext(FractionalOrder alpha, BoundaryPair bc, int n);

    double alpha() const noexcept { return rm_.alpha(); }
    BoundaryPair bc() const noexcept { return rm_.bc(); }
    int n() const noexcept { return rm_.n(); }
    const Grid& grid() const noexcept { return grid_; }
    const RateMatrix& rate() const noexcept { return rm_; }
    const Eigen::MatrixXd& dense_rate() const noexcept { return g_; }

    using ColumnVisitor = std::function<void(int, const Eigen::VectorXd&)>;
    /// Streams the columns of G^{LR}_{n+1}(λ) (0-based index) without storing the matrix.
    void for_each_column(double lambda, const ColumnVisitor& visit) const;
    /// G^{LR}_{n+1}(λ), written into `out` (resized as needed).
    void interpolation_matrix(double lambda, Eigen::MatrixXd& out) const;
    Eigen::MatrixXd interpolation_matrix(double lambda) const;

private:
    Grid grid_;
    RateMatrix rm_;
    Eigen::MatrixXd g_;
    InterpolatingFunctions fn_;
};

Eigen::MatrixXd interpolation_matrix(FractionalOrder alpha, BoundaryPair bc, int n, double lambda);

/// G_{−h} f: per-λ product with G_{n+1}(λ).
GridFunction apply_backward(const GeneratorContext& ctx, const GridFunction& f);
/// G_{+h} f: per-λ product with G_{n+1}(λ)ᵀ.
GridFunction apply_forward(const GeneratorContext& ctx, const GridFunction& f);

}  // namespace fracbound
