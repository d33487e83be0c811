#pragma once

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <string>

namespace fracbound {

/// n+1 grids of width h = 2/(n+1) covering [−1,1].
class Grid {
public:
    explicit Grid(int n);

    int n() const noexcept { return n_; }
    int grids() const noexcept { return n_ + 1; }
    double h() const noexcept { return h_; }

    /// ι(x) = ⌊(x+1)/h⌋ + 1, with ι(1) = n+1. Ties belong to the right grid.
    int grid_number(double x) const;
    /// λ(x) = (x+1)/h − (ι(x)−1), with λ(1) = 1.
    double grid_location(double x) const;
    /// x = (λ + j − 1)h − 1.
    double point(int j, double lambda) const noexcept { return (lambda + j - 1) * h_ - 1.0; }

    bool operator==(const Grid& o) const noexcept { return n_ == o.n_; }

private:
    int n_;
    double h_;
};

enum class Space { C0, L1 };

/**
 * Per-grid vector function v_j(λ), stored as samples at λ_m = m/(M−1), m = 0..M−1.
 * Row j−1 holds grid j. Reconstruction between samples is linear in λ.
 */
struct GridVectors {
    Eigen::MatrixXd samples;

    int grids() const noexcept { return static_cast<int>(samples.rows()); }
    int M() const noexcept { return static_cast<int>(samples.cols()); }
    double lambda(int m) const noexcept { return samples.cols() == 1 ? 0.0 : double(m) / double(samples.cols() - 1); }
    /// v(λ) ∈ ℝ^{n+1} by linear interpolation between samples.
    Eigen::VectorXd at(double lambda) const;
};

/// A function on [−1,1] known through its per-grid samples.
class GridFunction {
public:
    static constexpr int default_samples = 16;

    GridFunction(Grid grid, Eigen::MatrixXd samples, Space space);

    const Grid& grid() const noexcept { return grid_; }
    Space space() const noexcept { return space_; }
    int M() const noexcept { return static_cast<int>(v_.cols()); }
    double lambda(int m) const noexcept { return double(m) / double(v_.cols() - 1); }
    const Eigen::MatrixXd& samples() const noexcept { return v_; }
    /// Sample at grid j (1-based), λ index m.
    double sample(int j, int m) const { return v_(j - 1, m); }

    /// Π⁻¹v evaluated at x: v_{ι(x)}(λ(x)).
    double operator()(double x) const;
    /// Value on grid j (1-based) at local coordinate λ.
    double local(int j, double lambda) const;

    /// max_j |v_{j+1}(0) − v_j(1)|.
    double seam_defect() const;
    bool is_continuous(double tol = 1e-12) const { return seam_defect() <= tol; }

    double sup_norm() const;
    double l1_norm() const;
    double integral() const;
    /// Trapezoid quadrature in λ, times h, of f·g. Both must share grid and M.
    double inner(const GridFunction& g) const;
    double min() const { return v_.minCoeff(); }

    GridFunction operator-(const GridFunction& o) const;
    GridFunction operator+(const GridFunction& o) const;
    GridFunction operator*(double s) const;

    /// Rows "x,value" at every sample, %.17g.
    void write_csv(std::ostream& os) const;

private:
    Grid grid_;
    Eigen::MatrixXd v_;
    Space space_;
};

/// Trapezoid weights in λ for M samples (sum to 1).
Eigen::VectorXd lambda_weights(int M);

/// Π_{n+1}: samples f((λ_m + j − 1)h − 1).
GridVectors project(const GridFunction& f);
GridFunction sample(const Grid& grid, const std::function<double(double)>& f,
                    Space space, int M = GridFunction::default_samples);
/// Sampling by local coordinates, for functions defined grid by grid (possibly jumping at seams).
GridFunction sample_local(const Grid& grid, const std::function<double(int, double)>& f,
                          Space space, int M = GridFunction::default_samples);
/// Π⁻¹_{n+1}.
GridFunction embed(const Grid& grid, const GridVectors& v, Space space);

}  // namespace fracbound
