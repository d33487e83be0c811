#include "fracbound/grid.hpp"

#include "fracbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace fracbound {

Grid::Grid(int n) : n_(n), h_(2.0 / (n + 1)) {
    if (n < 2) throw DomainError("grid needs n >= 2, got " + std::to_string(n));
}

int Grid::grid_number(double x) const {
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("grid_number: x outside [-1,1]");
    if (x == 1.0) return n_ + 1;
    const int j = static_cast<int>(std::floor((x + 1.0) / h_)) + 1;
    return std::clamp(j, 1, n_ + 1);
}

double Grid::grid_location(double x) const {
    const int j = grid_number(x);
    if (x == 1.0) return 1.0;
    return std::clamp((x + 1.0) / h_ - (j - 1), 0.0, 1.0);
}

Eigen::VectorXd GridVectors::at(double lambda) const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("GridVectors::at: lambda outside [0,1]");
    const int M = this->M();
    if (M == 1) return samples.col(0);
    const double s = lambda * (M - 1);
    const int m = std::min(static_cast<int>(s), M - 2);
    const double w = s - m;
    return (1.0 - w) * samples.col(m) + w * samples.col(m + 1);
}

GridFunction::GridFunction(Grid grid, Eigen::MatrixXd samples, Space space)
    : grid_(grid), v_(std::move(samples)), space_(space) {
    if (v_.rows() != grid_.grids()) throw ShapeMismatch("GridFunction: rows must equal n+1");
    if (v_.cols() < 2) throw ShapeMismatch("GridFunction: need at least two samples per grid");
}

double GridFunction::local(int j, double lambda) const {
    if (j < 1 || j > grid_.grids()) throw DomainError("GridFunction::local: grid index out of range");
    const int M = this->M();
    const double s = std::clamp(lambda, 0.0, 1.0) * (M - 1);
    const int m = std::min(static_cast<int>(s), M - 2);
    const double w = s - m;
    return (1.0 - w) * v_(j - 1, m) + w * v_(j - 1, m + 1);
}

double GridFunction::operator()(double x) const {
    return local(grid_.grid_number(x), grid_.grid_location(x));
}

double GridFunction::seam_defect() const {
    double d = 0.0;
    for (int j = 0; j + 1 < v_.rows(); ++j) d = std::max(d, std::abs(v_(j + 1, 0) - v_(j, v_.cols() - 1)));
    return d;
}

Eigen::VectorXd lambda_weights(int M) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(M, 1.0 / (M - 1));
    w(0) *= 0.5;
    w(M - 1) *= 0.5;
    return w;
}

double GridFunction::sup_norm() const { return v_.cwiseAbs().maxCoeff(); }

double GridFunction::l1_norm() const { return grid_.h() * (v_.cwiseAbs() * lambda_weights(M())).sum(); }

double GridFunction::integral() const { return grid_.h() * (v_ * lambda_weights(M())).sum(); }

double GridFunction::inner(const GridFunction& g) const {
    if (!(grid_ == g.grid_) || M() != g.M()) throw ShapeMismatch("inner: grids differ");
    return grid_.h() * (v_.cwiseProduct(g.v_) * lambda_weights(M())).sum();
}

GridFunction GridFunction::operator-(const GridFunction& o) const {
    if (!(grid_ == o.grid_) || M() != o.M()) throw ShapeMismatch("difference: grids differ");
    return GridFunction(grid_, v_ - o.v_, space_);
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
    if (!(grid_ == o.grid_) || M() != o.M()) throw ShapeMismatch("sum: grids differ");
    return GridFunction(grid_, v_ + o.v_, space_);
}

GridFunction GridFunction::operator*(double s) const { return GridFunction(grid_, v_ * s, space_); }

void GridFunction::write_csv(std::ostream& os) const {
    char buf[64];
    os << "x,value\n";
    for (int j = 1; j <= grid_.grids(); ++j) {
        for (int m = 0; m < M(); ++m) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid_.point(j, lambda(m)), v_(j - 1, m));
            os << buf;
        }
    }
}

GridVectors project(const GridFunction& f) { return GridVectors{f.samples()}; }

GridFunction sample(const Grid& grid, const std::function<double(double)>& f, Space space, int M) {
    return sample_local(
        grid, [&](int j, double lam) { return f(std::clamp(grid.point(j, lam), -1.0, 1.0)); }, space, M);
}

GridFunction sample_local(const Grid& grid, const std::function<double(int, double)>& f, Space space, int M) {
    if (M < 2) throw DomainError("sample: need M >= 2");
    Eigen::MatrixXd v(grid.grids(), M);
    for (int j = 1; j <= grid.grids(); ++j)
        for (int m = 0; m < M; ++m) v(j - 1, m) = f(j, double(m) / (M - 1));
    return GridFunction(grid, std::move(v), space);
}

GridFunction embed(const Grid& grid, const GridVectors& v, Space space) {
    if (v.grids() != grid.grids()) throw ShapeMismatch("embed: vector length must equal n+1");
    return GridFunction(grid, v.samples, space);
}

}  // namespace fracbound
