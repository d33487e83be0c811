#pragma once

#include "fracbound/generators.hpp"
#include "fracbound/grid.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fracbound {

/// Backward acts with G_{−h} on C0 data, forward with G_{+h} on L1 densities.
enum class Direction { forward, backward };

struct EvolutionProblem {
    Direction direction = Direction::forward;
    std::shared_ptr<const GeneratorContext> context;
    GridFunction initial;
    std::vector<double> output_times;  ///< sorted, ≥ 0; the last one is t_final
    /// Forward only: require the initial datum to be a probability density.
    bool density_mode = false;
};

struct Solution {
    std::vector<double> times;
    std::vector<GridFunction> states;
    std::vector<double> sup_norm;
    std::vector<double> l1_norm;
    std::vector<double> mass;
    /// Per time: max over λ of ‖E(Gv) − G(Ev)‖ / (‖G‖‖v‖), sup norms.
    std::vector<double> defect;

    /// Summary {times, sup_norm, l1_norm, mass, defect} as JSON text.
    std::string summary_json() const;
    /// Long format t,x,u.
    void write_csv(std::ostream& os) const;
};

/// Relative defect above which evolve throws StepFailure.
inline constexpr double evolve_defect_tolerance = 1e-8;

/// u(t) = Π⁻¹ e^{t G_{n+1}(λ)} Π f per λ sample (transposed for forward).
Solution evolve(const EvolutionProblem& problem);

/// (μ I − G_{±h})⁻¹ f per λ sample. Direction picks G or Gᵀ.
GridFunction resolvent(const GeneratorContext& ctx, double mu, const GridFunction& f,
                       Direction direction = Direction::backward);

/// ψ(x) = e^x (1 − e^{−x})^α.
double psi(double alpha, double x);
/// ψ⁻¹ on (0, 50) by safeguarded Newton.
double psi_inverse(double alpha, double value);

struct StoppedResolventReport {
    double alpha = 0, mu = 0;
    int n_trunc = 0;
    double max_error = 0;        ///< sup over all sites
    double max_error_left = 0;   ///< sites n ≤ 0
    double max_error_right = 0;  ///< sites n > 0
    double residual = 0;         ///< ‖(μI − G*)y − e_0‖_∞ of the numeric solve
    double psi_inverse_value = 0;
};

/**
 * Solves (μI − G*_stop) y = e_0 on the nonpositive sites −N+1..0 (h = 1; the walk
 * is stopped once it becomes positive), fills sites 1..N from the solved values and
 * compares every site with the closed form.
 */
StoppedResolventReport stopped_resolvent_check(double alpha, double mu, int n_trunc);

/// z_i = −𝒢^{α−1}_i, i = 1..N (index 0 holds z_1).
std::vector<double> restart_distribution(double alpha, int N);

/// ‖G u‖_∞ ≤ tol ‖u‖_∞ for the direction's operator.
bool is_stationary(const GeneratorContext& ctx, const GridFunction& u, Direction direction, double tol = 1e-9);

}  // namespace fracbound
