#pragma once

#include "fracbound/fraccalc.hpp"
#include "fracbound/generators.hpp"
#include "fracbound/grid.hpp"
#include "fracbound/semigroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracbound {

/// One machine-readable check result: {check, params, measured, threshold, pass}.
struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    double measured = 0;
    double threshold = 0;
    bool pass = false;
    std::string note;

    std::string to_json() const;
};

/// JSON array of reports.
std::string reports_json(const std::vector<CheckReport>& reports);

enum class NormKind { sup, l1 };

struct OrderEstimate {
    std::vector<int> n;
    std::vector<double> errors;
    std::vector<double> orders;  ///< orders[k] from errors[k], errors[k+1]
};

/**
 * Shifted Grünwald formula h^{−α} Σ_k 𝒢^α_k p⁺_β(x − (k−q)h) against p⁺_{β−α}.
 * Sup mode evaluates at the nodes x = −1 + ih; L1 mode uses cell midpoints.
 */
OrderEstimate grunwald_convergence_check(double alpha, double beta, int shift, const std::vector<int>& n_sequence,
                                         NormKind norm);

/// Which approximate power function: β = α, α−1, 0 or α−2.
enum class ThetaKind { alpha, alpha_minus_1, zero, alpha_minus_2 };

double theta_beta(double alpha, ThetaKind kind);
std::string to_string(ThetaKind kind);

/// ϑ^β_h on grid j (1-based) at location λ, for the given space (L1: '+', C0: '−' table column).
double theta_local(double alpha, ThetaKind kind, Space space, const Grid& grid, int j, double lambda);

/// ϑ^β_{+h} (L1) or ϑ^β_{−h}(x) = ϑ^β_h(−x) (C0) as a sampled function.
GridFunction approx_power_function(double alpha, ThetaKind kind, Space space, const Grid& grid,
                                   int M = GridFunction::default_samples);

/// p^+_β (L1) or p^−_β (C0) sampled grid by grid; the singular endpoint sample is left out of norms.
GridFunction power_function(double beta, Space space, const Grid& grid, int M = GridFunction::default_samples);

/// True when the lemma makes a pointwise statement for this (pair, β, space).
bool theta_combination_supported(BoundaryPair bc, ThetaKind kind, Space space);

struct ThetaProbeReport {
    double alpha = 0;
    BoundaryPair bc;
    ThetaKind kind = ThetaKind::zero;
    Space space = Space::L1;
    int n = 0;
    double target = 0;               ///< 0, or 1 for β = α
    bool asymptotic = false;          ///< N*N forward with β = α: only an L1 limit is claimed
    double interior_residual = 0;     ///< sup over grids with ι(±x) < n
    double interior_l1 = 0;           ///< L1 over the same grids
    std::vector<double> grid_residual;  ///< sup residual per grid j = 1..n+1
};

/// Applies G_{±h} (forward for L1, backward for C0) to ϑ^β and measures the residual.
ThetaProbeReport theta_probe(double alpha, BoundaryPair bc, ThetaKind kind, Space space, int n,
                             int M = GridFunction::default_samples);

/// ‖ϑ^β_h − p_β‖ in the space norm (L1 for L1, sup for C0; sup excludes the anchored endpoint when β < 0).
double theta_distance(double alpha, ThetaKind kind, Space space, int n, int M = GridFunction::default_samples);

struct RangeIdentityReport {
    double alpha = 0;
    BoundaryPair bc;
    Space space = Space::L1;
    int n = 0;
    double r = 0, s = 0, eta = 0;
    double residual = 0;  ///< ‖(I − G_h)φ_h − P‖ over grids with ι(±x) < n, space norm
    double residual_sup = 0;
};

/// φ = −Σ k_m H_{α,α+m} + r H_{α,α−1} + s H_{α,η} for P = Σ k_m p^±_m, as a continuum function of x.
struct RangeSolution {
    double alpha = 0, r = 0, s = 0, eta = 0;
    Space space = Space::L1;
    std::vector<double> k;
    double operator()(double x) const;
};

RangeSolution range_solution(double alpha, BoundaryPair bc, Space space, const std::vector<double>& k);

/**
 * Discretizes φ (singular power terms replaced by ϑ functions), applies I − G_{±h}
 * and compares with P on the grids where the lemma holds.
 */
RangeIdentityReport range_identity_check(double alpha, BoundaryPair bc, Space space, const std::vector<double>& k,
                                         int n, int M = GridFunction::default_samples);

/// Default polynomial for a space: p_0 for L1, p^−_1 − p^−_2 (vanishing at ±1) for C0.
std::vector<double> default_range_polynomial(Space space);

struct AdjointnessReport {
    double max_defect = 0;  ///< max |⟨G_{−h}f,g⟩ − ⟨f,G_{+h}g⟩| / (‖G_{−h}f‖‖g‖ + ‖f‖‖G_{+h}g‖)
    double transpose_defect = 0;
};

AdjointnessReport adjointness_check(double alpha, BoundaryPair bc, int n, int trials = 8, std::uint64_t seed = 7,
                                    int M = GridFunction::default_samples);

/// Fixed-seed trigonometric/polynomial mixture, vanishing at Dirichlet ends for C0.
GridFunction random_test_function(const Grid& grid, BoundaryPair bc, Space space, std::uint64_t seed, int index,
                                  int M = GridFunction::default_samples);

enum class InitialKind { smooth, delta };

struct ConvergenceStudy {
    BoundaryPair bc;
    double alpha = 1.5;
    Direction direction = Direction::forward;
    InitialKind initial = InitialKind::smooth;
    std::vector<int> n_sequence{32, 64, 128, 256};
    double t_probe = 0.5;

    // filled by self_convergence
    std::vector<double> differences;  ///< ‖u_k − u_{k+1}‖ at common points
    std::vector<double> orders;
    double estimated_order = 0;
    bool monotone = true;
};

/// Initial datum of a study: cos²(πx/2) for smooth.
double study_initial(InitialKind kind, double x);

/// Runs every level and estimates the order from successive-level differences (L1 norm for forward,
/// sup norm for backward) on a common set of points.
double self_convergence(ConvergenceStudy& study);

/// Forward MC vs PDE comparison at λ = 1, where the first n states are the CTMC.
struct McPdeComparison {
    double alpha = 0;
    BoundaryPair bc;
    int n = 0;
    int initial_state = 0;
    double t = 0;
    std::size_t paths = 0;
    std::vector<double> x, pde_probability, mc_probability, stderr_prob, z;
    double max_abs_z = 0;
    double pde_killed = 0, mc_killed = 0, killed_se = 0, killed_z = 0;

    void write_csv(std::ostream& os) const;
};

McPdeComparison mc_pde_compare(double alpha, BoundaryPair bc, int n, double x0, double t, std::size_t paths,
                               std::uint64_t seed);

/// Forward density for a delta start: 1/h on grid ι(x0).
GridFunction delta_initial(const Grid& grid, double x0, int M = GridFunction::default_samples);

}  // namespace fracbound
