#pragma once

#include "fracbound/generators.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <vector>

namespace fracbound {

/// Walker alias table over outcomes 0..K−1.
class AliasTable {
public:
    AliasTable() = default;
    explicit AliasTable(const std::vector<double>& weights);

    std::size_t size() const noexcept { return prob_.size(); }
    /// Draw from two uniforms in [0,1).
    std::size_t sample(double u_bucket, double u_accept) const noexcept {
        std::size_t k = static_cast<std::size_t>(u_bucket * static_cast<double>(prob_.size()));
        if (k >= prob_.size()) k = prob_.size() - 1;
        return u_accept < prob_[k] ? k : alias_[k];
    }

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

/// State index used for a killed path.
inline constexpr int killed_state = 0;

/**
 * Jump kernel of the CTMC with rate matrix G^{LR}_{n×n}: holding rate −g_{ii},
 * jump probabilities g_{ij}/(−g_{ii}), and the row-sum defect as kill probability.
 */
class JumpChain {
public:
    explicit JumpChain(const RateMatrix& rates);

    int n() const noexcept { return n_; }
    double holding_rate(int state) const { return rate_.at(state - 1); }
    double kill_probability(int state) const { return kill_.at(state - 1); }
    const AliasTable& kernel(int state) const { return alias_.at(state - 1); }
    /// Outcome k of state i's alias table, mapped to a target state or killed_state.
    int target(int state, std::size_t k) const { return targets_[state - 1][k]; }

private:
    int n_;
    std::vector<double> rate_, kill_;
    std::vector<AliasTable> alias_;
    std::vector<std::vector<int>> targets_;
};

struct PathRecord {
    std::vector<double> times;  ///< jump times, starting with 0
    std::vector<int> states;    ///< state from times[k] on
    bool killed = false;
    double kill_time = std::numeric_limits<double>::infinity();
};

struct SimulationOptions {
    /// States are stored at these times (sorted, within [0, horizon]); the horizon is always added.
    std::vector<double> observation_times;
    /// Number of full trajectories to keep.
    std::size_t record_limit = 0;
};

struct PathEnsemble {
    int n = 0;
    int initial_state = 0;
    double horizon = 0;
    std::size_t count = 0;
    std::vector<double> observation_times;
    /// observed[k * count + p]: state of path p at observation_times[k] (killed_state if killed).
    std::vector<int> observed;
    std::vector<double> kill_times;  ///< +∞ for paths alive at the horizon
    std::vector<PathRecord> recorded;

    /// Fraction of paths killed by time t ≤ horizon.
    double killed_fraction(double t) const;
    /// CSV path_id,t,state,event for the recorded paths.
    void write_paths_csv(std::ostream& os) const;
};

PathEnsemble simulate(const JumpChain& chain, int initial_state, double horizon, std::size_t n_paths,
                      std::uint64_t seed, const SimulationOptions& options = {});

struct Histogram {
    double t = 0;
    std::vector<double> x;            ///< bin centres
    std::vector<double> probability;  ///< fraction of all paths in the bin
    std::vector<double> density;      ///< probability / bin width
    std::vector<double> stderr_prob;  ///< binomial standard error of probability
    double killed = 0;                ///< killed fraction
    std::size_t paths = 0;

    /// CSV x,density,stderr.
    void write_csv(std::ostream& os) const;
};

/**
 * Histogram of the states at time t (0 or one of the observation times). State i sits at
 * x_i = −1 + ih; `bins` must divide n, consecutive states are pooled.
 */
Histogram empirical_density(const PathEnsemble& ensemble, double t, int bins);

struct ReentrySample {
    double alpha = 0;
    std::size_t samples = 0;
    std::vector<std::size_t> counts;  ///< counts[i−1]: first positive state i, i = 1..N
    std::size_t overflow = 0;         ///< first positive state > N
    std::size_t window = 0;           ///< overshoots up to this size use the exact table
    double tail_mass = 0;             ///< probability of an overshoot beyond the window
};

/**
 * First positive state of the free Grünwald walk started at 0 (unit spacing, up-jumps of
 * size k−1 at rate 𝒢^α_k, down-steps at rate 𝒢^α_0). Sampled through the last-exit
 * decomposition: the crossing jump has size class K with probability (K−1)𝒢^α_K and
 * lands uniformly on 1..K−1.
 */
ReentrySample first_reentry_sample(double alpha, std::size_t n_samples, std::uint64_t seed, int N = 20,
                                   std::size_t window = std::size_t(1) << 16);

struct ChiSquareResult {
    double statistic = 0;
    int dof = 0;
    double critical = 0;
    double p_value = 0;
    bool pass = false;
};

/// Pearson χ² of counts against probabilities; the last cell pools everything not listed.
ChiSquareResult chi_square_test(const std::vector<std::size_t>& counts, std::size_t pooled_count,
                                const std::vector<double>& probs, double significance);

}  // namespace fracbound
