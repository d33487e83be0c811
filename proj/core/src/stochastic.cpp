#include "fracbound/stochastic.hpp"

#include "fracbound/errors.hpp"
#include "fracbound/rng.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fracbound {

AliasTable::AliasTable(const std::vector<double>& weights) {
    const std::size_t K = weights.size();
    if (K == 0) throw DomainError("alias table needs at least one outcome");
    long double total = 0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw DomainError("alias table weights must be nonnegative");
        total += w;
    }
    if (!(total > 0)) throw DomainError("alias table weights sum to zero");
    prob_.assign(K, 0.0);
    alias_.assign(K, 0);
    std::vector<double> scaled(K);
    std::vector<std::uint32_t> small, large;
    for (std::size_t k = 0; k < K; ++k) {
        scaled[k] = static_cast<double>(weights[k] * static_cast<long double>(K) / total);
        (scaled[k] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(k));
    }
    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back(), l = large.back();
        small.pop_back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (auto k : large) { prob_[k] = 1.0; alias_[k] = k; }
    for (auto k : small) { prob_[k] = 1.0; alias_[k] = k; }
}

JumpChain::JumpChain(const RateMatrix& rates) : n_(rates.n()) {
    const Eigen::MatrixXd g = rates.dense();
    rate_.resize(n_);
    kill_.resize(n_);
    alias_.resize(n_);
    targets_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        const double q = -g(i, i);
        if (!(q > 0.0)) throw InvariantViolation("state with nonpositive holding rate");
        std::vector<double> w;
        std::vector<int> tg;
        long double out = 0;
        for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            const double r = std::max(g(i, j), 0.0);
            w.push_back(r);
            tg.push_back(j + 1);
            out += r;
        }
        const double kill = std::max(0.0, static_cast<double>(static_cast<long double>(q) - out));
        // Conservative rows leave rounding-level defects; treat those as exact zeros.
        const double k = kill > 1e-12 * q ? kill : 0.0;
        w.push_back(k);
        tg.push_back(killed_state);
        rate_[i] = q;
        kill_[i] = k / q;
        alias_[i] = AliasTable(w);
        targets_[i] = std::move(tg);
    }
}

PathEnsemble simulate(const JumpChain& chain, int initial_state, double horizon, std::size_t n_paths,
                      std::uint64_t seed, const SimulationOptions& options) {
    if (initial_state < 1 || initial_state > chain.n()) throw DomainError("initial state outside 1..n");
    if (!(horizon >= 0.0)) throw DomainError("horizon must be >= 0");
    PathEnsemble e;
    e.n = chain.n();
    e.initial_state = initial_state;
    e.horizon = horizon;
    e.count = n_paths;
    e.observation_times = options.observation_times;
    e.observation_times.push_back(horizon);
    std::sort(e.observation_times.begin(), e.observation_times.end());
    e.observation_times.erase(std::unique(e.observation_times.begin(), e.observation_times.end()),
                              e.observation_times.end());
    if (e.observation_times.front() < 0.0) throw DomainError("observation times must be >= 0");
    if (e.observation_times.back() > horizon) throw DomainError("observation times must not exceed the horizon");
    const std::size_t n_obs = e.observation_times.size();
    e.observed.assign(n_obs * n_paths, killed_state);
    e.kill_times.assign(n_paths, std::numeric_limits<double>::infinity());

    for (std::size_t p = 0; p < n_paths; ++p) {
        Philox rng(seed, p);
        const bool record = p < options.record_limit;
        PathRecord rec;
        int s = initial_state;
        double t = 0.0;
        std::size_t k = 0;
        if (record) {
            rec.times.push_back(0.0);
            rec.states.push_back(s);
        }
        while (true) {
            const double t_next = t + rng.exponential(chain.holding_rate(s));
            while (k < n_obs && e.observation_times[k] < t_next) e.observed[k++ * n_paths + p] = s;
            if (t_next > horizon) break;
            const double u1 = rng.uniform(), u2 = rng.uniform();
            const int next = chain.target(s, chain.kernel(s).sample(u1, u2));
            t = t_next;
            if (next == killed_state) {
                e.kill_times[p] = t;
                if (record) {
                    rec.killed = true;
                    rec.kill_time = t;
                }
                break;
            }
            s = next;
            if (record) {
                rec.times.push_back(t);
                rec.states.push_back(s);
            }
        }
        if (record) e.recorded.push_back(std::move(rec));
    }
    return e;
}

double PathEnsemble::killed_fraction(double t) const {
    if (count == 0) throw EmptyEnsemble("empty path ensemble");
    std::size_t k = 0;
    for (double kt : kill_times) k += kt <= t;
    return double(k) / double(count);
}

void PathEnsemble::write_paths_csv(std::ostream& os) const {
    char buf[96];
    os << "path_id,t,state,event\n";
    for (std::size_t p = 0; p < recorded.size(); ++p) {
        const PathRecord& r = recorded[p];
        for (std::size_t k = 0; k < r.times.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%d,%s\n", p, r.times[k], r.states[k], k == 0 ? "start" : "jump");
            os << buf;
        }
        if (r.killed) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%d,kill\n", p, r.kill_time, killed_state);
            os << buf;
        }
    }
}

Histogram empirical_density(const PathEnsemble& e, double t, int bins) {
    if (e.count == 0) throw EmptyEnsemble("empty path ensemble");
    if (!(t <= e.horizon)) throw DomainError("empirical_density: t beyond the horizon");
    if (bins < 1 || e.n % bins != 0) throw DomainError("empirical_density: bins must divide n");
    const int per = e.n / bins;
    const double h = 2.0 / (e.n + 1);

    std::vector<std::size_t> cnt(static_cast<std::size_t>(bins), 0);
    std::size_t killed = 0;
    if (t == 0.0 && (e.observation_times.front() != 0.0)) {
        cnt[(e.initial_state - 1) / per] = e.count;
    } else {
        const auto it = std::find(e.observation_times.begin(), e.observation_times.end(), t);
        if (it == e.observation_times.end()) throw DomainError("empirical_density: t is not an observation time");
        const std::size_t k = static_cast<std::size_t>(it - e.observation_times.begin());
        for (std::size_t p = 0; p < e.count; ++p) {
            const int s = e.observed[k * e.count + p];
            if (s == killed_state) ++killed; else ++cnt[(s - 1) / per];
        }
    }

    Histogram H;
    H.t = t;
    H.paths = e.count;
    H.killed = double(killed) / double(e.count);
    const double N = double(e.count);
    for (int b = 0; b < bins; ++b) {
        const int first = b * per + 1, last = first + per - 1;
        const double p = double(cnt[b]) / N;
        H.x.push_back(-1.0 + 0.5 * (first + last) * h);
        H.probability.push_back(p);
        H.density.push_back(p / (per * h));
        H.stderr_prob.push_back(std::sqrt(std::max(p, 1.0 / N) * (1.0 - p) / N));
    }
    return H;
}

void Histogram::write_csv(std::ostream& os) const {
    char buf[96];
    os << "x,density,stderr\n";
    for (std::size_t b = 0; b < x.size(); ++b) {
        const double w = probability[b] > 0.0 ? density[b] / probability[b] : 0.0;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x[b], density[b], stderr_prob[b] * w);
        os << buf;
    }
}

ReentrySample first_reentry_sample(double alpha, std::size_t n_samples, std::uint64_t seed, int N,
                                   std::size_t window) {
    FractionalOrder a(alpha);
    if (N < 1) throw DomainError("first_reentry_sample needs N >= 1");
    if (window < 2) throw DomainError("first_reentry_sample needs window >= 2");
    ReentrySample out;
    out.alpha = a;
    out.samples = n_samples;
    out.counts.assign(static_cast<std::size_t>(N), 0);
    out.window = window;

    const GrunwaldTable g(alpha, window);
    std::vector<double> w(window - 1);
    long double total = 0;
    for (std::size_t K = 2; K <= window; ++K) {
        w[K - 2] = double(K - 1) * g(static_cast<long>(K));
        total += w[K - 2];
    }
    out.tail_mass = std::max(0.0, static_cast<double>(1.0L - total));
    const AliasTable table(w);
    const double tail = out.tail_mass;
    const double W = static_cast<double>(window);

    Philox rng(seed, 0);
    for (std::size_t s = 0; s < n_samples; ++s) {
        double K;
        if (tail > 0.0 && rng.uniform() < tail) {
            // (K−1)𝒢^α_K ~ K^{−α}/Γ(−α) beyond the window: Pareto tail with index α−1.
            K = std::floor(W * std::pow(rng.uniform_pos(), -1.0 / (alpha - 1.0))) + 1.0;
        } else {
            const double u1 = rng.uniform(), u2 = rng.uniform();
            K = double(table.sample(u1, u2) + 2);
        }
        // Landing point uniform on 1..K−1.
        const double j = 1.0 + std::floor(rng.uniform() * (K - 1.0));
        if (j <= N) ++out.counts[static_cast<std::size_t>(j) - 1]; else ++out.overflow;
    }
    return out;
}

ChiSquareResult chi_square_test(const std::vector<std::size_t>& counts, std::size_t pooled_count,
                                const std::vector<double>& probs, double significance) {
    if (counts.size() != probs.size() || counts.empty()) throw ShapeMismatch("chi_square_test: size mismatch");
    std::size_t total = pooled_count;
    double listed = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        total += counts[i];
        listed += probs[i];
    }
    if (total == 0) throw EmptyEnsemble("chi_square_test: no samples");
    const double N = double(total);
    ChiSquareResult r;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double e = N * probs[i];
        r.statistic += (double(counts[i]) - e) * (double(counts[i]) - e) / e;
    }
    const double ep = N * (1.0 - listed);
    if (ep > 0.0) r.statistic += (double(pooled_count) - ep) * (double(pooled_count) - ep) / ep;
    r.dof = static_cast<int>(counts.size()) - (ep > 0.0 ? 0 : 1);
    const boost::math::chi_squared dist(r.dof);
    r.critical = boost::math::quantile(dist, 1.0 - significance);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    r.pass = r.statistic <= r.critical;
    return r;
}

}  // namespace fracbound
