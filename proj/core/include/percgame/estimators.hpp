#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "percgame/lattice.hpp"
#include "percgame/strategies.hpp"

namespace percgame {

// Normal-approximation 95% interval.
struct EstimateCI {
  double mean = 0.0;
  double half_width = 0.0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
};

EstimateCI mean_ci(const std::vector<double>& samples, std::uint64_t seed);
EstimateCI proportion_ci(std::int64_t successes, std::int64_t reps, std::uint64_t seed);

// Replication r of every estimator reads Configuration(derive_seed(seed, r), p),
// so estimates at different p share their uniforms (coupled sampling).
Configuration replication_config(std::uint64_t seed, std::int64_t rep, double p);

// P(vertical crossing of (-m, m] x (-n, n]).
EstimateCI crossing_probability(double p, std::int64_t m, std::int64_t n, std::int64_t reps, std::uint64_t seed,
                                unsigned threads = 0);

struct DecayFit {
  double p = 0.0;
  double gamma_hat = 0.0;  // fitted slope of -log P against n, floored at 0
  double slope = 0.0;      // raw least-squares slope
  double slope_stderr = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS residual of the fit
  std::vector<std::int64_t> sizes;
  std::vector<double> probabilities;
};

// Least-squares fit of -log P(n) = a + gamma * n. Throws std::domain_error if a
// probability is not strictly positive. `variances` (optional, of P) feed the
// delta-method standard error of the slope.
DecayFit fit_decay(const std::vector<std::int64_t>& sizes, const std::vector<double>& probabilities,
                   const std::vector<double>& variances = {});

DecayFit estimate_gamma(double p, const std::vector<std::int64_t>& sizes, std::int64_t reps, std::uint64_t seed,
                        unsigned threads = 0);

struct WidthScaling {
  std::int64_t n = 0;
  std::int64_t w_hat = 0;
  double c = 0.0;
  double probability = 0.0;  // estimate at w_hat
  double epsilon_hat = 0.0;  // 1 - log(w_hat) / log(n)
  bool square_failed = false;
};

// Smallest half-width m in [1, n] whose crossing estimate reaches c, by
// bisection (the coupled estimate is monotone in m).
WidthScaling estimate_wn(double p, std::int64_t n, double c, std::int64_t reps, std::uint64_t seed,
                         unsigned threads = 0);

struct ValueMatrix {
  double p = 0.0;
  Vertex start;
  std::int64_t horizon = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> p1_names;
  std::vector<std::string> p2_names;
  std::vector<std::vector<EstimateCI>> entries;  // [i][j]: sigma_i against tau_j
  std::vector<std::vector<double>> tail_entries;  // limsup proxy, same layout
  std::size_t best_row = 0;                       // argmin over rows of the row maximum
  std::size_t best_column = 0;                    // argmax within best_row
  double value = 0.0;                             // min_i max_j entries[i][j].mean
  double tail_value = 0.0;

  const EstimateCI& value_entry() const { return entries[best_row][best_column]; }
};

using P1Portfolio = std::vector<std::unique_ptr<StrategyP1>>;
using P2Portfolio = std::vector<std::unique_ptr<StrategyP2>>;

// Heuristic value estimate: min over the Player 1 portfolio of the max over
// the Player 2 portfolio of the mean finite-horizon average cost. It brackets
// nothing rigorously.
ValueMatrix value_matrix(double p, const Vertex& start, const P1Portfolio& p1, const P2Portfolio& p2,
                         std::int64_t horizon, std::int64_t reps, std::uint64_t seed, unsigned threads = 0);

struct Thresholds {
  std::optional<double> green;  // largest p with smoothed value <= low
  std::optional<double> red;    // smallest p with smoothed value >= high
};

struct PhaseCurve {
  std::vector<double> grid;
  std::vector<EstimateCI> values;
  std::vector<double> tail_values;
  std::int64_t horizon = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  Vertex start;
  std::string p1;
  std::string p2;
  Thresholds thresholds;
};

struct ScanOptions {
  std::int64_t grid_size = 200;
  std::int64_t horizon = 500;
  std::int64_t reps = 30;
  std::uint64_t seed = 0;
  Vertex start;
  double low = 0.01;
  double high = 0.99;
  unsigned threads = 0;
};

std::vector<double> equally_spaced_grid(std::int64_t grid_size);

PhaseCurve phase_scan(const ScanOptions& options, const P1Portfolio& p1, const P2Portfolio& p2);

// Centered moving average; the window shrinks at the ends.
std::vector<double> moving_average(const std::vector<double>& values, std::size_t window);

Thresholds threshold_crossing(const PhaseCurve& curve, double low = 0.01, double high = 0.99);
Thresholds threshold_crossing(const std::vector<double>& grid, const std::vector<double>& values, double low = 0.01,
                              double high = 0.99);

struct PeierlsDivergence : std::domain_error {
  using std::domain_error::domain_error;
};

// B(p) = sum_{n >= 1} sum_{l >= 2n} n^2 5^l q^{l/5}, q = 1 - (1-p)^4, in closed
// form. Throws PeierlsDivergence when r = 5 q^{1/5} >= 1.
double peierls_bound(double p);
// Ratio r = 5 q^{1/5} of the geometric series.
double peierls_ratio(double p);
// Smallest p at which the series diverges: 1 - (1-p)^4 = 5^{-5}.
double peierls_divergence_point();
// Largest p (to 1e-12) with B(p) <= 1/2.
double peierls_p0_lower_bound();

}  // namespace percgame
