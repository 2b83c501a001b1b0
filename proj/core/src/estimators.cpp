#include "percgame/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "percgame/engine.hpp"
#include "percgame/parallel.hpp"
#include "percgame/perc.hpp"

namespace percgame {

namespace {

constexpr double kZ95 = 1.959963984540054;

void require_reps(std::int64_t reps) {
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

std::int64_t count_crossings(double p, std::int64_t m, std::int64_t n, std::int64_t reps, std::uint64_t seed,
                             unsigned threads) {
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(reps), 0);
  const BoxSpec box{{0, 0}, m, n};
  parallel_for(hit.size(), threads, [&](std::size_t r) {
    hit[r] = has_vertical_crossing(replication_config(seed, static_cast<std::int64_t>(r), p), box) ? 1 : 0;
  });
  return std::accumulate(hit.begin(), hit.end(), std::int64_t{0});
}

struct CellBlock {
  std::vector<double> avg;   // [i * J + j]
  std::vector<double> tail;  // same layout
};

CellBlock play_block(const Configuration& config, const Vertex& start, const P1Portfolio& p1, const P2Portfolio& p2,
                     std::int64_t horizon) {
  CellBlock out;
  out.avg.reserve(p1.size() * p2.size());
  out.tail.reserve(p1.size() * p2.size());
  for (const auto& s1 : p1) {
    for (const auto& s2 : p2) {
      auto a = s1->clone();
      auto b = s2->clone();
      const auto t = play(config, start, *a, *b, horizon);
      out.avg.push_back(t.running_avg(horizon).to_double());
      out.tail.push_back(tail_max_average(t));
    }
  }
  return out;
}

ValueMatrix assemble(double p, const Vertex& start, const P1Portfolio& p1, const P2Portfolio& p2,
                     std::int64_t horizon, std::int64_t reps, std::uint64_t seed, const std::vector<CellBlock>& blocks) {
  ValueMatrix vm;
  vm.p = p;
  vm.start = start;
  vm.horizon = horizon;
  vm.reps = reps;
  vm.seed = seed;
  for (const auto& s : p1) vm.p1_names.push_back(s->name());
  for (const auto& s : p2) vm.p2_names.push_back(s->name());
  const auto J = p2.size();
  vm.entries.assign(p1.size(), std::vector<EstimateCI>(J));
  vm.tail_entries.assign(p1.size(), std::vector<double>(J, 0.0));
  std::vector<double> samples(blocks.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = 0; j < J; ++j) {
      double tail = 0.0;
      for (std::size_t r = 0; r < blocks.size(); ++r) {
        samples[r] = blocks[r].avg[i * J + j];
        tail += blocks[r].tail[i * J + j];
      }
      vm.entries[i][j] = mean_ci(samples, seed);
      vm.tail_entries[i][j] = tail / static_cast<double>(blocks.size());
    }
  }
  vm.value = std::numeric_limits<double>::infinity();
  vm.tail_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p1.size(); ++i) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < J; ++j)
      if (vm.entries[i][j].mean > vm.entries[i][arg].mean) arg = j;
    if (vm.entries[i][arg].mean < vm.value) {
      vm.value = vm.entries[i][arg].mean;
      vm.best_row = i;
      vm.best_column = arg;
    }
    vm.tail_value = std::min(vm.tail_value, *std::max_element(vm.tail_entries[i].begin(), vm.tail_entries[i].end()));
  }
  return vm;
}

}  // namespace

EstimateCI mean_ci(const std::vector<double>& samples, std::uint64_t seed) {
  EstimateCI out;
  out.reps = static_cast<std::int64_t>(samples.size());
  out.seed = seed;
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double s : samples) sum += s;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - out.mean) * (s - out.mean);
    const double var = ss / static_cast<double>(samples.size() - 1);
    out.half_width = kZ95 * std::sqrt(var / static_cast<double>(samples.size()));
  }
  return out;
}

EstimateCI proportion_ci(std::int64_t successes, std::int64_t reps, std::uint64_t seed) {
  require_reps(reps);
  EstimateCI out;
  out.reps = reps;
  out.seed = seed;
  out.mean = static_cast<double>(successes) / static_cast<double>(reps);
  out.half_width = kZ95 * std::sqrt(out.mean * (1.0 - out.mean) / static_cast<double>(reps));
  return out;
}

Configuration replication_config(std::uint64_t seed, std::int64_t rep, double p) {
  return Configuration(derive_seed(seed, static_cast<std::uint64_t>(rep)), p);
}

EstimateCI crossing_probability(double p, std::int64_t m, std::int64_t n, std::int64_t reps, std::uint64_t seed,
                                unsigned threads) {
  require_probability(p);
  require_reps(reps);
  return proportion_ci(count_crossings(p, m, n, reps, seed, threads), reps, seed);
}

DecayFit fit_decay(const std::vector<std::int64_t>& sizes, const std::vector<double>& probabilities,
                   const std::vector<double>& variances) {
  if (sizes.size() != probabilities.size() || sizes.size() < 2)
    throw std::invalid_argument("decay fit needs at least two (size, probability) pairs");
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (!(probabilities[k] > 0.0))
      throw std::domain_error("crossing estimate at n = " + std::to_string(sizes[k]) +
                              " is zero; increase reps or use smaller sizes");
  }
  const auto count = static_cast<double>(sizes.size());
  double mean_n = 0.0, mean_y = 0.0;
  std::vector<double> y(sizes.size());
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    y[k] = -std::log(probabilities[k]);
    mean_n += static_cast<double>(sizes[k]);
    mean_y += y[k];
  }
  mean_n /= count;
  mean_y /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const double dn = static_cast<double>(sizes[k]) - mean_n;
    sxx += dn * dn;
    sxy += dn * (y[k] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("decay fit needs distinct sizes");

  DecayFit fit;
  fit.sizes = sizes;
  fit.probabilities = probabilities;
  fit.slope = sxy / sxx;
  fit.gamma_hat = std::max(0.0, fit.slope);
  fit.intercept = mean_y - fit.slope * mean_n;
  double rss = 0.0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const double e = y[k] - (fit.intercept + fit.slope * static_cast<double>(sizes[k]));
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / count);
  if (variances.size() == sizes.size()) {
    // Var(-log P_hat) ~ Var(P_hat) / P^2; slope = sum w_k y_k.
    double var = 0.0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const double w = (static_cast<double>(sizes[k]) - mean_n) / sxx;
      var += w * w * variances[k] / (probabilities[k] * probabilities[k]);
    }
    fit.slope_stderr = std::sqrt(var);
  }
  return fit;
}

DecayFit estimate_gamma(double p, const std::vector<std::int64_t>& sizes, std::int64_t reps, std::uint64_t seed,
                        unsigned threads) {
  require_probability(p);
  require_reps(reps);
  std::vector<double> probs, vars;
  for (auto n : sizes) {
    const auto hits = count_crossings(p, n, n, reps, seed, threads);
    const double ph = static_cast<double>(hits) / static_cast<double>(reps);
    probs.push_back(ph);
    vars.push_back(ph * (1.0 - ph) / static_cast<double>(reps));
  }
  auto fit = fit_decay(sizes, probs, vars);
  fit.p = p;
  return fit;
}

WidthScaling estimate_wn(double p, std::int64_t n, double c, std::int64_t reps, std::uint64_t seed, unsigned threads) {
  require_probability(p);
  require_reps(reps);
  if (n < 2) throw std::invalid_argument("estimate_wn needs n >= 2");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("target probability c must lie in (0, 1)");

  const auto prob = [&](std::int64_t m) {
    return static_cast<double>(count_crossings(p, m, n, reps, seed, threads)) / static_cast<double>(reps);
  };
  WidthScaling out;
  out.n = n;
  out.c = c;
  const double at_n = prob(n);
  if (at_n < c) {
    out.w_hat = n;
    out.probability = at_n;
    out.square_failed = true;
  } else {
    std::int64_t lo = 0, hi = n;  // prob(hi) >= c; prob(lo) < c or lo == 0
    double at_hi = at_n;
    while (hi - lo > 1) {
      const auto mid = lo + (hi - lo) / 2;
      const double pm = prob(mid);
      if (pm >= c) {
        hi = mid;
        at_hi = pm;
      } else {
        lo = mid;
      }
    }
    out.w_hat = hi;
    out.probability = at_hi;
  }
  out.epsilon_hat = 1.0 - std::log(static_cast<double>(out.w_hat)) / std::log(static_cast<double>(n));
  return out;
}

ValueMatrix value_matrix(double p, const Vertex& start, const P1Portfolio& p1, const P2Portfolio& p2,
                         std::int64_t horizon, std::int64_t reps, std::uint64_t seed, unsigned threads) {
  require_probability(p);
  require_reps(reps);
  if (p1.empty() || p2.empty()) throw std::invalid_argument("portfolios must be non-empty");
  std::vector<CellBlock> blocks(static_cast<std::size_t>(reps));
  parallel_for(blocks.size(), threads, [&](std::size_t r) {
    blocks[r] = play_block(replication_config(seed, static_cast<std::int64_t>(r), p), start, p1, p2, horizon);
  });
  return assemble(p, start, p1, p2, horizon, reps, seed, blocks);
}

std::vector<double> equally_spaced_grid(std::int64_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid size must be >= 2");
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  for (std::int64_t k = 0; k < grid_size; ++k)
    grid[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(grid_size - 1);
  return grid;
}

PhaseCurve phase_scan(const ScanOptions& options, const P1Portfolio& p1, const P2Portfolio& p2) {
  require_reps(options.reps);
  if (options.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (p1.empty() || p2.empty()) throw std::invalid_argument("portfolios must be non-empty");
  PhaseCurve curve;
  curve.grid = equally_spaced_grid(options.grid_size);
  curve.horizon = options.horizon;
  curve.reps = options.reps;
  curve.seed = options.seed;
  curve.start = options.start;
  curve.p1 = portfolio_name(p1);
  curve.p2 = portfolio_name(p2);

  const auto G = curve.grid.size();
  const auto R = static_cast<std::size_t>(options.reps);
  std::vector<CellBlock> blocks(G * R);
  parallel_for(blocks.size(), options.threads, [&](std::size_t task) {
    const auto g = task / R;
    const auto r = task % R;
    blocks[task] = play_block(replication_config(options.seed, static_cast<std::int64_t>(r), curve.grid[g]),
                              options.start, p1, p2, options.horizon);
  });
  for (std::size_t g = 0; g < G; ++g) {
    const std::vector<CellBlock> slice(blocks.begin() + static_cast<std::ptrdiff_t>(g * R),
                                       blocks.begin() + static_cast<std::ptrdiff_t>((g + 1) * R));
    const auto vm = assemble(curve.grid[g], options.start, p1, p2, options.horizon, options.reps, options.seed, slice);
    EstimateCI v = vm.value_entry();
    v.mean = vm.value;
    curve.values.push_back(v);
    curve.tail_values.push_back(vm.tail_value);
  }
  curve.thresholds = threshold_crossing(curve, options.low, options.high);
  return curve;
}

std::vector<double> moving_average(const std::vector<double>& values, std::size_t window) {
  if (window == 0) throw std::invalid_argument("smoothing window must be >= 1");
  const auto half = window / 2;
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto lo = k >= half ? k - half : 0;
    const auto hi = std::min(values.size() - 1, k + (window - 1 - half));
    double s = 0.0;
    for (auto i = lo; i <= hi; ++i) s += values[i];
    out[k] = s / static_cast<double>(hi - lo + 1);
  }
  return out;
}

Thresholds threshold_crossing(const std::vector<double>& grid, const std::vector<double>& values, double low,
                              double high) {
  if (!(low > 0.0 && low < high && high < 1.0)) throw std::invalid_argument("thresholds need 0 < low < high < 1");
  if (grid.size() != values.size()) throw std::invalid_argument("grid and values differ in length");
  const auto smooth = moving_average(values, 5);
  Thresholds t;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (smooth[k] <= low) t.green = grid[k];
    if (!t.red && smooth[k] >= high) t.red = grid[k];
  }
  return t;
}

Thresholds threshold_crossing(const PhaseCurve& curve, double low, double high) {
  std::vector<double> v;
  v.reserve(curve.values.size());
  for (const auto& e : curve.values) v.push_back(e.mean);
  return threshold_crossing(curve.grid, v, low, high);
}

double peierls_ratio(double p) {
  require_probability(p);
  // 1 - (1 - p)^4 without cancellation at small p.
  const double q = -std::expm1(4.0 * std::log1p(-p));
  return 5.0 * std::pow(q, 0.2);
}

double peierls_bound(double p) {
  const double r = peierls_ratio(p);
  if (r >= 1.0) throw PeierlsDivergence("Peierls series diverges: 5 q^(1/5) = " + std::to_string(r) + " >= 1");
  const double s = r * r;
  return (1.0 / (1.0 - r)) * s * (1.0 + s) / ((1.0 - s) * (1.0 - s) * (1.0 - s));
}

double peierls_divergence_point() { return -std::expm1(0.25 * std::log1p(-std::pow(5.0, -5.0))); }

double peierls_p0_lower_bound() {
  double lo = 0.0;
  double hi = peierls_divergence_point();
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (peierls_ratio(mid) < 1.0 && peierls_bound(mid) <= 0.5)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace percgame
