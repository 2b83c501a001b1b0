#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "percgame/engine.hpp"
#include "percgame/estimators.hpp"
#include "percgame/perc.hpp"

namespace pgame {

namespace {

using Results = std::vector<std::pair<std::string, std::string>>;

std::string opt(const std::optional<double>& v) { return v ? fmt::format("{}", *v) : "none"; }

void write_svg(std::ostream& out, const percgame::PhaseCurve& curve) {
  constexpr double W = 640, H = 420, L = 60, R = 20, T = 20, B = 50;
  const auto px = [&](double p) { return L + p * (W - L - R); };
  const auto py = [&](double v) { return H - B - v * (H - T - B); };
  out << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                     W, H, W, H);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n", L, py(0), px(1), py(0));
  out << fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n", L, py(0), L, py(1));
  for (int k = 0; k <= 4; ++k) {
    const double t = k / 4.0;
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" text-anchor=\"middle\">{:.2f}</text>\n", px(t),
                       py(0) + 16, t);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" text-anchor=\"end\">{:.2f}</text>\n", L - 6,
                       py(t) + 4, t);
  }
  out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"13\" text-anchor=\"middle\">p</text>\n", px(0.5),
                     H - 12);
  out << fmt::format(
      "<text x=\"16\" y=\"{:.1f}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1f})\">"
      "estimated value</text>\n",
      py(0.5), py(0.5));
  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < curve.grid.size(); ++k)
    out << fmt::format("{}{:.2f},{:.2f}", k ? " " : "", px(curve.grid[k]), py(curve.values[k].mean));
  out << "\"/>\n";
  const auto marker = [&](const std::optional<double>& p, const char* colour, const char* label) {
    if (!p) return;
    out << fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"{3}\" stroke-dasharray=\"4 3\"/>\n",
        px(*p), py(0), py(1), colour);
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" fill=\"{}\">{} {}</text>\n", px(*p) + 3,
                       py(1) + 12, colour, label, *p);
  };
  marker(curve.thresholds.green, "green", "green");
  marker(curve.thresholds.red, "red", "red");
  out << "</svg>\n";
}

void scan(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  percgame::ScanOptions o;
  o.grid_size = spec.grid;
  o.horizon = spec.horizon;
  o.reps = spec.reps;
  o.seed = spec.seed;
  o.start = spec.start;
  o.low = spec.low;
  o.high = spec.high;
  o.threads = spec.threads;
  const auto curve = percgame::phase_scan(o, percgame::parse_p1_portfolio(spec.p1), percgame::parse_p2_portfolio(spec.p2));
  std::vector<double> means;
  for (const auto& v : curve.values) means.push_back(v.mean);
  const auto smooth = percgame::moving_average(means, 5);

  write_header(csv, spec, {{"green", opt(curve.thresholds.green)}, {"red", opt(curve.thresholds.red)}});
  csv << "p,value,half_width,tail_value,smoothed\n";
  for (std::size_t k = 0; k < curve.grid.size(); ++k)
    csv << fmt::format("{},{},{},{},{}\n", curve.grid[k], curve.values[k].mean, curve.values[k].half_width,
                       curve.tail_values[k], smooth[k]);
  if (spec.format == "svg") {
    const auto dot = spec.out.rfind('.');
    const auto path = (dot == std::string::npos ? spec.out : spec.out.substr(0, dot)) + ".svg";
    std::ofstream svg(path);
    if (!svg) throw std::invalid_argument(fmt::format("--out: cannot write '{}'", path));
    write_svg(svg, curve);
  }
  summary << fmt::format("scan: {} points, green={}, red={}\n", curve.grid.size(), opt(curve.thresholds.green),
                         opt(curve.thresholds.red));
}

void play(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const percgame::Configuration config(spec.seed, spec.p);
  auto s1 = percgame::make_p1(spec.p1);
  auto s2 = percgame::make_p2(spec.p2);
  const auto t = percgame::play(config, spec.start, *s1, *s2, spec.horizon);
  const auto avg = t.running_avg(spec.horizon);
  write_header(csv, spec,
               {{"average", fmt::format("{}/{}", avg.num, avg.den)}, {"tail_max", fmt::format("{}", percgame::tail_max_average(t))}});
  percgame::write_trajectory_csv(csv, t);
  summary << fmt::format("play: {} vs {}, average cost {}/{} = {}\n", spec.p1, spec.p2, avg.num, avg.den,
                         avg.to_double());
}

void crossing(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const auto e = percgame::crossing_probability(spec.p, spec.m, spec.n, spec.reps, spec.seed, spec.threads);
  write_header(csv, spec);
  csv << "p,m,n,reps,mean,half_width\n";
  csv << fmt::format("{},{},{},{},{},{}\n", spec.p, spec.m, spec.n, spec.reps, e.mean, e.half_width);
  summary << fmt::format("crossing: P = {} +/- {}\n", e.mean, e.half_width);
}

void value(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const auto p1 = percgame::parse_p1_portfolio(spec.p1);
  const auto p2 = percgame::parse_p2_portfolio(spec.p2);
  const auto vm = percgame::value_matrix(spec.p, spec.start, p1, p2, spec.horizon, spec.reps, spec.seed, spec.threads);
  write_header(csv, spec,
               {{"value", fmt::format("{}", vm.value)},
                {"tail_value", fmt::format("{}", vm.tail_value)},
                {"best_p1", vm.p1_names[vm.best_row]},
                {"best_p2", vm.p2_names[vm.best_column]}});
  csv << "p1,p2,mean,half_width,tail_mean\n";
  for (std::size_t i = 0; i < vm.p1_names.size(); ++i)
    for (std::size_t j = 0; j < vm.p2_names.size(); ++j)
      csv << fmt::format("{},{},{},{},{}\n", vm.p1_names[i], vm.p2_names[j], vm.entries[i][j].mean,
                         vm.entries[i][j].half_width, vm.tail_entries[i][j]);
  summary << fmt::format("value: v = {} ({} vs {})\n", vm.value, vm.p1_names[vm.best_row], vm.p2_names[vm.best_column]);
}

void wn(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const auto w = percgame::estimate_wn(spec.p, spec.n, spec.c, spec.reps, spec.seed, spec.threads);
  write_header(csv, spec);
  csv << "n,c,w_hat,probability,epsilon_hat,square_failed\n";
  csv << fmt::format("{},{},{},{},{},{}\n", w.n, w.c, w.w_hat, w.probability, w.epsilon_hat, w.square_failed ? 1 : 0);
  summary << fmt::format("wn: w_hat = {}{}, epsilon_hat = {}\n", w.w_hat, w.square_failed ? " (square failed)" : "",
                         w.epsilon_hat);
}

void gamma(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const auto fit = percgame::estimate_gamma(spec.p, spec.sizes, spec.reps, spec.seed, spec.threads);
  write_header(csv, spec,
               {{"gamma_hat", fmt::format("{}", fit.gamma_hat)},
                {"slope_stderr", fmt::format("{}", fit.slope_stderr)},
                {"intercept", fmt::format("{}", fit.intercept)},
                {"residual", fmt::format("{}", fit.residual)}});
  csv << "n,probability,neg_log_probability\n";
  for (std::size_t k = 0; k < fit.sizes.size(); ++k)
    csv << fmt::format("{},{},{}\n", fit.sizes[k], fit.probabilities[k], -std::log(fit.probabilities[k]));
  summary << fmt::format("gamma: gamma_hat = {} +/- {}\n", fit.gamma_hat, 1.959963984540054 * fit.slope_stderr);
}

void peierls(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const double p0 = percgame::peierls_p0_lower_bound();
  const double div = percgame::peierls_divergence_point();
  if (!spec.has_p) {
    write_header(csv, spec, {{"p0_lower_bound", fmt::format("{}", p0)}, {"divergence_point", fmt::format("{}", div)}});
    csv << "p0_lower_bound,divergence_point\n" << fmt::format("{},{}\n", p0, div);
    summary << fmt::format("peierls: p0 >= {}\n", p0);
    return;
  }
  const double bound = percgame::peierls_bound(spec.p);  // throws on divergence
  const double q = 1.0 - std::pow(1.0 - spec.p, 4);
  write_header(csv, spec, {{"p0_lower_bound", fmt::format("{}", p0)}, {"divergence_point", fmt::format("{}", div)}});
  csv << "p,q,r,bound\n" << fmt::format("{},{},{},{}\n", spec.p, q, percgame::peierls_ratio(spec.p), bound);
  summary << fmt::format("peierls: B({}) = {}; p0 >= {}\n", spec.p, bound, p0);
}

void zerochain(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  const percgame::Configuration config(spec.seed, spec.p);
  const percgame::BoxSpec window{spec.start, spec.m, spec.n};
  const auto chain = percgame::find_zero_chain(config, window);
  write_header(csv, spec,
               {{"found", chain ? "1" : "0"}, {"length", fmt::format("{}", chain ? chain->centers.size() : 0)}});
  csv << "index,cx,cy\n";
  if (chain)
    for (std::size_t k = 0; k < chain->centers.size(); ++k)
      csv << fmt::format("{},{},{}\n", k, chain->centers[k].x, chain->centers[k].y);
  summary << (chain ? fmt::format("zerochain: found, {} squares\n", chain->centers.size())
                    : std::string("zerochain: no crossing chain in the window\n"));
}

}  // namespace

void run(const RunSpec& spec, std::ostream& csv, std::ostream& summary) {
  std::ostringstream body;
  const auto& c = spec.command;
  if (c == "scan") scan(spec, body, summary);
  else if (c == "play") play(spec, body, summary);
  else if (c == "crossing") crossing(spec, body, summary);
  else if (c == "value") value(spec, body, summary);
  else if (c == "wn") wn(spec, body, summary);
  else if (c == "gamma") gamma(spec, body, summary);
  else if (c == "peierls") peierls(spec, body, summary);
  else if (c == "zerochain") zerochain(spec, body, summary);
  else throw std::invalid_argument(fmt::format("unknown command '{}'", c));

  if (spec.out.empty()) {
    csv << body.str();
    return;
  }
  std::ofstream file(spec.out, std::ios::binary);
  if (!file) throw std::invalid_argument(fmt::format("--out: cannot write '{}'", spec.out));
  file << body.str();
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Percolation game simulator", kToolName};
  app.require_subcommand(1);
  RunSpec spec;
  std::string start = "0,0";
  std::string sizes = "8,16,24,32";

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", spec.seed, "Master seed")->envname("PERCGAME_SEED");
    sub->add_option("--out", spec.out, "CSV output path (default: stdout)");
    sub->add_option("--threads", spec.threads, "Worker threads (0: hardware parallelism)");
  };
  const auto prob = [&](CLI::App* sub) { return sub->add_option("--p", spec.p, "Edge opening probability"); };

  auto* scan_cmd = app.add_subcommand("scan", "Phase scan of the estimated value over an equally spaced p grid");
  common(scan_cmd);
  scan_cmd->add_option("--format", spec.format, "csv, or svg for an extra plot next to --out");
  scan_cmd->add_option("--grid", spec.grid, "Number of grid points");
  scan_cmd->add_option("--horizon", spec.horizon, "Stages per game");
  scan_cmd->add_option("--reps", spec.reps, "Replications per p");
  scan_cmd->add_option("--start", start, "Start vertex x,y");
  scan_cmd->add_option("--low", spec.low, "Green cutoff");
  scan_cmd->add_option("--high", spec.high, "Red cutoff");
  scan_cmd->add_option("--p1", spec.p1, "Player 1 portfolio");
  scan_cmd->add_option("--p2", spec.p2, "Player 2 portfolio");

  auto* play_cmd = app.add_subcommand("play", "Play one game and write its trajectory");
  common(play_cmd);
  prob(play_cmd);
  play_cmd->add_option("--horizon", spec.horizon, "Stages");
  play_cmd->add_option("--start", start, "Start vertex x,y");
  play_cmd->add_option("--p1", spec.p1, "Player 1 strategy");
  play_cmd->add_option("--p2", spec.p2, "Player 2 strategy");

  auto* crossing_cmd = app.add_subcommand("crossing", "Monte Carlo vertical crossing probability of (-m,m]x(-n,n]");
  common(crossing_cmd);
  prob(crossing_cmd);
  crossing_cmd->add_option("--m", spec.m, "Half-width");
  crossing_cmd->add_option("--n", spec.n, "Half-height");
  crossing_cmd->add_option("--reps", spec.reps, "Replications");

  auto* value_cmd = app.add_subcommand("value", "Portfolio value matrix at one p");
  common(value_cmd);
  prob(value_cmd);
  value_cmd->add_option("--horizon", spec.horizon, "Stages per game");
  value_cmd->add_option("--reps", spec.reps, "Replications");
  value_cmd->add_option("--start", start, "Start vertex x,y");
  value_cmd->add_option("--p1", spec.p1, "Player 1 portfolio");
  value_cmd->add_option("--p2", spec.p2, "Player 2 portfolio");

  auto* wn_cmd = app.add_subcommand("wn", "Smallest half-width whose crossing probability reaches c");
  common(wn_cmd);
  prob(wn_cmd);
  wn_cmd->add_option("--n", spec.n, "Half-height");
  wn_cmd->add_option("--c", spec.c, "Target probability");
  wn_cmd->add_option("--reps", spec.reps, "Replications per estimate");

  auto* gamma_cmd = app.add_subcommand("gamma", "Exponential decay rate of square crossings");
  common(gamma_cmd);
  prob(gamma_cmd);
  gamma_cmd->add_option("--sizes", sizes, "Comma separated box sizes n");
  gamma_cmd->add_option("--reps", spec.reps, "Replications per size");

  auto* peierls_cmd = app.add_subcommand("peierls", "Peierls bound B(p) and the certified lower bound on p0");
  common(peierls_cmd);
  auto* peierls_p = prob(peierls_cmd);

  auto* zero_cmd = app.add_subcommand("zerochain", "Search a crossing chain of 0-squares in a window");
  common(zero_cmd);
  prob(zero_cmd);
  zero_cmd->add_option("--start", start, "Window center x,y");
  zero_cmd->add_option("--m", spec.m, "Window half-width");
  zero_cmd->add_option("--n", spec.n, "Window half-height");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    spec.command = app.get_subcommands().front()->get_name();
    spec.start = parse_vertex(start);
    spec.sizes = parse_sizes(sizes);
    spec.has_p = spec.command != "peierls" || peierls_p->count() > 0;
    finalize(spec);
    run(spec, out, spec.out.empty() ? err : out);
  } catch (const std::domain_error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}

}  // namespace pgame
