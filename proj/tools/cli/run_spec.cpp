#include "run_spec.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "percgame/strategies.hpp"

namespace pgame {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::int64_t to_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), fmt::format("header field '{}': bad integer '{}'", key, text));
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty() && text[0] != '-',
          fmt::format("header field '{}': bad unsigned integer '{}'", key, text));
  return v;
}

double to_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), fmt::format("header field '{}': bad number '{}'", key, text));
  return v;
}

bool known_command(const std::string& c) {
  for (const char* k : {"scan", "play", "crossing", "value", "wn", "gamma", "peierls", "zerochain"})
    if (c == k) return true;
  return false;
}

}  // namespace

std::string format_vertex(const percgame::Vertex& v) { return fmt::format("{},{}", v.x, v.y); }

percgame::Vertex parse_vertex(const std::string& text) {
  const auto comma = text.find(',');
  require(comma != std::string::npos, fmt::format("vertex '{}' must be written x,y", text));
  const percgame::Vertex v{to_int("x", text.substr(0, comma)), to_int("y", text.substr(comma + 1))};
  require(percgame::is_vertex(v), fmt::format("({}) is not a lattice vertex: x + y must be even", text));
  return v;
}

std::string format_sizes(const std::vector<std::int64_t>& sizes) { return fmt::format("{}", fmt::join(sizes, ",")); }

std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int("sizes", item));
  return out;
}

void finalize(RunSpec& spec) {
  require(known_command(spec.command), fmt::format("unknown command '{}'", spec.command));
  require(spec.format == "csv" || spec.format == "svg", "--format must be csv or svg");
  require(spec.format == "csv" || spec.command == "scan", "--format svg is only available for scan");
  require(spec.format == "csv" || !spec.out.empty(), "--format svg needs --out");
  require(spec.p >= 0.0 && spec.p <= 1.0, "--p must lie in [0, 1]");
  require(spec.horizon >= 1, "--horizon must be >= 1");
  require(spec.reps >= 1, "--reps must be >= 1");
  require(spec.grid >= 2, "--grid must be >= 2");
  require(spec.low > 0.0 && spec.low < spec.high && spec.high < 1.0, "--low/--high need 0 < low < high < 1");
  require(percgame::is_vertex(spec.start), "--start must be a lattice vertex (x + y even)");
  require(spec.m >= 1, "--m must be >= 1");
  require(spec.n >= 1, "--n must be >= 1");
  require(spec.c > 0.0 && spec.c < 1.0, "--c must lie in (0, 1)");
  if (spec.command == "wn") require(spec.n >= 2, "--n must be >= 2 for wn");
  if (spec.command == "gamma") {
    require(spec.sizes.size() >= 2, "--sizes needs at least two values");
    for (auto s : spec.sizes) require(s >= 1, "--sizes entries must be >= 1");
  }

  if (spec.command == "play") {
    if (spec.p1.empty()) spec.p1 = "always_top";
    if (spec.p2.empty()) spec.p2 = "follower";
    require(spec.p1.find(',') == std::string::npos, "play takes a single --p1 strategy");
    require(spec.p2.find(',') == std::string::npos, "play takes a single --p2 strategy");
    spec.p1 = percgame::make_p1(spec.p1)->name();
    spec.p2 = percgame::make_p2(spec.p2)->name();
  } else if (spec.command == "scan" || spec.command == "value") {
    if (spec.p1.empty()) spec.p1 = std::string(percgame::kDefaultP1Portfolio);
    if (spec.p2.empty()) spec.p2 = std::string(percgame::kDefaultP2Portfolio);
    spec.p1 = percgame::portfolio_name(percgame::parse_p1_portfolio(spec.p1));
    spec.p2 = percgame::portfolio_name(percgame::parse_p2_portfolio(spec.p2));
  } else {
    require(spec.p1.empty() && spec.p2.empty(), fmt::format("{} takes no --p1/--p2", spec.command));
  }
}

std::vector<std::pair<std::string, std::string>> header_fields(const RunSpec& spec) {
  std::vector<std::pair<std::string, std::string>> f;
  f.emplace_back("tool", kToolName);
  f.emplace_back("version", kToolVersion);
  f.emplace_back("command", spec.command);
  f.emplace_back("seed", fmt::format("{}", spec.seed));
  const auto& c = spec.command;
  if (c == "scan") {
    f.emplace_back("grid", fmt::format("{}", spec.grid));
    f.emplace_back("horizon", fmt::format("{}", spec.horizon));
    f.emplace_back("reps", fmt::format("{}", spec.reps));
    f.emplace_back("start", format_vertex(spec.start));
    f.emplace_back("low", fmt::format("{}", spec.low));
    f.emplace_back("high", fmt::format("{}", spec.high));
    f.emplace_back("p1", spec.p1);
    f.emplace_back("p2", spec.p2);
    f.emplace_back("format", spec.format);
  } else if (c == "play" || c == "value") {
    f.emplace_back("p", fmt::format("{}", spec.p));
    f.emplace_back("horizon", fmt::format("{}", spec.horizon));
    if (c == "value") f.emplace_back("reps", fmt::format("{}", spec.reps));
    f.emplace_back("start", format_vertex(spec.start));
    f.emplace_back("p1", spec.p1);
    f.emplace_back("p2", spec.p2);
  } else if (c == "crossing") {
    f.emplace_back("p", fmt::format("{}", spec.p));
    f.emplace_back("m", fmt::format("{}", spec.m));
    f.emplace_back("n", fmt::format("{}", spec.n));
    f.emplace_back("reps", fmt::format("{}", spec.reps));
  } else if (c == "wn") {
    f.emplace_back("p", fmt::format("{}", spec.p));
    f.emplace_back("n", fmt::format("{}", spec.n));
    f.emplace_back("c", fmt::format("{}", spec.c));
    f.emplace_back("reps", fmt::format("{}", spec.reps));
  } else if (c == "gamma") {
    f.emplace_back("p", fmt::format("{}", spec.p));
    f.emplace_back("sizes", format_sizes(spec.sizes));
    f.emplace_back("reps", fmt::format("{}", spec.reps));
  } else if (c == "peierls") {
    if (spec.has_p) f.emplace_back("p", fmt::format("{}", spec.p));
  } else if (c == "zerochain") {
    f.emplace_back("p", fmt::format("{}", spec.p));
    f.emplace_back("start", format_vertex(spec.start));
    f.emplace_back("m", fmt::format("{}", spec.m));
    f.emplace_back("n", fmt::format("{}", spec.n));
  }
  return f;
}

void write_header(std::ostream& out, const RunSpec& spec,
                  const std::vector<std::pair<std::string, std::string>>& results) {
  for (const auto& [k, v] : header_fields(spec)) out << "# " << k << ": " << v << '\n';
  for (const auto& [k, v] : results) out << "# result." << k << ": " << v << '\n';
}

RunSpec parse_header(std::istream& in, std::map<std::string, std::string>* results) {
  RunSpec spec;
  spec.has_p = false;
  bool saw_tool = false;
  std::string line;
  while (in.peek() == '#' && std::getline(in, line)) {
    require(line.rfind("# ", 0) == 0, fmt::format("malformed header line '{}'", line));
    const auto colon = line.find(": ", 2);
    require(colon != std::string::npos, fmt::format("malformed header line '{}'", line));
    const auto key = line.substr(2, colon - 2);
    const auto value = line.substr(colon + 2);
    if (key.rfind("result.", 0) == 0) {
      if (results) (*results)[key.substr(7)] = value;
    } else if (key == "tool") {
      require(value == kToolName, fmt::format("header written by '{}', not {}", value, kToolName));
      saw_tool = true;
    } else if (key == "version") {
    } else if (key == "command") {
      spec.command = value;
    } else if (key == "seed") {
      spec.seed = to_uint(key, value);
    } else if (key == "p") {
      spec.p = to_real(key, value);
      spec.has_p = true;
    } else if (key == "horizon") {
      spec.horizon = to_int(key, value);
    } else if (key == "reps") {
      spec.reps = to_int(key, value);
    } else if (key == "grid") {
      spec.grid = to_int(key, value);
    } else if (key == "low") {
      spec.low = to_real(key, value);
    } else if (key == "high") {
      spec.high = to_real(key, value);
    } else if (key == "start") {
      spec.start = parse_vertex(value);
    } else if (key == "p1") {
      spec.p1 = value;
    } else if (key == "p2") {
      spec.p2 = value;
    } else if (key == "m") {
      spec.m = to_int(key, value);
    } else if (key == "n") {
      spec.n = to_int(key, value);
    } else if (key == "c") {
      spec.c = to_real(key, value);
    } else if (key == "sizes") {
      spec.sizes = parse_sizes(value);
    } else if (key == "format") {
      spec.format = value;
    } else {
      throw std::invalid_argument(fmt::format("unknown header field '{}'", key));
    }
  }
  require(saw_tool, "missing '# tool:' header line");
  if (spec.command != "peierls") spec.has_p = true;
  return spec;
}

}  // namespace pgame
