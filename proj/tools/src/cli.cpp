#include "qsimplex_cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qsimplex/bell.hpp"
#include "qsimplex/errors.hpp"
#include "qsimplex/export.hpp"
#include "qsimplex/measure.hpp"
#include "qsimplex/protocol.hpp"
#include "qsimplex/separability.hpp"
#include "qsimplex/serialize.hpp"
#include "qsimplex/verify.hpp"

namespace qsimplex::cli {

namespace {

struct Options {
  int n = 4;
  std::string c_text = "0,0,0";
  bool raw = false;
  int steps = kDefaultMaxSteps;
  int resolution = 11;
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  std::string out_path;
  std::string format = "json";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CVec parse_c(const std::string& text) {
  CVec c;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = text.find(',', pos);
    if ((i < 2) != (end != std::string::npos))
      throw UsageError("--c expects three comma-separated numbers, got '" + text + "'");
    std::string part = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (!part.empty() && part.front() == '+') part.erase(0, 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty() || !std::isfinite(v))
      throw UsageError("--c component '" + part + "' is not a number");
    c[i] = v;
    pos = end + 1;
  }
  return c;
}

void require_even_n(int n) {
  if (n < 2 || n % 2 != 0) throw UsageError("--n must be an even integer >= 2");
}

void require_dense_n(int n) {
  require_even_n(n);
  if (n > kDenseQubitCap) throw UsageError("--n must be at most 8 for this command");
}

Convention convention(const Options& o) { return o.raw ? Convention::Raw : Convention::Canonical; }

std::string cmd_classify(const Options& o) {
  require_even_n(o.n);
  return to_json(classify_point(parse_c(o.c_text), o.n, convention(o)));
}

std::string cmd_measure(const Options& o) {
  require_even_n(o.n);
  const CVec c = to_canonical(parse_c(o.c_text), o.n, convention(o));
  if (!is_physical(c, o.n)) throw UsageError("state is unphysical for n = " + std::to_string(o.n));
  MeasureReport r;
  r.n = o.n;
  r.c = c;
  r.e_closed = entanglement_closed(c, o.n);
  r.info = info_content(c, o.n);
  if (o.n == 2) {
    const FlipOperator ops[1] = {wootters_flip()};
    const double b = bound_B(density(SimplexState(2, c)), ops);
    r.b_bound = 2.0 * b * b;
    r.b_operators = "wootters (2 C^2)";
  } else if (o.n == 4) {
    const double b = bound_B(density(SimplexState(4, c)), four_flip_operators());
    r.b_bound = b * b;
    r.b_operators = "sixteen 4-flip (B^2)";
  } else {
    r.b_bound = std::numeric_limits<double>::quiet_NaN();
    r.b_operators = "none";
  }
  return to_json(r);
}

std::string cmd_protocol(const Options& o) {
  require_even_n(o.n);
  if (o.steps < 1) throw UsageError("--steps must be positive");
  const CVec c = parse_c(o.c_text);
  if (!is_physical(c, o.n, convention(o))) throw UsageError("initial state is unphysical");
  const ProtocolTrace t = iterate(c, o.n, o.steps, kDefaultEpsilon, convention(o));
  return o.format == "csv" ? trace_to_csv(t) : to_json(t);
}

std::string cmd_bell(const Options& o) {
  require_even_n(o.n);
  if (o.restarts < 1) throw UsageError("--restarts must be positive");
  const CVec c = to_canonical(parse_c(o.c_text), o.n, convention(o));
  if (!is_physical(c, o.n)) throw UsageError("state is unphysical for n = " + std::to_string(o.n));
  BellReport r;
  r.n = o.n;
  r.c = c;
  r.m = m_value(c);
  r.max_violation = max_violation(c, o.n);
  r.optimized = optimize_settings(SimplexState(o.n, c), o.restarts, o.seed);
  return to_json(r);
}

std::string cmd_decompose(const Options& o) {
  require_dense_n(o.n);
  const CVec c = parse_c(o.c_text);
  if (!in_octahedron(c))
    throw UsageError("point lies outside the octahedron; no separable decomposition exists");
  return to_json(separable_decomposition(c, o.n, convention(o)));
}

std::string cmd_sample(const Options& o) {
  require_even_n(o.n);
  if (o.resolution < 2) throw UsageError("--resolution must be >= 2");
  const auto points = sample_grid(o.n, o.resolution);
  return o.format == "csv" ? grid_to_csv(points) : grid_to_json(points);
}

int cmd_verify(const Options& o, std::string& text) {
  bool all = true;
  std::ostringstream os;
  for (const CriterionResult& r : run_acceptance(o.seed)) {
    os << format_result(r) << '\n';
    all = all && r.passed;
  }
  text = os.str();
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-parameter simplex of n-qubit states", "qsimplex"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_c) {
    sub->add_option("--n", o.n, "Even qubit count")->capture_default_str();
    if (with_c) {
      sub->add_option("--c", o.c_text, "Coefficients c1,c2,c3")->capture_default_str();
      sub->add_flag("--raw", o.raw, "Read and write c in raw instead of canonical coordinates");
    }
    sub->add_option("--out", o.out_path, "Write the result to this file");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  };

  CLI::App* classify = app.add_subcommand("classify", "Classify one state");
  add_common(classify, true);
  CLI::App* measure = app.add_subcommand("measure", "Entanglement, bound and information content");
  add_common(measure, true);
  CLI::App* protocol = app.add_subcommand("protocol", "Iterate the purification map");
  add_common(protocol, true);
  protocol->add_option("--steps", o.steps, "Maximum number of steps")->capture_default_str();
  CLI::App* bell = app.add_subcommand("bell", "CHSH criterion and optimized settings");
  add_common(bell, true);
  bell->add_option("--restarts", o.restarts, "Optimizer restarts")->capture_default_str();
  CLI::App* decompose = app.add_subcommand("decompose", "Separable product-state ensemble");
  add_common(decompose, true);
  CLI::App* sample = app.add_subcommand("sample", "Classified grid over [-1,1]^3");
  add_common(sample, false);
  sample->add_option("--resolution", o.resolution, "Points per axis")->capture_default_str();
  CLI::App* verify = app.add_subcommand("verify", "Run every acceptance check");
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--out", o.out_path, "Write the report to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string text;
  int code = kExitOk;
  try {
    if (*classify) text = cmd_classify(o);
    else if (*measure) text = cmd_measure(o);
    else if (*protocol) text = cmd_protocol(o);
    else if (*bell) text = cmd_bell(o);
    else if (*decompose) text = cmd_decompose(o);
    else if (*sample) text = cmd_sample(o);
    else if (*verify) code = cmd_verify(o, text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!text.empty() && text.back() != '\n') text.push_back('\n');

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace qsimplex::cli
