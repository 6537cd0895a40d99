#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contpath/contcoeff.hpp"
#include "contpath/geometry.hpp"
#include "contpath/multiseries.hpp"
#include "contpath/pde.hpp"
#include "contpath/smirnov.hpp"
#include "contpath/todd.hpp"
#include "contpath/verify.hpp"

namespace {

using namespace contpath;

// 17 significant digits round-trip every double exactly.
std::string fmt_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number '" + token + "' in vector");
    }
    if (used != token.size()) {
      throw std::invalid_argument("malformed number '" + token + "' in vector");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer '" + token + "' in vector");
    }
    if (used != token.size()) {
      throw std::invalid_argument("malformed integer '" + token + "' in vector");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

// "x=0.25:4:0.25,y=0.25:4:0.25" -> named inclusive ranges.
std::vector<GridAxis> parse_grid(const std::string& text) {
  std::vector<GridAxis> axes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("grid axis must look like name=start:stop:step");
    }
    GridAxis axis;
    axis.name = token.substr(0, eq);
    const std::string range = token.substr(eq + 1);
    const std::size_t c1 = range.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : range.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw std::invalid_argument("grid axis must look like name=start:stop:step");
    }
    const double start = std::stod(range.substr(0, c1));
    const double stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(range.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) {
      throw std::invalid_argument("grid axis needs step > 0 and stop >= start");
    }
    const long long count = static_cast<long long>((stop - start) / step + 1e-9) + 1;
    if (count > 100000) throw std::invalid_argument("grid axis has too many points");
    for (long long i = 0; i < count; ++i) {
      axis.values.push_back(start + static_cast<double>(i) * step);
    }
    axes.push_back(std::move(axis));
    pos = comma + 1;
  }
  return axes;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

// ---- subcommand handlers ----------------------------------------------------

struct CbinomArgs {
  double x = 0.0;
  double y = 0.0;
  double tol = 1e-15;
  std::string grid;
  std::string format = "json";
  bool has_x = false;
  bool has_y = false;
};

int run_cbinom(const CbinomArgs& args) {
  if (!args.grid.empty()) {
    if (args.format != "csv") {
      return usage_error("grid sweeps require --format csv");
    }
    auto axes = parse_grid(args.grid);
    if (axes.size() != 2 ||
        !((axes[0].name == "x" && axes[1].name == "y") ||
          (axes[0].name == "y" && axes[1].name == "x"))) {
      return usage_error("cbinom grid needs exactly axes x and y");
    }
    std::cout << "x,y,value,tail_bound\n";
    for (double a : axes[0].values) {
      for (double b : axes[1].values) {
        const double x = axes[0].name == "x" ? a : b;
        const double y = axes[0].name == "x" ? b : a;
        const EvalResult result = contcoeff::continuous_binomial_closed(x, y, args.tol);
        std::cout << fmt_double(x) << ',' << fmt_double(y) << ','
                  << fmt_double(result.value) << ',' << fmt_double(result.tail_bound)
                  << '\n';
      }
    }
    return 0;
  }

  if (!args.has_x || !args.has_y) {
    return usage_error("cbinom requires --x and --y (or --grid)");
  }
  const EvalResult result = contcoeff::continuous_binomial_closed(args.x, args.y, args.tol);
  if (args.format == "csv") {
    std::cout << "x,y,value,tail_bound\n"
              << fmt_double(args.x) << ',' << fmt_double(args.y) << ','
              << fmt_double(result.value) << ',' << fmt_double(result.tail_bound) << '\n';
  } else {
    std::cout << "{\"value\":" << fmt_double(result.value)
              << ",\"tail_bound\":" << fmt_double(result.tail_bound)
              << ",\"terms_used\":" << result.terms_used << ",\"x\":" << fmt_double(args.x)
              << ",\"y\":" << fmt_double(args.y) << "}\n";
  }
  return 0;
}

struct CmultinomialArgs {
  std::string x;
  int cap = -1;
  bool has_cap = false;
  std::string method = "series";
  std::string format = "json";
};

int run_cmultinomial(const CmultinomialArgs& args) {
  const std::vector<double> xs = parse_double_list(args.x);
  const int cap = args.has_cap ? args.cap : contcoeff::default_cap(xs);
  const EvalResult result = args.method == "borel"
                                ? contcoeff::continuous_multinomial_borel(xs, cap)
                                : contcoeff::continuous_multinomial_series(xs, cap);
  if (args.format == "csv") {
    std::cout << "value,tail_bound,cap\n"
              << fmt_double(result.value) << ',' << fmt_double(result.tail_bound) << ','
              << cap << '\n';
  } else {
    std::cout << "{\"value\":" << fmt_double(result.value)
              << ",\"tail_bound\":" << fmt_double(result.tail_bound) << ",\"cap\":" << cap;
    if (!result.flag.empty()) std::cout << ",\"flag\":\"" << result.flag << "\"";
    std::cout << "}\n";
  }
  return 0;
}

struct SmirnovArgs {
  std::string nu;
  int d = 0;
  int n = -1;
  bool has_d = false;
  bool has_n = false;
  bool list = false;
  int limit = smirnov::kDefaultEnumerationLimit;
};

int run_smirnov(const SmirnovArgs& args) {
  const bool count_mode = !args.nu.empty();
  const bool enum_mode = args.has_d || args.has_n;
  if (count_mode == enum_mode) {
    return usage_error("smirnov needs either --nu or both --d and --n");
  }
  if (count_mode) {
    const std::vector<long long> raw = parse_int_list(args.nu);
    std::vector<int> nu;
    for (long long v : raw) {
      if (v < 0 || v > 1000000) throw std::invalid_argument("frequency entries must be in [0, 1e6]");
      nu.push_back(static_cast<int>(v));
    }
    const BigInt count = smirnov::count_smirnov(smirnov::FrequencyVector(nu));
    std::cout << "{\"nu\":[";
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (i > 0) std::cout << ',';
      std::cout << nu[i];
    }
    // Counts beyond the int64 range are quoted to stay faithful in JSON.
    const bool fits = count >= 0 && count <= BigInt(9223372036854775807LL);
    std::cout << "],\"count\":" << (fits ? count.str() : "\"" + count.str() + "\"") << "}\n";
    return 0;
  }
  if (!args.has_d || !args.has_n) {
    return usage_error("smirnov enumeration needs both --d and --n");
  }
  const auto words = smirnov::enumerate_smirnov(args.d, args.n, args.limit);
  std::cout << "{\"d\":" << args.d << ",\"n\":" << args.n << ",\"count\":" << words.size();
  if (args.list) {
    std::cout << ",\"words\":[";
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0) std::cout << ',';
      std::cout << '"' << words[i].str() << '"';
    }
    std::cout << ']';
  }
  std::cout << "}\n";
  return 0;
}

int run_paths(const std::string& q_text) {
  const std::vector<long long> q = parse_int_list(q_text);
  const BigInt count = geometry::count_lattice_paths(q);
  std::cout << "{\"count\":\"" << count.str() << "\"}\n";
  return 0;
}

struct VolumeArgs {
  std::string word;
  std::string x;
  std::string measure = "cd";
};

int run_volume(const VolumeArgs& args) {
  const std::vector<double> xs = parse_double_list(args.x);
  const smirnov::SmirnovWord word =
      smirnov::SmirnovWord::parse(static_cast<int>(xs.size()), args.word);
  std::vector<Rational> target;
  target.reserve(xs.size());
  for (double v : xs) target.push_back(rational_from_double(v));
  const geometry::PatternPolytope pattern(word, std::move(target));
  const double volume = geometry::pattern_volume(pattern, geometry::parse_measure(args.measure));
  std::cout << "{\"word\":\"" << args.word << "\",\"measure\":\"" << args.measure
            << "\",\"volume\":" << fmt_double(volume) << "}\n";
  return 0;
}

struct ToddArgs {
  int n = 0;
  long long x = 0;
  std::string variant = "two_sided";
};

int run_todd(const ToddArgs& args) {
  const todd::SimplexVariant variant = todd::parse_variant(args.variant);
  const Rational count =
      todd::kp_discretize(todd::perturbed_simplex_volume(args.n, args.x, variant));

  long long upper_index = 0;
  long long lower_index = 0;
  switch (variant) {
    case todd::SimplexVariant::two_sided:
      upper_index = args.x - 1;
      lower_index = args.n - 1;
      break;
    case todd::SimplexVariant::upper:
      upper_index = args.x;
      lower_index = args.n;
      break;
    case todd::SimplexVariant::lower:
      upper_index = args.x - 1;
      lower_index = args.n;
      break;
  }
  const BigInt expected = binomial(upper_index, lower_index);
  std::cout << "{\"count\":\"" << to_fraction_string(count) << "\",\"expected\":\"C("
            << upper_index << ',' << lower_index << ")=" << expected.str() << "\"}\n";
  return count == Rational(expected) ? 0 : 2;
}

int run_pde_check(int d, int cap) {
  const pde::ResidualReport report = pde::pde_residual_series(d, cap);
  std::cout << "{\"ok\":" << (report.clean() ? "true" : "false")
            << ",\"trustworthy_degree\":" << report.trustworthy_degree
            << ",\"max_residual\":\"" << to_fraction_string(report.max_abs_coefficient)
            << "\"}\n";
  return report.clean() ? 0 : 2;
}

int run_verify_all(bool quick) {
  const auto results = verify::run_all({quick});
  int passed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "\n      " << r.detail << "\n";
    std::cerr << r.name << ": " << fmt_double(r.seconds) << " s\n";
    if (r.pass) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed"
            << (quick ? " (quick mode)" : "") << "\n";
  return verify::all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous binomial/multinomial coefficients, path-polytope volumes, "
               "and exact Todd-operator discretization"};
  app.require_subcommand(1);

  CbinomArgs cbinom_args;
  auto* cbinom = app.add_subcommand("cbinom", "Continuous binomial coefficient (closed form)");
  auto* opt_x = cbinom->add_option("--x", cbinom_args.x, "first coordinate, >= 0");
  auto* opt_y = cbinom->add_option("--y", cbinom_args.y, "second coordinate, >= 0");
  cbinom->add_option("--tol", cbinom_args.tol, "series tolerance")->capture_default_str();
  cbinom->add_option("--grid", cbinom_args.grid,
                     "sweep 'x=start:stop:step,y=start:stop:step' (CSV output)");
  cbinom->add_option("--format", cbinom_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  CmultinomialArgs cmulti_args;
  auto* cmulti = app.add_subcommand("cmultinomial", "Continuous multinomial coefficient");
  cmulti->add_option("--x", cmulti_args.x, "comma-separated coordinates, length >= 2")
      ->required();
  auto* opt_cap = cmulti->add_option("--cap", cmulti_args.cap, "series truncation cap");
  cmulti->add_option("--method", cmulti_args.method, "series or borel")
      ->check(CLI::IsMember({"series", "borel"}))
      ->capture_default_str();
  cmulti->add_option("--format", cmulti_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SmirnovArgs smirnov_args;
  auto* smirnov_cmd = app.add_subcommand("smirnov", "Count or enumerate adjacently-distinct words");
  smirnov_cmd->add_option("--nu", smirnov_args.nu, "frequency vector, e.g. 2,1");
  auto* opt_d = smirnov_cmd->add_option("--d", smirnov_args.d, "alphabet size");
  auto* opt_n = smirnov_cmd->add_option("--n", smirnov_args.n, "word length");
  smirnov_cmd->add_flag("--list", smirnov_args.list, "include the words themselves");
  smirnov_cmd->add_option("--limit", smirnov_args.limit, "enumeration length limit")
      ->capture_default_str();

  std::string paths_q;
  auto* paths_cmd = app.add_subcommand("paths", "Count monotone lattice paths to a target");
  paths_cmd->add_option("--q", paths_q, "comma-separated non-negative integers")->required();

  VolumeArgs volume_args;
  auto* volume_cmd = app.add_subcommand("volume", "Volume of one pattern polytope");
  volume_cmd->add_option("--word", volume_args.word, "pattern word, e.g. 1212")->required();
  volume_cmd->add_option("--x", volume_args.x, "comma-separated targets")->required();
  volume_cmd->add_option("--measure", volume_args.measure, "cd or riemannian")
      ->check(CLI::IsMember({"cd", "riemannian"}))
      ->capture_default_str();

  ToddArgs todd_args;
  auto* todd_cmd = app.add_subcommand("todd", "Khovanskii-Pukhlikov discretization of a simplex");
  todd_cmd->add_option("--n", todd_args.n, "simplex dimension, >= 1")->required();
  todd_cmd->add_option("--x", todd_args.x, "integer dilation, >= 1")->required();
  todd_cmd->add_option("--variant", todd_args.variant, "two_sided, upper or lower")
      ->check(CLI::IsMember({"two_sided", "upper", "lower"}))
      ->capture_default_str();

  int pde_d = 0;
  int pde_cap = 0;
  auto* pde_cmd = app.add_subcommand("pde-check", "Exact PDE residual check");
  pde_cmd->add_option("--d", pde_d, "dimension, >= 2")->required();
  pde_cmd->add_option("--cap", pde_cap, "series cap, >= 2*d")->required();

  bool verify_quick = false;
  auto* verify_cmd = app.add_subcommand("verify-all", "Run the full verification suite");
  verify_cmd->add_flag("--quick", verify_quick, "smaller sweeps for a fast smoke pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cbinom->parsed()) {
      cbinom_args.has_x = opt_x->count() > 0;
      cbinom_args.has_y = opt_y->count() > 0;
      return run_cbinom(cbinom_args);
    }
    if (cmulti->parsed()) {
      cmulti_args.has_cap = opt_cap->count() > 0;
      return run_cmultinomial(cmulti_args);
    }
    if (smirnov_cmd->parsed()) {
      smirnov_args.has_d = opt_d->count() > 0;
      smirnov_args.has_n = opt_n->count() > 0;
      return run_smirnov(smirnov_args);
    }
    if (paths_cmd->parsed()) return run_paths(paths_q);
    if (volume_cmd->parsed()) return run_volume(volume_args);
    if (todd_cmd->parsed()) return run_todd(todd_args);
    if (pde_cmd->parsed()) return run_pde_check(pde_d, pde_cap);
    if (verify_cmd->parsed()) return run_verify_all(verify_quick);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return usage_error("no subcommand selected");
}
