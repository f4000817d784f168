#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "dirichlet/counterexample.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/fourier.hpp"
#include "dirichlet/function_spec.hpp"
#include "dirichlet/kernel.hpp"
#include "dirichlet/oscillatory.hpp"
#include "json.hpp"

namespace dirichlet::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flag values as typed on the command line; each command parses the ones
// it reads.
struct RawOptions {
  std::string function;
  std::string x;
  std::string n;
  std::string i;
  std::string g;
  std::string h;
  std::string tol;
  std::string format = "json";
  std::string out;
  std::string kind = "v";
  std::string bound;
};

struct Record {
  Json inputs = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Json extras = Json::object();
};

// ---- value parsing ---------------------------------------------------------

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

// Accepts a decimal literal, "pi", "-pi", or "pi/<decimal>".
double parse_real(std::string_view flag, std::string_view text) {
  auto fail = [&]() -> double {
    throw UsageError(std::string(flag) + ": expected a real number, got \"" +
                     std::string(text) + "\"");
  };
  double sign = 1.0;
  std::string_view body = text;
  if (body.starts_with('-') && body.substr(1).starts_with("pi")) {
    sign = -1.0;
    body.remove_prefix(1);
  }
  if (body.starts_with("pi")) {
    body.remove_prefix(2);
    if (body.empty()) return sign * kPi;
    if (!body.starts_with('/')) fail();
    return sign * kPi / parse_real(flag, body.substr(1));
  }
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty() ||
      !std::isfinite(v)) {
    fail();
  }
  return v;
}

long long parse_integer(std::string_view flag, std::string_view text) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw UsageError(std::string(flag) + ": expected an integer, got \"" +
                     std::string(text) + "\"");
  }
  return v;
}

std::vector<double> parse_real_list(std::string_view flag, const std::string& text) {
  std::vector<double> out;
  for (std::string_view part : split_list(text)) out.push_back(parse_real(flag, part));
  return out;
}

std::vector<long long> parse_integer_list(std::string_view flag, const std::string& text) {
  std::vector<long long> out;
  for (std::string_view part : split_list(text)) out.push_back(parse_integer(flag, part));
  return out;
}

const std::string& required(std::string_view flag, const std::string& value) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
  return value;
}

long long single_integer(std::string_view flag, const std::string& text) {
  const auto values = parse_integer_list(flag, required(flag, text));
  if (values.size() != 1) throw UsageError(std::string(flag) + " takes a single integer here");
  return values.front();
}

int to_int(std::string_view flag, long long v) {
  if (v < 0 || v > 1'000'000) {
    throw UsageError(std::string(flag) + ": " + std::to_string(v) + " outside [0, 1000000]");
  }
  return static_cast<int>(v);
}

double optional_real(std::string_view flag, const std::string& text, double fallback) {
  return text.empty() ? fallback : parse_real(flag, text);
}

// ---- commands --------------------------------------------------------------

Record validate(const RawOptions& o) {
  const auto f = load_spec(required("--function", o.function));
  Record r;
  r.inputs["function"] = o.function;
  r.columns = {"lo", "hi", "value_lo", "value_hi"};
  Json directions = Json::array();
  for (const MonotoneSegment& s : f.segments()) {
    r.rows.push_back({s.lo(), s.hi(), s.value_at_lo(), s.value_at_hi()});
    directions.push_back(to_string(s.direction()));
  }
  Json jumps = Json::array();
  for (const JumpPoint& j : f.jumps()) jumps.push_back(j.x);
  r.extras["valid"] = true;
  r.extras["jumps"] = jumps;
  r.extras["segments"] = f.segments().size();
  r.extras["directions"] = directions;
  r.extras["extrema_and_jumps"] = f.extrema_and_jumps();
  return r;
}

Record coeffs(const RawOptions& o) {
  const auto f = load_spec(required("--function", o.function));
  const int n = to_int("--n", single_integer("--n", o.n));
  const double tol = optional_real("--tol", o.tol, 1e-10);
  const auto c = coefficients(f, n, tol);
  Record r;
  r.inputs["function"] = o.function;
  r.inputs["n"] = n;
  r.inputs["tol"] = tol;
  r.columns = {"k", "a_k", "b_k"};
  r.rows.push_back({0.0, c.a0, 0.0});
  for (int k = 1; k <= n; ++k) r.rows.push_back({double(k), c.a[k - 1], c.b[k - 1]});
  return r;
}

std::vector<int> harmonic_schedule(const RawOptions& o) {
  std::vector<int> out;
  for (long long v : parse_integer_list("--n", required("--n", o.n))) out.push_back(to_int("--n", v));
  return out;
}

Record partialsum(const RawOptions& o) {
  const auto f = load_spec(required("--function", o.function));
  const double x = parse_real("--x", required("--x", o.x));
  const auto ns = harmonic_schedule(o);
  const double tol = optional_real("--tol", o.tol, 1e-10);
  const auto c = coefficients(f, std::max(1, *std::max_element(ns.begin(), ns.end())), tol);
  Record r;
  r.inputs["function"] = o.function;
  r.inputs["x"] = x;
  r.inputs["n"] = ns;
  r.inputs["tol"] = tol;
  r.columns = {"n", "coefficient_sum", "kernel_integral", "abs_difference"};
  for (int n : ns) {
    const double a = partial_sum(c, x, n);
    const double b = partial_sum_kernel(f, x, n, tol);
    r.rows.push_back({double(n), a, b, std::fabs(a - b)});
  }
  return r;
}

Record converge(const RawOptions& o) {
  const auto f = load_spec(required("--function", o.function));
  const double x = parse_real("--x", required("--x", o.x));
  const auto ns = harmonic_schedule(o);
  const double tol = optional_real("--tol", o.tol, 1e-10);
  const auto report = convergence_report(f, x, ns, tol);
  Record r;
  r.inputs["function"] = o.function;
  r.inputs["x"] = x;
  r.inputs["n"] = ns;
  r.inputs["tol"] = tol;
  r.columns = {"n", "partial_sum", "predicted", "error"};
  for (std::size_t j = 0; j < ns.size(); ++j) {
    r.rows.push_back({double(ns[j]), report.values[j], report.predicted, report.errors[j]});
  }
  r.extras["minus_reading"] = *report.minus_reading;
  r.extras["error_decreased"] = report.error_decreased();
  r.extras["errors_strictly_decreasing"] = report.errors_strictly_decreasing();
  return r;
}

Record kernel(const RawOptions& o) {
  const auto ns = harmonic_schedule(o);
  Record r;
  r.inputs["n"] = ns;
  if (!o.x.empty()) {
    const double t = parse_real("--x", o.x);
    r.inputs["x"] = t;
    r.columns = {"n", "t", "cosine_sum", "dirichlet_kernel", "abs_difference"};
    for (int n : ns) {
      const KernelOrder k{n};
      const double a = cosine_sum(k, t);
      const double b = dirichlet_kernel(k, t);
      r.rows.push_back({double(n), t, a, b, std::fabs(a - b)});
    }
  } else {
    const double tol = optional_real("--tol", o.tol, 1e-12);
    r.inputs["tol"] = tol;
    r.columns = {"n", "kernel_mean", "abs_deviation"};
    for (int n : ns) {
      const double m = kernel_mean(KernelOrder{n}, tol);
      r.rows.push_back({double(n), m, std::fabs(m - 1.0)});
    }
  }
  return r;
}

Record blocks(const RawOptions& o) {
  const auto f = load_spec(required("--function", o.function));
  const auto freqs = parse_real_list("--i", required("--i", o.i));
  const double h = optional_real("--h", o.h, kPi / 2);
  const double tol = optional_real("--tol", o.tol, 1e-8);
  Record r;
  r.inputs["function"] = o.function;
  r.inputs["i"] = freqs;
  r.inputs["h"] = h;
  r.inputs["tol"] = tol;
  r.columns = {"i", "nu", "lo", "hi", "value", "K", "rho"};
  Json full_blocks = Json::array();
  for (double i : freqs) {
    const auto d = decompose(f, Frequency{i}, h, tol);
    full_blocks.push_back(d.r);
    for (std::size_t nu = 0; nu < d.block_count(); ++nu) {
      r.rows.push_back({i, double(nu + 1), d.boundaries[nu], d.boundaries[nu + 1],
                        d.block_values[nu], d.K[nu], d.rho[nu]});
    }
  }
  r.extras["r"] = full_blocks;
  return r;
}

Record tail_table(const RawOptions& o) {
  const long long n = single_integer("--n", o.n);
  if (n < 1 || n > 100'000) throw UsageError("--n: tail length must be in [1, 100000]");
  const double tol = optional_real("--tol", o.tol, 1e-10);
  const auto t = tail(static_cast<int>(n), tol);
  Record r;
  r.inputs["n"] = n;
  r.inputs["tol"] = tol;
  r.columns = {"n", "k_n", "S_n", "abs_S_n_minus_half_pi", "k_next"};
  for (long long j = 1; j <= n; ++j) {
    const double s = t.partial_sums[j - 1];
    r.rows.push_back({double(j), t.k[j - 1], s, std::fabs(s - kPi / 2), t.k[j]});
  }
  return r;
}

Record limit(const RawOptions& o) {
  const auto f = load_spec(required("--function", o.function));
  const auto freqs = parse_real_list("--i", required("--i", o.i));
  const double g = optional_real("--g", o.g, 0.0);
  const double h = optional_real("--h", o.h, kPi / 2);
  const double tol = optional_real("--tol", o.tol, 1e-8);
  const auto report = limit_verify(f, g, h, freqs, tol);
  Record r;
  r.inputs["function"] = o.function;
  r.inputs["i"] = freqs;
  r.inputs["g"] = g;
  r.inputs["h"] = h;
  r.inputs["tol"] = tol;
  r.columns = {"i", "value", "predicted", "error"};
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    r.rows.push_back({freqs[j], report.values[j], report.predicted, report.errors[j]});
  }
  r.extras["error_decreased"] = report.error_decreased();
  r.extras["errors_strictly_decreasing"] = report.errors_strictly_decreasing();
  return r;
}

Record cauchy(const RawOptions& o) {
  std::vector<std::size_t> ns;
  for (long long v : parse_integer_list("--n", required("--n", o.n))) {
    if (v < 1 || v > 10'000'000) throw UsageError("--n: N must be in [1, 10000000]");
    ns.push_back(static_cast<std::size_t>(v));
  }
  const std::size_t top = *std::max_element(ns.begin(), ns.end());
  const auto u = probe(SeriesKind::u, top);
  const auto v = probe(SeriesKind::v, top);
  const auto d = probe(SeriesKind::diff, top);
  Record r;
  r.inputs["n"] = ns;
  r.columns = {"N", "U_N", "V_N", "D_N", "ratio_N"};
  for (std::size_t N : ns) {
    r.rows.push_back({double(N), u.partial_sums[N - 1], v.partial_sums[N - 1],
                      d.partial_sums[N - 1], v.ratios[N - 1]});
  }
  if (!o.bound.empty()) {
    const SeriesKind kind = parse_series_kind(o.kind);
    const double bound = parse_real("--bound", o.bound);
    const auto hit = divergence_witness(kind, bound, top);
    r.inputs["kind"] = std::string(to_string(kind));
    r.inputs["bound"] = bound;
    r.extras["witness"] = hit ? Json(*hit) : Json(nullptr);
  }
  return r;
}

// ---- output ----------------------------------------------------------------

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string to_csv(const Record& r) {
  std::string text;
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (c) text += ',';
    text += r.columns[c];
  }
  text += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      text += format_number(row[c]);
    }
    text += '\n';
  }
  return text;
}

std::string to_json(const std::string& command, const Record& r) {
  Json doc;
  doc["command"] = command;
  doc["format"] = "json";
  doc["inputs"] = r.inputs;
  doc["columns"] = r.columns;
  doc["rows"] = r.rows;
  for (const auto& [key, value] : r.extras.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments on Dirichlet's convergence proof for Fourier series",
               "dirichlet"};
  app.require_subcommand(1, 1);
  app.set_help_flag("--help", "Show help and exit");
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  RawOptions o;
  struct Command {
    const char* name;
    const char* help;
    Record (*handler)(const RawOptions&);
    std::vector<const char*> flags;
  };
  const std::vector<Command> commands = {
      {"validate", "Check a function spec and list its segments and jumps", validate, {"--function"}},
      {"coeffs", "Fourier coefficients a_k, b_k for k = 0..n", coeffs, {"--function", "--n", "--tol"}},
      {"partialsum", "Partial sums at x by coefficients and by the kernel integral", partialsum,
       {"--function", "--x", "--n", "--tol"}},
      {"converge", "Partial sums at x against the predicted limit", converge,
       {"--function", "--x", "--n", "--tol"}},
      {"kernel", "Dirichlet kernel at t = x, or its mean over a period", kernel, {"--n", "--x", "--tol"}},
      {"blocks", "Sign-block decomposition of int_0^h f sin(i b)/sin b", blocks,
       {"--function", "--i", "--h", "--tol"}},
      {"tail", "Alternating series k_1 - k_2 + ... and its remainder bound", tail_table, {"--n", "--tol"}},
      {"limit", "int_g^h f sin(i b)/sin b against its limit as i grows", limit,
       {"--function", "--i", "--g", "--h", "--tol"}},
      {"cauchy", "Partial sums of the u, v and difference series", cauchy,
       {"--n", "--kind", "--bound"}},
  };

  auto bind = [&o](CLI::App* sub, std::string_view flag) {
    if (flag == "--function") sub->add_option("--function", o.function, "Function-spec JSON file");
    if (flag == "--x") sub->add_option("--x", o.x, "Abscissa in [-pi, pi]");
    if (flag == "--n") sub->add_option("--n", o.n, "Integer or comma-separated list");
    if (flag == "--i") sub->add_option("--i", o.i, "Frequency or comma-separated list");
    if (flag == "--g") sub->add_option("--g", o.g, "Lower limit (default 0)");
    if (flag == "--h") sub->add_option("--h", o.h, "Upper limit (default pi/2)");
    if (flag == "--tol") sub->add_option("--tol", o.tol, "Relative quadrature tolerance");
    if (flag == "--kind") sub->add_option("--kind", o.kind, "Series for --bound: u, v or diff");
    if (flag == "--bound") sub->add_option("--bound", o.bound, "Report the first N crossing this bound");
  };

  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    for (const char* flag : c.flags) bind(sub, flag);
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write here instead of standard output");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    const CLI::App* chosen = app.get_subcommands().front();
    const auto it = std::find_if(commands.begin(), commands.end(),
                                 [&](const Command& c) { return chosen->get_name() == c.name; });
    const Record record = it->handler(o);
    const std::string text = o.format == "csv" ? to_csv(record) : to_json(it->name, record);

    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
      if (!file || !(file << text)) throw IOError("cannot write " + o.out);
    }
    return 0;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const IOError& e) {
    err << "IOError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dirichlet::cli
