#pragma once

// Command-line front end: eval, table, coeffs, map.
//
// Exit codes: 0 ok, 2 usage, 3 domain, 4 I/O, 5 quadrature did not converge.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pearcey/asymptotics.hpp"
#include "pearcey/coefficients.hpp"
#include "pearcey/oracle.hpp"
#include "pearcey/tables.hpp"

namespace pearcey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitConvergence = 5;

using nlohmann::json;

/// Shortest decimal that reads back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(Complex z) {
  std::string im = format_double(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(z.real()) + im + "i";
}

namespace detail {

inline std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with decimal or exponent
/// notation in each part.
inline std::optional<Complex> parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    const auto re = detail::parse_real(s);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  if (imag_part.empty() || imag_part == "+" || imag_part == "-") imag_part += "1";
  const auto im = detail::parse_real(imag_part);
  if (!im) return std::nullopt;
  if (real_part.empty()) return Complex{0.0, *im};
  const auto re = detail::parse_real(real_part);
  if (!re) return std::nullopt;
  return Complex{*re, *im};
}

inline json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

/// modulus * exp(i pi q), exact on the axes.
inline Complex polar_pi(double modulus, double q) {
  if (q == 0.0) return {modulus, 0.0};
  if (q == 1.0 || q == -1.0) return {-modulus, 0.0};
  if (q == 0.5) return {0.0, modulus};
  if (q == -0.5) return {0.0, -modulus};
  return std::polar(modulus, kPi * q);
}

namespace detail {

struct ComplexFlag {
  std::string text;
  Complex value;
};

inline void add_complex_option(CLI::App& app, const std::string& name, ComplexFlag& target,
                               const std::string& help) {
  app.add_option(name, target.text, help)->check([](const std::string& s) {
    return parse_complex(s) ? std::string{} : "not a complex literal (expected a, bi, a+bi): " + s;
  });
}

inline void resolve(ComplexFlag& f) {
  if (!f.text.empty()) f.value = *parse_complex(f.text);
}

/// Writes to the file at `path`, or to `out` when path is empty.
inline int emit(const std::string& path, const std::string& content, std::ostream& out,
                std::ostream& err) {
  if (path.empty()) {
    out << content;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  file << content;
  file.close();
  if (!file) {
    err << "error: failed writing " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

inline Strategy parse_strategy(const std::string& s) {
  return s == "real-axis" ? Strategy::RealAxis : Strategy::Contour;
}

}  // namespace detail

struct EvalOptions {
  detail::ComplexFlag x{"0", {}};
  detail::ComplexFlag y;
  std::optional<double> y_mod;
  std::optional<double> y_arg_pi;
  std::string method = "auto";
  int order = kDefaultOrder;
  bool json_output = false;
  std::string oracle = "contour";
  int digits = 50;
};

/// Evaluation record printed by `eval`.
inline json evaluate(const EvalOptions& o) {
  const Complex x = o.x.value;
  const Complex y = o.y_mod ? polar_pi(*o.y_mod, o.y_arg_pi.value_or(0.0)) : o.y.value;

  std::string method = o.method;
  if (method == "auto") {
    method = std::abs(y) >= kAutoAsymptoticThreshold ? "asymptotic" : "quadrature";
  }

  json j;
  j["x"] = complex_json(x);
  j["y"] = complex_json(y);
  j["method"] = method;
  j["order"] = o.order;
  j["region"] = nullptr;
  j["first_omitted_magnitude"] = nullptr;
  j["warnings"] = json::array();

  if (method == "asymptotic") {
    const ExpansionResult r = pearcey_asymptotic(x, y, o.order);
    j["region"] = std::string(to_string(r.region));
    j["value"] = complex_json(r.value);
    j["first_omitted_magnitude"] = r.first_omitted_magnitude;
    for (const auto& w : r.warnings) j["warnings"].push_back(w);
    return j;
  }

  QuadratureConfig cfg = o.oracle == "real-axis" ? QuadratureConfig::real_axis(o.digits)
                                                 : QuadratureConfig::contour();
  if (y != Complex{}) j["region"] = std::string(to_string(classify_region(normalize(x, y))));
  j["oracle"] = std::string(to_string(cfg.strategy));
  j["value"] = complex_json(pearcey_quadrature(x, y, cfg));
  return j;
}

inline std::string render_eval_text(const json& j) {
  std::ostringstream s;
  const auto cx = [](const json& c) {
    return format_complex({c["re"].get<double>(), c["im"].get<double>()});
  };
  s << "x       " << cx(j["x"]) << "\n";
  s << "y       " << cx(j["y"]) << "\n";
  s << "method  " << j["method"].get<std::string>() << "\n";
  if (j["method"] == "asymptotic") s << "order   " << j["order"].get<int>() << "\n";
  if (!j["region"].is_null()) s << "region  " << j["region"].get<std::string>() << "\n";
  s << "value   " << cx(j["value"]) << "\n";
  if (!j["first_omitted_magnitude"].is_null()) {
    s << "next-term magnitude  " << format_double(j["first_omitted_magnitude"].get<double>())
      << "\n";
  }
  for (const auto& w : j["warnings"]) s << "warning: " << w.get<std::string>() << "\n";
  return s.str();
}

inline std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells,
                                Strategy oracle, const std::string& format) {
  if (format == "json") {
    json j;
    j["table"] = spec.id;
    j["x"] = complex_json(spec.x);
    j["oracle"] = std::string(to_string(oracle));
    j["cells"] = json::array();
    for (const TableCell& c : cells) {
      j["cells"].push_back({{"y_label", c.y_label},
                            {"y", complex_json(c.y)},
                            {"n", c.n},
                            {"rel_error", c.rel_error},
                            {"published", c.published}});
    }
    return j.dump(2) + "\n";
  }
  std::string s = "y_label,n,rel_error\n";
  for (const TableCell& c : cells) {
    s += c.y_label + "," + std::to_string(c.n) + "," + format_double(c.rel_error) + "\n";
  }
  return s;
}

inline std::string render_coeffs(const CoefficientTable& t, const std::string& format) {
  if (format == "json") {
    json j;
    j["x"] = complex_json(t.x());
    j["max_order"] = t.max_order();
    j["c"] = json::array();
    j["A"] = json::array();
    for (const Complex& c : t.c()) j["c"].push_back(complex_json(c));
    for (const Complex& a : t.A()) j["A"].push_back(complex_json(a));
    return j.dump(2) + "\n";
  }
  std::string s = "n,c_n,A_n\n";
  for (int n = 0; n <= t.max_order(); ++n) {
    s += std::to_string(n) + "," + format_complex(t.c()[n]) + "," + format_complex(t.A()[n]) + "\n";
  }
  return s;
}

/// theta_j = -pi/2 + j pi/(K-1); the middle sample is exactly 0 for odd K.
inline std::string render_map(Complex x, double y_mod, int steps, int order) {
  std::string s = "theta,region,dominant_term,anti_stokes,abs_p1,abs_p2\n";
  for (int j = 0; j < steps; ++j) {
    const double theta = (2.0 * j - (steps - 1)) * kPi / (2.0 * (steps - 1));
    const Complex y = theta == 0.0 ? Complex{y_mod, 0.0} : std::polar(y_mod, theta);
    const EvalPoint p = normalize(x, y);
    const StokesRecord st = stokes_classification(y);
    s += format_double(theta) + "," + std::string(to_string(classify_region(p))) + "," +
         std::string(to_string(st.dominant)) + "," + (st.on_anti_stokes ? "1" : "0") + "," +
         format_double(std::abs(pearcey_Pk(1, x, p.y, order))) + "," +
         format_double(std::abs(pearcey_Pk(2, x, p.y, order))) + "\n";
  }
  return s;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pearcey integral: large-|y| expansion and quadrature reference"};
  app.require_subcommand(1);

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "Evaluate P(x, y) at one point");
  detail::add_complex_option(*eval, "--x", ev.x, "x as a complex literal (default 0)");
  detail::ComplexFlag y_flag;
  auto* y_opt = eval->add_option("--y", y_flag.text, "y as a complex literal")->check(
      [](const std::string& s) {
        return parse_complex(s) ? std::string{} : "not a complex literal: " + s;
      });
  auto* ymod_opt = eval->add_option("--y-mod", ev.y_mod, "|y|")->check(CLI::NonNegativeNumber);
  auto* yarg_opt = eval->add_option("--y-arg-pi", ev.y_arg_pi, "arg y as a multiple of pi");
  y_opt->excludes(ymod_opt)->excludes(yarg_opt);
  ymod_opt->needs(yarg_opt);
  yarg_opt->needs(ymod_opt);
  eval->add_option("--method", ev.method, "asymptotic | quadrature | auto")
      ->check(CLI::IsMember({"asymptotic", "quadrature", "auto"}));
  eval->add_option("--order", ev.order, "truncation order N")->check(CLI::NonNegativeNumber);
  eval->add_flag("--json", ev.json_output, "print JSON");
  eval->add_option("--oracle", ev.oracle, "quadrature strategy: contour | real-axis")
      ->check(CLI::IsMember({"contour", "real-axis"}));
  eval->add_option("--digits", ev.digits, "working digits for real-axis quadrature")
      ->check(CLI::Range(16, 100));

  int table_id = 1;
  std::string table_format = "csv";
  std::string table_out;
  std::string table_oracle = "contour";
  auto* table = app.add_subcommand("table", "Reproduce a published relative-error table");
  table->add_option("--paper-table", table_id, "1 (x = 1) or 2 (x = -2)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  table->add_option("--format", table_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "output file (default stdout)");
  table->add_option("--oracle", table_oracle, "contour | real-axis")
      ->check(CLI::IsMember({"contour", "real-axis"}));

  detail::ComplexFlag coeff_x{"0", {}};
  int coeff_order = kDefaultOrder;
  std::string coeff_format = "csv";
  auto* coeffs = app.add_subcommand("coeffs", "Dump c_n(x) and A_n(x)");
  detail::add_complex_option(*coeffs, "--x", coeff_x, "x as a complex literal (default 0)");
  coeffs->add_option("--max-order", coeff_order, "largest n")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--format", coeff_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  detail::ComplexFlag map_x{"0", {}};
  int map_steps = 33;
  double map_mod = 20.0;
  int map_order = kDefaultOrder;
  std::string map_out;
  auto* map = app.add_subcommand("map", "Sector and Stokes structure over arg y in [-pi/2, pi/2]");
  map->add_option("--grid-arg-steps", map_steps, "number of arg samples (>= 3)")
      ->check(CLI::Range(3, 1000000));
  map->add_option("--y-mod", map_mod, "|y| (> 0)")->check(CLI::PositiveNumber);
  detail::add_complex_option(*map, "--x", map_x, "x as a complex literal (default 0)");
  map->add_option("--order", map_order, "truncation order N")->check(CLI::Range(0, kMaxOrder));
  map->add_option("--out", map_out, "output file (default stdout)");

  std::vector<std::string> argv_store{"pearcey"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      if (y_flag.text.empty() && !ev.y_mod) {
        err << "error: eval requires --y or --y-mod with --y-arg-pi\n" << eval->help();
        return kExitUsage;
      }
      detail::resolve(ev.x);
      detail::resolve(y_flag);
      ev.y = y_flag;
      const json j = evaluate(ev);
      out << (ev.json_output ? j.dump() + "\n" : render_eval_text(j));
      return kExitOk;
    }
    if (table->parsed()) {
      const TableSpec spec = published_table(table_id);
      const Strategy oracle = detail::parse_strategy(table_oracle);
      const auto cells = compute_table(spec, oracle);
      return detail::emit(table_out, render_table(spec, cells, oracle, table_format), out, err);
    }
    if (coeffs->parsed()) {
      detail::resolve(coeff_x);
      out << render_coeffs(build_table(coeff_x.value, coeff_order), coeff_format);
      return kExitOk;
    }
    if (map->parsed()) {
      detail::resolve(map_x);
      return detail::emit(map_out, render_map(map_x.value, map_mod, map_steps, map_order), out,
                          err);
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (best estimate " << format_complex(e.estimate())
        << ", achieved error " << format_double(e.achieved_error()) << ")\n";
    return kExitConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pearcey::cli
