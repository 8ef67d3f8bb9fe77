#pragma once

// Command-line driver. Exit codes: 0 for a positive answer, 1 for a negative
// mathematical outcome, 2 for usage, parse and hypothesis errors. Results go
// to `out`, diagnostics to `err`.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerdio/powerdio.hpp"

namespace powerdio::cli {

inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient array of exact "num/den" strings, ascending degree.
inline json poly_to_json(const RationalPoly& f) {
  json arr = json::array();
  for (const auto& c : f.coefficients()) arr.push_back(to_fraction_string(c));
  return arr;
}

inline RationalPoly poly_from_json(const json& arr) {
  std::vector<Rational> coeffs;
  for (const auto& c : arr) coeffs.push_back(parse_rational(c.get<std::string>()));
  return RationalPoly(std::move(coeffs));
}

/// `@path` reads the argument from a file; anything else is taken literally.
inline std::string resolve_input(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + arg.substr(1) + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

namespace detail {

struct Emitter {
  std::ostream& out;
  bool as_json;
};

inline std::string pair_text(const SolutionPair& s) {
  return "(" + to_string(s.x) + ", " + to_string(s.y) + ")";
}

inline json pairs_json(const std::vector<SolutionPair>& pairs) {
  json arr = json::array();
  for (const auto& s : pairs) arr.push_back({{"x", to_fraction_string(s.x)}, {"y", to_fraction_string(s.y)}});
  return arr;
}

inline json base_json(std::string_view sub) {
  return json{{"subcommand", sub}, {"reasons", json::array()}, {"witness", nullptr}};
}

inline void emit(const Emitter& em, const json& j, const std::string& text) {
  if (em.as_json) {
    em.out << j.dump(2) << '\n';
  } else {
    em.out << text;
  }
}

inline PowerSumSpec read_spec(const std::string& arg) { return parse_powersum(resolve_input(arg)); }
inline ParsedPoly read_poly(const std::string& arg) { return parse_poly_detailed(resolve_input(arg)); }

inline std::string var_or(const std::string& v, const std::string& fallback) { return v.empty() ? fallback : v; }

inline int emit_decision(const Emitter& em, std::string_view sub, const Decision& d, const std::string& var) {
  json j = base_json(sub);
  j["verdict"] = to_string(d.verdict);
  j["witness"] = d.witness ? poly_to_json(*d.witness) : json(nullptr);
  j["reasons"] = d.reasons;
  if (d.path) j["path"] = to_string(*d.path);
  std::string text = "verdict: " + std::string(to_string(d.verdict)) + "\n";
  if (d.witness) text += "witness: P(" + var + ") = " + format_poly(*d.witness, var) + "\n";
  if (d.path) text += "path: " + std::string(to_string(*d.path)) + "\n";
  if (d.verdict != Verdict::HypothesisViolation) {
    j["target_indecomposable"] = d.target_indecomposable;
    if (d.target_indecomposable) text += "note: right-hand side is indecomposable\n";
  }
  for (const auto& r : d.reasons) text += "reason: " + r + "\n";
  emit(em, j, text);
  switch (d.verdict) {
    case Verdict::Infinite: return kPositive;
    case Verdict::Finite: return kNegative;
    case Verdict::HypothesisViolation: return kError;
  }
  return kError;
}

/// "lo..hi" (integers) or a comma-separated list of rationals.
inline std::vector<Rational> parse_t_values(const std::string& text) {
  std::vector<Rational> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const Rational lo = parse_rational(text.substr(0, dots));
    const Rational hi = parse_rational(text.substr(dots + 2));
    if (!is_integral(lo) || !is_integral(hi)) throw UsageError("range bounds must be integers");
    if (hi - lo > 1000000) throw UsageError("range too long");
    for (Integer t = numerator_of(lo); t <= numerator_of(hi); ++t) out.emplace_back(t);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw UsageError("empty --t list");
  return out;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide G_n(x) = H_m(y) for polynomial power sums", "powerdio"};
  app.set_help_flag("--help", "Print this help message and exit");  // --h is an option name
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string spec_arg, g_arg, h_arg, poly_arg, outer_arg, target_arg, a_arg = "1", b_arg = "1", p_arg = "1",
                                                                     t_arg, f_arg;
  std::uint64_t k = 1, l = 1, check_l = 0;
  int kind = 0;
  bool swapped = false;
  std::int64_t z = 1, bound = 10;

  auto* expand_cmd = app.add_subcommand("expand", "Expand a power sum");
  expand_cmd->add_option("--spec", spec_arg, "Power sum, e.g. 'n=3; 1*(x^2); 1*(x+1)'")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check the required-shape hypotheses");
  validate_cmd->add_option("--spec", spec_arg, "Power sum")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide G_n(x) = H_m(y)");
  decide_cmd->add_option("--g", g_arg, "Power sum G")->required();
  decide_cmd->add_option("--h", h_arg, "Power sum H")->required();

  auto* decide_poly_cmd = app.add_subcommand("decide-poly", "Decide G_n(x) = h(y) for a fixed polynomial h");
  decide_poly_cmd->add_option("--g", g_arg, "Power sum G")->required();
  decide_poly_cmd->add_option("--poly", poly_arg, "Polynomial h")->required();

  auto* comp_cmd = app.add_subcommand("comp-factor", "Find P with target = outer o P");
  comp_cmd->add_option("--outer", outer_arg, "Outer polynomial")->required();
  comp_cmd->add_option("--target", target_arg, "Target polynomial")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Find f = g o h with deg g, deg h >= 2");
  decompose_cmd->add_option("--poly", poly_arg, "Polynomial")->required();

  auto* dickson_cmd = app.add_subcommand("dickson", "Dickson polynomial D_k(x, a)");
  dickson_cmd->add_option("--k", k, "Index")->required()->check(CLI::Range(0, 4096));
  dickson_cmd->add_option("--a", a_arg, "Parameter a")->required();
  auto* check_opt = dickson_cmd->add_option("--check-composition", check_l, "Verify D_kl = D_k(D_l(x,a), a^l)")
                              ->check(CLI::Range(0, 4096));

  auto* pair_cmd = app.add_subcommand("stdpair", "Build a standard pair");
  pair_cmd->add_option("--kind", kind, "Kind 1..5")->required()->check(CLI::Range(1, 5));
  pair_cmd->add_option("--k", k, "k");
  pair_cmd->add_option("--l", l, "l");
  pair_cmd->add_option("--a", a_arg, "a");
  pair_cmd->add_option("--b", b_arg, "b");
  pair_cmd->add_option("--p", p_arg, "p(x)");
  pair_cmd->add_flag("--swapped", swapped, "Exchange the coordinates");

  auto* family_cmd = app.add_subcommand("family", "Solutions (P(t), t)");
  family_cmd->add_option("--p", p_arg, "Polynomial P")->required();
  family_cmd->add_option("--t", t_arg, "Range lo..hi or list t1,t2,...")->required();
  family_cmd->add_option("--z", z, "Denominator witness")->check(CLI::PositiveNumber);

  auto* search_cmd = app.add_subcommand("search", "Grid search for f(x) = g(y) with bounded denominator");
  search_cmd->add_option("--f", f_arg, "Polynomial f")->required();
  search_cmd->add_option("--g", g_arg, "Polynomial g")->required();
  search_cmd->add_option("--z", z, "Common denominator")->check(CLI::PositiveNumber);
  search_cmd->add_option("--bound", bound, "Numerator bound")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPositive;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kError;
  }

  const detail::Emitter em{out, as_json};
  try {
    if (expand_cmd->parsed()) {
      const PowerSumSpec spec = detail::read_spec(spec_arg);
      const RationalPoly g = expand(spec);
      json j = detail::base_json("expand");
      j["result"] = format_poly(g, spec.variable());
      j["witness"] = poly_to_json(g);
      detail::emit(em, j, format_poly(g, spec.variable()) + "\n");
      return kPositive;
    }
    if (validate_cmd->parsed()) {
      const ShapeReport report = validate_shape(detail::read_spec(spec_arg));
      json j = detail::base_json("validate");
      j["result"] = report.ok ? "ok" : "violated";
      j["reasons"] = report.failures();
      json checks = json::array();
      std::string text;
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text += std::string(c.passed ? "pass  " : "FAIL  ") + c.name + ": " + c.detail + "\n";
      }
      j["checks"] = checks;
      text += std::string("shape: ") + (report.ok ? "ok" : "violated") + "\n";
      detail::emit(em, j, text);
      return report.ok ? kPositive : kNegative;
    }
    if (decide_cmd->parsed()) {
      const PowerSumSpec g = detail::read_spec(g_arg);
      const PowerSumSpec h = detail::read_spec(h_arg);
      return detail::emit_decision(em, "decide", decide_infinite(g, h), h.variable());
    }
    if (decide_poly_cmd->parsed()) {
      const PowerSumSpec g = detail::read_spec(g_arg);
      const ParsedPoly h = detail::read_poly(poly_arg);
      return detail::emit_decision(em, "decide-poly", decide_vs_polynomial(g, h.poly), detail::var_or(h.variable, "y"));
    }
    if (comp_cmd->parsed()) {
      const ParsedPoly g = detail::read_poly(outer_arg);
      const ParsedPoly h = detail::read_poly(target_arg);
      const CompFactorOutcome res = comp_factor(g.poly, h.poly);
      const std::string var = detail::var_or(h.variable, "x");
      json j = detail::base_json("comp-factor");
      j["verdict"] = to_string(res.status);
      j["witness"] = res.witness ? poly_to_json(*res.witness) : json(nullptr);
      if (!res.found()) j["reasons"] = {std::string(to_string(res.status))};
      std::string text = "status: " + std::string(to_string(res.status)) + "\n";
      if (res.witness) text += "witness: P(" + var + ") = " + format_poly(*res.witness, var) + "\n";
      detail::emit(em, j, text);
      return res.found() ? kPositive : kNegative;
    }
    if (decompose_cmd->parsed()) {
      const ParsedPoly f = detail::read_poly(poly_arg);
      const std::string var = detail::var_or(f.variable, "x");
      const auto dec = decompose_once(f.poly);
      json j = detail::base_json("decompose");
      j["verdict"] = dec ? "Decomposable" : "Indecomposable";
      j["witness"] = dec ? poly_to_json(dec->inner) : json(nullptr);
      if (dec) j["outer"] = poly_to_json(dec->outer);
      std::string text = dec ? "decomposable\nouter: " + format_poly(dec->outer, var) +
                                   "\ninner: " + format_poly(dec->inner, var) + "\n"
                             : "indecomposable\n";
      detail::emit(em, j, text);
      return dec ? kPositive : kNegative;
    }
    if (dickson_cmd->parsed()) {
      const Rational a = parse_rational(a_arg);
      const RationalPoly d = dickson(k, a);
      json j = detail::base_json("dickson");
      j["result"] = format_poly(d);
      j["witness"] = poly_to_json(d);
      std::string text = "D_" + std::to_string(k) + "(x, " + to_string(a) + ") = " + format_poly(d) + "\n";
      int code = kPositive;
      if (*check_opt) {
        const bool holds = check_composition(k, check_l, a);
        j["composition"] = holds;
        text += "composition D_" + std::to_string(k * check_l) + " = D_" + std::to_string(k) + "(D_" +
                std::to_string(check_l) + "): " + (holds ? "holds" : "fails") + "\n";
        if (!holds) {
          j["reasons"] = {"composition identity fails"};
          code = kNegative;
        }
      }
      detail::emit(em, j, text);
      return code;
    }
    if (pair_cmd->parsed()) {
      PairParams params{k, l, parse_rational(a_arg), parse_rational(b_arg), parse_poly(p_arg)};
      const StandardPair pair = make_standard_pair(static_cast<PairKind>(kind), std::move(params), swapped);
      json j = detail::base_json("stdpair");
      j["result"] = to_string(pair.kind);
      j["f1"] = poly_to_json(pair.f1);
      j["g1"] = poly_to_json(pair.g1);
      j["swapped"] = pair.swapped;
      detail::emit(em, j,
                   "kind: " + std::string(to_string(pair.kind)) + "\nf1: " + format_poly(pair.f1) +
                       "\ng1: " + format_poly(pair.g1) + "\nswapped: " + (pair.swapped ? "yes" : "no") + "\n");
      return kPositive;
    }
    if (family_cmd->parsed()) {
      const RationalPoly p = detail::read_poly(p_arg).poly;
      const auto ts = detail::parse_t_values(t_arg);
      const auto pairs = solution_family(p, ts, Integer(z));
      json j = detail::base_json("family");
      j["result"] = detail::pairs_json(pairs);
      j["z"] = std::to_string(z);
      std::string text;
      for (const auto& s : pairs) text += detail::pair_text(s) + "\n";
      text += "z = " + std::to_string(z) + "\n";
      detail::emit(em, j, text);
      return kPositive;
    }
    if (search_cmd->parsed()) {
      const RationalPoly f = detail::read_poly(f_arg).poly;
      const RationalPoly g = detail::read_poly(g_arg).poly;
      const auto pairs = brute_force_solutions(f, g, z, bound);
      json j = detail::base_json("search");
      j["result"] = detail::pairs_json(pairs);
      j["z"] = std::to_string(z);
      std::string text;
      for (const auto& s : pairs) text += detail::pair_text(s) + "\n";
      text += "count: " + std::to_string(pairs.size()) + "\n";
      detail::emit(em, j, text);
      return kPositive;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kError;
  } catch (const std::invalid_argument& e) {
    // PreconditionError, SpecError and SideConditionError.
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kError;
  }
  err << "usage error: no subcommand\n";
  return kError;
}

}  // namespace powerdio::cli
