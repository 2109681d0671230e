#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tilt3/json_io.hpp"
#include "tilt3/verify.hpp"
#include "tilt3/walls.hpp"

namespace tilt3 {

// Exit codes: 0 success, 1 violation findings (decompose / ss-check /
// verify), 2 malformed input.  All default-mode output is exact; floats
// appear only behind --float and are labeled.
namespace cli_detail {

struct CommonParams {
  std::string alpha_sq = "3/4";
  std::string beta = "1/2";
  std::string input;
  std::string output;
  bool use_float = false;

  StabilityParams params() const {
    return StabilityParams(parse_rational(alpha_sq), parse_rational(beta));
  }
};

inline void add_param_flags(CLI::App* cmd, CommonParams& p, bool with_point = true) {
  if (with_point) {
    cmd->add_option("--alpha-sq", p.alpha_sq, "omega^2 coefficient (rational)")
        ->capture_default_str();
    cmd->add_option("--beta", p.beta, "B coefficient (rational)")
        ->capture_default_str();
  }
  cmd->add_option("--input,-i", p.input, "JSON-lines input file ('-' for stdin)");
  cmd->add_option("--output,-o", p.output, "output file (default stdout)");
}

// Applies fn to every JSON line; returns an exit code.
template <typename Fn>
int for_each_json_line(std::istream& in, std::ostream& err, Fn&& fn) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      fn(Json::parse(line), line_no);
    } catch (const std::exception& e) {
      err << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
  }
  return 0;
}

struct IoStreams {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ifstream in_file;
  std::ofstream out_file;

  // Returns false (with a message) when a file cannot be opened.
  bool open(const CommonParams& p, std::istream& default_in,
            std::ostream& default_out, std::ostream& err) {
    if (!p.input.empty() && p.input != "-") {
      in_file.open(p.input);
      if (!in_file) {
        err << "cannot open input file '" << p.input << "'\n";
        return false;
      }
      in = &in_file;
    } else {
      in = &default_in;
    }
    if (!p.output.empty()) {
      out_file.open(p.output);
      if (!out_file) {
        err << "cannot open output file '" << p.output << "'\n";
        return false;
      }
      out = &out_file;
    } else {
      out = &default_out;
    }
    return true;
  }
};

inline SourceClaims build_claims(const std::vector<std::string>& claim_flags,
                                 const std::string& mu_window,
                                 const std::string& wit_text) {
  SourceClaims claims;
  for (const auto& c : claim_flags) {
    if (c == "t0") claims.mu_interval = HNInterval::positive();
    else if (c == "f0") claims.mu_interval = HNInterval::nonpositive();
    else if (c == "semistable") claims.slope_semistable = true;
    else throw ParseError("unknown claim '" + c + "' (t0, f0, semistable)");
  }
  if (!mu_window.empty()) claims.mu_interval = parse_interval(mu_window);
  if (!wit_text.empty()) {
    std::set<int> degrees;
    std::size_t start = 0;
    while (start <= wit_text.size()) {
      std::size_t end = wit_text.find(',', start);
      if (end == std::string::npos) end = wit_text.size();
      std::string item = wit_text.substr(start, end - start);
      if (item.size() != 1 || item[0] < '0' || item[0] > '3')
        throw ParseError("support profile degrees must be in 0..3");
      degrees.insert(item[0] - '0');
      if (end == wit_text.size()) break;
      start = end + 1;
    }
    claims.wit = WitProfile{degrees};
  }
  return claims;
}

inline TableTransform parse_functor_name(const std::string& name) {
  if (name == "phi") return TableTransform::Phi;
  if (name == "psi") return TableTransform::Psi;
  if (name == "psihat") return TableTransform::PsiHat;
  throw ParseError("unknown functor '" + name + "' (phi, psi, psihat)");
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::istream& in_stream,
                   std::ostream& out_stream, std::ostream& err) {
  using cli_detail::CommonParams;
  using cli_detail::IoStreams;

  CLI::App app{"exact tilt-stability calculator for a principally polarized "
               "abelian threefold of Picard rank one"};
  app.require_subcommand(1);

  // transform
  auto* cmd_transform = app.add_subcommand(
      "transform", "apply a functor pipeline to a character");
  CommonParams p_transform;
  std::string transform_ops;
  std::string transform_ch;
  cmd_transform->add_option("--op", transform_ops,
                            "comma pipeline: phi,dual,psi,psihat,shift:N,tensor:K "
                            "(rightmost acts first)")
      ->required();
  cmd_transform->add_option("character", transform_ch, "character a0,a1,a2,a3");
  cli_detail::add_param_flags(cmd_transform, p_transform, false);

  // pointwise report commands
  struct PointwiseCmd {
    CLI::App* cmd = nullptr;
    CommonParams params;
    std::string ch;
  };
  auto add_pointwise = [&](const char* name, const char* desc) {
    PointwiseCmd pc;
    pc.cmd = app.add_subcommand(name, desc);
    pc.cmd->add_option("character", pc.ch, "character a0,a1,a2,a3");
    return pc;
  };
  PointwiseCmd c_slope = add_pointwise("slope", "full slope/charge report");
  c_slope.cmd->add_flag("--float", c_slope.params.use_float,
                        "add labeled decimal approximations");
  cli_detail::add_param_flags(c_slope.cmd, c_slope.params);
  PointwiseCmd c_charge = add_pointwise("charge", "central charge only");
  c_charge.cmd->add_flag("--float", c_charge.params.use_float,
                         "add labeled decimal approximations");
  cli_detail::add_param_flags(c_charge.cmd, c_charge.params);
  PointwiseCmd c_disc = add_pointwise("discriminant", "discriminant only");
  cli_detail::add_param_flags(c_disc.cmd, c_disc.params);
  PointwiseCmd c_bg = add_pointwise("bg", "both Bogomolov-Gieseker predicates");
  cli_detail::add_param_flags(c_bg.cmd, c_bg.params);
  PointwiseCmd c_classify =
      add_pointwise("classify", "heart-membership trichotomy");
  cli_detail::add_param_flags(c_classify.cmd, c_classify.params);
  PointwiseCmd c_ledger = add_pointwise(
      "ledger", "slope-zero transform ledger (needs a1 = a2)");
  cli_detail::add_param_flags(c_ledger.cmd, c_ledger.params, false);

  // decompose
  auto* cmd_decompose = app.add_subcommand(
      "decompose", "enumerate or check transform-cohomology tables");
  CommonParams p_decompose;
  std::string decompose_ch;
  int decompose_bound = 2;
  std::vector<std::string> decompose_claims;
  std::string decompose_window, decompose_wit, decompose_functor = "phi";
  bool decompose_no_positivity = false, decompose_explain = false,
       decompose_check = false;
  cmd_decompose->add_option("character", decompose_ch, "source character");
  cmd_decompose->add_option("--bound", decompose_bound,
                            "entry bound for enumeration (1..12)")
      ->capture_default_str();
  cmd_decompose->add_option("--claim", decompose_claims,
                            "source claims: t0, f0, semistable (repeatable)");
  cmd_decompose->add_option("--mu-window", decompose_window,
                            "claimed slope window, e.g. '(0,1]'");
  cmd_decompose->add_option("--wit", decompose_wit,
                            "support profile degrees, e.g. '1' or '0,2'");
  cmd_decompose->add_option("--functor", decompose_functor,
                            "phi (default), psi or psihat")
      ->capture_default_str();
  cmd_decompose->add_flag("--no-positivity", decompose_no_positivity,
                          "drop the sheaf-positivity axioms");
  cmd_decompose->add_flag("--explain", decompose_explain,
                          "emit a diagnostic prelude record");
  cmd_decompose->add_flag("--check", decompose_check,
                          "check tables from --input instead of enumerating");
  cli_detail::add_param_flags(cmd_decompose, p_decompose, false);

  // ss-check
  auto* cmd_ss = app.add_subcommand(
      "ss-check", "spectral-grid and duality consistency checks");
  CommonParams p_ss;
  std::string ss_ch;
  cmd_ss->add_option("character", ss_ch,
                     "run the duality composite check on one character");
  cli_detail::add_param_flags(cmd_ss, p_ss, false);

  // walls
  auto* cmd_walls = app.add_subcommand(
      "walls", "sample tilt-stability walls in the (beta, s) plane");
  CommonParams p_walls;
  std::string walls_nu_zero;
  std::vector<std::string> walls_between;
  std::vector<std::string> walls_range = {"0", "1"};
  int walls_steps = 8;
  cmd_walls->add_option("--nu-zero", walls_nu_zero,
                        "sample the vanishing locus of one tilt slope");
  cmd_walls->add_option("--between", walls_between,
                        "sample the wall between two characters")
      ->expected(2);
  cmd_walls->add_option("--range", walls_range, "beta range (two rationals)")
      ->expected(2)
      ->capture_default_str();
  cmd_walls->add_option("--steps", walls_steps, "grid intervals")
      ->capture_default_str();
  cmd_walls->add_flag("--float", p_walls.use_float, "append a decimal column");
  cli_detail::add_param_flags(cmd_walls, p_walls, false);

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "run the built-in verification suite");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_stream, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_stream, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    // ---- transform ----
    if (cmd_transform->parsed()) {
      auto tags = parse_functor_tags(transform_ops);
      IoStreams io;
      if (!io.open(p_transform, in_stream, out_stream, err)) return 2;
      if (!p_transform.input.empty()) {
        return cli_detail::for_each_json_line(
            *io.in, err, [&](const Json& j, int) {
              ChernVector v = chern_from_json(j);
              Json rec;
              rec["ch"] = chern_to_json(apply(std::span<const FunctorTag>(tags), v));
              *io.out << rec.dump() << "\n";
            });
      }
      if (transform_ch.empty()) {
        err << "transform needs a character or --input\n";
        return 2;
      }
      *io.out << to_string(apply(std::span<const FunctorTag>(tags),
                                 parse_chern(transform_ch)))
              << "\n";
      return 0;
    }

    // ---- pointwise commands ----
    auto run_pointwise = [&](PointwiseCmd& pc,
                             auto&& record) -> std::optional<int> {
      if (!pc.cmd->parsed()) return std::nullopt;
      IoStreams io;
      if (!io.open(pc.params, in_stream, out_stream, err)) return 2;
      if (!pc.params.input.empty()) {
        return cli_detail::for_each_json_line(
            *io.in, err, [&](const Json& j, int) {
              *io.out << record(chern_from_json(j)).dump() << "\n";
            });
      }
      if (pc.ch.empty()) {
        err << pc.cmd->get_name() << " needs a character or --input\n";
        return 2;
      }
      *io.out << record(parse_chern(pc.ch)).dump() << "\n";
      return 0;
    };

    if (auto rc = run_pointwise(c_slope, [&](const ChernVector& v) {
          return slope_report_to_json(v, slope_report(v, c_slope.params.params()),
                                      c_slope.params.use_float);
        }))
      return *rc;

    if (auto rc = run_pointwise(c_charge, [&](const ChernVector& v) {
          ExactComplex z = central_charge(v, c_charge.params.params());
          Json j;
          j["ch"] = chern_to_json(v);
          j["re"] = to_string(z.re);
          j["im"] = to_string(z.im);
          if (c_charge.params.use_float)
            j["approx"] = Json{{"re", z.re.to_double()}, {"im", z.im.to_double()}};
          return j;
        }))
      return *rc;

    if (auto rc = run_pointwise(c_disc, [&](const ChernVector& v) {
          Json j;
          j["ch"] = chern_to_json(v);
          j["disc"] = to_string(discriminant(v, c_disc.params.params()));
          return j;
        }))
      return *rc;

    if (auto rc = run_pointwise(c_bg, [&](const ChernVector& v) {
          Json j;
          j["ch"] = chern_to_json(v);
          j["classical"] = bg_classical(v);
          j["type"] = bg_type(v, c_bg.params.params());
          return j;
        }))
      return *rc;

    if (auto rc = run_pointwise(c_classify, [&](const ChernVector& v) {
          Json j;
          j["ch"] = chern_to_json(v);
          j["case"] = to_string(classify_heart(v, c_classify.params.params()));
          return j;
        }))
      return *rc;

    if (auto rc = run_pointwise(c_ledger, [&](const ChernVector& v) {
          SlopeZeroLedger l = slope_zero_ledger(v);
          Json j;
          j["ch"] = chern_to_json(v);
          j["F"] = chern_to_json(l.F);
          j["delta"] = rational_to_json(l.delta);
          j["two_b1_minus_b0"] = rational_to_json(l.two_b1_minus_b0);
          j["bg_equiv"] = l.bg_equiv;
          return j;
        }))
      return *rc;

    // ---- decompose ----
    if (cmd_decompose->parsed()) {
      SourceClaims claims = cli_detail::build_claims(
          decompose_claims, decompose_window, decompose_wit);
      TableTransform functor = cli_detail::parse_functor_name(decompose_functor);
      auto rules = builtin_rules();
      IoStreams io;
      if (!io.open(p_decompose, in_stream, out_stream, err)) return 2;

      if (decompose_check) {
        if (p_decompose.input.empty()) {
          err << "--check needs --input\n";
          return 2;
        }
        CheckOptions opts;
        opts.sheaf_positivity = !decompose_no_positivity;
        opts.transform = functor;
        opts.claims = claims;
        bool any = false;
        int rc = cli_detail::for_each_json_line(
            *io.in, err, [&](const Json& j, int) {
              auto violations = check_table(table_from_json(j), rules, opts);
              if (!violations.empty()) any = true;
              Json rec;
              rec["violations"] = violations_to_json(violations);
              *io.out << rec.dump() << "\n";
            });
        if (rc != 0) return rc;
        return any ? 1 : 0;
      }

      if (decompose_ch.empty()) {
        err << "decompose needs a source character\n";
        return 2;
      }
      ChernVector source = parse_chern(decompose_ch);
      EnumOptions opts;
      opts.bound = decompose_bound;
      opts.sheaf_positivity = !decompose_no_positivity;
      opts.transform = functor;
      opts.claims = claims;
      if (decompose_explain) {
        Json prelude;
        prelude["functor"] = decompose_functor;
        prelude["target"] = chern_to_json(detail::table_target(source, functor));
        Json fired = Json::array();
        if (functor == TableTransform::Phi)
          for (const auto& rule : rules)
            if (detail::rule_fires(rule, source, claims, false))
              fired.push_back(rule.name);
        prelude["rules_fired"] = fired;
        Json rec;
        rec["explain"] = prelude;
        *io.out << rec.dump() << "\n";
      }
      auto tables = enumerate_tables(source, opts, rules);
      for (const auto& t : tables) *io.out << table_to_json(t).dump() << "\n";
      return tables.empty() ? 1 : 0;
    }

    // ---- ss-check ----
    if (cmd_ss->parsed()) {
      IoStreams io;
      if (!io.open(p_ss, in_stream, out_stream, err)) return 2;
      bool any = false;
      auto emit = [&](const std::vector<Violation>& vs) {
        if (!vs.empty()) any = true;
        Json rec;
        rec["violations"] = violations_to_json(vs);
        *io.out << rec.dump() << "\n";
      };
      if (!p_ss.input.empty()) {
        int rc = cli_detail::for_each_json_line(
            *io.in, err, [&](const Json& j, int) {
              std::string kind = j.value("kind", "");
              if (kind == "mukai") {
                std::map<std::pair<int, int>, ChernVector> level2;
                if (j.contains("level2"))
                  for (const auto& [key, value] : j.at("level2").items()) {
                    if (key.size() != 3 || key[1] != ',')
                      throw ParseError("level2 keys look like 'p,q'");
                    level2[{key[0] - '0', key[2] - '0'}] = chern_from_json(value);
                  }
                emit(check_mukai_ss(chern_from_json(j.at("source")), level2));
              } else if (kind == "duality") {
                DecompositionTable primal, dual;
                if (j.contains("parts") || j.contains("dual_parts")) {
                  primal = table_from_json(j.at("parts"));
                  dual = table_from_json(j.at("dual_parts"));
                } else {
                  primal.source = chern_from_json(j.at("ch"));
                  dual.source = derived_dual(primal.source);
                }
                emit(check_duality_ss(primal, dual));
              } else {
                throw ParseError("record needs kind 'mukai' or 'duality'");
              }
            });
        if (rc != 0) return rc;
        return any ? 1 : 0;
      }
      if (ss_ch.empty()) {
        err << "ss-check needs a character or --input\n";
        return 2;
      }
      DecompositionTable primal, dual;
      primal.source = parse_chern(ss_ch);
      dual.source = derived_dual(primal.source);
      emit(check_duality_ss(primal, dual));
      return any ? 1 : 0;
    }

    // ---- walls ----
    if (cmd_walls->parsed()) {
      IoStreams io;
      if (!io.open(p_walls, in_stream, out_stream, err)) return 2;
      if (walls_nu_zero.empty() == walls_between.empty()) {
        err << "walls needs exactly one of --nu-zero or --between\n";
        return 2;
      }
      WallPolynomial wall =
          walls_nu_zero.empty()
              ? wall_between(parse_chern(walls_between[0]),
                             parse_chern(walls_between[1]))
              : nu_numerator(parse_chern(walls_nu_zero));
      Rational lo = parse_rational(walls_range[0]);
      Rational hi = parse_rational(walls_range[1]);
      for (const auto& row : sample_wall(wall, lo, hi, walls_steps)) {
        *io.out << to_string(row.beta) << ",";
        *io.out << (row.all_s ? std::string("*") : to_string(*row.s));
        if (p_walls.use_float && !row.all_s)
          *io.out << "," << to_double(*row.s);
        *io.out << "\n";
      }
      return 0;
    }

    // ---- verify ----
    if (cmd_verify->parsed()) {
      auto checks = run_verification();
      int failures = 0;
      int index = 0;
      for (const auto& c : checks) {
        ++index;
        out_stream << (c.pass ? "PASS" : "FAIL") << "  " << index << " "
                   << c.name << " (" << c.detail << ")\n";
        if (!c.pass) ++failures;
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace tilt3
