#pragma once

#include <CLI11.hpp>

#include <future>
#include <iostream>

#include "zrepel/bounds.hpp"
#include "zrepel/detector.hpp"
#include "zrepel/report.hpp"
#include "zrepel/rigor.hpp"

namespace zrepel {
namespace cli {

struct RunConfig {
  std::string format = "table";
  long precision = 80;
  int threads = 1;
  bool timings = false;
};

namespace detail {

inline Json character_row(const DirichletCharacter& chi, size_t index) {
  Json row;
  row["index"] = index;
  row["order"] = chi.order();
  row["conductor"] = chi.conductor();
  row["primitive"] = chi.is_primitive();
  row["real"] = chi.is_real();
  Json values = Json::array();
  u64 q = chi.modulus();
  for (u64 n = 1; n <= q; ++n) values.push_back(chi(static_cast<i64>(n)).to_string());
  row["values"] = values;
  return row;
}

inline DirichletCharacter character_by_index(u64 q, u64 index) {
  auto chars = enumerate_characters(q);
  if (index >= chars.size()) {
    throw CLI::ValidationError("--chi", "character index " + std::to_string(index) +
                                            " out of range; phi(" + std::to_string(q) +
                                            ") = " + std::to_string(chars.size()));
  }
  return chars[index];
}

inline Json certificate_json(const Certificate& c, bool timings) {
  Json j;
  j["name"] = c.name;
  j["claim"] = c.claim;
  j["paper_location"] = c.paper_location;
  j["verdict"] = to_string(c.verdict);
  j["enclosure"] = interval_json(c.enclosure);
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (timings) j["seconds"] = c.seconds;
  return j;
}

}  // namespace detail

// Entry point shared by the binary and the tests. Exit codes: 0 success or
// all-verified, 1 failed certificate / violated invariant, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"explicit zero-repulsion toolkit for Dirichlet L-functions"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_config("--config")->description("flat key = value config file");

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format: json, table, csv")
      ->default_val("table")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--precision", cfg.precision, "working precision in bits")
      ->default_val(80)
      ->envname("ZREPEL_PRECISION");
  app.add_option("--threads", cfg.threads, "parallelism degree for sweeps")->default_val(1);
  app.add_flag("--timings", cfg.timings, "include wall-clock seconds in reports");

  // chars
  auto* chars_cmd = app.add_subcommand("chars", "character table modulo q");
  u64 chars_q = 0;
  bool real_only = false;
  chars_cmd->add_option("--modulus", chars_q, "modulus q")->required();
  chars_cmd->add_flag("--real-only", real_only, "only characters of order dividing 2");

  // sieve
  auto* sieve_cmd = app.add_subcommand("sieve", "Selberg sieve weights and the principal form");
  u64 sieve_q = 0, sieve_chi1 = 0;
  double sieve_R = 0;
  sieve_cmd->add_option("--q", sieve_q, "modulus q")->required();
  sieve_cmd->add_option("--chi1", sieve_chi1, "index of the real quadratic character")->required();
  sieve_cmd->add_option("--R", sieve_R, "sifting level R >= 2")->required();

  // detect
  auto* detect_cmd = app.add_subcommand("detect", "mollified detector sum at a point");
  u64 det_q = 0, det_chi = 0, det_N = 0;
  std::string det_rho;
  double det_R = 50;
  i64 det_chi1 = -1;
  std::string det_beta1;
  detect_cmd->add_option("--q", det_q, "modulus q")->required();
  detect_cmd->add_option("--chi", det_chi, "character index")->required();
  detect_cmd->add_option("--rho", det_rho, "evaluation point RE,IM")->required();
  detect_cmd->add_option("--N", det_N, "mollifier length N")->required();
  detect_cmd->add_option("--R", det_R, "sifting level for the weights (default 50)");
  detect_cmd->add_option("--chi1", det_chi1,
                         "index of the exceptional character (default: first real quadratic)");
  detect_cmd->add_option("--beta1", det_beta1,
                         "exceptional zero for the comparison bound (default 1 - 1/(10 log q))");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "explicit repulsion bound report");
  u64 bnd_q = 0;
  double bnd_T = 0;
  std::string bnd_beta1, bnd_preset, bnd_corollary;
  std::string bnd_A, bnd_theta, bnd_B, bnd_eps;
  bound_cmd->add_option("--q", bnd_q, "modulus q > 400000")->required();
  bound_cmd->add_option("--T", bnd_T, "height T >= 4")->required();
  bound_cmd->add_option("--beta1", bnd_beta1, "exceptional zero beta1")->required();
  bound_cmd->add_option("--preset", bnd_preset, "e.g. convexity,bordignon");
  bound_cmd->add_option("--A", bnd_A, "subconvexity constant A >= 1");
  bound_cmd->add_option("--theta", bnd_theta, "subconvexity exponent in (0, 1/4]");
  bound_cmd->add_option("--B", bnd_B, "Siegel-bound constant B > 0");
  bound_cmd->add_option("--eps", bnd_eps, "Siegel-bound exponent in (0, 1/2]");
  bound_cmd->add_option("--corollary", bnd_corollary, "c1,c2,c3,c4 for the corollary form");

  // verify / certs-list
  auto* verify_cmd = app.add_subcommand("verify", "run the certificate suite");
  std::string verify_name;
  verify_cmd->add_option("--cert", verify_name, "run a single certificate by name");
  auto* certs_cmd = app.add_subcommand("certs-list", "list registered certificates");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Precision::set_default_bits(cfg.precision);
    OutputFormat fmt = parse_format(cfg.format);

    if (*chars_cmd) {
      auto chars = enumerate_characters(chars_q);
      Json rows = Json::array();
      for (size_t i = 0; i < chars.size(); ++i) {
        if (real_only && !chars[i].is_real()) continue;
        rows.push_back(detail::character_row(chars[i], i));
      }
      emit(rows, fmt, out);
      return 0;
    }

    if (*sieve_cmd) {
      auto chi1 = detail::character_by_index(sieve_q, sieve_chi1);
      if (chi1.order() != 2) {
        throw CLI::ValidationError("--chi1", "character must be real quadratic (order 2)");
      }
      auto ctx = std::make_shared<ExceptionalContext>(sieve_q, chi1);
      SieveSystem sys(ctx, sieve_R);
      Interval partial = a_over_n_partial(*ctx, sieve_R);
      Interval rhs = Interval(static_cast<long>(sieve_q)) /
                     Interval(static_cast<long>(euler_phi(sieve_q))) / partial;
      Interval g1 = to_interval(sys.g1_principal());
      bool holds = certainly_leq(g1, rhs);
      Json j;
      j["q"] = sieve_q;
      j["chi1_index"] = sieve_chi1;
      j["R"] = sieve_R;
      j["V_R"] = sys.vr().str();
      j["g1_principal"] = sys.g1_principal().str();
      j["lemma41_rhs"] = interval_json(rhs);
      j["lemma41_holds"] = holds;
      Json weights = Json::array();
      for (u64 d : sys.support()) {
        weights.push_back(Json{{"d", d}, {"theta", sys.theta(d).str()}});
      }
      j["weights"] = weights;
      if (fmt == OutputFormat::json) {
        emit(j, fmt, out);
      } else {
        Json head = j;
        head.erase("weights");
        emit(head, fmt, out);
        emit(weights, fmt, out);
      }
      return holds ? 0 : 1;
    }

    if (*detect_cmd) {
      auto chi = detail::character_by_index(det_q, det_chi);
      DirichletCharacter chi1 = DirichletCharacter::principal(det_q);
      if (det_chi1 >= 0) {
        chi1 = detail::character_by_index(det_q, static_cast<u64>(det_chi1));
      } else {
        auto reals = real_quadratic_characters(det_q);
        if (reals.empty()) throw CLI::ValidationError("--q", "no real quadratic character mod q");
        chi1 = reals.front();
      }
      if (!chi1.is_real()) throw CLI::ValidationError("--chi1", "chi1 must be real");
      auto comma = det_rho.find(',');
      if (comma == std::string::npos)
        throw CLI::ValidationError("--rho", "expected RE,IM");
      ComplexInterval rho{Interval::from_decimal(det_rho.substr(0, comma)),
                          Interval::from_decimal(det_rho.substr(comma + 1))};
      Interval beta1 = det_beta1.empty()
                           ? Interval(1L) - Interval(1L) / (Interval(10L) *
                                                            log(Interval(static_cast<long>(det_q))))
                           : Interval::from_decimal(det_beta1);
      auto ctx = std::make_shared<ExceptionalContext>(det_q, chi1);
      SieveSystem sys(ctx, det_R);
      ComplexInterval S = mollified_sum(det_N, rho, chi, sys);
      Interval rhs = detector_rhs(rho.re, beta1, Interval(static_cast<long>(det_N)));
      Json j;
      j["q"] = det_q;
      j["chi_index"] = det_chi;
      j["N"] = det_N;
      j["R"] = det_R;
      j["rho"] = Json{{"re", interval_json(rho.re)}, {"im", interval_json(rho.im)}};
      j["beta1"] = interval_json(beta1);
      j["mollified_re"] = interval_json(S.re);
      j["mollified_im"] = interval_json(S.im);
      j["mollified_abs"] = interval_json(abs(S));
      j["detector_rhs"] = interval_json(rhs);
      emit(j, fmt, out);
      return 0;
    }

    if (*bound_cmd) {
      HypothesisParams params;
      if (!bnd_preset.empty()) params = HypothesisParams::preset(bnd_preset);
      if (!bnd_A.empty()) params.A = Interval::from_decimal(bnd_A);
      if (!bnd_theta.empty()) params.theta = Interval::from_decimal(bnd_theta);
      if (!bnd_B.empty()) params.B = Interval::from_decimal(bnd_B);
      if (!bnd_eps.empty()) params.eps = Interval::from_decimal(bnd_eps);
      params.validate();
      Interval T(bnd_T);
      Interval beta1 = Interval::from_decimal(bnd_beta1);
      BoundReport rep = repulsion_bound(bnd_q, T, beta1, params);
      Json j;
      j["q"] = bnd_q;
      j["T"] = interval_json(rep.T);
      j["beta1"] = interval_json(rep.beta1);
      j["window"] = to_string(rep.window);
      j["M"] = interval_json(rep.M);
      j["K"] = interval_json(rep.K);
      j["R"] = interval_json(rep.R);
      j["N"] = interval_json(rep.N);
      j["repulsion_beta"] = interval_json(rep.repulsion_beta);
      j["vacuous"] = rep.vacuous;
      j["n_leq_m"] = rep.n_leq_m;
      int code = 0;
      if (!bnd_corollary.empty()) {
        std::stringstream ss(bnd_corollary);
        std::string tok;
        std::vector<Interval> cs;
        while (std::getline(ss, tok, ',')) cs.push_back(Interval::from_decimal(tok));
        if (cs.size() != 4) throw CLI::ValidationError("--corollary", "expected c1,c2,c3,c4");
        Interval cb = corollary_form(bnd_q, T, beta1, cs[0], cs[1], cs[2], cs[3]);
        j["corollary_beta"] = interval_json(cb);
        j["linear_form"] = interval_json(cs[0] * log(Interval(static_cast<long>(bnd_q))) +
                                         cs[1] * log(T) + cs[2]);
        auto dom = corollary_dominance(bnd_q, T, params, cs[0], cs[1], cs[2]);
        j["corollary_dominance"] = to_string(dom);
        if (dom == DominanceVerdict::failed) code = 1;
      }
      if (rep.window == WindowStatus::ok && !rep.n_leq_m) code = 1;
      emit(j, fmt, out);
      return code;
    }

    if (*verify_cmd) {
      std::vector<Certificate> results;
      if (!verify_name.empty()) {
        results.push_back(verify_certificate(verify_name, cfg.precision));
      } else if (cfg.threads > 1) {
        const auto& reg = certificate_registry();
        std::vector<std::future<Certificate>> futs;
        for (auto& e : reg) {
          futs.push_back(std::async(std::launch::async, [&e, &cfg] {
            return verify_certificate(e.name, cfg.precision);
          }));
        }
        for (auto& f : futs) results.push_back(f.get());
      } else {
        results = verify_all(cfg.precision);
      }
      Json rows = Json::array();
      bool any_failed = false;
      for (auto& c : results) {
        rows.push_back(detail::certificate_json(c, cfg.timings));
        if (c.verdict == Verdict::failed) any_failed = true;
      }
      emit(rows, fmt, out);
      return any_failed ? 1 : 0;
    }

    if (*certs_cmd) {
      Json rows = Json::array();
      for (auto& e : certificate_registry()) {
        rows.push_back(Json{{"name", e.name}, {"claim", e.claim}, {"paper_location", e.paper_location}});
      }
      emit(rows, fmt, out);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cli
}  // namespace zrepel
