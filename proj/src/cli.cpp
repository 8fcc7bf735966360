#include "trigproof/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <sstream>

#include "trigproof/audit.hpp"
#include "trigproof/registry.hpp"
#include "trigproof/report_io.hpp"

namespace trigproof {

namespace {

std::string resolve_proofs_dir(const RunConfig& cfg) {
  if (!cfg.proofs_dir.empty()) return cfg.proofs_dir;
  if (const char* env = std::getenv("TRIG_PROOFS_DIR"))
    if (*env) return env;
  return "proofs";
}

void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
  if (!(cfg.tol > 0.0)) throw ConfigError("tol must be > 0");
  if (cfg.format != "text" && cfg.format != "json")
    throw ConfigError("format must be text or json");
}

Registry load_for(const RunConfig& cfg) {
  return Registry::load_dir(resolve_proofs_dir(cfg));
}

// One figure's sweep, aggregated: per-check maximum residual across all
// sampled parameters, with the parameters of the overall worst sample.
ResidualReport sweep_figure(const std::string& id, int samples,
                            std::uint64_t seed, double tol) {
  ResidualReport agg;
  agg.figure_id = id;
  std::map<std::string, ResidualCheck> worst;
  for (const auto& params : sample_parameters(id, samples, seed)) {
    Figure fig = construct_figure(id, params);
    ResidualReport r = check_figure(fig, tol);
    if (agg.flags.empty()) agg.flags = r.flags;
    for (const auto& c : r.checks) {
      auto it = worst.find(c.name);
      if (it == worst.end() || c.residual > it->second.residual)
        worst[c.name] = c;
    }
    if (r.max_residual >= agg.max_residual) {
      agg.max_residual = r.max_residual;
      agg.params = params;
    }
  }
  for (const auto& [name, c] : worst) agg.checks.push_back(c);
  return agg;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  Registry reg = load_for(cfg);
  std::vector<const VerifyReport*> selected;
  if (cfg.proof == "all") {
    for (const auto& r : reg.reports()) selected.push_back(&r);
  } else {
    const VerifyReport* r = reg.report_for(cfg.proof);
    if (!r) throw UnknownLemma(cfg.proof);
    selected.push_back(r);
  }
  bool all_ok = true;
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t i = 0; i < selected.size(); ++i) {
      if (i) out << ",";
      out << verify_report_json(*selected[i]);
    }
    out << "]\n";
  } else {
    for (const auto* r : selected) out << verify_report_text(*r);
  }
  int accepted = 0;
  for (const auto* r : selected) {
    if (r->accepted)
      ++accepted;
    else
      all_ok = false;
  }
  if (cfg.format == "text")
    out << accepted << "/" << selected.size() << " scripts accepted\n";
  return all_ok ? 0 : 1;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  Registry reg = load_for(cfg);
  for (const auto& r : reg.reports())
    if (!r.accepted) {
      out << "catalog does not verify: " << r.lemma_id << " rejected\n";
      return 1;
    }
  DepGraph g = build_graph(reg, reg.reports());

  std::vector<AuditVerdict> verdicts;
  if (!cfg.target.empty() || !cfg.forbidden.empty()) {
    if (cfg.target.empty() || cfg.forbidden.empty())
      throw ConfigError("audit needs both --target and --forbidden");
    verdicts.push_back(audit(g, cfg.target, cfg.forbidden));
  } else {
    for (const char* id : {"proof_exercise", "proof_first", "proof_second",
                           "proof_third"})
      verdicts.push_back(audit(g, id, "pythagorean_identity"));
  }
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (i) out << ",";
      out << audit_verdict_json(verdicts[i]);
    }
    out << "]\n";
  } else {
    for (const auto& v : verdicts) out << audit_verdict_text(v);
  }
  for (const auto& v : verdicts)
    if (v.reachable) return 1;
  return 0;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  bool ok = true;
  std::vector<ResidualReport> reports;
  for (const auto& id : figure_ids())
    reports.push_back(sweep_figure(id, cfg.samples, cfg.seed, cfg.tol));
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << ",";
      out << residual_report_json(reports[i]);
    }
    out << "]\n";
  } else {
    for (const auto& r : reports) out << residual_report_text(r);
  }
  for (const auto& r : reports) {
    if (r.max_residual < cfg.tol) continue;
    ok = false;
    for (const auto& c : r.checks) {
      if (c.residual < cfg.tol) continue;
      out << "TOLERANCE BREACH " << r.figure_id << " check " << c.name
          << " residual " << json_double(c.residual) << " params";
      for (const auto& [k, v] : r.params)
        out << " " << k << "=" << json_double(v);
      out << "\n";
    }
  }
  if (cfg.format == "text")
    out << (ok ? "all figures within tolerance " : "tolerance exceeded, tol ")
        << json_double(cfg.tol) << "\n";
  return ok ? 0 : 1;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  RunConfig sub = cfg;
  sub.proof = "all";
  sub.target.clear();
  sub.forbidden.clear();
  int a = cmd_verify(sub, out);
  int b = cmd_audit(sub, out);
  int c = cmd_sample(sub, out);
  return std::max({a, b, c});
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  Registry reg = load_for(cfg);
  if (cfg.format == "json") {
    out << "[";
    bool first = true;
    for (const auto& lf : reg.lemmas()) {
      if (!first) out << ",";
      first = false;
      out << "{\"figure\":\"" << json_escape(lf.figure) << "\",\"id\":\""
          << json_escape(lf.id) << "\",\"kind\":\"" << lemma_kind_name(lf.kind)
          << "\"}";
    }
    out << "]\n";
  } else {
    for (const auto& lf : reg.lemmas()) {
      out << lemma_kind_name(lf.kind) << " " << lf.id;
      if (!lf.figure.empty()) out << " [" << lf.figure << "]";
      if (!lf.declared_deps.empty()) {
        out << " <-";
        for (const auto& d : lf.declared_deps) out << " " << d;
      }
      out << "\n";
    }
    out << reg.count(LemmaKind::Axiom) << " axioms, "
        << reg.count(LemmaKind::Derived) << " derived, "
        << reg.count(LemmaKind::Theorem) << " theorems\n";
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact verification kernel for the trigonometric "
               "Pythagoras catalog"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "samples per figure");
    sub->add_option("--tol", cfg.tol, "numeric tolerance");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--format", cfg.format, "text or json");
    sub->add_option("--proofs-dir", cfg.proofs_dir,
                    "proof catalog directory (default: $TRIG_PROOFS_DIR or "
                    "./proofs)");
  };
  CLI::App* verify = app.add_subcommand("verify", "verify proof scripts");
  verify->add_option("--proof", cfg.proof, "lemma id or 'all'");
  add_common(verify);
  CLI::App* auditc = app.add_subcommand("audit", "dependency audits");
  auditc->add_option("--target", cfg.target, "lemma to audit");
  auditc->add_option("--forbidden", cfg.forbidden, "forbidden ancestor");
  add_common(auditc);
  CLI::App* sample = app.add_subcommand("sample", "numeric figure sweeps");
  add_common(sample);
  CLI::App* report = app.add_subcommand("report", "verify + audit + sample");
  add_common(report);
  CLI::App* list = app.add_subcommand("list", "list the catalog");
  add_common(list);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out);
    }
    if (auditc->parsed()) {
      cfg.command = "audit";
      return cmd_audit(cfg, out);
    }
    if (sample->parsed()) {
      cfg.command = "sample";
      return cmd_sample(cfg, out);
    }
    if (report->parsed()) {
      cfg.command = "report";
      return cmd_report(cfg, out);
    }
    cfg.command = "list";
    return cmd_list(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace trigproof
