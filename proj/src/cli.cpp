#include "residua/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "residua/errors.hpp"
#include "residua/tasks.hpp"
#include "residua/verify.hpp"

namespace residua {

using nlohmann::ordered_json;

namespace {

struct Flags {
  std::string format = "text";
  std::string n, degree, degrees, chi, mu = "0", phi = "top", method, file;
  std::vector<std::string> strata, stratum_mu;
  std::string foliation_degree, num_sing;
  bool nodal = false, non_dicritical = false, reducible = false, singular = false;
};

int emit_single(const TaskOutcome& outcome, const Flags& flags, std::ostream& out) {
  if (flags.format == "json") {
    out << outcome_to_json(outcome).dump(2) << "\n";
  } else {
    out << render_text(outcome);
  }
  return outcome.failed ? kExitCheckFailed : kExitOk;
}

int emit_batch(const std::vector<TaskOutcome>& outcomes, const Flags& flags, std::ostream& out) {
  bool failed = false;
  for (const auto& o : outcomes) failed = failed || o.failed;
  if (flags.format == "json") {
    ordered_json doc;
    doc["version"] = kProblemFileVersion;
    doc["status"] = failed ? "fail" : "ok";
    ordered_json results = ordered_json::array();
    for (const auto& o : outcomes) results.push_back(outcome_to_json(o));
    doc["results"] = std::move(results);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) {
      out << "== " << o.label << " [" << o.kind << "] " << (o.failed ? "FAIL" : "ok") << "\n";
      for (const auto& [k, v] : o.values) out << k << ": " << v.get_str() << "\n";
      for (const auto& c : o.checks) out << render_report_text(c);
      for (const auto& n : o.notes) out << "note: " << n << "\n";
    }
    out << (failed ? "FAIL" : "ok") << ": " << outcomes.size() << " task(s)\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int emit_verify(const std::vector<CheckReport>& reports, const Flags& flags, std::ostream& out) {
  bool failed = false;
  for (const auto& r : reports) failed = failed || r.verdict != Verdict::pass;
  if (flags.format == "json") {
    ordered_json doc;
    doc["status"] = failed ? "fail" : "ok";
    ordered_json suites = ordered_json::array();
    for (const auto& r : reports) suites.push_back(report_to_json(r));
    doc["suites"] = std::move(suites);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << render_report_text(r);
    out << (failed ? "FAIL" : "ok") << ": " << reports.size() << " suite(s)\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int dim(const Flags& f) { return to_int(parse_integer(f.n, "--n"), "--n"); }

std::vector<Task> check_tasks_from_flags(const Flags& f) {
  std::vector<Task> tasks;
  if (!f.chi.empty()) {
    if (f.n.empty() || f.degree.empty()) throw InvalidInput("check: --chi needs --n and --degree");
    tasks.push_back(Task{"congruence", CongruenceTask{dim(f), parse_integer(f.degree, "--degree"),
                                                      parse_integer(f.chi, "--chi"), parse_integer(f.mu, "--mu")}});
  }
  if (!f.foliation_degree.empty()) {
    if (f.degree.empty()) throw InvalidInput("check: --foliation-degree needs --degree (curve degree)");
    SingCountTask t;
    t.data.foliation_degree = parse_integer(f.foliation_degree, "--foliation-degree");
    t.data.curve_degree = parse_integer(f.degree, "--degree");
    if (!f.num_sing.empty()) t.data.num_sing_points = parse_integer(f.num_sing, "--num-sing");
    t.data.irreducible = !f.reducible;
    t.data.nodal_only = f.nodal;
    t.data.non_dicritical = f.non_dicritical;
    tasks.push_back(Task{"sing-count", std::move(t)});
  }
  if (f.singular || f.reducible) {
    if (f.degree.empty()) throw InvalidInput("check: --singular/--reducible needs --degree");
    tasks.push_back(Task{"min-degree", MinDegreeTask{!f.reducible, f.singular, parse_integer(f.degree, "--degree")}});
  }
  if (tasks.empty()) {
    throw InvalidInput("check: nothing to check; give --file, --chi, --foliation-degree or --singular");
  }
  for (const auto& t : tasks) validate(t);
  return tasks;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection numbers for hypersurfaces and foliations on P^n", "residua"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* residue = app.add_subcommand("residue", "Total residue for a complete intersection in P^n");
  residue->add_option("--n", f.n, "Ambient dimension")->required();
  residue->add_option("--degrees", f.degrees, "Hypersurface degrees d1,...,dk")->required();
  residue->add_option("--phi", f.phi, "top | c1pow | file:PATH");
  residue->add_option("--method", f.method, "closed | ring | both");

  auto* cs = app.add_subcommand("camacho-sad", "Total Camacho-Sad residue along an invariant hypersurface");
  cs->add_option("--n", f.n)->required();
  cs->add_option("--degree", f.degree)->required();
  cs->add_option("--chi", f.chi)->required();
  cs->add_option("--mu", f.mu, "Total Milnor number");

  auto* adj = app.add_subcommand("adjunction", "Euler characteristic of a singular hypersurface");
  adj->add_option("--n", f.n)->required();
  adj->add_option("--degree", f.degree)->required();
  adj->add_option("--mu", f.mu, "Total Milnor number");

  auto* milnor = app.add_subcommand("milnor", "Milnor number of complete-intersection singular strata");
  milnor->add_option("--n", f.n)->required();
  milnor->add_option("--degree", f.degree, "Hypersurface degree")->required();
  milnor->add_option("--stratum", f.strata, "Stratum degrees a,b,... (repeat for several strata)")->required();
  milnor->add_option("--mu", f.stratum_mu, "Transversal Milnor number (one per --stratum)")->required();
  milnor->add_option("--method", f.method, "ring | multiindex | both");

  auto* eci = app.add_subcommand("euler-ci", "Euler characteristic of a smooth complete intersection");
  eci->add_option("--n", f.n)->required();
  eci->add_option("--degrees", f.degrees, "Degrees d1,...,dk (omit for P^n itself)");
  eci->add_option("--method", f.method, "ring | multiindex | both");

  auto* check = app.add_subcommand("check", "Necessary conditions for invariant hypersurfaces, or a batch file");
  check->add_option("--file", f.file, "Problem file (JSON)");
  check->add_option("--n", f.n);
  check->add_option("--degree", f.degree, "Hypersurface / curve degree");
  check->add_option("--chi", f.chi);
  check->add_option("--mu", f.mu);
  check->add_option("--foliation-degree", f.foliation_degree);
  check->add_option("--num-sing", f.num_sing, "Number of singular points of the curve");
  check->add_flag("--nodal", f.nodal, "Curve has at most nodal singularities");
  check->add_flag("--non-dicritical", f.non_dicritical);
  check->add_flag("--reducible", f.reducible);
  check->add_flag("--singular", f.singular, "Curve has a singular point");

  auto* verify = app.add_subcommand("verify", "Run every cross-oracle consistency suite");

  for (auto* sub : {residue, cs, adj, milnor, eci, check, verify}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*verify) return emit_verify(verify_suite(), f, out);
    if (*check) {
      if (!f.file.empty()) {
        const auto tasks = load_problem_file(f.file);
        std::vector<TaskOutcome> outcomes;
        outcomes.reserve(tasks.size());
        for (const auto& t : tasks) outcomes.push_back(run_task(t));
        return emit_batch(outcomes, f, out);
      }
      std::vector<TaskOutcome> outcomes;
      for (const auto& t : check_tasks_from_flags(f)) outcomes.push_back(run_task(t));
      return emit_batch(outcomes, f, out);
    }

    Task task;
    if (*residue) {
      ResidueTask t;
      t.n = dim(f);
      t.degrees = parse_integer_list(f.degrees, "--degrees");
      if (f.phi == "c1pow") {
        t.phi.kind = PhiChoice::Kind::c1pow;
      } else if (f.phi.rfind("file:", 0) == 0) {
        t.phi.kind = PhiChoice::Kind::custom;
        t.phi.custom = load_phi_file(f.phi.substr(5));
      } else if (f.phi != "top") {
        throw InvalidInput("--phi: expected top, c1pow or file:PATH, got '" + f.phi + "'");
      }
      t.method = f.method;
      task = Task{"residue", std::move(t)};
    } else if (*cs) {
      task = Task{"camacho-sad", CamachoSadTask{dim(f), parse_integer(f.degree, "--degree"),
                                                parse_integer(f.chi, "--chi"), parse_integer(f.mu, "--mu")}};
    } else if (*adj) {
      task = Task{"adjunction",
                  AdjunctionTask{dim(f), parse_integer(f.degree, "--degree"), parse_integer(f.mu, "--mu")}};
    } else if (*milnor) {
      if (f.strata.size() != f.stratum_mu.size()) {
        throw InvalidInput("--mu: expected one value per --stratum (" + std::to_string(f.strata.size()) + "), got " +
                           std::to_string(f.stratum_mu.size()));
      }
      MilnorTask t;
      const int n = dim(f);
      const Integer degree = parse_integer(f.degree, "--degree");
      for (std::size_t i = 0; i < f.strata.size(); ++i) {
        t.strata.push_back(StratumSpec{n, parse_integer_list(f.strata[i], "--stratum"), degree,
                                       parse_integer(f.stratum_mu[i], "--mu")});
      }
      t.method = f.method;
      task = Task{"milnor", std::move(t)};
    } else if (*eci) {
      task = Task{"euler-ci", EulerCiTask{dim(f), parse_integer_list(f.degrees, "--degrees"), f.method}};
    }
    return emit_single(run_task(task), f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace residua
