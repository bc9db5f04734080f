#include "residua/tasks.hpp"

#include <fstream>
#include <sstream>

#include "residua/chern.hpp"
#include "residua/errors.hpp"

namespace residua {

using nlohmann::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_method(const std::string& method, std::initializer_list<std::string_view> allowed, const char* what) {
  for (auto a : allowed) {
    if (method == a) return;
  }
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw InvalidInput(std::string(what) + ": unknown method '" + method + "', expected " + list);
}

std::string residue_method(const ResidueTask& t) {
  if (!t.method.empty()) return t.method;
  return t.phi.kind == PhiChoice::Kind::custom ? "ring" : "closed";
}

std::string path_method(const std::string& m) { return m.empty() ? "ring" : m; }

// ---- JSON field access -----------------------------------------------------

Integer json_integer(const ordered_json& j, const std::string& field) {
  if (j.is_string()) return parse_integer(j.get<std::string>(), field);
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  throw InvalidInput(field + ": expected an integer (preferably as a decimal string)");
}

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + "." + key + ": missing");
  return *it;
}

Integer get_integer(const ordered_json& obj, const char* key, const std::string& where) {
  return json_integer(require(obj, key, where), where + "." + key);
}

std::optional<Integer> get_optional_integer(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return json_integer(*it, where + "." + key);
}

Integer get_integer_or(const ordered_json& obj, const char* key, const std::string& where, long fallback) {
  auto v = get_optional_integer(obj, key, where);
  return v ? *v : Integer(fallback);
}

int get_dim(const ordered_json& obj, const std::string& where) {
  return to_int(get_integer(obj, "n", where), where + ".n");
}

std::vector<Integer> get_integer_list(const ordered_json& obj, const char* key, const std::string& where,
                                      bool required = true) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw InvalidInput(where + "." + key + ": missing");
    return {};
  }
  const std::string field = where + "." + key;
  if (it->is_string()) return parse_integer_list(it->get<std::string>(), field);
  if (!it->is_array()) throw InvalidInput(field + ": expected an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    out.push_back(json_integer((*it)[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

bool get_bool(const ordered_json& obj, const char* key, const std::string& where, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw InvalidInput(where + "." + key + ": expected true or false");
  return it->get<bool>();
}

std::string get_string(const ordered_json& obj, const char* key, const std::string& where,
                       const std::string& fallback = "") {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) throw InvalidInput(where + "." + key + ": expected a string");
  return it->get<std::string>();
}

PhiChoice parse_phi(const ordered_json& obj, const std::string& where, const std::filesystem::path& base_dir) {
  PhiChoice phi;
  auto it = obj.find("phi");
  if (it == obj.end()) return phi;
  const std::string field = where + ".phi";
  if (it->is_string()) {
    const auto s = it->get<std::string>();
    if (s == "top") return phi;
    if (s == "c1pow") {
      phi.kind = PhiChoice::Kind::c1pow;
      return phi;
    }
    if (s.rfind("file:", 0) == 0) {
      std::filesystem::path p = s.substr(5);
      if (p.is_relative()) p = base_dir / p;
      phi.kind = PhiChoice::Kind::custom;
      phi.custom = load_phi_file(p);
      return phi;
    }
    throw InvalidInput(field + ": expected top, c1pow, file:PATH or a list of terms");
  }
  if (!it->is_array()) throw InvalidInput(field + ": expected top, c1pow, file:PATH or a list of terms");
  std::string text;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& row = (*it)[i];
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) throw InvalidInput(rf + ": expected [coefficient, e1, ..., ek]");
    for (std::size_t c = 0; c < row.size(); ++c) {
      text += json_integer(row[c], rf).get_str();
      text += c + 1 < row.size() ? " " : "\n";
    }
  }
  phi.kind = PhiChoice::Kind::custom;
  phi.custom = SymmetricPolynomial::parse(text);
  return phi;
}

StratumSpec stratum_from(int n, const Integer& degree, const ordered_json& obj, const std::string& where) {
  StratumSpec s;
  s.ambient_dim = n;
  s.hypersurface_degree = degree;
  s.stratum_degrees = get_integer_list(obj, "stratum", where);
  s.transversal_mu = get_integer(obj, "mu", where);
  return s;
}

Task parse_task(const ordered_json& obj, const std::string& where, const std::filesystem::path& base_dir) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
  Task task;
  task.label = get_string(obj, "label", where, where);
  const std::string kind = get_string(obj, "kind", where);
  if (kind == "residue") {
    ResidueTask t;
    t.n = get_dim(obj, where);
    t.degrees = get_integer_list(obj, "degrees", where);
    t.phi = parse_phi(obj, where, base_dir);
    t.method = get_string(obj, "method", where);
    task.body = std::move(t);
  } else if (kind == "camacho_sad") {
    task.body = CamachoSadTask{get_dim(obj, where), get_integer(obj, "degree", where), get_integer(obj, "chi", where),
                               get_integer_or(obj, "mu", where, 0)};
  } else if (kind == "adjunction") {
    task.body = AdjunctionTask{get_dim(obj, where), get_integer(obj, "degree", where),
                               get_integer_or(obj, "mu", where, 0)};
  } else if (kind == "milnor") {
    MilnorTask t;
    const int n = get_dim(obj, where);
    const Integer degree = get_integer(obj, "degree", where);
    if (auto it = obj.find("strata"); it != obj.end()) {
      if (!it->is_array() || it->empty()) throw InvalidInput(where + ".strata: expected a non-empty array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        t.strata.push_back(stratum_from(n, degree, (*it)[i], where + ".strata[" + std::to_string(i) + "]"));
      }
    } else {
      t.strata.push_back(stratum_from(n, degree, obj, where));
    }
    t.method = get_string(obj, "method", where);
    task.body = std::move(t);
  } else if (kind == "euler_ci") {
    task.body = EulerCiTask{get_dim(obj, where), get_integer_list(obj, "degrees", where, false),
                            get_string(obj, "method", where)};
  } else if (kind == "check") {
    const std::string check = get_string(obj, "check", where);
    if (check == "congruence") {
      task.body = CongruenceTask{get_dim(obj, where), get_integer(obj, "degree", where), get_integer(obj, "chi", where),
                                 get_integer_or(obj, "mu", where, 0)};
    } else if (check == "min_degree") {
      task.body = MinDegreeTask{get_bool(obj, "irreducible", where, true), get_bool(obj, "has_singularity", where, false),
                                get_integer(obj, "degree", where)};
    } else if (check == "sing_count") {
      SingCountTask t;
      t.data.foliation_degree = get_integer(obj, "foliation_degree", where);
      t.data.curve_degree = get_integer(obj, "degree", where);
      t.data.num_sing_points = get_optional_integer(obj, "num_sing_points", where);
      t.data.mu_total = get_optional_integer(obj, "mu", where);
      t.data.chi = get_optional_integer(obj, "chi", where);
      t.data.irreducible = get_bool(obj, "irreducible", where, true);
      t.data.nodal_only = get_bool(obj, "nodal_only", where, false);
      t.data.non_dicritical = get_bool(obj, "non_dicritical", where, false);
      task.body = std::move(t);
    } else {
      throw InvalidInput(where + ".check: unknown check '" + check + "', expected congruence|min_degree|sing_count");
    }
  } else {
    throw InvalidInput(where + ".kind: unknown task kind '" + kind +
                       "', expected residue|camacho_sad|adjunction|milnor|euler_ci|check");
  }
  return task;
}

void require_nonneg(const Integer& v, const char* what) {
  if (v < 0) throw InvalidInput(std::string(what) + " must be non-negative, got " + v.get_str());
}

void require_positive(const Integer& v, const char* what) {
  if (v < 1) throw InvalidInput(std::string(what) + " must be positive, got " + v.get_str());
}

void require_dim_at_least(int n, int lo) {
  if (n < lo) throw InvalidInput("n must be at least " + std::to_string(lo) + ", got " + std::to_string(n));
}

}  // namespace

std::string_view task_kind(const Task& task) {
  return std::visit(overloaded{
                        [](const ResidueTask&) { return std::string_view("residue"); },
                        [](const CamachoSadTask&) { return std::string_view("camacho_sad"); },
                        [](const AdjunctionTask&) { return std::string_view("adjunction"); },
                        [](const MilnorTask&) { return std::string_view("milnor"); },
                        [](const EulerCiTask&) { return std::string_view("euler_ci"); },
                        [](const CongruenceTask&) { return std::string_view("check:congruence"); },
                        [](const MinDegreeTask&) { return std::string_view("check:min_degree"); },
                        [](const SingCountTask&) { return std::string_view("check:sing_count"); },
                    },
                    task.body);
}

void validate(const Task& task) {
  std::visit(overloaded{
                 [](const ResidueTask& t) {
                   const auto k = t.degrees.size();
                   if (k < 1 || k > static_cast<std::size_t>(t.n)) {
                     throw InvalidInput("residue: need 1 <= number of degrees <= n");
                   }
                   for (const auto& d : t.degrees) require_positive(d, "degree");
                   const std::string m = residue_method(t);
                   if (t.phi.kind == PhiChoice::Kind::custom) {
                     check_method(m, {"ring"}, "residue with custom phi");
                     if (t.phi.custom->weighted_degree() != t.n - static_cast<int>(k)) {
                       throw InvalidInput("phi has weighted degree " + std::to_string(t.phi.custom->weighted_degree()) +
                                          ", expected n-k = " + std::to_string(t.n - static_cast<int>(k)));
                     }
                   } else {
                     check_method(m, {"closed", "ring", "both"}, "residue");
                   }
                 },
                 [](const CamachoSadTask& t) {
                   require_dim_at_least(t.n, 2);
                   require_positive(t.degree, "degree");
                   require_nonneg(t.mu, "mu");
                 },
                 [](const AdjunctionTask& t) {
                   require_dim_at_least(t.n, 2);
                   require_positive(t.degree, "degree");
                   require_nonneg(t.mu, "mu");
                 },
                 [](const MilnorTask& t) {
                   if (t.strata.empty()) throw InvalidInput("milnor: no strata");
                   for (const auto& s : t.strata) s.validate();
                   check_method(path_method(t.method), {"ring", "multiindex", "both"}, "milnor");
                 },
                 [](const EulerCiTask& t) {
                   require_dim_at_least(t.n, 1);
                   if (t.degrees.size() > static_cast<std::size_t>(t.n)) {
                     throw InvalidInput("euler-ci: more hypersurfaces than n");
                   }
                   for (const auto& d : t.degrees) require_positive(d, "degree");
                   check_method(path_method(t.method), {"ring", "multiindex", "both"}, "euler-ci");
                 },
                 [](const CongruenceTask& t) {
                   require_dim_at_least(t.n, 2);
                   require_positive(t.degree, "degree");
                   require_nonneg(t.mu, "mu");
                 },
                 [](const MinDegreeTask&) {},
                 [](const SingCountTask& t) {
                   require_positive(t.data.curve_degree, "degree");
                   require_nonneg(t.data.foliation_degree, "foliation degree");
                   if (t.data.num_sing_points) require_nonneg(*t.data.num_sing_points, "num_sing_points");
                   if (t.data.mu_total) require_nonneg(*t.data.mu_total, "mu");
                 },
             },
             task.body);
}

TaskOutcome run_task(const Task& task) {
  validate(task);
  TaskOutcome out;
  out.label = task.label;
  out.kind = std::string(task_kind(task));
  auto agree = [&out](const char* what) {
    const Integer& first = out.values.front().second;
    for (const auto& [name, v] : out.values) {
      if (v != first) {
        out.failed = true;
        out.notes.push_back(std::string("DISAGREEMENT: ") + what + " routes differ");
        return;
      }
    }
  };
  std::visit(
      overloaded{
          [&](const ResidueTask& t) {
            const std::string m = residue_method(t);
            const int k = static_cast<int>(t.degrees.size());
            if (m == "closed" || m == "both") {
              auto r = t.phi.kind == PhiChoice::Kind::top ? residue_sum_top_chern(t.n, t.degrees)
                                                          : residue_sum_c1_power(t.n, t.degrees);
              out.values.emplace_back("closed_form", r.value);
            }
            if (m == "ring" || m == "both") {
              SymmetricPolynomial phi = t.phi.kind == PhiChoice::Kind::custom ? *t.phi.custom
                                        : t.phi.kind == PhiChoice::Kind::top  ? SymmetricPolynomial::chern(t.n - k)
                                                                              : SymmetricPolynomial::c1_power(t.n - k);
              auto r = residue_sum_general(t.n, direct_sum_of_lines(t.n, t.degrees), phi);
              out.values.emplace_back("ring_integral", r.value);
            }
            agree("residue");
          },
          [&](const CamachoSadTask& t) {
            out.values.emplace_back("value", camacho_sad_total(t.n, t.degree, t.chi, t.mu));
          },
          [&](const AdjunctionTask& t) {
            out.values.emplace_back("value", adjunction_euler(t.n, t.degree, t.mu));
          },
          [&](const MilnorTask& t) {
            const std::string m = path_method(t.method);
            Integer ring = 0, multi = 0, curve_value = 0, variant = 0;
            bool all_curves = true;
            bool has_higher_codim = false;
            for (const auto& s : t.strata) {
              if (m != "multiindex") ring += milnor_stratum_ring(s);
              multi += milnor_stratum_multiindex(s);
              variant += milnor_stratum_linear_deg_variant(s);
              has_higher_codim = has_higher_codim || s.codim() >= 2;
              if (s.codim() == s.ambient_dim - 1) {
                curve_value += milnor_curve_case(s);
              } else {
                all_curves = false;
              }
            }
            if (m == "ring" || m == "both") out.values.emplace_back("ring", ring);
            if (m == "multiindex" || m == "both") out.values.emplace_back("multiindex", multi);
            if (m == "both" && all_curves) out.values.emplace_back("curve_case", curve_value);
            agree("milnor");
            if (has_higher_codim && variant != multi) {
              out.notes.push_back(
                  "deg_L(S) is the product e_{l1}(d)...e_{li}(d) of elementary symmetric functions of the stratum "
                  "degrees. Reading each factor as the plain sum d_1+...+d_k instead gives " +
                  variant.get_str() +
                  "; that misreading is what produces the value 0 printed in a published worked example for "
                  "X0^2+X1^2=0 in P^4, whose value is 1.");
            }
          },
          [&](const EulerCiTask& t) {
            const std::string m = path_method(t.method);
            if (m == "ring" || m == "both") out.values.emplace_back("ring", euler_ci(t.n, t.degrees));
            if (m == "multiindex" || m == "both") out.values.emplace_back("multiindex", euler_ci_multiindex(t.n, t.degrees));
            agree("euler-ci");
          },
          [&](const CongruenceTask& t) {
            out.checks.push_back(congruence_check(t.n, t.degree, t.chi, t.mu));
            out.checks.push_back(polynomial_root_check(t.n, t.degree, t.chi, t.mu));
          },
          [&](const MinDegreeTask& t) {
            out.checks.push_back(min_degree_check(t.irreducible, t.has_singularity, t.degree));
          },
          [&](const SingCountTask& t) { out.checks.push_back(sing_count_bound(t.data)); },
      },
      task.body);
  for (const auto& c : out.checks) {
    if (c.verdict == Verdict::fail) out.failed = true;
  }
  return out;
}

std::vector<Task> parse_problem(const ordered_json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw InvalidInput("problem file: expected a JSON object");
  const std::string version = get_string(doc, "version", "problem");
  if (version != kProblemFileVersion) {
    throw InvalidInput("problem.version: expected '" + std::string(kProblemFileVersion) + "', got '" + version + "'");
  }
  const auto& tasks = require(doc, "tasks", "problem");
  if (!tasks.is_array()) throw InvalidInput("problem.tasks: expected an array");
  std::vector<Task> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string where = "tasks[" + std::to_string(i) + "]";
    Task t = parse_task(tasks[i], where, base_dir);
    try {
      validate(t);
    } catch (const Error& e) {
      throw InvalidInput(where + " (" + t.label + "): " + e.what());
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Task> load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("--file: cannot open '" + path.string() + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("--file: malformed JSON in '" + path.string() + "': " + e.what());
  }
  return parse_problem(doc, path.parent_path());
}

SymmetricPolynomial load_phi_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("--phi: cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return SymmetricPolynomial::parse(ss.str());
}

ordered_json report_to_json(const CheckReport& report) {
  ordered_json j;
  j["check"] = report.check_name;
  j["verdict"] = verdict_name(report.verdict);
  ordered_json w = ordered_json::object();
  for (const auto& [k, v] : report.witness) w[k] = v.get_str();
  j["witness"] = std::move(w);
  j["notes"] = report.notes;
  return j;
}

ordered_json outcome_to_json(const TaskOutcome& outcome) {
  ordered_json j;
  j["label"] = outcome.label;
  j["kind"] = outcome.kind;
  j["status"] = outcome.failed ? "fail" : "ok";
  ordered_json values = ordered_json::object();
  for (const auto& [k, v] : outcome.values) values[k] = v.get_str();
  j["values"] = std::move(values);
  ordered_json checks = ordered_json::array();
  for (const auto& c : outcome.checks) checks.push_back(report_to_json(c));
  j["checks"] = std::move(checks);
  j["notes"] = outcome.notes;
  return j;
}

std::string render_report_text(const CheckReport& report) {
  std::string verdict(verdict_name(report.verdict));
  for (auto& c : verdict) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::string out = "[" + verdict + "] " + report.check_name;
  for (const auto& [k, v] : report.witness) out += " " + k + "=" + v.get_str();
  out += "\n";
  for (const auto& n : report.notes) out += "  note: " + n + "\n";
  return out;
}

std::string render_text(const TaskOutcome& outcome) {
  std::string out;
  if (outcome.values.size() == 1 && outcome.checks.empty()) {
    out += outcome.values.front().second.get_str() + "\n";
  } else {
    for (const auto& [k, v] : outcome.values) out += k + ": " + v.get_str() + "\n";
  }
  for (const auto& c : outcome.checks) out += render_report_text(c);
  for (const auto& n : outcome.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace residua
