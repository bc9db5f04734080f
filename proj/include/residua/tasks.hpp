#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "residua/checks.hpp"
#include "residua/integer.hpp"
#include "residua/residue.hpp"
#include "residua/singularity.hpp"

namespace residua {

inline constexpr std::string_view kProblemFileVersion = "residua/1";

struct PhiChoice {
  enum class Kind { top, c1pow, custom };
  Kind kind = Kind::top;
  std::optional<SymmetricPolynomial> custom;
};

struct ResidueTask {
  int n = 0;
  std::vector<Integer> degrees;
  PhiChoice phi;
  std::string method;  // closed | ring | both; empty picks the default
};

struct CamachoSadTask {
  int n = 0;
  Integer degree;
  Integer chi;
  Integer mu;
};

struct AdjunctionTask {
  int n = 0;
  Integer degree;
  Integer mu;
};

// Several strata of the same hypersurface are summed.
struct MilnorTask {
  std::vector<StratumSpec> strata;
  std::string method;  // ring | multiindex | both
};

struct EulerCiTask {
  int n = 0;
  std::vector<Integer> degrees;
  std::string method;  // ring | multiindex | both
};

// Congruence plus the adjunction-polynomial root test.
struct CongruenceTask {
  int n = 0;
  Integer degree;
  Integer chi;
  Integer mu;
};

struct MinDegreeTask {
  bool irreducible = true;
  bool has_singularity = false;
  Integer degree;
};

struct SingCountTask {
  CurveFoliationData data;
};

using TaskBody = std::variant<ResidueTask, CamachoSadTask, AdjunctionTask, MilnorTask, EulerCiTask, CongruenceTask,
                              MinDegreeTask, SingCountTask>;

struct Task {
  std::string label;
  TaskBody body;
};

std::string_view task_kind(const Task& task);

// Throws residua::Error when the task violates its operation's preconditions.
void validate(const Task& task);

struct TaskOutcome {
  std::string label;
  std::string kind;
  std::vector<std::pair<std::string, Integer>> values;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;
  // A check failed or two computation routes disagreed.
  bool failed = false;
};

TaskOutcome run_task(const Task& task);

// Parses and validates every task; nothing is run if any task is invalid.
std::vector<Task> parse_problem(const nlohmann::ordered_json& doc, const std::filesystem::path& base_dir);
std::vector<Task> load_problem_file(const std::filesystem::path& path);

SymmetricPolynomial load_phi_file(const std::filesystem::path& path);

nlohmann::ordered_json outcome_to_json(const TaskOutcome& outcome);
nlohmann::ordered_json report_to_json(const CheckReport& report);
// Single-task text rendering: a lone value prints bare, anything else as
// `key: value` lines.
std::string render_text(const TaskOutcome& outcome);
std::string render_report_text(const CheckReport& report);

}  // namespace residua
