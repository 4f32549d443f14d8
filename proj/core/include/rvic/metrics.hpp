#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rvic/env.hpp"
#include "rvic/policy.hpp"
#include "rvic/types.hpp"

namespace rvic {

struct RolloutRecord {
  SkillId skill = 0;
  StateId s0 = 0;
  StateId sT = 0;
};

// Evaluation rollouts, typically one greedy rollout per (skill, start).
using RolloutSet = std::vector<RolloutRecord>;

// Exact empirical conditional entropies in bits (base-2, no smoothing).
struct PlugInEntropies {
  double h_skill_given_end = 0.0;    // H(skill | s_T)
  double h_skill_given_both = 0.0;   // H(skill | s_T, s_0)
  double h_skill_given_start = 0.0;  // H(skill | s_0)
  double h_skill = 0.0;              // H(skill)
};

PlugInEntropies plug_in_entropies(const RolloutSet& rollouts);

struct MutualInformations {
  double mi_end_given_start = 0.0;   // I(s_T; skill | s_0)
  double mi_start_given_end = 0.0;   // I(s_0; skill | s_T)
};

// Differences of the plug-in entropies; nonnegative up to rounding.
MutualInformations mutual_informations(const RolloutSet& rollouts);

// Mean over skills of the modal terminal-state frequency. 1 iff every
// skill has a single fixed terminal state.
double partition_score(const RolloutSet& rollouts);

// Mean over skills of the modal displacement frequency, with displacement
// (s_T - s_0) mod sizes. Torus-family environments only.
double relativity_score(const RolloutSet& rollouts, const Env& env);

struct MetricsReport {
  double mi_end_given_start = 0.0;
  double mi_start_given_end = 0.0;
  double h_skill_given_end = 0.0;
  double h_skill_given_both = 0.0;
  double partition_score = 0.0;
  std::optional<double> relativity_score;  // torus-family envs only
};

// All report fields from one rollout set. relativity_score is computed
// only when env is torus-family.
MetricsReport compute_metrics(const RolloutSet& rollouts, const Env& env);

// The evaluation protocol: one greedy rollout per (skill, enumerated start),
// T steps each. Requires slip_prob == 0.
RolloutSet collect_greedy_rollouts(const SkillPolicy& policy, const Env& env,
                                   int T);

struct MetricsRow {
  std::int64_t episode = 0;
  std::string arm;
  std::uint64_t seed = 0;
  MetricsReport report;
};

// Append-only CSV with locale-independent, round-trip decimal formatting.
// Lines starting with '#' are metadata and are skipped by the parser.
class MetricsCsv {
 public:
  static std::string header();
  static std::string format_row(const MetricsRow& row);
  static void write_file(const std::vector<MetricsRow>& rows,
                         const std::string& path,
                         const std::string& metadata_comment = "");
  static std::vector<MetricsRow> parse_file(const std::string& path);
};

// Locale-independent shortest round-trip formatting; "nan" for unset.
std::string format_double(double value);

// Reads rollout records from the skills module's line-JSON episode format
// (skill, first state, last state per line).
RolloutSet rollouts_from_jsonl(std::istream& in);

}  // namespace rvic
