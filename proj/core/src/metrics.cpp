#include "rvic/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "rvic/skills.hpp"

namespace rvic {

namespace {

// Compensated (Kahan) summation keeps the entropy sums accurate to well
// below the 1e-12-bit oracle tolerance.
class KahanSum {
 public:
  void add(double value) {
    double y = value - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

constexpr std::uint64_t kSkillShift = 42;
constexpr std::uint64_t kStateShift = 21;
constexpr std::uint64_t kMaxId = 1ull << 21;

void check_rollouts(const RolloutSet& rollouts) {
  if (rollouts.empty()) throw ContractError("rollout set must be nonempty");
  for (const auto& r : rollouts) {
    if (r.skill < 0 || r.s0 < 0 || r.sT < 0 ||
        static_cast<std::uint64_t>(r.skill) >= kMaxId ||
        static_cast<std::uint64_t>(r.s0) >= kMaxId ||
        static_cast<std::uint64_t>(r.sT) >= kMaxId) {
      throw ContractError("rollout record id out of range");
    }
  }
}

// H(skill | key) = sum over cells of (c / n) * log2(c_key / c),
// where keys() projects a record onto the conditioning variable.
template <typename KeyFn>
double conditional_entropy_bits(const RolloutSet& rollouts, KeyFn&& key_of) {
  std::unordered_map<std::uint64_t, std::int64_t> joint;
  std::unordered_map<std::uint64_t, std::int64_t> marginal;
  joint.reserve(rollouts.size() * 2);
  marginal.reserve(rollouts.size() * 2);
  for (const auto& r : rollouts) {
    std::uint64_t key = key_of(r);
    ++joint[key | (static_cast<std::uint64_t>(r.skill) << kSkillShift)];
    ++marginal[key];
  }
  const double n = static_cast<double>(rollouts.size());
  KahanSum h;
  for (const auto& [cell, count] : joint) {
    double c = static_cast<double>(count);
    double c_key = static_cast<double>(
        marginal.at(cell & ((1ull << kSkillShift) - 1)));
    h.add((c / n) * std::log2(c_key / c));
  }
  return h.value();
}

}  // namespace

PlugInEntropies plug_in_entropies(const RolloutSet& rollouts) {
  check_rollouts(rollouts);
  PlugInEntropies e;
  e.h_skill_given_end = conditional_entropy_bits(
      rollouts, [](const RolloutRecord& r) {
        return static_cast<std::uint64_t>(r.sT);
      });
  e.h_skill_given_both = conditional_entropy_bits(
      rollouts, [](const RolloutRecord& r) {
        return static_cast<std::uint64_t>(r.sT) |
               (static_cast<std::uint64_t>(r.s0) << kStateShift);
      });
  e.h_skill_given_start = conditional_entropy_bits(
      rollouts, [](const RolloutRecord& r) {
        return static_cast<std::uint64_t>(r.s0);
      });
  e.h_skill = conditional_entropy_bits(
      rollouts, [](const RolloutRecord&) { return std::uint64_t{0}; });
  return e;
}

MutualInformations mutual_informations(const RolloutSet& rollouts) {
  PlugInEntropies e = plug_in_entropies(rollouts);
  return MutualInformations{
      e.h_skill_given_start - e.h_skill_given_both,
      e.h_skill_given_end - e.h_skill_given_both,
  };
}

double partition_score(const RolloutSet& rollouts) {
  check_rollouts(rollouts);
  std::unordered_map<std::uint64_t, std::int64_t> end_counts;
  std::unordered_map<std::uint64_t, std::int64_t> skill_counts;
  for (const auto& r : rollouts) {
    ++end_counts[static_cast<std::uint64_t>(r.sT) |
                 (static_cast<std::uint64_t>(r.skill) << kSkillShift)];
    ++skill_counts[static_cast<std::uint64_t>(r.skill)];
  }
  std::unordered_map<std::uint64_t, std::int64_t> modal;
  for (const auto& [cell, count] : end_counts) {
    std::uint64_t skill = cell >> kSkillShift;
    modal[skill] = std::max(modal[skill], count);
  }
  KahanSum mean;
  for (const auto& [skill, count] : skill_counts) {
    mean.add(static_cast<double>(modal.at(skill)) /
             static_cast<double>(count));
  }
  return mean.value() / static_cast<double>(skill_counts.size());
}

double relativity_score(const RolloutSet& rollouts, const Env& env) {
  check_rollouts(rollouts);
  if (!env.torus_family()) {
    throw ContractError("relativity_score is defined for torus-family "
                        "environments only");
  }
  std::unordered_map<std::uint64_t, std::int64_t> disp_counts;
  std::unordered_map<std::uint64_t, std::int64_t> skill_counts;
  for (const auto& r : rollouts) {
    auto d = static_cast<std::uint64_t>(env.displacement_id(r.s0, r.sT));
    ++disp_counts[d | (static_cast<std::uint64_t>(r.skill) << kSkillShift)];
    ++skill_counts[static_cast<std::uint64_t>(r.skill)];
  }
  std::unordered_map<std::uint64_t, std::int64_t> modal;
  for (const auto& [cell, count] : disp_counts) {
    std::uint64_t skill = cell >> kSkillShift;
    modal[skill] = std::max(modal[skill], count);
  }
  KahanSum mean;
  for (const auto& [skill, count] : skill_counts) {
    mean.add(static_cast<double>(modal.at(skill)) /
             static_cast<double>(count));
  }
  return mean.value() / static_cast<double>(skill_counts.size());
}

MetricsReport compute_metrics(const RolloutSet& rollouts, const Env& env) {
  PlugInEntropies e = plug_in_entropies(rollouts);
  MetricsReport report;
  report.h_skill_given_end = e.h_skill_given_end;
  report.h_skill_given_both = e.h_skill_given_both;
  report.mi_end_given_start = e.h_skill_given_start - e.h_skill_given_both;
  report.mi_start_given_end = e.h_skill_given_end - e.h_skill_given_both;
  report.partition_score = partition_score(rollouts);
  if (env.torus_family()) {
    report.relativity_score = relativity_score(rollouts, env);
  }
  return report;
}

RolloutSet collect_greedy_rollouts(const SkillPolicy& policy, const Env& env,
                                   int T) {
  RolloutSet rollouts;
  rollouts.reserve(static_cast<std::size_t>(policy.num_skills()) *
                   env.num_states());
  for (SkillId skill = 0; skill < policy.num_skills(); ++skill) {
    std::vector<StateId> end_state = evaluate_skill_map(policy, env, skill, T);
    for (StateId s0 : env.enumerate_states()) {
      rollouts.push_back(RolloutRecord{skill, s0, end_state[s0]});
    }
  }
  return rollouts;
}

std::string format_double(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string MetricsCsv::header() {
  return "episode,arm,seed,mi_end_given_start,mi_start_given_end,"
         "h_skill_given_end,h_skill_given_both,partition_score,"
         "relativity_score";
}

std::string MetricsCsv::format_row(const MetricsRow& row) {
  std::string out = std::to_string(row.episode);
  out += ',';
  out += row.arm;
  out += ',';
  out += std::to_string(row.seed);
  const MetricsReport& r = row.report;
  for (double v : {r.mi_end_given_start, r.mi_start_given_end,
                   r.h_skill_given_end, r.h_skill_given_both,
                   r.partition_score}) {
    out += ',';
    out += format_double(v);
  }
  out += ',';
  out += r.relativity_score ? format_double(*r.relativity_score) : "nan";
  return out;
}

void MetricsCsv::write_file(const std::vector<MetricsRow>& rows,
                            const std::string& path,
                            const std::string& metadata_comment) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot open metrics CSV for writing: " + path);
  if (!metadata_comment.empty()) out << "# " << metadata_comment << "\n";
  out << header() << "\n";
  for (const auto& row : rows) out << format_row(row) << "\n";
  if (!out) throw ContractError("write failed for metrics CSV: " + path);
}

std::vector<MetricsRow> MetricsCsv::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open metrics CSV: " + path);
  std::vector<MetricsRow> rows;
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (line != header()) throw ContractError("unexpected metrics CSV header");
      seen_header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 9) throw ContractError("bad metrics CSV row: " + line);
    MetricsRow row;
    row.episode = std::stoll(fields[0]);
    row.arm = fields[1];
    row.seed = std::stoull(fields[2]);
    row.report.mi_end_given_start = std::strtod(fields[3].c_str(), nullptr);
    row.report.mi_start_given_end = std::strtod(fields[4].c_str(), nullptr);
    row.report.h_skill_given_end = std::strtod(fields[5].c_str(), nullptr);
    row.report.h_skill_given_both = std::strtod(fields[6].c_str(), nullptr);
    row.report.partition_score = std::strtod(fields[7].c_str(), nullptr);
    double rel = std::strtod(fields[8].c_str(), nullptr);
    if (!std::isnan(rel)) row.report.relativity_score = rel;
    rows.push_back(std::move(row));
  }
  if (!seen_header) throw ContractError("metrics CSV has no header: " + path);
  return rows;
}

RolloutSet rollouts_from_jsonl(std::istream& in) {
  RolloutSet rollouts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SkillEpisode episode = episode_from_json(line);
    rollouts.push_back(
        RolloutRecord{episode.skill, episode.start(), episode.end()});
  }
  return rollouts;
}

}  // namespace rvic
