#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rvic/env.hpp"
#include "rvic/rng.hpp"
#include "rvic/skills.hpp"
#include "rvic/types.hpp"

namespace rvic {

// Linear interpolation from start to end over decay_steps, then flat.
struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.05;
  std::int64_t decay_steps = 1;

  double at(std::int64_t step) const {
    if (step >= decay_steps) return end;
    if (step <= 0) return start;
    double frac = static_cast<double>(step) / static_cast<double>(decay_steps);
    return start + (end - start) * frac;
  }
};

// Skill-conditioned tabular action values Q[skill][state][action] with an
// epsilon-greedy behavior policy. Greedy ties break toward the lowest
// action index.
class SkillPolicy {
 public:
  SkillPolicy(int num_skills, int num_states, int num_actions,
              double step_size, EpsilonSchedule epsilon);

  ActionId act(StateId s, SkillId skill, ActMode mode, Rng& rng) const;
  ActionId greedy_action(StateId s, SkillId skill) const;
  double max_q(StateId s, SkillId skill) const;

  // Backward one-step Q-learning sweep over t = T..1:
  //   target_t = r_t + gamma_t * max_a Q[skill][s_t][a]
  //   Q[skill][s_{t-1}][a_t] <- (1 - beta) * Q + beta * target_t
  // final_bootstrap, when given, overrides the continuation value at t = T.
  void learn(const SkillEpisode& episode,
             std::optional<double> final_bootstrap = std::nullopt);

  // Position in the exploration schedule, in units of skill episodes.
  void set_schedule_step(std::int64_t step) { schedule_step_ = step; }
  std::int64_t schedule_step() const { return schedule_step_; }
  double current_epsilon() const { return epsilon_.at(schedule_step_); }

  double q(SkillId skill, StateId s, ActionId a) const {
    return table_[index(skill, s, a)];
  }
  double& q(SkillId skill, StateId s, ActionId a) {
    return table_[index(skill, s, a)];
  }

  int num_skills() const { return num_skills_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double step_size() const { return step_size_; }
  const EpsilonSchedule& epsilon_schedule() const { return epsilon_; }
  const std::vector<double>& table() const { return table_; }
  std::vector<double>& table() { return table_; }

  // FNV-1a over the raw table bytes; used by frozenness checks.
  std::uint64_t table_hash() const;

  bool operator==(const SkillPolicy& other) const = default;

 private:
  std::size_t index(SkillId skill, StateId s, ActionId a) const {
    return (static_cast<std::size_t>(skill) * num_states_ + s) * num_actions_ +
           a;
  }

  int num_skills_;
  int num_states_;
  int num_actions_;
  double step_size_;
  EpsilonSchedule epsilon_;
  std::int64_t schedule_step_ = 0;
  std::vector<double> table_;
};

// Deterministic start -> end map over all enumerable states: T greedy steps
// of the skill from each start. Requires slip_prob == 0.
std::vector<StateId> evaluate_skill_map(const SkillPolicy& policy,
                                        const Env& env, SkillId skill, int T);

inline bool operator==(const EpsilonSchedule& a, const EpsilonSchedule& b) {
  return a.start == b.start && a.end == b.end && a.decay_steps == b.decay_steps;
}

}  // namespace rvic
