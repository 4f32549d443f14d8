#include "rvic/policy.hpp"

#include <string>

namespace rvic {

SkillPolicy::SkillPolicy(int num_skills, int num_states, int num_actions,
                         double step_size, EpsilonSchedule epsilon)
    : num_skills_(num_skills),
      num_states_(num_states),
      num_actions_(num_actions),
      step_size_(step_size),
      epsilon_(epsilon),
      table_(static_cast<std::size_t>(num_skills) * num_states * num_actions,
             0.0) {
  if (num_skills < 1 || num_states < 1 || num_actions < 1) {
    throw ConfigError("policy table dimensions must be positive");
  }
  if (step_size < 0.0 || step_size > 1.0) {
    throw ConfigError("policy step size must lie in [0, 1]");
  }
}

ActionId SkillPolicy::greedy_action(StateId s, SkillId skill) const {
  const double* row = &table_[index(skill, s, 0)];
  ActionId best = 0;
  for (ActionId a = 1; a < num_actions_; ++a) {
    if (row[a] > row[best]) best = a;
  }
  return best;
}

double SkillPolicy::max_q(StateId s, SkillId skill) const {
  return q(skill, s, greedy_action(s, skill));
}

ActionId SkillPolicy::act(StateId s, SkillId skill, ActMode mode,
                          Rng& rng) const {
  if (s < 0 || s >= num_states_ || skill < 0 || skill >= num_skills_) {
    throw ContractError("act: state or skill id out of range");
  }
  if (mode == ActMode::Explore && rng.uniform_real() < current_epsilon()) {
    return static_cast<ActionId>(rng.uniform_int(num_actions_));
  }
  return greedy_action(s, skill);
}

void SkillPolicy::learn(const SkillEpisode& episode,
                        std::optional<double> final_bootstrap) {
  const int T = episode.length();
  const SkillId skill = episode.skill;
  for (int t = T; t >= 1; --t) {
    double continuation = (t == T && final_bootstrap)
                              ? *final_bootstrap
                              : max_q(episode.states[t], skill);
    double target = episode.rewards[t - 1] + episode.discounts[t - 1] * continuation;
    double& cell = q(skill, episode.states[t - 1], episode.actions[t - 1]);
    cell += step_size_ * (target - cell);
  }
}

std::uint64_t SkillPolicy::table_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  const auto* bytes = reinterpret_cast<const unsigned char*>(table_.data());
  std::size_t n = table_.size() * sizeof(double);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<StateId> evaluate_skill_map(const SkillPolicy& policy,
                                        const Env& env, SkillId skill, int T) {
  if (env.config().slip_prob != 0.0) {
    throw ContractError("evaluate_skill_map requires slip_prob == 0");
  }
  Rng scratch(0);  // never drawn from with slip 0
  std::vector<StateId> end_state(env.num_states());
  for (StateId s0 : env.enumerate_states()) {
    StateId s = s0;
    for (int t = 0; t < T; ++t) {
      s = env.step(s, policy.greedy_action(s, skill), scratch).next_state;
    }
    end_state[s0] = s;
  }
  return end_state;
}

}  // namespace rvic
