#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rvic/env.hpp"
#include "rvic/rng.hpp"
#include "rvic/types.hpp"

namespace rvic {

class SkillPolicy;

struct SkillConfig {
  int num_skills = 16;
  int episode_length = 10;     // T
  int episodes_per_reset = 10; // M
  double discount = 0.9;       // gamma
  double final_step_discount = 0.0;  // gamma_T; {gamma, 0} in shipped configs
  bool dense_reward = true;
  RewardMode reward_mode = RewardMode::ProbDiff;
  BaselineMode baseline_mode = BaselineMode::Rvic;
};

// One rollout of a skill for T steps: states s_0..s_T, actions a_1..a_T,
// rewards r_1..r_T and discounts gamma_1..gamma_T. Rewards stay zero until
// assign_rewards writes them.
struct SkillEpisode {
  SkillId skill = 0;
  std::vector<StateId> states;
  std::vector<ActionId> actions;
  std::vector<double> rewards;
  std::vector<double> discounts;

  StateId start() const { return states.front(); }
  StateId end() const { return states.back(); }
  int length() const { return static_cast<int>(actions.size()); }
};

// Uniform draw from the fixed skill prior.
SkillId sample_skill(int num_skills, Rng& rng);

// Executes exactly T environment steps under the skill-conditioned policy.
// Rewards are left at zero; discounts are set from the config.
SkillEpisode run_skill_episode(const SkillPolicy& policy, const Env& env,
                               SkillId skill, StateId s0,
                               const SkillConfig& config, Rng& rng,
                               ActMode mode = ActMode::Explore);

// Final state of the previous episode if m < M, nullopt to signal a base
// environment reset. m is the 1-based episode ordinal within the chain.
std::optional<StateId> chain_next_start(const SkillEpisode& previous, int m,
                                        const SkillConfig& config);

// Dense mode writes r into every step's reward, sparse mode into the final
// step only. Discounts become [gamma, ..., gamma, gamma_T]. Idempotent.
void assign_rewards(SkillEpisode& episode, double r, const SkillConfig& config);

// Line-oriented JSON record (skill, states, actions, rewards, discounts).
std::string episode_to_json(const SkillEpisode& episode);
SkillEpisode episode_from_json(const std::string& line);

}  // namespace rvic
