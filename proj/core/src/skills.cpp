#include "rvic/skills.hpp"

#include <cmath>

#include "json.hpp"
#include "rvic/policy.hpp"

namespace rvic {

SkillId sample_skill(int num_skills, Rng& rng) {
  if (num_skills < 1) throw ContractError("num_skills must be >= 1");
  return static_cast<SkillId>(rng.uniform_int(num_skills));
}

SkillEpisode run_skill_episode(const SkillPolicy& policy, const Env& env,
                               SkillId skill, StateId s0,
                               const SkillConfig& config, Rng& rng,
                               ActMode mode) {
  const int T = config.episode_length;
  SkillEpisode episode;
  episode.skill = skill;
  episode.states.reserve(T + 1);
  episode.actions.reserve(T);
  episode.states.push_back(s0);
  for (int t = 0; t < T; ++t) {
    ActionId a = policy.act(episode.states.back(), skill, mode, rng);
    episode.actions.push_back(a);
    episode.states.push_back(env.step(episode.states.back(), a, rng).next_state);
  }
  episode.rewards.assign(T, 0.0);
  episode.discounts.assign(T, config.discount);
  episode.discounts.back() = config.final_step_discount;
  return episode;
}

std::optional<StateId> chain_next_start(const SkillEpisode& previous, int m,
                                        const SkillConfig& config) {
  if (m < config.episodes_per_reset) return previous.end();
  return std::nullopt;
}

void assign_rewards(SkillEpisode& episode, double r,
                    const SkillConfig& config) {
  if (!std::isfinite(r)) {
    throw ContractError("assign_rewards: reward must be finite");
  }
  const int T = episode.length();
  if (config.dense_reward) {
    episode.rewards.assign(T, r);
  } else {
    episode.rewards.assign(T, 0.0);
    episode.rewards.back() = r;
  }
  episode.discounts.assign(T, config.discount);
  episode.discounts.back() = config.final_step_discount;
}

std::string episode_to_json(const SkillEpisode& episode) {
  nlohmann::json j;
  j["skill"] = episode.skill;
  j["states"] = episode.states;
  j["actions"] = episode.actions;
  j["rewards"] = episode.rewards;
  j["discounts"] = episode.discounts;
  return j.dump();
}

SkillEpisode episode_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded()) throw ContractError("episode record is not valid JSON");
  SkillEpisode episode;
  try {
    episode.skill = j.at("skill").get<SkillId>();
    episode.states = j.at("states").get<std::vector<StateId>>();
    episode.actions = j.at("actions").get<std::vector<ActionId>>();
    episode.rewards = j.at("rewards").get<std::vector<double>>();
    episode.discounts = j.at("discounts").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("episode record malformed: ") + e.what());
  }
  if (episode.states.size() != episode.actions.size() + 1 ||
      episode.actions.size() != episode.rewards.size() ||
      episode.rewards.size() != episode.discounts.size()) {
    throw ContractError("episode record has inconsistent lengths");
  }
  return episode;
}

}  // namespace rvic
