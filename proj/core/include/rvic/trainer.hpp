#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rvic/env.hpp"
#include "rvic/metrics.hpp"
#include "rvic/policy.hpp"
#include "rvic/predictors.hpp"
#include "rvic/rng.hpp"
#include "rvic/skills.hpp"
#include "rvic/types.hpp"

namespace rvic {

struct PredictorConfig {
  PredictorFamily family = PredictorFamily::Counts;
  double smoothing = 0.1;        // count smoothing alpha
  double decay = 0.995;          // count decay lambda
  double learning_rate = 1e-4;   // softmax head learning rate
  int target_update_period = 10; // snapshot refresh period U
};

struct PolicyConfig {
  double step_size = 0.1;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  // <= 0 means "half of total_skill_episodes".
  std::int64_t epsilon_decay_episodes = 0;
  int actor_update_period = 100;
};

struct TrainConfig {
  EnvConfig env;
  SkillConfig skills;
  PredictorConfig predictor;
  PolicyConfig policy;
  std::int64_t total_skill_episodes = 200000;
  std::int64_t eval_every = 10000;
  std::uint64_t seed = 1;
};

// Everything that evolves during training; checkpoints capture it exactly.
struct TrainerState {
  SkillPolicy policy;            // learner-owned table
  SkillPolicy behavior;          // actor copy, refreshed periodically
  PredictorPair live;
  PredictorSnapshot snapshot;
  Rng rng;
  std::int64_t episode_counter = 0;
};

TrainerState make_initial_state(const TrainConfig& config);

struct TrainResult {
  TrainerState state;
  std::vector<MetricsRow> metrics;
};

using MetricsSink = std::function<void(const MetricsRow&)>;

// The outer training loop: reset, then chains of M skill episodes. Per
// episode: sample skill, roll T steps, reward from the snapshot
// predictors, assign (dense or sparse), policy update, predictor updates,
// snapshot refresh on schedule, chain s_0 <- s_T. Runs until
// total_skill_episodes have been consumed (counting episodes already in
// `from`), emitting a metrics row every eval_every episodes.
TrainResult train_skills(const TrainConfig& config, TrainerState from,
                         const MetricsSink& sink = nullptr);

inline TrainResult train_skills(const TrainConfig& config) {
  return train_skills(config, make_initial_state(config));
}

// Canonical JSON used for hashing and for embedding into checkpoints.
std::string train_config_canonical_json(const TrainConfig& config);
std::uint64_t train_config_hash(const TrainConfig& config);

// Single self-describing binary file: magic, format version, config hash,
// the embedded config JSON, and the full trainer state. load_checkpoint
// refuses files whose config hash differs from the supplied config.
void save_checkpoint(const TrainerState& state, const TrainConfig& config,
                     const std::string& path);
TrainerState load_checkpoint(const std::string& path,
                             const TrainConfig& config);

// Reads only the embedded config JSON (no hash check).
std::string read_checkpoint_config_json(const std::string& path);

}  // namespace rvic
