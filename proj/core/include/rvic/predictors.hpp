#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rvic/types.hpp"

namespace rvic {

// Decayed-count inverse predictors. rel counts are indexed by
// (s_0, s_T, skill), abs counts by (s_T, skill); each (s_0, s_T) and each
// s_T is one normalization group over skills. An update multiplies the
// touched group by the decay and adds 1 to the observed skill's cell.
// Predictions are smoothed: (count + alpha) / (group_sum + K * alpha).
class CountPredictorPair {
 public:
  CountPredictorPair(int num_skills, int num_states, double smoothing,
                     double decay);

  std::vector<double> predict_rel(StateId s0, StateId sT) const;
  std::vector<double> predict_abs(StateId sT) const;
  void update(SkillId skill, StateId s0, StateId sT);

  int num_skills() const { return num_skills_; }
  int num_states() const { return num_states_; }
  double smoothing() const { return smoothing_; }
  double decay() const { return decay_; }
  double rel_count(SkillId skill, StateId s0, StateId sT) const {
    return rel_counts_[rel_group(s0, sT) + skill];
  }
  double abs_count(SkillId skill, StateId sT) const {
    return abs_counts_[abs_group(sT) + skill];
  }
  const std::vector<double>& rel_counts() const { return rel_counts_; }
  const std::vector<double>& abs_counts() const { return abs_counts_; }
  std::vector<double>& rel_counts() { return rel_counts_; }
  std::vector<double>& abs_counts() { return abs_counts_; }

  bool operator==(const CountPredictorPair&) const = default;

 private:
  std::size_t rel_group(StateId s0, StateId sT) const {
    return (static_cast<std::size_t>(s0) * num_states_ + sT) * num_skills_;
  }
  std::size_t abs_group(StateId sT) const {
    return static_cast<std::size_t>(sT) * num_skills_;
  }

  int num_skills_;
  int num_states_;
  double smoothing_;
  double decay_;
  std::vector<double> rel_counts_;  // [s0][sT][skill]
  std::vector<double> abs_counts_;  // [sT][skill]
};

// Log-linear inverse predictors over one-hot state features. The relative
// head acts on concatenated features of (s_0, s_T), the absolute head on
// features of s_T alone; the one-hot encoding is shared and fixed. update
// takes one gradient-ascent step on each head's log-likelihood.
class SoftmaxPredictorPair {
 public:
  SoftmaxPredictorPair(int num_skills, int num_states, double learning_rate);

  std::vector<double> predict_rel(StateId s0, StateId sT) const;
  std::vector<double> predict_abs(StateId sT) const;
  void update(SkillId skill, StateId s0, StateId sT);

  double rel_log_prob(SkillId skill, StateId s0, StateId sT) const;
  double abs_log_prob(SkillId skill, StateId sT) const;

  int num_skills() const { return num_skills_; }
  int num_states() const { return num_states_; }
  double learning_rate() const { return learning_rate_; }
  // rel weights: K x (2 * num_states), row-major; columns [0, S) encode
  // s_0, columns [S, 2S) encode s_T. abs weights: K x num_states.
  std::vector<double>& rel_weights() { return rel_weights_; }
  std::vector<double>& abs_weights() { return abs_weights_; }
  const std::vector<double>& rel_weights() const { return rel_weights_; }
  const std::vector<double>& abs_weights() const { return abs_weights_; }

  bool operator==(const SoftmaxPredictorPair&) const = default;

 private:
  std::vector<double> rel_logits(StateId s0, StateId sT) const;
  std::vector<double> abs_logits(StateId sT) const;

  int num_skills_;
  int num_states_;
  double learning_rate_;
  std::vector<double> rel_weights_;
  std::vector<double> abs_weights_;
};

enum class PredictorFamily { Counts, Softmax };

const char* to_string(PredictorFamily family);
PredictorFamily predictor_family_from_string(const std::string& s);

// Value-semantic pair of inverse predictors; copies serve as snapshots.
class PredictorPair {
 public:
  explicit PredictorPair(CountPredictorPair counts) : impl_(std::move(counts)) {}
  explicit PredictorPair(SoftmaxPredictorPair softmax)
      : impl_(std::move(softmax)) {}

  std::vector<double> predict_rel(StateId s0, StateId sT) const;
  std::vector<double> predict_abs(StateId sT) const;
  void update(SkillId skill, StateId s0, StateId sT);

  PredictorFamily family() const {
    return std::holds_alternative<CountPredictorPair>(impl_)
               ? PredictorFamily::Counts
               : PredictorFamily::Softmax;
  }
  int num_skills() const;
  const CountPredictorPair* as_counts() const {
    return std::get_if<CountPredictorPair>(&impl_);
  }
  const SoftmaxPredictorPair* as_softmax() const {
    return std::get_if<SoftmaxPredictorPair>(&impl_);
  }

  bool operator==(const PredictorPair&) const = default;

 private:
  std::variant<CountPredictorPair, SoftmaxPredictorPair> impl_;
};

// Frozen copy of the live pair, replaced every refresh_period updates.
// Rewards are computed from the snapshot; the live pair trains.
struct PredictorSnapshot {
  PredictorPair frozen;
  int refresh_period = 10;

  // Copies the live pair when update_count is a multiple of the period.
  // Returns true if a refresh happened.
  bool maybe_refresh(const PredictorPair& live, std::int64_t update_count) {
    if (update_count % refresh_period == 0) {
      frozen = live;
      return true;
    }
    return false;
  }
};

// The skill's intrinsic reward from snapshot predictions at episode end.
//   rvic + prob_diff: q_rel[skill] - q_abs[skill]
//   vic  + prob_diff: q_rel[skill]
//   rvic + log_q:     log q_rel[skill] - log q_abs[skill]
//   vic  + log_q:     log q_rel[skill]
double intrinsic_reward(const PredictorPair& snapshot, SkillId skill,
                        StateId s0, StateId sT, RewardMode reward_mode,
                        BaselineMode baseline_mode);

}  // namespace rvic
