#include "rvic/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rvic {

namespace {

void check_positive_dims(int num_skills, int num_states) {
  if (num_skills < 1 || num_states < 1) {
    throw ConfigError("predictor dimensions must be positive");
  }
}

std::vector<double> softmax(std::vector<double> logits) {
  double max_logit = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double& z : logits) {
    z = std::exp(z - max_logit);
    sum += z;
  }
  for (double& z : logits) z /= sum;
  return logits;
}

}  // namespace

CountPredictorPair::CountPredictorPair(int num_skills, int num_states,
                                       double smoothing, double decay)
    : num_skills_(num_skills),
      num_states_(num_states),
      smoothing_(smoothing),
      decay_(decay),
      rel_counts_(static_cast<std::size_t>(num_states) * num_states *
                      num_skills,
                  0.0),
      abs_counts_(static_cast<std::size_t>(num_states) * num_skills, 0.0) {
  check_positive_dims(num_skills, num_states);
  if (smoothing <= 0.0) throw ConfigError("count smoothing must be > 0");
  if (decay <= 0.0 || decay > 1.0) throw ConfigError("count decay must lie in (0, 1]");
}

std::vector<double> CountPredictorPair::predict_rel(StateId s0,
                                                    StateId sT) const {
  const double* group = &rel_counts_[rel_group(s0, sT)];
  std::vector<double> p(num_skills_);
  double total = 0.0;
  for (int k = 0; k < num_skills_; ++k) total += group[k] + smoothing_;
  for (int k = 0; k < num_skills_; ++k) p[k] = (group[k] + smoothing_) / total;
  return p;
}

std::vector<double> CountPredictorPair::predict_abs(StateId sT) const {
  const double* group = &abs_counts_[abs_group(sT)];
  std::vector<double> p(num_skills_);
  double total = 0.0;
  for (int k = 0; k < num_skills_; ++k) total += group[k] + smoothing_;
  for (int k = 0; k < num_skills_; ++k) p[k] = (group[k] + smoothing_) / total;
  return p;
}

void CountPredictorPair::update(SkillId skill, StateId s0, StateId sT) {
  double* rel = &rel_counts_[rel_group(s0, sT)];
  double* abs = &abs_counts_[abs_group(sT)];
  for (int k = 0; k < num_skills_; ++k) {
    rel[k] *= decay_;
    abs[k] *= decay_;
  }
  rel[skill] += 1.0;
  abs[skill] += 1.0;
}

SoftmaxPredictorPair::SoftmaxPredictorPair(int num_skills, int num_states,
                                           double learning_rate)
    : num_skills_(num_skills),
      num_states_(num_states),
      learning_rate_(learning_rate),
      rel_weights_(static_cast<std::size_t>(num_skills) * 2 * num_states, 0.0),
      abs_weights_(static_cast<std::size_t>(num_skills) * num_states, 0.0) {
  check_positive_dims(num_skills, num_states);
  if (learning_rate <= 0.0) throw ConfigError("softmax learning rate must be > 0");
}

std::vector<double> SoftmaxPredictorPair::rel_logits(StateId s0,
                                                     StateId sT) const {
  std::vector<double> z(num_skills_);
  const std::size_t row = 2 * static_cast<std::size_t>(num_states_);
  for (int k = 0; k < num_skills_; ++k) {
    z[k] = rel_weights_[k * row + s0] + rel_weights_[k * row + num_states_ + sT];
  }
  return z;
}

std::vector<double> SoftmaxPredictorPair::abs_logits(StateId sT) const {
  std::vector<double> z(num_skills_);
  for (int k = 0; k < num_skills_; ++k) {
    z[k] = abs_weights_[static_cast<std::size_t>(k) * num_states_ + sT];
  }
  return z;
}

std::vector<double> SoftmaxPredictorPair::predict_rel(StateId s0,
                                                      StateId sT) const {
  return softmax(rel_logits(s0, sT));
}

std::vector<double> SoftmaxPredictorPair::predict_abs(StateId sT) const {
  return softmax(abs_logits(sT));
}

double SoftmaxPredictorPair::rel_log_prob(SkillId skill, StateId s0,
                                          StateId sT) const {
  return std::log(predict_rel(s0, sT)[skill]);
}

double SoftmaxPredictorPair::abs_log_prob(SkillId skill, StateId sT) const {
  return std::log(predict_abs(sT)[skill]);
}

void SoftmaxPredictorPair::update(SkillId skill, StateId s0, StateId sT) {
  // d log p(skill) / d z_k = 1[k == skill] - p_k; with one-hot features only
  // the observed columns receive gradient.
  std::vector<double> p_rel = predict_rel(s0, sT);
  const std::size_t row = 2 * static_cast<std::size_t>(num_states_);
  for (int k = 0; k < num_skills_; ++k) {
    double g = (k == skill ? 1.0 : 0.0) - p_rel[k];
    rel_weights_[k * row + s0] += learning_rate_ * g;
    rel_weights_[k * row + num_states_ + sT] += learning_rate_ * g;
  }
  std::vector<double> p_abs = predict_abs(sT);
  for (int k = 0; k < num_skills_; ++k) {
    double g = (k == skill ? 1.0 : 0.0) - p_abs[k];
    abs_weights_[static_cast<std::size_t>(k) * num_states_ + sT] +=
        learning_rate_ * g;
  }
}

const char* to_string(PredictorFamily family) {
  return family == PredictorFamily::Counts ? "counts" : "softmax";
}

PredictorFamily predictor_family_from_string(const std::string& s) {
  if (s == "counts") return PredictorFamily::Counts;
  if (s == "softmax") return PredictorFamily::Softmax;
  throw ConfigError("unknown predictor family: " + s);
}

std::vector<double> PredictorPair::predict_rel(StateId s0, StateId sT) const {
  return std::visit([&](const auto& p) { return p.predict_rel(s0, sT); },
                    impl_);
}

std::vector<double> PredictorPair::predict_abs(StateId sT) const {
  return std::visit([&](const auto& p) { return p.predict_abs(sT); }, impl_);
}

void PredictorPair::update(SkillId skill, StateId s0, StateId sT) {
  std::visit([&](auto& p) { p.update(skill, s0, sT); }, impl_);
}

int PredictorPair::num_skills() const {
  return std::visit([](const auto& p) { return p.num_skills(); }, impl_);
}

double intrinsic_reward(const PredictorPair& snapshot, SkillId skill,
                        StateId s0, StateId sT, RewardMode reward_mode,
                        BaselineMode baseline_mode) {
  double q_rel = snapshot.predict_rel(s0, sT)[skill];
  if (reward_mode == RewardMode::ProbDiff) {
    if (baseline_mode == BaselineMode::Vic) return q_rel;
    return q_rel - snapshot.predict_abs(sT)[skill];
  }
  if (baseline_mode == BaselineMode::Vic) return std::log(q_rel);
  return std::log(q_rel) - std::log(snapshot.predict_abs(sT)[skill]);
}

}  // namespace rvic
