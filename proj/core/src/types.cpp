#include "rvic/types.hpp"

namespace rvic {

const char* to_string(RewardMode mode) {
  return mode == RewardMode::ProbDiff ? "prob_diff" : "log_q";
}

const char* to_string(BaselineMode mode) {
  return mode == BaselineMode::Rvic ? "rvic" : "vic";
}

RewardMode reward_mode_from_string(const std::string& s) {
  if (s == "prob_diff") return RewardMode::ProbDiff;
  if (s == "log_q") return RewardMode::LogQ;
  throw ConfigError("unknown reward mode: " + s);
}

BaselineMode baseline_mode_from_string(const std::string& s) {
  if (s == "rvic") return BaselineMode::Rvic;
  if (s == "vic") return BaselineMode::Vic;
  throw ConfigError("unknown baseline mode: " + s);
}

}  // namespace rvic
