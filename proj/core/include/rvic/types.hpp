#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rvic {

// Dense ids. StateId indexes [0, num_states), ActionId indexes
// [0, num_actions), SkillId indexes [0, num_skills).
using StateId = std::int32_t;
using ActionId = std::int32_t;
using SkillId = std::int32_t;

enum class ActMode { Explore, Greedy };

// Intrinsic reward variants. ProbDiff rewards the raw probability
// (difference); LogQ rewards log-probabilities.
enum class RewardMode { ProbDiff, LogQ };

// Rvic subtracts the absolute predictor's probability from the relative
// predictor's; Vic uses the relative predictor alone.
enum class BaselineMode { Rvic, Vic };

// Invalid configuration (bad dimensions, unknown keys, value out of range).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an operation's precondition (out-of-range id, NaN reward).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable, corrupt, or incompatible checkpoint file.
class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

const char* to_string(RewardMode mode);
const char* to_string(BaselineMode mode);
RewardMode reward_mode_from_string(const std::string& s);
BaselineMode baseline_mode_from_string(const std::string& s);

}  // namespace rvic
