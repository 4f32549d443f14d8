#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rvic/rng.hpp"
#include "rvic/types.hpp"

namespace rvic {

enum class EnvKind { ToroidalGrid, FourRooms, TwoJointArm };

const char* to_string(EnvKind kind);
EnvKind env_kind_from_string(const std::string& s);

// For TwoJointArm, width/height are the joint resolutions. FourRooms uses
// the fixed 13x13 layout and requires width == height == 13.
struct EnvConfig {
  EnvKind kind = EnvKind::ToroidalGrid;
  int width = 8;
  int height = 8;
  double slip_prob = 0.0;
  std::uint64_t seed = 0;
};

struct StepOutcome {
  StateId next_state = 0;
  double extrinsic_reward = 0.0;
  bool terminal = false;
};

// Finite, fully observable environment with a fixed 5-action set.
//
// ToroidalGrid: actions {up, down, left, right, noop}, translation with
// wraparound. FourRooms: same actions, no wraparound, moves into walls are
// no-ops. TwoJointArm: actions {joint1+, joint1-, joint2+, joint2-, noop},
// increments modulo the joint resolutions (a 2-torus).
//
// All methods are const and thread-safe; callers own their Rng streams.
// Extrinsic reward is 0 and terminal is false at this level; goal tasks are
// layered on top by the hrl module.
class Env {
 public:
  explicit Env(const EnvConfig& config);  // throws ConfigError

  int num_states() const { return num_states_; }
  int num_actions() const { return 5; }
  const EnvConfig& config() const { return config_; }

  // Uniform draw from the initial distribution (all non-wall cells).
  StateId reset(Rng& rng) const;

  StepOutcome step(StateId state, ActionId action, Rng& rng) const;

  std::vector<StateId> enumerate_states() const;

  // (x, y) for grids, (joint1, joint2) for the arm. Inverts state ids
  // bijectively.
  std::array<int, 2> state_coords(StateId state) const;
  StateId state_at(int x, int y) const;  // throws ContractError on wall/oob

  bool torus_family() const { return config_.kind != EnvKind::FourRooms; }
  std::array<int, 2> torus_sizes() const;  // throws if not torus family

  // Displacement id (sT - s0) mod sizes, encoded like a state id.
  // Torus-family environments only.
  int displacement_id(StateId from, StateId to) const;

  std::string ascii_layout() const;

 private:
  StateId apply_action(StateId state, ActionId action) const;
  void check_state(StateId state) const;

  EnvConfig config_;
  int num_states_ = 0;
  // FourRooms: mapping between 13x13 cells and compact walkable ids.
  std::vector<bool> wall_;           // indexed y * width + x
  std::vector<StateId> cell_to_id_;  // -1 for walls
  std::vector<int> id_to_cell_;
};

}  // namespace rvic
