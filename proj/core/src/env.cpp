#include "rvic/env.hpp"

#include <string>

namespace rvic {

namespace {

// The classic four-rooms map: outer wall, one vertical and one horizontal
// inner wall, four single-cell doorways. 104 walkable cells.
constexpr const char* kFourRoomsLayout[13] = {
    "#############",
    "#     #     #",
    "#     #     #",
    "#           #",
    "#     #     #",
    "#     #     #",
    "## ####     #",
    "#     ### ###",
    "#     #     #",
    "#     #     #",
    "#           #",
    "#     #     #",
    "#############",
};

constexpr int kFourRoomsSize = 13;

// dx, dy per action. Grid family: up, down, left, right, noop (y grows
// downward). Arm: joint1+, joint1-, joint2+, joint2-, noop.
constexpr int kGridDx[5] = {0, 0, -1, 1, 0};
constexpr int kGridDy[5] = {-1, 1, 0, 0, 0};
constexpr int kArmDx[5] = {1, -1, 0, 0, 0};
constexpr int kArmDy[5] = {0, 0, 1, -1, 0};

int positive_mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

const char* to_string(EnvKind kind) {
  switch (kind) {
    case EnvKind::ToroidalGrid: return "toroidal_grid";
    case EnvKind::FourRooms: return "four_rooms";
    case EnvKind::TwoJointArm: return "two_joint_arm";
  }
  return "?";
}

EnvKind env_kind_from_string(const std::string& s) {
  if (s == "toroidal_grid") return EnvKind::ToroidalGrid;
  if (s == "four_rooms") return EnvKind::FourRooms;
  if (s == "two_joint_arm") return EnvKind::TwoJointArm;
  throw ConfigError("unknown env kind: " + s);
}

Env::Env(const EnvConfig& config) : config_(config) {
  if (config_.width <= 0 || config_.height <= 0) {
    throw ConfigError("env dimensions must be positive, got " +
                      std::to_string(config_.width) + "x" +
                      std::to_string(config_.height));
  }
  if (config_.slip_prob < 0.0 || config_.slip_prob >= 1.0) {
    throw ConfigError("slip_prob must lie in [0, 1)");
  }
  if (config_.kind == EnvKind::FourRooms) {
    if (config_.width != kFourRoomsSize || config_.height != kFourRoomsSize) {
      throw ConfigError("four_rooms uses the fixed 13x13 layout");
    }
    wall_.assign(kFourRoomsSize * kFourRoomsSize, true);
    cell_to_id_.assign(kFourRoomsSize * kFourRoomsSize, -1);
    for (int y = 0; y < kFourRoomsSize; ++y) {
      for (int x = 0; x < kFourRoomsSize; ++x) {
        if (kFourRoomsLayout[y][x] == ' ') {
          int cell = y * kFourRoomsSize + x;
          wall_[cell] = false;
          cell_to_id_[cell] = static_cast<StateId>(id_to_cell_.size());
          id_to_cell_.push_back(cell);
        }
      }
    }
    num_states_ = static_cast<int>(id_to_cell_.size());
  } else {
    num_states_ = config_.width * config_.height;
  }
}

StateId Env::reset(Rng& rng) const {
  return static_cast<StateId>(rng.uniform_int(num_states_));
}

void Env::check_state(StateId state) const {
  if (state < 0 || state >= num_states_) {
    throw ContractError("state id " + std::to_string(state) +
                        " out of range [0, " + std::to_string(num_states_) +
                        ")");
  }
}

StateId Env::apply_action(StateId state, ActionId action) const {
  auto [x, y] = state_coords(state);
  const bool arm = config_.kind == EnvKind::TwoJointArm;
  const int dx = arm ? kArmDx[action] : kGridDx[action];
  const int dy = arm ? kArmDy[action] : kGridDy[action];
  if (config_.kind == EnvKind::FourRooms) {
    int nx = x + dx;
    int ny = y + dy;
    if (nx < 0 || nx >= config_.width || ny < 0 || ny >= config_.height ||
        wall_[ny * config_.width + nx]) {
      return state;  // blocked moves leave the state unchanged
    }
    return cell_to_id_[ny * config_.width + nx];
  }
  int nx = positive_mod(x + dx, config_.width);
  int ny = positive_mod(y + dy, config_.height);
  return static_cast<StateId>(ny * config_.width + nx);
}

StepOutcome Env::step(StateId state, ActionId action, Rng& rng) const {
  check_state(state);
  if (action < 0 || action >= num_actions()) {
    throw ContractError("action id " + std::to_string(action) +
                        " out of range [0, 5)");
  }
  ActionId executed = action;
  if (config_.slip_prob > 0.0 && rng.bernoulli(config_.slip_prob)) {
    executed = static_cast<ActionId>(rng.uniform_int(num_actions()));
  }
  return StepOutcome{apply_action(state, executed), 0.0, false};
}

std::vector<StateId> Env::enumerate_states() const {
  std::vector<StateId> states(num_states_);
  for (int i = 0; i < num_states_; ++i) states[i] = i;
  return states;
}

std::array<int, 2> Env::state_coords(StateId state) const {
  check_state(state);
  if (config_.kind == EnvKind::FourRooms) {
    int cell = id_to_cell_[state];
    return {cell % config_.width, cell / config_.width};
  }
  return {state % config_.width, state / config_.width};
}

StateId Env::state_at(int x, int y) const {
  if (x < 0 || x >= config_.width || y < 0 || y >= config_.height) {
    throw ContractError("coordinates (" + std::to_string(x) + ", " +
                        std::to_string(y) + ") out of range");
  }
  if (config_.kind == EnvKind::FourRooms) {
    StateId id = cell_to_id_[y * config_.width + x];
    if (id < 0) {
      throw ContractError("(" + std::to_string(x) + ", " + std::to_string(y) +
                          ") is a wall cell");
    }
    return id;
  }
  return static_cast<StateId>(y * config_.width + x);
}

std::array<int, 2> Env::torus_sizes() const {
  if (!torus_family()) {
    throw ContractError("torus_sizes on a non-torus environment");
  }
  return {config_.width, config_.height};
}

int Env::displacement_id(StateId from, StateId to) const {
  auto sizes = torus_sizes();
  auto [x0, y0] = state_coords(from);
  auto [x1, y1] = state_coords(to);
  int dx = positive_mod(x1 - x0, sizes[0]);
  int dy = positive_mod(y1 - y0, sizes[1]);
  return dy * sizes[0] + dx;
}

std::string Env::ascii_layout() const {
  std::string out;
  if (config_.kind == EnvKind::FourRooms) {
    for (int y = 0; y < config_.height; ++y) {
      out += kFourRoomsLayout[y];
      out += '\n';
    }
    return out;
  }
  for (int y = 0; y < config_.height; ++y) {
    out.append(config_.width, '.');
    out += '\n';
  }
  return out;
}

}  // namespace rvic
