#pragma once

#include "irc/types.hpp"

namespace irc {

inline constexpr int kLocMiddle = 0;
inline constexpr int kLocBox1 = 1;
inline constexpr int kLocBox2 = 2;
inline constexpr int kNumLocations = 3;

enum class Action : int {
  Idle = 0,
  GotoMiddle = 1,
  GotoBox1 = 2,
  GotoBox2 = 3,
  Press = 4,
};
inline constexpr int kNumActions = 5;

const char* action_name(Action a);

/// True world dynamics: telegraph rates per box and the shared color model.
struct TaskParams {
  Scalar gamma1 = 0.15;  // appearance rate, box 1
  Scalar gamma2 = 0.10;
  Scalar eps1 = 0.05;  // disappearance rate, box 1
  Scalar eps2 = 0.04;
  Scalar q1 = 0.4;  // color parameter, food absent
  Scalar q2 = 0.6;  // color parameter, food present
  int n_colors = 5;
  // When false, only the color of the box at the agent's location is visible
  // (no color at the middle); hidden colors are reported as -1.
  bool observe_remote = true;

  void validate() const;  // throws std::domain_error naming the bad field
};

struct WorldState {
  bool food1 = false;
  bool food2 = false;
  int location = kLocMiddle;
};

/// What the agent (and the experimenter) sees after one step. Colors are -1
/// when gated off by observe_remote; location is the post-action location.
struct Observation {
  int color1 = -1;
  int color2 = -1;
  int reward_delivered = 0;
  int location = kLocMiddle;
};

/// Two-state transition matrix over (unavailable, available):
/// [[1-gamma, gamma], [eps, 1-eps]].
Eigen::Matrix2d telegraph_matrix(Scalar gamma, Scalar eps);

/// Binomial(n_trials, q) probability mass over {0, ..., n_trials}.
Vector binomial_pmf(int n_trials, Scalar q);

/// Elementwise derivative of binomial_pmf with respect to q.
Vector binomial_pmf_dq(int n_trials, Scalar q);

/// Color distribution for one box: Binomial(n_colors-1, q) over color levels.
/// Higher q shifts mass toward higher (redder) indices.
Vector color_distribution(Scalar q, int n_colors);

/// One hop toward the target of a Goto action; box-to-box passes through the
/// middle. Idle and Press do not move.
int move_location(int location, Action a);

/// Number of hops taken this step (0 or 1).
int hops_moved(int location, Action a);

/// True when the action opens the box at the given location.
bool opens_box(int location, Action a, int box_index);

struct StepResult {
  WorldState state;
  Observation obs;
};

/// Advances the world one step: the action resolves first (movement, press
/// and reward capture), then food flags run one telegraph transition, then
/// colors are sampled for the new food state.
StepResult step_world(const WorldState& state, Action a, const TaskParams& params, Rng& rng);

/// Stationary food availability sampled per box.
WorldState sample_initial_state(const TaskParams& params, Rng& rng);

}  // namespace irc
