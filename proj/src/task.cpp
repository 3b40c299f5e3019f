#include "irc/task.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irc {

namespace {

void check_unit_interval(Scalar v, const char* field) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::domain_error(std::string(field) + " must lie strictly inside (0,1), got " +
                            std::to_string(v));
  }
}

}  // namespace

const char* action_name(Action a) {
  switch (a) {
    case Action::Idle: return "idle";
    case Action::GotoMiddle: return "goto_middle";
    case Action::GotoBox1: return "goto_box1";
    case Action::GotoBox2: return "goto_box2";
    case Action::Press: return "press";
  }
  return "?";
}

void TaskParams::validate() const {
  check_unit_interval(gamma1, "world.gamma1");
  check_unit_interval(gamma2, "world.gamma2");
  check_unit_interval(eps1, "world.eps1");
  check_unit_interval(eps2, "world.eps2");
  check_unit_interval(q1, "world.q1");
  check_unit_interval(q2, "world.q2");
  if (n_colors < 2) throw std::domain_error("world.n_colors must be >= 2");
}

Eigen::Matrix2d telegraph_matrix(Scalar gamma, Scalar eps) {
  if (!(gamma >= 0.0 && gamma <= 1.0) || !(eps >= 0.0 && eps <= 1.0)) {
    throw std::domain_error("telegraph rates must lie in [0,1]");
  }
  Eigen::Matrix2d m;
  m << 1.0 - gamma, gamma, eps, 1.0 - eps;
  return m;
}

Vector binomial_pmf(int n_trials, Scalar q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("binomial parameter q must lie in (0,1)");
  Vector pmf(n_trials + 1);
  // Stable recurrence from the k=0 term.
  Scalar p = std::pow(1.0 - q, n_trials);
  for (int k = 0; k <= n_trials; ++k) {
    pmf[k] = p;
    if (k < n_trials) {
      p *= q * static_cast<Scalar>(n_trials - k) / ((1.0 - q) * static_cast<Scalar>(k + 1));
    }
  }
  return pmf;
}

Vector binomial_pmf_dq(int n_trials, Scalar q) {
  Vector pmf = binomial_pmf(n_trials, q);
  Vector d(n_trials + 1);
  for (int k = 0; k <= n_trials; ++k) {
    d[k] = pmf[k] * (static_cast<Scalar>(k) - static_cast<Scalar>(n_trials) * q) /
           (q * (1.0 - q));
  }
  return d;
}

Vector color_distribution(Scalar q, int n_colors) {
  if (n_colors < 2) throw std::domain_error("n_colors must be >= 2");
  return binomial_pmf(n_colors - 1, q);
}

int move_location(int location, Action a) {
  switch (a) {
    case Action::Idle:
    case Action::Press:
      return location;
    case Action::GotoMiddle:
      return kLocMiddle;
    case Action::GotoBox1:
      return location == kLocBox2 ? kLocMiddle : kLocBox1;
    case Action::GotoBox2:
      return location == kLocBox1 ? kLocMiddle : kLocBox2;
  }
  return location;
}

int hops_moved(int location, Action a) {
  return move_location(location, a) == location ? 0 : 1;
}

bool opens_box(int location, Action a, int box_index) {
  return a == Action::Press && location == (box_index == 0 ? kLocBox1 : kLocBox2);
}

StepResult step_world(const WorldState& state, Action a, const TaskParams& params, Rng& rng) {
  StepResult out;
  out.state = state;
  out.obs = Observation{};

  // Action resolves: movement, then press captures any available reward.
  out.state.location = move_location(state.location, a);
  if (a == Action::Press) {
    if (state.location == kLocBox1 && state.food1) {
      out.obs.reward_delivered = 1;
      out.state.food1 = false;
    } else if (state.location == kLocBox2 && state.food2) {
      out.obs.reward_delivered = 1;
      out.state.food2 = false;
    }
  }

  // Telegraph transition for each box.
  auto flip = [&rng](bool food, Scalar gamma, Scalar eps) {
    return food ? !rng.bernoulli(eps) : rng.bernoulli(gamma);
  };
  out.state.food1 = flip(out.state.food1, params.gamma1, params.eps1);
  out.state.food2 = flip(out.state.food2, params.gamma2, params.eps2);

  // Colors reflect the food state being carried into the next step.
  const Vector pmf_absent = color_distribution(params.q1, params.n_colors);
  const Vector pmf_present = color_distribution(params.q2, params.n_colors);
  const int c1 = rng.categorical(out.state.food1 ? pmf_present : pmf_absent);
  const int c2 = rng.categorical(out.state.food2 ? pmf_present : pmf_absent);

  out.obs.location = out.state.location;
  if (params.observe_remote) {
    out.obs.color1 = c1;
    out.obs.color2 = c2;
  } else {
    out.obs.color1 = out.state.location == kLocBox1 ? c1 : -1;
    out.obs.color2 = out.state.location == kLocBox2 ? c2 : -1;
  }
  return out;
}

WorldState sample_initial_state(const TaskParams& params, Rng& rng) {
  WorldState s;
  s.food1 = rng.bernoulli(params.gamma1 / (params.gamma1 + params.eps1));
  s.food2 = rng.bernoulli(params.gamma2 / (params.gamma2 + params.eps2));
  s.location = kLocMiddle;
  return s;
}

}  // namespace irc
