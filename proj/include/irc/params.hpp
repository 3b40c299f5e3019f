#pragma once

#include "irc/task.hpp"
#include "irc/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irc {

/// Learnable parameters of the agent's internal model and preferences.
enum class Param : int {
  GammaHat1 = 0,
  GammaHat2,
  EpsHat1,
  EpsHat2,
  QHat1,
  QHat2,
  PressCost,
  TravelCost,
  GroomingReward,
  Temperature,
  Diffusion,
};
inline constexpr int kNumParams = 11;

const char* param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// The agent's assumed world dynamics plus its subjective rewards and policy
/// parameters. Food reward is pinned to 1 (currency unit); the discount and
/// the task-structure fields (n_colors, observe_remote) are fixed, not
/// learned.
struct AgentModel {
  Scalar gamma1 = 0.2;
  Scalar gamma2 = 0.15;
  Scalar eps1 = 0.1;
  Scalar eps2 = 0.08;
  Scalar q1 = 0.42;
  Scalar q2 = 0.66;
  Scalar press_cost = 0.3;
  Scalar travel_cost = 0.2;
  Scalar grooming_reward = 0.2;
  Scalar food_reward = 1.0;
  Scalar temperature = 0.2;
  Scalar diffusion = 0.1;
  Scalar discount = 0.9;
  int n_colors = 5;
  bool observe_remote = true;

  Scalar get(Param p) const;
  void set(Param p, Scalar value);
  void validate() const;
};

using ParamMask = std::vector<Param>;

/// All eleven parameters, in enum order.
ParamMask default_learnable();

// Smooth reparameterization onto unconstrained coordinates: logit for (0,1)
// rates and color parameters, log for positive costs and temperature, scaled
// logit for the diffusion level in (0, 0.5).
Scalar to_unconstrained(Param p, Scalar raw);
Scalar from_unconstrained(Param p, Scalar u);
/// d(raw)/d(unconstrained) evaluated at the given raw value.
Scalar chain_factor(Param p, Scalar raw);

Vector pack_unconstrained(const AgentModel& model, const ParamMask& mask);
AgentModel unpack_unconstrained(AgentModel base, const ParamMask& mask, const Vector& u);

}  // namespace irc
