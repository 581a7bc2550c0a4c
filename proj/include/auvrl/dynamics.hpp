#pragma once

#include <span>
#include <utility>
#include <vector>

namespace auvrl::dynamics {

// Rigid-body state in the vertical plane. Depth z is down-positive, theta is
// pitch (nose-up positive) wrapped to (-pi, pi], w and q are body-frame rates.
struct VehicleState {
  double z = 0.0;
  double theta = 0.0;
  double w = 0.0;
  double q = 0.0;
  bool finite() const;
};

// Horizontal-plane state: position, yaw (wrapped) and body velocities.
struct PlanarState {
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;
  double u_s = 0.0;
  double v_s = 0.0;
  double r_s = 0.0;
  bool finite() const;
};

// Maps per-thruster forces to a (net force, net moment) pair for one plane.
struct ThrusterAllocation {
  std::vector<double> force;
  std::vector<double> moment;

  std::size_t thrusters() const { return force.size(); }
  std::pair<double, double> apply(std::span<const double> thrust) const;

  /// Two thrusters mounted at +/-lever from the center.
  static ThrusterAllocation pair_at(double lever);
};

struct VehicleParams {
  // Vertical plane: heave + pitch.
  double mass_heave = 50.0;
  double inertia_pitch = 10.0;
  double damp_heave_lin = 25.0;
  double damp_heave_quad = 10.0;
  double damp_pitch_lin = 5.0;
  double damp_pitch_quad = 2.0;
  double restoring_pitch = 8.0;

  // Horizontal plane: surge + sway + yaw.
  double mass_surge = 50.0;
  double mass_sway = 60.0;
  double inertia_yaw = 10.0;
  double damp_surge_lin = 25.0;
  double damp_surge_quad = 10.0;
  double damp_sway_lin = 30.0;
  double damp_sway_quad = 10.0;
  double damp_yaw_lin = 5.0;
  double damp_yaw_quad = 2.0;

  std::vector<double> thrust_limits = {40.0, 40.0};
  ThrusterAllocation allocation = ThrusterAllocation::pair_at(0.5);
  double surge_speed = 1.0;  // held constant in the vertical-plane model

  void validate() const;
};

// Per-thruster commanded forces; clamped to the limits before integration.
struct ControlInput {
  std::vector<double> thrust;
};

ControlInput clamp_thrust(const ControlInput& input, const VehicleParams& params);

/// Advances the heave/pitch model by dt seconds with one classical RK4 step.
VehicleState step_vertical(const VehicleState& state, const ControlInput& input,
                           const VehicleParams& params, double dt);

/// Advances the surge/sway/yaw model by dt seconds with one classical RK4 step.
PlanarState step_planar(const PlanarState& state, const ControlInput& input,
                        const VehicleParams& params, double dt);

}  // namespace auvrl::dynamics
