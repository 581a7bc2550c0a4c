#include "auvrl/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "auvrl/common.hpp"

namespace auvrl::dynamics {

bool VehicleState::finite() const {
  return std::isfinite(z) && std::isfinite(theta) && std::isfinite(w) && std::isfinite(q);
}

bool PlanarState::finite() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(psi) && std::isfinite(u_s) &&
         std::isfinite(v_s) && std::isfinite(r_s);
}

std::pair<double, double> ThrusterAllocation::apply(std::span<const double> thrust) const {
  double f = 0.0;
  double m = 0.0;
  for (std::size_t i = 0; i < thrust.size(); ++i) {
    f += force[i] * thrust[i];
    m += moment[i] * thrust[i];
  }
  return {f, m};
}

ThrusterAllocation ThrusterAllocation::pair_at(double lever) {
  return {{1.0, 1.0}, {lever, -lever}};
}

void VehicleParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string("vehicle parameter must be > 0: ") + name);
  };
  auto non_negative = [](double v, const char* name) {
    if (!(v >= 0.0)) throw ConfigError(std::string("vehicle parameter must be >= 0: ") + name);
  };
  positive(mass_heave, "mass_heave");
  positive(inertia_pitch, "inertia_pitch");
  positive(mass_surge, "mass_surge");
  positive(mass_sway, "mass_sway");
  positive(inertia_yaw, "inertia_yaw");
  non_negative(damp_heave_lin, "damp_heave_lin");
  non_negative(damp_heave_quad, "damp_heave_quad");
  non_negative(damp_pitch_lin, "damp_pitch_lin");
  non_negative(damp_pitch_quad, "damp_pitch_quad");
  non_negative(damp_surge_lin, "damp_surge_lin");
  non_negative(damp_surge_quad, "damp_surge_quad");
  non_negative(damp_sway_lin, "damp_sway_lin");
  non_negative(damp_sway_quad, "damp_sway_quad");
  non_negative(damp_yaw_lin, "damp_yaw_lin");
  non_negative(damp_yaw_quad, "damp_yaw_quad");
  non_negative(restoring_pitch, "restoring_pitch");
  if (thrust_limits.empty()) throw ConfigError("vehicle needs at least one thruster");
  for (double lim : thrust_limits) positive(lim, "thrust_limits");
  if (allocation.force.size() != thrust_limits.size() ||
      allocation.moment.size() != thrust_limits.size()) {
    throw ConfigError("allocation matrix size does not match thrust_limits");
  }
}

ControlInput clamp_thrust(const ControlInput& input, const VehicleParams& params) {
  if (input.thrust.size() != params.thrust_limits.size()) {
    throw std::invalid_argument("control input has " + std::to_string(input.thrust.size()) +
                                " thrusters, params expect " +
                                std::to_string(params.thrust_limits.size()));
  }
  ControlInput clamped = input;
  for (std::size_t i = 0; i < clamped.thrust.size(); ++i) {
    clamped.thrust[i] = clamp_abs(clamped.thrust[i], params.thrust_limits[i]);
  }
  return clamped;
}

namespace {

struct VerticalDeriv {
  double dz, dtheta, dw, dq;
};

VerticalDeriv vertical_f(const VehicleState& s, double tau_w, double tau_q,
                         const VehicleParams& p) {
  return {
      s.w,
      s.q,
      (tau_w - p.damp_heave_lin * s.w - p.damp_heave_quad * s.w * std::abs(s.w)) / p.mass_heave,
      (tau_q - p.damp_pitch_lin * s.q - p.damp_pitch_quad * s.q * std::abs(s.q) -
       p.restoring_pitch * std::sin(s.theta)) /
          p.inertia_pitch,
  };
}

struct PlanarDeriv {
  double dx, dy, dpsi, du, dv, dr;
};

PlanarDeriv planar_f(const PlanarState& s, double tau_u, double tau_r, const VehicleParams& p) {
  return {
      s.u_s * std::cos(s.psi) - s.v_s * std::sin(s.psi),
      s.u_s * std::sin(s.psi) + s.v_s * std::cos(s.psi),
      s.r_s,
      (tau_u - p.damp_surge_lin * s.u_s - p.damp_surge_quad * s.u_s * std::abs(s.u_s)) /
          p.mass_surge,
      (-p.damp_sway_lin * s.v_s - p.damp_sway_quad * s.v_s * std::abs(s.v_s)) / p.mass_sway,
      (tau_r - p.damp_yaw_lin * s.r_s - p.damp_yaw_quad * s.r_s * std::abs(s.r_s)) / p.inertia_yaw,
  };
}

void check_step_args(bool state_finite, const ControlInput& input, const VehicleParams& params,
                     double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (input.thrust.size() != params.allocation.thrusters()) {
    throw std::invalid_argument("control input size does not match allocation matrix");
  }
  if (!state_finite) throw std::domain_error("non-finite vehicle state");
  for (double f : input.thrust) {
    if (!std::isfinite(f)) throw std::domain_error("non-finite control input");
  }
}

}  // namespace

VehicleState step_vertical(const VehicleState& state, const ControlInput& input,
                           const VehicleParams& params, double dt) {
  check_step_args(state.finite(), input, params, dt);
  const ControlInput clamped = clamp_thrust(input, params);
  const auto [tau_w, tau_q] = params.allocation.apply(clamped.thrust);

  const VerticalDeriv k1 = vertical_f(state, tau_w, tau_q, params);
  auto at = [&](const VerticalDeriv& k, double h) {
    return VehicleState{state.z + h * k.dz, state.theta + h * k.dtheta, state.w + h * k.dw,
                        state.q + h * k.dq};
  };
  const VerticalDeriv k2 = vertical_f(at(k1, dt / 2.0), tau_w, tau_q, params);
  const VerticalDeriv k3 = vertical_f(at(k2, dt / 2.0), tau_w, tau_q, params);
  const VerticalDeriv k4 = vertical_f(at(k3, dt), tau_w, tau_q, params);

  VehicleState next;
  next.z = state.z + dt / 6.0 * (k1.dz + 2.0 * k2.dz + 2.0 * k3.dz + k4.dz);
  next.theta =
      wrap_angle(state.theta + dt / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta));
  next.w = state.w + dt / 6.0 * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw);
  next.q = state.q + dt / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
  return next;
}

PlanarState step_planar(const PlanarState& state, const ControlInput& input,
                        const VehicleParams& params, double dt) {
  check_step_args(state.finite(), input, params, dt);
  const ControlInput clamped = clamp_thrust(input, params);
  const auto [tau_u, tau_r] = params.allocation.apply(clamped.thrust);

  const PlanarDeriv k1 = planar_f(state, tau_u, tau_r, params);
  auto at = [&](const PlanarDeriv& k, double h) {
    return PlanarState{state.x + h * k.dx,   state.y + h * k.dy,   state.psi + h * k.dpsi,
                       state.u_s + h * k.du, state.v_s + h * k.dv, state.r_s + h * k.dr};
  };
  const PlanarDeriv k2 = planar_f(at(k1, dt / 2.0), tau_u, tau_r, params);
  const PlanarDeriv k3 = planar_f(at(k2, dt / 2.0), tau_u, tau_r, params);
  const PlanarDeriv k4 = planar_f(at(k3, dt), tau_u, tau_r, params);

  PlanarState next;
  next.x = state.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  next.y = state.y + dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
  next.psi = wrap_angle(state.psi + dt / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi));
  next.u_s = state.u_s + dt / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
  next.v_s = state.v_s + dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  next.r_s = state.r_s + dt / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
  return next;
}

}  // namespace auvrl::dynamics
