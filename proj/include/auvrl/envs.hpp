#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "auvrl/dynamics.hpp"
#include "auvrl/terrain.hpp"

namespace auvrl::envs {

// ---------------------------------------------------------------------------
// Seafloor depth tracking
// ---------------------------------------------------------------------------

// Observation: window of recent depth errors (oldest first), trig-encoded
// pitch, and body rates.
struct SeafloorObservation {
  std::vector<double> dz_history;
  double cos_theta = 1.0;
  double sin_theta = 0.0;
  double w = 0.0;
  double q = 0.0;

  std::vector<double> as_vector() const;
};

// Weights of the scalarized tracking reward. All of them act as negated
// costs: rho* <= 0 and R negative semidefinite, so reward is 0 only at the
// zero-error, zero-effort point.
struct SeafloorRewardWeights {
  double rho1 = -1.0;
  double rho2 = -0.1;
  double rho3 = -0.1;
  std::vector<double> R;  // act_dim x act_dim, row-major; default -0.01*I

  void validate(std::size_t act_dim) const;
  double control_cost(std::span<const double> u) const;  // u^T R u
};

struct SeafloorConfig {
  int history_len = 3;         // N
  double z_ref = 2.0;          // commanded height above the seafloor (m)
  double control_period = 0.5; // seconds per environment step
  int substeps = 5;            // RK4 sub-steps per control period
  int mission_steps = 150;
  double abort_dz = 10.0;      // |dz| beyond this ends the episode
  double initial_offset = 0.0; // starting dz
  double initial_offset_jitter = 0.0;  // uniform +/- jitter added at reset
  SeafloorRewardWeights weights;

  void validate(std::size_t act_dim) const;
};

struct EnvStep {
  double reward = 0.0;
  bool done = false;
};

// Depth-tracking MDP over the vertical-plane dynamics. Deterministic given
// the reset seed: the only randomness is the per-episode initial offset.
class SeafloorEnv {
 public:
  SeafloorEnv(TerrainProfile terrain, dynamics::VehicleParams params, SeafloorConfig cfg,
              std::uint64_t reset_seed);

  SeafloorObservation reset();
  EnvStep step(const dynamics::ControlInput& action);

  const SeafloorObservation& observation() const { return obs_; }
  const dynamics::VehicleState& vehicle() const { return state_; }
  const dynamics::ControlInput& last_input() const { return last_input_; }
  double along_track() const { return x_; }
  double time() const { return t_; }
  double seafloor_depth() const;
  double target_depth() const;
  double dz() const { return obs_.dz_history.back(); }
  bool done() const { return done_; }
  int steps_done() const { return steps_; }
  const SeafloorConfig& config() const { return cfg_; }
  const dynamics::VehicleParams& params() const { return params_; }

 private:
  double target_depth_at(double x) const;

  TerrainProfile terrain_;
  dynamics::VehicleParams params_;
  SeafloorConfig cfg_;
  std::uint64_t reset_seed_;
  std::uint64_t episode_ = 0;

  dynamics::VehicleState state_;
  dynamics::ControlInput last_input_;
  SeafloorObservation obs_;
  double x_ = 0.0;
  double t_ = 0.0;
  int steps_ = 0;
  bool done_ = true;
  bool started_ = false;
};

// ---------------------------------------------------------------------------
// Pipe following
// ---------------------------------------------------------------------------

struct PipeGeometry {
  double anchor_x = 0.0;
  double anchor_y = 0.0;
  double dir_x = 1.0;  // unit direction of the pipe line
  double dir_y = 0.0;
  double width = 4.0;  // camera ground footprint, lateral extent (m)
  double height = 3.0; // forward extent (m)

  double d_max() const;
  void validate() const;
};

// Analytic stand-in for the camera: the pipe line projected into the
// footprint rectangle centered on the vehicle and rotated with heading.
struct PipeFeatures {
  double d_c = 0.0;      // perpendicular distance from footprint center (m)
  double theta_c = 0.0;  // distance-line angle vs lateral axis, (-pi/2, pi/2]
  bool visible = false;
};

PipeFeatures pipe_features(const dynamics::PlanarState& state, const PipeGeometry& geom);

struct PipeObservation {
  double theta_c = 0.0;
  double dc_norm = 0.0;  // d_c / d_max
  double u_s = 0.0;
  double v_s = 0.0;
  double r_s = 0.0;

  std::vector<double> as_vector() const;
};

struct PipeConfig {
  double control_period = 0.5;
  int substeps = 5;
  int mission_steps = 300;
  double lateral_offset = 1.0;   // start offset from the pipe (m)
  double heading_offset = 0.3;   // start heading relative to the pipe (rad)
  double lateral_jitter = 0.0;
  double heading_jitter = 0.0;
  double initial_surge = 0.0;

  void validate() const;
};

// Pipe-following MDP over the horizontal-plane dynamics. Reward is
// u_s * (|cos theta_c| - d_c/d_max); the episode ends when the pipe leaves
// the camera footprint.
class PipeEnv {
 public:
  PipeEnv(PipeGeometry geom, dynamics::VehicleParams params, PipeConfig cfg,
          std::uint64_t reset_seed);

  PipeObservation reset();
  EnvStep step(const dynamics::ControlInput& action);

  const PipeObservation& observation() const { return obs_; }
  const dynamics::PlanarState& vehicle() const { return state_; }
  const dynamics::ControlInput& last_input() const { return last_input_; }
  const PipeFeatures& features() const { return feats_; }
  double time() const { return t_; }
  bool done() const { return done_; }
  int steps_done() const { return steps_; }
  const PipeGeometry& geometry() const { return geom_; }
  const PipeConfig& config() const { return cfg_; }
  const dynamics::VehicleParams& params() const { return params_; }

 private:
  PipeGeometry geom_;
  dynamics::VehicleParams params_;
  PipeConfig cfg_;
  std::uint64_t reset_seed_;
  std::uint64_t episode_ = 0;

  dynamics::PlanarState state_;
  dynamics::ControlInput last_input_;
  PipeObservation obs_;
  PipeFeatures feats_;
  double t_ = 0.0;
  int steps_ = 0;
  bool done_ = true;
  bool started_ = false;
};

// ---------------------------------------------------------------------------
// Grid world
// ---------------------------------------------------------------------------

struct GridCell {
  int x = 0;
  int y = 0;
  bool operator==(const GridCell&) const = default;
};

enum class GridAction { North, South, East, West };
inline constexpr int kGridActionCount = 4;

struct GridWorld {
  int width = 5;
  int height = 5;
  GridCell start{0, 0};
  GridCell goal{4, 4};
  std::vector<GridCell> obstacles;
  double step_reward = -1.0;
  double goal_reward = 0.0;
  double gamma = 0.9;

  int state_index(GridCell c) const { return c.y * width + c.x; }
  GridCell cell_of(int index) const { return {index % width, index / width}; }
  bool blocked(GridCell c) const;
  bool inside(GridCell c) const;
  void validate() const;
};

struct GridStep {
  GridCell next;
  double reward = 0.0;
  bool done = false;
};

// Deterministic move; bumping a wall or obstacle leaves the cell unchanged.
// Entering the goal adds the goal reward on top of the step reward and ends
// the episode.
GridStep gridworld_step(const GridWorld& world, GridCell cell, GridAction action);

// ---------------------------------------------------------------------------
// Uniform control-task view used by the learning loops
// ---------------------------------------------------------------------------

class ContinuousEnv {
 public:
  virtual ~ContinuousEnv() = default;
  virtual int obs_dim() const = 0;
  virtual int act_dim() const = 0;
  virtual double action_limit() const = 0;
  virtual std::vector<double> reset() = 0;

  struct Step {
    std::vector<double> obs;
    double reward = 0.0;
    bool done = false;
    double metric = 0.0;  // |dz| for seafloor, per-step reward for pipe
  };
  virtual Step step(std::span<const double> action) = 0;
};

class SeafloorControlEnv : public ContinuousEnv {
 public:
  explicit SeafloorControlEnv(SeafloorEnv env) : env_(std::move(env)) {}
  int obs_dim() const override { return env_.config().history_len + 4; }
  int act_dim() const override { return static_cast<int>(env_.params().thrust_limits.size()); }
  double action_limit() const override { return env_.params().thrust_limits[0]; }
  std::vector<double> reset() override { return env_.reset().as_vector(); }
  Step step(std::span<const double> action) override;
  SeafloorEnv& inner() { return env_; }

 private:
  SeafloorEnv env_;
};

class PipeControlEnv : public ContinuousEnv {
 public:
  explicit PipeControlEnv(PipeEnv env) : env_(std::move(env)) {}
  int obs_dim() const override { return 5; }
  int act_dim() const override { return static_cast<int>(env_.params().thrust_limits.size()); }
  double action_limit() const override { return env_.params().thrust_limits[0]; }
  std::vector<double> reset() override { return env_.reset().as_vector(); }
  Step step(std::span<const double> action) override;
  PipeEnv& inner() { return env_; }

 private:
  PipeEnv env_;
};

}  // namespace auvrl::envs
