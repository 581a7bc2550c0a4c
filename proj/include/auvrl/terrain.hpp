#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace auvrl::envs {

enum class TerrainKind { Flat, Sine, Ramp, Fractal };

TerrainKind terrain_kind_from_string(const std::string& name);
std::string to_string(TerrainKind kind);

struct TerrainParams {
  double depth = 10.0;      // base depth (m)
  double amplitude = 0.0;   // sine / fractal displacement scale (m)
  double wavelength = 50.0; // sine period (m)
  double slope = 0.0;       // ramp gradient (m per m)
  double roughness = 0.5;   // fractal per-level falloff in (0, 1)
  double length = 400.0;    // mission range covered by the fractal table (m)
  std::uint64_t seed = 1;
};

// Deterministic seafloor depth profile over the mission range. The fractal
// kind is seeded midpoint displacement sampled onto a fixed grid; all kinds
// are continuous in x and identical for identical (kind, params, seed).
class TerrainProfile {
 public:
  static TerrainProfile generate(TerrainKind kind, const TerrainParams& params);

  double depth(double x) const;

  TerrainKind kind() const { return kind_; }
  const TerrainParams& params() const { return params_; }

 private:
  TerrainProfile(TerrainKind kind, const TerrainParams& params);

  TerrainKind kind_;
  TerrainParams params_;
  std::vector<double> table_;  // fractal samples over [0, length]
};

}  // namespace auvrl::envs
