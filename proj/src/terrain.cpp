#include "auvrl/terrain.hpp"

#include <algorithm>
#include <cmath>

#include "auvrl/common.hpp"
#include "auvrl/rng.hpp"

namespace auvrl::envs {

TerrainKind terrain_kind_from_string(const std::string& name) {
  if (name == "flat") return TerrainKind::Flat;
  if (name == "sine") return TerrainKind::Sine;
  if (name == "ramp") return TerrainKind::Ramp;
  if (name == "fractal") return TerrainKind::Fractal;
  throw ConfigError("unknown terrain kind: " + name);
}

std::string to_string(TerrainKind kind) {
  switch (kind) {
    case TerrainKind::Flat: return "flat";
    case TerrainKind::Sine: return "sine";
    case TerrainKind::Ramp: return "ramp";
    case TerrainKind::Fractal: return "fractal";
  }
  return "?";
}

TerrainProfile::TerrainProfile(TerrainKind kind, const TerrainParams& params)
    : kind_(kind), params_(params) {}

TerrainProfile TerrainProfile::generate(TerrainKind kind, const TerrainParams& params) {
  if (kind == TerrainKind::Sine && !(params.wavelength > 0.0)) {
    throw ConfigError("terrain.wavelength must be > 0 for sine terrain");
  }
  if (kind == TerrainKind::Fractal) {
    if (!(params.length > 0.0)) throw ConfigError("terrain.length must be > 0 for fractal terrain");
    if (!(params.roughness > 0.0 && params.roughness < 1.0)) {
      throw ConfigError("terrain.roughness must be in (0, 1)");
    }
  }

  TerrainProfile profile(kind, params);
  if (kind == TerrainKind::Fractal) {
    // Midpoint displacement on a 2^levels grid, refined coarse to fine so the
    // sample order (and hence the profile) is fixed by the seed alone.
    const int levels = 9;
    const std::size_t n = (std::size_t{1} << levels) + 1;
    std::vector<double> table(n, params.depth);
    Rng rng(params.seed);
    double scale = params.amplitude;
    for (int level = 0; level < levels; ++level) {
      const std::size_t step = (n - 1) >> level;
      const std::size_t half = step / 2;
      for (std::size_t i = half; i < n; i += step) {
        const double mid = 0.5 * (table[i - half] + table[i + half]);
        table[i] = mid + scale * rng.normal();
      }
      scale *= params.roughness;
    }
    profile.table_ = std::move(table);
  }
  return profile;
}

double TerrainProfile::depth(double x) const {
  switch (kind_) {
    case TerrainKind::Flat:
      return params_.depth;
    case TerrainKind::Sine:
      return params_.depth + params_.amplitude * std::sin(2.0 * kPi * x / params_.wavelength);
    case TerrainKind::Ramp:
      return params_.depth + params_.slope * x;
    case TerrainKind::Fractal: {
      const double clamped = std::clamp(x, 0.0, params_.length);
      const double pos = clamped / params_.length * static_cast<double>(table_.size() - 1);
      const std::size_t i = std::min(static_cast<std::size_t>(pos), table_.size() - 2);
      const double frac = pos - static_cast<double>(i);
      return table_[i] * (1.0 - frac) + table_[i + 1] * frac;
    }
  }
  return params_.depth;
}

}  // namespace auvrl::envs
