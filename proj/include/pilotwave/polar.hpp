#pragma once

#include <cstdint>

#include "pilotwave/grid.hpp"

namespace pilotwave {

/// Physical constants of a run. One mass entry per grid axis so that
/// configuration-space grids can carry distinct per-body masses; single-body
/// grids use the same mass on every axis.
struct Physics {
  double hbar = 1.0;
  std::vector<double> masses = {1.0};

  double mass(int axis = 0) const {
    return masses[static_cast<std::size_t>(axis) < masses.size() ? axis : 0];
  }
  static Physics single(double hbar, double m, int dims = 1) {
    return Physics{hbar, std::vector<double>(static_cast<std::size_t>(dims), m)};
  }
};

/// Polar (Madelung) view of a complex field: density, action gradient and a
/// principal-branch phase reference. The action gradient is evaluated from
/// ħ·Im(ψ*∂ψ)/ρ directly, which is single-valued; S_ref is only a branch of
/// the phase and is not differentiated anywhere.
struct PolarView {
  RealField rho;
  std::vector<RealField> grad_S;        // one component per axis, momentum units
  std::vector<RealField> grad_log_rho;  // ∂ρ/ρ per axis, shares the ψ-derivative data
  RealField S_ref;                      // ħ·arg(ψ), valid off the node mask
  std::vector<std::uint8_t> node_mask;  // true where rho < rho_floor
  double rho_floor = 0.0;

  bool masked(std::size_t i) const { return node_mask[i] != 0; }
};

inline constexpr double kDefaultRhoFloorRel = 1e-12;

/// Decompose ψ = √ρ·exp(iS/ħ). rho_floor_rel is relative to max ρ.
/// Masked points carry zeroed gradients, never NaN. Throws on an all-zero field.
PolarView polar_decompose(const ComplexField& psi, const Physics& phys,
                          double rho_floor_rel = kDefaultRhoFloorRel);

}  // namespace pilotwave
