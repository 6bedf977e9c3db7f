#pragma once

#include "pilotwave/grid.hpp"
#include "pilotwave/polar.hpp"
#include "pilotwave/potential.hpp"

namespace pilotwave {

enum class Propagator { split_fourier, crank_nicolson };

/// Time history of a Schrödinger evolution: uniformly spaced snapshots
/// (every `stride` steps of size dt) plus bookkeeping.
struct EvolutionRecord {
  Grid grid;
  Physics phys;
  Potential potential;
  Propagator propagator = Propagator::split_fourier;
  double dt = 0.0;
  int stride = 1;
  std::vector<double> times;
  std::vector<ComplexField> snapshots;
  std::vector<double> norm_drift;  // ‖ψ(tₙ)‖ − ‖ψ₀‖
  bool boundary_warning = false;   // boundary density exceeded 1e-10·max during the run

  int n_snapshots() const { return static_cast<int>(snapshots.size()); }
  double t0() const { return times.front(); }
  double t_final() const { return times.back(); }
  double snapshot_dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  const ComplexField& at(int i) const { return snapshots.at(i); }
};

/// One Strang-split step on a periodic grid: half potential kick, spectral
/// kinetic drift, half kick. Time-dependent potentials are sampled at t+dt/2.
/// Unitary to machine precision; 2nd order in dt.
ComplexField step_split_fourier(const ComplexField& psi, const Potential& V, double dt,
                                const Physics& phys);

/// One Crank–Nicolson step on a vanishing-boundary grid (tridiagonal solve in
/// 1D, Peaceman–Rachford ADI in 2D). 2nd order in dt and h².
ComplexField step_crank_nicolson(const ComplexField& psi, const Potential& V, double dt,
                                 const Physics& phys);

EvolutionRecord evolve(const ComplexField& psi0, const Potential& V, double t_final, double dt,
                       Propagator method, const Physics& phys, int snapshot_stride = 1);

}  // namespace pilotwave
