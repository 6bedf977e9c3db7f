#pragma once

#include <memory>
#include <optional>

#include "pilotwave/evolve.hpp"
#include "pilotwave/polar.hpp"

namespace pilotwave {

/// Quantum potential in the log-density form
///   Q = Σ_d (ħ²/4 m_d) [ (∂_d ρ)²/(2ρ²) − ∂_dd ρ/ρ ],
/// composed pointwise from spectral/FD derivatives of ρ so that node-masked
/// divisions never feed back into a global transform. Masked points are zero.
RealField quantum_potential(const PolarView& pv, const Physics& phys);
RealField quantum_potential(const ComplexField& psi, const Physics& phys,
                            double rho_floor_rel = kDefaultRhoFloorRel);

/// Total force field −∂_i(V + Q), one component per axis. The V part uses the
/// potential's analytic gradient; the Q part is composed from ρ-derivatives up
/// to third order.
std::vector<RealField> quantum_force(const ComplexField& psi, const Potential& V,
                                     const Physics& phys,
                                     double rho_floor_rel = kDefaultRhoFloorRel);

/// Guidance velocity v_i = ∂_i S / m_i = ħ·Im(ψ*∂_i ψ)/(m_i ρ), node-masked.
std::vector<RealField> velocity_field(const ComplexField& psi, const Physics& phys,
                                      double rho_floor_rel = kDefaultRhoFloorRel);

struct TrajectorySample {
  double t = 0.0;
  std::array<double, 2> q{};
  std::array<double, 2> qdot{};  // velocity the integrator actually used
};

struct Trajectory {
  int dims = 1;
  std::array<double, 2> q0{};
  std::vector<TrajectorySample> samples;  // accepted steps, strictly increasing t
  std::string integrator;
  bool node_proximity_event = false;
  bool left_domain = false;

  bool truncated() const { return node_proximity_event || left_domain; }
  double t_begin() const { return samples.front().t; }
  double t_end() const { return samples.back().t; }
  /// Dense output by cubic Hermite between accepted steps.
  std::array<double, 2> position(double t) const;
  std::array<double, 2> velocity(double t) const;
};

struct IntegratorOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  double dt_initial = 1e-3;
  double dt_min = 1e-12;
  double node_guard_rel = 1e-8;  // trigger when ρ(q,t) < guard·max ρ
};

/// Interpolating view over an EvolutionRecord: cubic (Hermite, FD slopes) in
/// space, cubic Hermite in time for the velocity (time derivatives taken from
/// the evolution equation), Lagrange cubic in time for derived diagnostics.
/// Snapshot-derived fields are computed lazily, once, and shared across threads.
class FieldSampler {
 public:
  explicit FieldSampler(const EvolutionRecord& rec, double kappa = 0.0,
                        double rho_floor_rel = kDefaultRhoFloorRel);
  ~FieldSampler();
  FieldSampler(const FieldSampler&) = delete;
  FieldSampler& operator=(const FieldSampler&) = delete;

  const EvolutionRecord& record() const { return rec_; }
  double kappa() const { return kappa_; }

  /// κ-deformed guidance velocity v_i = (∂_i S − κ ∂_i log ρ)/m_i.
  void velocity(std::span<const double> q, double t, std::span<double> out) const;
  double rho(std::span<const double> q, double t) const;
  double rho_max(double t) const;
  double quantum_pot(std::span<const double> q, double t) const;
  /// −∂_i(V+Q) along the path (second-order law's right-hand side).
  void force(std::span<const double> q, double t, std::span<double> out) const;
  /// ∂(V+Q)/∂t at fixed position, by centered differencing of sampled fields.
  double v_plus_q_time_derivative(std::span<const double> q, double t) const;
  double v_plus_q(std::span<const double> q, double t) const;

  /// Exact snapshot values are reproduced at snapshot times/grid points.
  bool exact_at_snapshots() const { return true; }

 private:
  struct Snapshot;
  const Snapshot& data(int idx) const;
  template <class Getter>
  double sample_lagrange(std::span<const double> q, double t, Getter get) const;

  const EvolutionRecord& rec_;
  double kappa_ = 0.0;
  double rho_floor_rel_;
  mutable std::vector<std::unique_ptr<Snapshot>> cache_;
  mutable std::vector<std::unique_ptr<std::once_flag>> once_;
};

Trajectory integrate_first_order(std::span<const double> q0, const FieldSampler& sampler,
                                 double t0, double t1, const IntegratorOptions& opt = {});

/// Newtonian form m q̈ = −∇(V+Q) with free initial velocity v0.
Trajectory integrate_second_order(std::span<const double> q0, std::span<const double> v0,
                                  const FieldSampler& sampler, double t0, double t1,
                                  const IntegratorOptions& opt = {});

struct TransportReport {
  std::vector<double> times;
  std::vector<double> jacobian;  // det(∂q/∂q₀) by central differences
  std::vector<double> ratio;     // r(t) = ρ(q(t),t)·det / ρ₀(q₀)
  bool stencil_collapse = false;

  double max_abs_deviation() const;  // max_t |r(t) − 1|
};

/// Transport audit around one launch point: integrates a finite-difference
/// stencil of nearby trajectories and reports ρ·det(∂q/∂q₀)/ρ₀.
TransportReport transport_check(std::span<const double> q0, const FieldSampler& sampler,
                                std::span<const double> output_times, double stencil_dq,
                                const IntegratorOptions& opt = {});

/// L² norm (off-mask) of ∂S/∂t + (∂S)²/2m + Q + V at snapshot index `idx`,
/// with ∂S/∂t from centered differencing of arg(ψ*(t−Δ)ψ(t+Δ)).
double hamilton_jacobi_residual(const EvolutionRecord& rec, int idx,
                                double rho_floor_rel = 1e-6);

}  // namespace pilotwave
