#pragma once

#include "pilotwave/grid.hpp"
#include "pilotwave/polar.hpp"

namespace pilotwave::analytic {

/// Free Gaussian packet: at t=0, ψ = (2πσ₀²)^(−1/4) exp(−(x−x0)²/4σ₀² + ik0(x−x0)).
/// |ψ|² has standard deviation σ₀ initially and σ(t) = σ₀√(1+(ħt/2mσ₀²)²).
struct FreeGaussian {
  double sigma0 = 1.0;
  double x0 = 0.0;
  double k0 = 0.0;

  Complex operator()(const Physics& phys, double x, double t) const;
  double width(const Physics& phys, double t) const;
  /// Phase-gradient velocity field of the unboosted packet (k0 folded in as drift).
  double velocity(const Physics& phys, double x, double t) const;
  /// Guidance trajectory from q0 (scaling solution plus the k0 drift).
  double trajectory(const Physics& phys, double q0, double t) const;
};

/// Coherent state of the harmonic well ½mω²x²: a displaced ground state whose
/// density center swings as xc·cos(ωt). xc = 0 is the stationary ground state.
struct HarmonicCoherent {
  double omega = 1.0;
  double xc = 0.0;

  Complex operator()(const Physics& phys, double x, double t) const;
  double center(double t) const { return xc * std::cos(omega * t); }
};

/// Normalized superposition of two free Gaussians with centers ±a (plus optional
/// opposite boosts ∓k). The closed form stays exact under free evolution.
struct TwoGaussian {
  double sigma0 = 1.0;
  double a = 4.0;  // half separation
  double k = 0.0;  // approach speed: left packet boosted +k, right packet −k

  Complex operator()(const Physics& phys, double x, double t) const;
  double normalization() const;  // |c| fixed by the t=0 overlap
};

ComplexField sample_free_gaussian(const FreeGaussian& p, const Physics& phys, const Grid& g,
                                  double t);
ComplexField sample_harmonic_coherent(const HarmonicCoherent& p, const Physics& phys,
                                      const Grid& g, double t);
ComplexField sample_two_gaussian(const TwoGaussian& p, const Physics& phys, const Grid& g,
                                 double t);

}  // namespace pilotwave::analytic
