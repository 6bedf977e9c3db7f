#pragma once

#include <functional>
#include <string>

#include "pilotwave/grid.hpp"
#include "pilotwave/polar.hpp"

namespace pilotwave {

/// External potential V(x,t). Built-ins carry analytic gradients and time
/// derivatives; a custom evaluator falls back to finite differences for both.
class Potential {
 public:
  using Eval = std::function<double(std::span<const double>, double)>;

  Potential();  // free space

  static Potential free_space();
  static Potential harmonic(double omega, double mass, std::vector<double> center = {});
  /// V = x·f0·sin(Ω t) along the given axis (a spatially uniform driving force).
  static Potential linear_drive(double f0, double omega_drive, int axis = 0);
  /// Static linear ramp V = g·x along the given axis.
  static Potential linear_ramp(double g, int axis = 0);
  /// Gaussian barrier V0·exp(−|x−c|²/2w²).
  static Potential barrier(double v0, std::vector<double> center, double width);
  /// 2D double-slit screen: a smoothed wall at x0 = wall_x with two Gaussian
  /// gaps of half-width slit_w at x1 = ±slit_sep/2.
  static Potential double_slit(double v0, double wall_x, double wall_w, double slit_sep,
                               double slit_w);
  /// Harmonic pair coupling for a two-body configuration grid: V = c·x0·x1.
  static Potential bilinear_coupling(double c);
  static Potential custom(Eval eval, bool time_dependent, std::string descriptor);

  double operator()(std::span<const double> x, double t) const { return eval_(x, t); }
  void gradient(std::span<const double> x, double t, std::span<double> out) const;
  double time_derivative(std::span<const double> x, double t) const;

  bool time_dependent() const { return time_dependent_; }
  bool uniform_force() const { return uniform_force_; }
  const std::string& descriptor() const { return descriptor_; }

  /// Sampled values on a grid at time t (finite everywhere by construction).
  RealField sample(const Grid& g, double t) const;
  RealField sample_time_derivative(const Grid& g, double t) const;
  RealField sample_gradient(const Grid& g, double t, int axis) const;

 private:
  Eval eval_;
  std::function<void(std::span<const double>, double, std::span<double>)> grad_;
  std::function<double(std::span<const double>, double)> dvdt_;
  bool time_dependent_ = false;
  bool uniform_force_ = false;
  std::string descriptor_ = "{\"kind\":\"free\"}";
};

}  // namespace pilotwave
