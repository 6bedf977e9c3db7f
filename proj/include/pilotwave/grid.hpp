#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pilotwave {

using Complex = std::complex<double>;

enum class Boundary { periodic, vanishing };

/// One rectangular axis: n uniformly spaced samples on [x_min, x_max) with
/// spacing h = (x_max - x_min)/n.  Periodic axes wrap at x_max; vanishing
/// axes pin the stored left endpoint and the implicit right endpoint to zero.
struct Axis {
  double x_min = 0.0;
  double x_max = 1.0;
  int n = 0;

  double length() const { return x_max - x_min; }
  double spacing() const { return length() / n; }
  bool operator==(const Axis&) const = default;
};

class Grid {
 public:
  Grid() = default;
  Grid(std::vector<Axis> axes, Boundary boundary);

  static Grid periodic_1d(double x_min, double x_max, int n);
  static Grid periodic_2d(const Axis& a0, const Axis& a1);
  static Grid vanishing_1d(double x_min, double x_max, int n);

  int dims() const { return static_cast<int>(axes_.size()); }
  const Axis& axis(int d) const { return axes_.at(d); }
  int n(int d) const { return axes_.at(d).n; }
  double spacing(int d) const { return axes_.at(d).spacing(); }
  double coord(int d, int i) const { return axes_[d].x_min + i * axes_[d].spacing(); }
  Boundary boundary() const { return boundary_; }
  bool periodic() const { return boundary_ == Boundary::periodic; }

  std::size_t size() const;
  double cell_volume() const;

  /// Row-major flat index (axis 0 major).
  std::size_t index(int i0, int i1 = 0) const {
    return dims() == 1 ? static_cast<std::size_t>(i0)
                       : static_cast<std::size_t>(i0) * axes_[1].n + i1;
  }
  std::array<int, 2> unravel(std::size_t flat) const {
    if (dims() == 1) return {static_cast<int>(flat), 0};
    const int n1 = axes_[1].n;
    return {static_cast<int>(flat / n1), static_cast<int>(flat % n1)};
  }
  /// Coordinates of a flat index (second entry unused in 1D).
  std::array<double, 2> point(std::size_t flat) const {
    const auto ij = unravel(flat);
    return {coord(0, ij[0]), dims() > 1 ? coord(1, ij[1]) : 0.0};
  }

  /// Signed displacement x - center along axis d; minimum-image on periodic grids.
  double displacement(int d, double x, double center) const;

  /// True if x lies inside the domain box along every axis.
  bool contains(std::span<const double> x) const;

  /// Quadrature weight for a flat index: rectangle rule on periodic grids,
  /// trapezoid on vanishing grids (half weight on the stored boundary plane).
  double quad_weight(std::size_t flat) const;

  bool operator==(const Grid&) const = default;

 private:
  std::vector<Axis> axes_;
  Boundary boundary_ = Boundary::periodic;
};

template <class T>
class Field {
 public:
  Field() = default;
  explicit Field(Grid grid, double time = 0.0)
      : grid_(std::move(grid)), values_(grid_.size(), T{}), time_(time) {}
  Field(Grid grid, std::vector<T> values, double time = 0.0)
      : grid_(std::move(grid)), values_(std::move(values)), time_(time) {
    if (values_.size() != grid_.size()) throw std::invalid_argument("field size mismatch");
  }

  const Grid& grid() const { return grid_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  std::size_t size() const { return values_.size(); }
  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  T& at(int i0, int i1 = 0) { return values_[grid_.index(i0, i1)]; }
  const T& at(int i0, int i1 = 0) const { return values_[grid_.index(i0, i1)]; }

  std::span<T> values() { return values_; }
  std::span<const T> values() const { return values_; }

  bool finite() const {
    for (const auto& v : values_)
      if (!is_finite(v)) return false;
    return true;
  }

 private:
  static bool is_finite(double v) { return std::isfinite(v); }
  static bool is_finite(const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }

  Grid grid_;
  std::vector<T> values_;
  double time_ = 0.0;
};

using RealField = Field<double>;
using ComplexField = Field<Complex>;

double integrate(const RealField& f);
Complex integrate(const ComplexField& f);

/// Sesquilinear inner product ⟨a,b⟩ = ∫ conj(a)·b dV (conjugation on the first slot).
Complex inner_product(const ComplexField& a, const ComplexField& b);
double norm(const ComplexField& a);
double norm(const RealField& a);
double max_abs(const RealField& a);
double max_abs(const ComplexField& a);

/// L2 distance ‖a − b‖ over the shared grid.
double l2_distance(const ComplexField& a, const ComplexField& b);
double l2_distance(const RealField& a, const RealField& b);

}  // namespace pilotwave
