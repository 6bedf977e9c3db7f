#include "pilotwave/grid.hpp"

#include <algorithm>

namespace pilotwave {

Grid::Grid(std::vector<Axis> axes, Boundary boundary)
    : axes_(std::move(axes)), boundary_(boundary) {
  if (axes_.empty() || axes_.size() > 2)
    throw std::invalid_argument("grid supports 1 or 2 axes");
  for (const auto& a : axes_) {
    if (a.n <= 0) throw std::invalid_argument("axis needs a positive point count");
    if (!(a.spacing() > 0.0)) throw std::invalid_argument("axis spacing must be positive");
  }
}

Grid Grid::periodic_1d(double x_min, double x_max, int n) {
  return Grid({Axis{x_min, x_max, n}}, Boundary::periodic);
}

Grid Grid::periodic_2d(const Axis& a0, const Axis& a1) {
  return Grid({a0, a1}, Boundary::periodic);
}

Grid Grid::vanishing_1d(double x_min, double x_max, int n) {
  return Grid({Axis{x_min, x_max, n}}, Boundary::vanishing);
}

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (const auto& a : axes_) s *= static_cast<std::size_t>(a.n);
  return s;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int d = 0; d < dims(); ++d) v *= spacing(d);
  return v;
}

double Grid::displacement(int d, double x, double center) const {
  double dx = x - center;
  if (boundary_ == Boundary::periodic) {
    const double L = axes_[d].length();
    dx -= L * std::round(dx / L);
  }
  return dx;
}

bool Grid::contains(std::span<const double> x) const {
  for (int d = 0; d < dims(); ++d) {
    if (x[d] < axes_[d].x_min || x[d] > axes_[d].x_max) return false;
  }
  return true;
}

double Grid::quad_weight(std::size_t flat) const {
  double w = cell_volume();
  if (boundary_ == Boundary::vanishing) {
    const auto ij = unravel(flat);
    for (int d = 0; d < dims(); ++d)
      if (ij[d] == 0) w *= 0.5;
  }
  return w;
}

namespace {

template <class T>
T integrate_impl(const Field<T>& f) {
  const Grid& g = f.grid();
  if (g.periodic()) {
    T sum{};
    for (std::size_t i = 0; i < f.size(); ++i) sum += f[i];
    return sum * g.cell_volume();
  }
  T sum{};
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * g.quad_weight(i);
  return sum;
}

}  // namespace

double integrate(const RealField& f) { return integrate_impl(f); }
Complex integrate(const ComplexField& f) { return integrate_impl(f); }

Complex inner_product(const ComplexField& a, const ComplexField& b) {
  if (a.grid() != b.grid()) throw std::invalid_argument("inner_product: grid mismatch");
  Complex sum{};
  const Grid& g = a.grid();
  if (g.periodic()) {
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
    return sum * g.cell_volume();
  }
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i] * g.quad_weight(i);
  return sum;
}

double norm(const ComplexField& a) { return std::sqrt(std::abs(inner_product(a, a))); }

double norm(const RealField& a) {
  double sum = 0.0;
  const Grid& g = a.grid();
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * a[i] * g.quad_weight(i);
  return std::sqrt(sum);
}

double max_abs(const RealField& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

double max_abs(const ComplexField& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

double l2_distance(const ComplexField& a, const ComplexField& b) {
  if (a.grid() != b.grid()) throw std::invalid_argument("l2_distance: grid mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]) * a.grid().quad_weight(i);
  return std::sqrt(sum);
}

double l2_distance(const RealField& a, const RealField& b) {
  if (a.grid() != b.grid()) throw std::invalid_argument("l2_distance: grid mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d * a.grid().quad_weight(i);
  }
  return std::sqrt(sum);
}

}  // namespace pilotwave
