#include "pilotwave/potential.hpp"

#include <cmath>

namespace pilotwave {

Potential::Potential() {
  eval_ = [](std::span<const double>, double) { return 0.0; };
  grad_ = [](std::span<const double>, double, std::span<double> out) {
    for (auto& v : out) v = 0.0;
  };
  dvdt_ = [](std::span<const double>, double) { return 0.0; };
  uniform_force_ = true;
}

Potential Potential::free_space() { return Potential{}; }

Potential Potential::harmonic(double omega, double mass, std::vector<double> center) {
  Potential p;
  const double k = 0.5 * mass * omega * omega;
  auto c_at = [center](int d) { return d < static_cast<int>(center.size()) ? center[d] : 0.0; };
  p.eval_ = [k, c_at](std::span<const double> x, double) {
    double r2 = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double dx = x[d] - c_at(static_cast<int>(d));
      r2 += dx * dx;
    }
    return k * r2;
  };
  p.grad_ = [k, c_at](std::span<const double> x, double, std::span<double> out) {
    for (std::size_t d = 0; d < x.size(); ++d)
      out[d] = 2.0 * k * (x[d] - c_at(static_cast<int>(d)));
  };
  p.uniform_force_ = false;
  p.descriptor_ = "{\"kind\":\"harmonic\",\"omega\":" + std::to_string(omega) + "}";
  return p;
}

Potential Potential::linear_drive(double f0, double omega_drive, int axis) {
  Potential p;
  p.eval_ = [f0, omega_drive, axis](std::span<const double> x, double t) {
    return x[axis] * f0 * std::sin(omega_drive * t);
  };
  p.grad_ = [f0, omega_drive, axis](std::span<const double>, double t, std::span<double> out) {
    for (auto& v : out) v = 0.0;
    out[axis] = f0 * std::sin(omega_drive * t);
  };
  p.dvdt_ = [f0, omega_drive, axis](std::span<const double> x, double t) {
    return x[axis] * f0 * omega_drive * std::cos(omega_drive * t);
  };
  p.time_dependent_ = true;
  p.uniform_force_ = true;
  p.descriptor_ = "{\"kind\":\"linear_drive\",\"f0\":" + std::to_string(f0) +
                  ",\"omega\":" + std::to_string(omega_drive) + "}";
  return p;
}

Potential Potential::linear_ramp(double g, int axis) {
  Potential p;
  p.eval_ = [g, axis](std::span<const double> x, double) { return g * x[axis]; };
  p.grad_ = [g, axis](std::span<const double>, double, std::span<double> out) {
    for (auto& v : out) v = 0.0;
    out[axis] = g;
  };
  p.uniform_force_ = true;
  p.descriptor_ = "{\"kind\":\"linear_ramp\",\"g\":" + std::to_string(g) + "}";
  return p;
}

Potential Potential::barrier(double v0, std::vector<double> center, double width) {
  Potential p;
  const double inv2w2 = 1.0 / (2.0 * width * width);
  p.eval_ = [v0, center, inv2w2](std::span<const double> x, double) {
    double r2 = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double dx = x[d] - (d < center.size() ? center[d] : 0.0);
      r2 += dx * dx;
    }
    return v0 * std::exp(-r2 * inv2w2);
  };
  p.grad_ = [v0, center, inv2w2](std::span<const double> x, double, std::span<double> out) {
    double r2 = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double dx = x[d] - (d < center.size() ? center[d] : 0.0);
      r2 += dx * dx;
    }
    const double val = v0 * std::exp(-r2 * inv2w2);
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double dx = x[d] - (d < center.size() ? center[d] : 0.0);
      out[d] = -2.0 * dx * inv2w2 * val;
    }
  };
  p.uniform_force_ = false;
  p.descriptor_ = "{\"kind\":\"barrier\",\"v0\":" + std::to_string(v0) + "}";
  return p;
}

Potential Potential::double_slit(double v0, double wall_x, double wall_w, double slit_sep,
                                 double slit_w) {
  Potential p;
  p.eval_ = [=](std::span<const double> x, double) {
    if (x.size() < 2) throw std::invalid_argument("double_slit needs a 2D grid");
    const double wall = std::exp(-(x[0] - wall_x) * (x[0] - wall_x) / (2.0 * wall_w * wall_w));
    const double g1 = std::exp(-(x[1] - 0.5 * slit_sep) * (x[1] - 0.5 * slit_sep) /
                               (2.0 * slit_w * slit_w));
    const double g2 = std::exp(-(x[1] + 0.5 * slit_sep) * (x[1] + 0.5 * slit_sep) /
                               (2.0 * slit_w * slit_w));
    const double open = std::min(1.0, g1 + g2);
    return v0 * wall * (1.0 - open);
  };
  p.uniform_force_ = false;
  p.time_dependent_ = false;
  p.grad_ = nullptr;  // finite-difference fallback
  p.descriptor_ = "{\"kind\":\"double_slit\",\"v0\":" + std::to_string(v0) + "}";
  return p;
}

Potential Potential::bilinear_coupling(double c) {
  Potential p;
  p.eval_ = [c](std::span<const double> x, double) {
    if (x.size() < 2) throw std::invalid_argument("bilinear_coupling needs a 2D grid");
    return c * x[0] * x[1];
  };
  p.grad_ = [c](std::span<const double> x, double, std::span<double> out) {
    out[0] = c * x[1];
    out[1] = c * x[0];
  };
  p.uniform_force_ = false;
  p.descriptor_ = "{\"kind\":\"bilinear_coupling\",\"c\":" + std::to_string(c) + "}";
  return p;
}

Potential Potential::custom(Eval eval, bool time_dependent, std::string descriptor) {
  Potential p;
  p.eval_ = std::move(eval);
  p.grad_ = nullptr;
  p.dvdt_ = nullptr;
  p.time_dependent_ = time_dependent;
  p.uniform_force_ = false;
  p.descriptor_ = std::move(descriptor);
  return p;
}

void Potential::gradient(std::span<const double> x, double t, std::span<double> out) const {
  if (grad_) {
    grad_(x, t, out);
    return;
  }
  // Central-difference fallback for custom evaluators.
  std::array<double, 2> xp{}, xm{};
  for (std::size_t d = 0; d < x.size(); ++d) xp[d] = xm[d] = x[d];
  const double h = 1e-6;
  for (std::size_t d = 0; d < x.size(); ++d) {
    xp[d] += h;
    xm[d] -= h;
    out[d] = (eval_(std::span<const double>(xp.data(), x.size()), t) -
              eval_(std::span<const double>(xm.data(), x.size()), t)) /
             (2.0 * h);
    xp[d] = xm[d] = x[d];
  }
}

double Potential::time_derivative(std::span<const double> x, double t) const {
  if (!time_dependent_) return 0.0;
  if (dvdt_) return dvdt_(x, t);
  const double h = 1e-6;
  return (eval_(x, t + h) - eval_(x, t - h)) / (2.0 * h);
}

RealField Potential::sample(const Grid& g, double t) const {
  RealField out(g, t);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto p = g.point(i);
    out[i] = eval_(std::span<const double>(p.data(), g.dims()), t);
  }
  return out;
}

RealField Potential::sample_time_derivative(const Grid& g, double t) const {
  RealField out(g, t);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto p = g.point(i);
    out[i] = time_derivative(std::span<const double>(p.data(), g.dims()), t);
  }
  return out;
}

RealField Potential::sample_gradient(const Grid& g, double t, int axis) const {
  RealField out(g, t);
  std::array<double, 2> grad{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto p = g.point(i);
    gradient(std::span<const double>(p.data(), g.dims()), t,
             std::span<double>(grad.data(), g.dims()));
    out[i] = grad[axis];
  }
  return out;
}

}  // namespace pilotwave
