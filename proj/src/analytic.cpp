#include "pilotwave/analytic.hpp"

#include <numbers>

namespace pilotwave::analytic {

namespace {
constexpr double kPi = std::numbers::pi;

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string("analytic reference: ") + name +
                                              " must be positive");
}
}  // namespace

Complex FreeGaussian::operator()(const Physics& phys, double x, double t) const {
  check_positive(sigma0, "sigma0");
  const double hbar = phys.hbar, m = phys.mass();
  const Complex i{0.0, 1.0};
  const Complex stretch = 1.0 + i * hbar * t / (2.0 * m * sigma0 * sigma0);
  const double v0 = hbar * k0 / m;
  const double xi = x - x0 - v0 * t;
  const Complex amp = std::pow(2.0 * kPi * sigma0 * sigma0, -0.25) / std::sqrt(stretch);
  const Complex phase = i * (k0 * (x - x0) - hbar * k0 * k0 * t / (2.0 * m));
  return amp * std::exp(-xi * xi / (4.0 * sigma0 * sigma0 * stretch) + phase);
}

double FreeGaussian::width(const Physics& phys, double t) const {
  const double tau = phys.hbar * t / (2.0 * phys.mass() * sigma0 * sigma0);
  return sigma0 * std::sqrt(1.0 + tau * tau);
}

double FreeGaussian::velocity(const Physics& phys, double x, double t) const {
  const double hbar = phys.hbar, m = phys.mass();
  const double v0 = hbar * k0 / m;
  const double tau = hbar * t / (2.0 * m * sigma0 * sigma0);
  const double xi = x - x0 - v0 * t;
  return v0 + xi * (hbar / (2.0 * m * sigma0 * sigma0)) * tau / (1.0 + tau * tau);
}

double FreeGaussian::trajectory(const Physics& phys, double q0, double t) const {
  const double hbar = phys.hbar, m = phys.mass();
  const double tau = hbar * t / (2.0 * m * sigma0 * sigma0);
  const double v0 = hbar * k0 / m;
  return x0 + v0 * t + (q0 - x0) * std::sqrt(1.0 + tau * tau);
}

Complex HarmonicCoherent::operator()(const Physics& phys, double x, double t) const {
  check_positive(omega, "omega");
  const double hbar = phys.hbar, m = phys.mass();
  const double c = xc * std::cos(omega * t);
  const double amp = std::pow(m * omega / (kPi * hbar), 0.25);
  const double re = -(m * omega / (2.0 * hbar)) * (x - c) * (x - c);
  const double im = -(0.5 * omega * t + (m * omega / hbar) * x * xc * std::sin(omega * t) -
                      (m * omega / (4.0 * hbar)) * xc * xc * std::sin(2.0 * omega * t));
  return std::exp(Complex{re, 0.0} + Complex{0.0, im}) * amp;
}

double TwoGaussian::normalization() const {
  check_positive(sigma0, "sigma0");
  // ⟨G1,G2⟩ at t=0 for centers ∓a and boosts ±k:
  // exp(−d²/8σ² − κ²σ²/2)·exp(iφ) with d = 2a, κ = −2k.
  const double d = 2.0 * a;
  const double kap = -2.0 * k;
  const double ov = std::exp(-d * d / (8.0 * sigma0 * sigma0) - kap * kap * sigma0 * sigma0 / 2.0);
  // Phase: κ·m_c − k2·c2 + k1·c1 with m_c = 0, c1 = −a, c2 = +a, k1 = k, k2 = −k.
  const double phase = -(-k) * a + k * (-a);
  return 1.0 / std::sqrt(2.0 + 2.0 * ov * std::cos(phase));
}

Complex TwoGaussian::operator()(const Physics& phys, double x, double t) const {
  const FreeGaussian left{sigma0, -a, k};
  const FreeGaussian right{sigma0, a, -k};
  return normalization() * (left(phys, x, t) + right(phys, x, t));
}

namespace {
template <class State>
ComplexField sample(const State& s, const Physics& phys, const Grid& g, double t) {
  if (g.dims() != 1) throw std::invalid_argument("analytic reference states are 1D");
  ComplexField f(g, t);
  for (int i = 0; i < g.n(0); ++i) f[i] = s(phys, g.coord(0, i), t);
  return f;
}
}  // namespace

ComplexField sample_free_gaussian(const FreeGaussian& p, const Physics& phys, const Grid& g,
                                  double t) {
  return sample(p, phys, g, t);
}
ComplexField sample_harmonic_coherent(const HarmonicCoherent& p, const Physics& phys,
                                      const Grid& g, double t) {
  return sample(p, phys, g, t);
}
ComplexField sample_two_gaussian(const TwoGaussian& p, const Physics& phys, const Grid& g,
                                 double t) {
  return sample(p, phys, g, t);
}

}  // namespace pilotwave::analytic
