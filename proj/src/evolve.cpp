#include "pilotwave/evolve.hpp"

#include <cmath>

#include "pilotwave/fft.hpp"

namespace pilotwave {

namespace {

// Diagonal kinetic phase exp(−i·dt·Σ_d ħk_d²/2m_d) applied in Fourier space.
void kinetic_drift(ComplexField& psi, double dt, const Physics& phys) {
  const Grid& g = psi.grid();
  fft::forward(psi);
  const Complex mi{0.0, -1.0};
  if (g.dims() == 1) {
    const int n = g.n(0);
    const double L = g.axis(0).length();
    for (int j = 0; j < n; ++j) {
      const double k = fft::wavenumber(j, n, L);
      psi[j] *= std::exp(mi * (phys.hbar * k * k / (2.0 * phys.mass(0))) * dt);
    }
  } else {
    const int n0 = g.n(0), n1 = g.n(1);
    std::vector<double> w0(n0), w1(n1);
    for (int j = 0; j < n0; ++j) {
      const double k = fft::wavenumber(j, n0, g.axis(0).length());
      w0[j] = phys.hbar * k * k / (2.0 * phys.mass(0));
    }
    for (int j = 0; j < n1; ++j) {
      const double k = fft::wavenumber(j, n1, g.axis(1).length());
      w1[j] = phys.hbar * k * k / (2.0 * phys.mass(1));
    }
    for (int i0 = 0; i0 < n0; ++i0)
      for (int i1 = 0; i1 < n1; ++i1) psi.at(i0, i1) *= std::exp(mi * (w0[i0] + w1[i1]) * dt);
  }
  fft::inverse(psi);
}

void potential_kick(ComplexField& psi, const RealField& v, double dt, const Physics& phys) {
  const Complex mi{0.0, -1.0};
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= std::exp(mi * v[i] * dt / phys.hbar);
}

// Complex tridiagonal solve (Thomas).  Diagonals indexed by the unknowns.
void solve_tridiag(std::vector<Complex>& lower, std::vector<Complex>& diag,
                   std::vector<Complex>& upper, std::vector<Complex>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const Complex w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

// One CN sweep along `axis`: solves (1 + iλ(T_axis + V_share)) ψ' = rhs where
// rhs was formed by the explicit half. λ = dt_half/(2ħ) per Peaceman–Rachford.
void cn_implicit_sweep(ComplexField& psi, const RealField& v, double v_share, double lambda,
                       int axis, const Physics& phys) {
  const Grid& g = psi.grid();
  const int n = g.n(axis);
  const double h = g.spacing(axis);
  const Complex i_{0.0, 1.0};
  const Complex t_off = i_ * lambda * (-phys.hbar * phys.hbar / (2.0 * phys.mass(axis))) / (h * h);

  const int n_lines = g.dims() == 1 ? 1 : g.n(1 - axis);
  const int m = n - 1;  // unknowns j = 1..n-1 (j = 0 pinned, implicit j = n zero)
  std::vector<Complex> lower(m), diag(m), upper(m), rhs(m);
  for (int l = 0; l < n_lines; ++l) {
    auto val = [&](int j) -> Complex& {
      return g.dims() == 1 ? psi[j] : (axis == 0 ? psi.at(j, l) : psi.at(l, j));
    };
    auto vpot = [&](int j) -> double {
      if (g.dims() == 1) return v[j];
      return axis == 0 ? v.at(j, l) : v.at(l, j);
    };
    for (int j = 1; j < n; ++j) {
      const int k = j - 1;
      lower[k] = t_off;
      upper[k] = t_off;
      diag[k] = 1.0 - 2.0 * t_off + i_ * lambda * v_share * vpot(j);
      rhs[k] = val(j);
    }
    solve_tridiag(lower, diag, upper, rhs);
    for (int j = 1; j < n; ++j) val(j) = rhs[j - 1];
    val(0) = 0.0;
  }
}

// Explicit application of (1 − iλ(T_axis + V_share·V)) across `axis`.
void cn_explicit_sweep(ComplexField& psi, const RealField& v, double v_share, double lambda,
                       int axis, const Physics& phys) {
  const Grid& g = psi.grid();
  const int n = g.n(axis);
  const double h = g.spacing(axis);
  const Complex i_{0.0, 1.0};
  const Complex t_coef = i_ * lambda * (-phys.hbar * phys.hbar / (2.0 * phys.mass(axis))) / (h * h);

  const int n_lines = g.dims() == 1 ? 1 : g.n(1 - axis);
  std::vector<Complex> line(n);
  for (int l = 0; l < n_lines; ++l) {
    auto val = [&](int j) -> Complex& {
      return g.dims() == 1 ? psi[j] : (axis == 0 ? psi.at(j, l) : psi.at(l, j));
    };
    auto vpot = [&](int j) -> double {
      if (g.dims() == 1) return v[j];
      return axis == 0 ? v.at(j, l) : v.at(l, j);
    };
    for (int j = 0; j < n; ++j) line[j] = val(j);
    for (int j = 1; j < n; ++j) {
      const Complex left = line[j - 1];
      const Complex right = j + 1 < n ? line[j + 1] : Complex{};
      const Complex lap = left - 2.0 * line[j] + right;
      val(j) = line[j] - t_coef * lap - i_ * lambda * v_share * vpot(j) * line[j];
    }
    val(0) = 0.0;
  }
}

}  // namespace

ComplexField step_split_fourier(const ComplexField& psi, const Potential& V, double dt,
                                const Physics& phys) {
  if (!psi.grid().periodic())
    throw std::invalid_argument("step_split_fourier requires a periodic grid");
  ComplexField out = psi;
  const RealField v = V.sample(psi.grid(), psi.time() + 0.5 * dt);
  potential_kick(out, v, 0.5 * dt, phys);
  kinetic_drift(out, dt, phys);
  potential_kick(out, v, 0.5 * dt, phys);
  out.set_time(psi.time() + dt);
  return out;
}

ComplexField step_crank_nicolson(const ComplexField& psi, const Potential& V, double dt,
                                 const Physics& phys) {
  if (psi.grid().periodic())
    throw std::invalid_argument("step_crank_nicolson requires a vanishing-boundary grid");
  const Grid& g = psi.grid();
  const RealField v = V.sample(g, psi.time() + 0.5 * dt);
  ComplexField out = psi;
  if (g.dims() == 1) {
    const double lambda = dt / (2.0 * phys.hbar);
    cn_explicit_sweep(out, v, 1.0, lambda, 0, phys);
    cn_implicit_sweep(out, v, 1.0, lambda, 0, phys);
  } else {
    // Peaceman–Rachford: axis-0 implicit against axis-1 explicit, then the
    // transpose, with the potential split evenly between the two operators.
    const double lambda = dt / (2.0 * phys.hbar);
    cn_explicit_sweep(out, v, 0.5, lambda, 1, phys);
    cn_implicit_sweep(out, v, 0.5, lambda, 0, phys);
    cn_explicit_sweep(out, v, 0.5, lambda, 0, phys);
    cn_implicit_sweep(out, v, 0.5, lambda, 1, phys);
  }
  out.set_time(psi.time() + dt);
  return out;
}

EvolutionRecord evolve(const ComplexField& psi0, const Potential& V, double t_final, double dt,
                       Propagator method, const Physics& phys, int snapshot_stride) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  if (snapshot_stride < 1) throw std::invalid_argument("evolve: stride must be >= 1");
  EvolutionRecord rec;
  rec.grid = psi0.grid();
  rec.phys = phys;
  rec.potential = V;
  rec.propagator = method;
  rec.dt = dt;
  rec.stride = snapshot_stride;

  const double norm0 = norm(psi0);
  auto check_boundary = [&](const ComplexField& f) {
    const Grid& g = f.grid();
    double rho_max = 0.0, rho_bnd = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) rho_max = std::max(rho_max, std::norm(f[i]));
    if (g.dims() == 1) {
      rho_bnd = std::max(std::norm(f[0]), std::norm(f[g.n(0) - 1]));
    } else {
      for (int i = 0; i < g.n(0); ++i)
        rho_bnd = std::max({rho_bnd, std::norm(f.at(i, 0)), std::norm(f.at(i, g.n(1) - 1))});
      for (int j = 0; j < g.n(1); ++j)
        rho_bnd = std::max({rho_bnd, std::norm(f.at(0, j)), std::norm(f.at(g.n(0) - 1, j))});
    }
    if (rho_bnd > 1e-10 * rho_max) rec.boundary_warning = true;
  };

  auto push = [&](const ComplexField& f) {
    rec.times.push_back(f.time());
    rec.norm_drift.push_back(norm(f) - norm0);
    check_boundary(f);
    rec.snapshots.push_back(f);
  };

  ComplexField psi = psi0;
  push(psi);
  const auto n_steps = static_cast<long>(std::llround((t_final - psi0.time()) / dt));
  for (long s = 1; s <= n_steps; ++s) {
    psi = (method == Propagator::split_fourier) ? step_split_fourier(psi, V, dt, phys)
                                                : step_crank_nicolson(psi, V, dt, phys);
    if (s % snapshot_stride == 0 || s == n_steps) push(psi);
  }
  return rec;
}

}  // namespace pilotwave
