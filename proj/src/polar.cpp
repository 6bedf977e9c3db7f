#include "pilotwave/polar.hpp"

#include "pilotwave/derivative.hpp"

namespace pilotwave {

PolarView polar_decompose(const ComplexField& psi, const Physics& phys, double rho_floor_rel) {
  PolarView out;
  const Grid& g = psi.grid();
  out.rho = RealField(g, psi.time());
  out.S_ref = RealField(g, psi.time());
  out.node_mask.assign(psi.size(), 0);

  double rho_max = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out.rho[i] = std::norm(psi[i]);
    rho_max = std::max(rho_max, out.rho[i]);
  }
  if (rho_max == 0.0) throw std::invalid_argument("polar_decompose: empty state");
  out.rho_floor = rho_floor_rel * rho_max;

  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (out.rho[i] < out.rho_floor) out.node_mask[i] = 1;
    out.S_ref[i] = out.masked(i) ? 0.0 : phys.hbar * std::arg(psi[i]);
  }

  for (int d = 0; d < g.dims(); ++d) {
    const ComplexField dpsi = derivative(psi, d, 1);
    RealField gs(g, psi.time());
    RealField glr(g, psi.time());
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (out.masked(i)) continue;
      const Complex pd = std::conj(psi[i]) * dpsi[i];
      gs[i] = phys.hbar * pd.imag() / out.rho[i];
      glr[i] = 2.0 * pd.real() / out.rho[i];
    }
    out.grad_S.push_back(std::move(gs));
    out.grad_log_rho.push_back(std::move(glr));
  }
  return out;
}

}  // namespace pilotwave
