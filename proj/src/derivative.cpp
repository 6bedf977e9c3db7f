#include "pilotwave/derivative.hpp"

#include "pilotwave/fft.hpp"

namespace pilotwave {

namespace {

void check_args(const Grid& g, int axis, int order) {
  if (axis < 0 || axis >= g.dims()) throw std::invalid_argument("derivative: bad axis");
  if (order != 1 && order != 2) throw std::invalid_argument("derivative: order must be 1 or 2");
}

// Applies a spectral derivative to every grid line along `axis`,
// gathering strided lines into a contiguous scratch buffer.
void spectral_axis(ComplexField& f, int axis, int order) {
  const Grid& g = f.grid();
  const int n = g.n(axis);
  const double L = g.axis(axis).length();
  std::vector<Complex> mult(n);
  for (int j = 0; j < n; ++j) {
    const double k = fft::wavenumber(j, n, L);
    if (order == 1) {
      // The unpaired Nyquist mode has no well-defined odd derivative; drop it.
      mult[j] = (n % 2 == 0 && j == n / 2) ? Complex{0, 0} : Complex{0, k};
    } else {
      mult[j] = Complex{-k * k, 0};
    }
  }

  const bool contiguous = (g.dims() == 1) || (axis == 1);
  const int n_lines = (g.dims() == 1) ? 1 : g.n(1 - axis);
  std::vector<Complex> line(n);
  for (int l = 0; l < n_lines; ++l) {
    Complex* base = f.values().data();
    std::size_t start, stride;
    if (g.dims() == 1) {
      start = 0, stride = 1;
    } else if (axis == 1) {
      start = static_cast<std::size_t>(l) * g.n(1), stride = 1;
    } else {
      start = static_cast<std::size_t>(l), stride = g.n(1);
    }
    if (contiguous) {
      fft::forward(base + start, n);
      for (int j = 0; j < n; ++j) base[start + j] *= mult[j];
      fft::inverse(base + start, n);
    } else {
      for (int j = 0; j < n; ++j) line[j] = base[start + j * stride];
      fft::forward(line.data(), n);
      for (int j = 0; j < n; ++j) line[j] *= mult[j];
      fft::inverse(line.data(), n);
      for (int j = 0; j < n; ++j) base[start + j * stride] = line[j];
    }
  }
}

template <class T>
Field<T> fd_axis(const Field<T>& f, int axis, int order, int accuracy) {
  if (accuracy != 2 && accuracy != 4)
    throw std::invalid_argument("derivative: fd accuracy must be 2 or 4");
  const Grid& g = f.grid();
  const int n = g.n(axis);
  const double h = g.spacing(axis);
  const bool wrap = g.periodic();

  auto sample = [&](int i0, int i1, int di) -> T {
    int idx = (axis == 0 ? i0 : i1) + di;
    if (wrap) {
      idx = ((idx % n) + n) % n;
    } else if (idx < 0 || idx >= n) {
      return T{};  // zero extension beyond the pinned boundary
    }
    return axis == 0 ? f.at(idx, i1) : f.at(i0, idx);
  };

  Field<T> out(g, f.time());
  const int n0 = g.n(0);
  const int n1 = g.dims() > 1 ? g.n(1) : 1;
  for (int i0 = 0; i0 < n0; ++i0) {
    for (int i1 = 0; i1 < n1; ++i1) {
      T v{};
      if (order == 1 && accuracy == 2) {
        v = (sample(i0, i1, 1) - sample(i0, i1, -1)) / (2.0 * h);
      } else if (order == 1) {
        v = (-sample(i0, i1, 2) + 8.0 * sample(i0, i1, 1) - 8.0 * sample(i0, i1, -1) +
             sample(i0, i1, -2)) /
            (12.0 * h);
      } else if (order == 2 && accuracy == 2) {
        v = (sample(i0, i1, 1) - 2.0 * sample(i0, i1, 0) + sample(i0, i1, -1)) / (h * h);
      } else {
        v = (-sample(i0, i1, 2) + 16.0 * sample(i0, i1, 1) - 30.0 * sample(i0, i1, 0) +
             16.0 * sample(i0, i1, -1) - sample(i0, i1, -2)) /
            (12.0 * h * h);
      }
      out.at(i0, i1) = v;
    }
  }
  return out;
}

}  // namespace

DerivMethod default_deriv_method(const Grid& g) {
  return g.periodic() ? DerivMethod::spectral : DerivMethod::central_fd;
}

ComplexField derivative(const ComplexField& f, int axis, int order, DerivMethod method,
                        int fd_accuracy) {
  check_args(f.grid(), axis, order);
  if (method == DerivMethod::spectral) {
    if (!f.grid().periodic())
      throw std::invalid_argument("spectral derivative requires a periodic grid");
    ComplexField out = f;
    spectral_axis(out, axis, order);
    return out;
  }
  return fd_axis(f, axis, order, fd_accuracy);
}

RealField derivative(const RealField& f, int axis, int order, DerivMethod method,
                     int fd_accuracy) {
  check_args(f.grid(), axis, order);
  if (method == DerivMethod::spectral) {
    if (!f.grid().periodic())
      throw std::invalid_argument("spectral derivative requires a periodic grid");
    ComplexField tmp(f.grid(), f.time());
    for (std::size_t i = 0; i < f.size(); ++i) tmp[i] = f[i];
    spectral_axis(tmp, axis, order);
    RealField out(f.grid(), f.time());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = tmp[i].real();
    return out;
  }
  return fd_axis(f, axis, order, fd_accuracy);
}

ComplexField derivative(const ComplexField& f, int axis, int order) {
  return derivative(f, axis, order, default_deriv_method(f.grid()));
}

RealField derivative(const RealField& f, int axis, int order) {
  return derivative(f, axis, order, default_deriv_method(f.grid()));
}

template <class T>
static Field<T> laplacian_impl(const Field<T>& f) {
  Field<T> out = derivative(f, 0, 2);
  for (int d = 1; d < f.grid().dims(); ++d) {
    Field<T> dd = derivative(f, d, 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += dd[i];
  }
  return out;
}

ComplexField laplacian(const ComplexField& f) { return laplacian_impl(f); }
RealField laplacian(const RealField& f) { return laplacian_impl(f); }

}  // namespace pilotwave
