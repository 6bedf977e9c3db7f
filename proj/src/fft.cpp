#include "pilotwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace pilotwave::fft {

namespace {

// Plans are created once per shape under a lock and reused via the
// new-array execute interface, which is safe to call concurrently.
// FFTW_UNALIGNED keeps the plans valid for arbitrary caller buffers.
class PlanCache {
 public:
  fftw_plan get(int n0, int n1, int sign) {
    std::scoped_lock lock(mutex_);
    const auto key = std::tuple{n0, n1, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    const std::size_t total = static_cast<std::size_t>(n0) * (n1 > 0 ? n1 : 1);
    std::vector<Complex> dummy(total);
    auto* buf = reinterpret_cast<fftw_complex*>(dummy.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan p = (n1 > 0) ? fftw_plan_dft_2d(n0, n1, buf, buf, sign, flags)
                           : fftw_plan_dft_1d(n0, buf, buf, sign, flags);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(fftw_plan p, Complex* data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, buf, buf);
}

}  // namespace

void forward(Complex* data, int n) { execute(cache().get(n, 0, FFTW_FORWARD), data); }

void inverse(Complex* data, int n) {
  execute(cache().get(n, 0, FFTW_BACKWARD), data);
  const double scale = 1.0 / n;
  for (int i = 0; i < n; ++i) data[i] *= scale;
}

void forward(ComplexField& f) {
  const Grid& g = f.grid();
  if (g.dims() == 1) {
    forward(f.values().data(), g.n(0));
  } else {
    execute(cache().get(g.n(0), g.n(1), FFTW_FORWARD), f.values().data());
  }
}

void inverse(ComplexField& f) {
  const Grid& g = f.grid();
  if (g.dims() == 1) {
    inverse(f.values().data(), g.n(0));
  } else {
    execute(cache().get(g.n(0), g.n(1), FFTW_BACKWARD), f.values().data());
    const double scale = 1.0 / static_cast<double>(f.size());
    for (auto& v : f.values()) v *= scale;
  }
}

double wavenumber(int j, int n, double length) {
  const int m = (j <= n / 2) ? j : j - n;
  return 2.0 * std::numbers::pi * m / length;
}

}  // namespace pilotwave::fft
