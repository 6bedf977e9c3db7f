#include "pilotwave/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace pilotwave {

namespace {
constexpr char kMagic[4] = {'P', 'W', 'F', '1'};

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}
}  // namespace

void write_binary(const ComplexField& f, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os.write(kMagic, 4);
  const Grid& g = f.grid();
  put<std::int32_t>(os, g.dims());
  put<std::int32_t>(os, g.periodic() ? 0 : 1);
  for (int d = 0; d < g.dims(); ++d) {
    put<double>(os, g.axis(d).x_min);
    put<double>(os, g.axis(d).x_max);
    put<std::int64_t>(os, g.n(d));
  }
  put<double>(os, f.time());
  for (std::size_t i = 0; i < f.size(); ++i) {
    put<double>(os, f[i].real());
    put<double>(os, f[i].imag());
  }
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

ComplexField read_binary(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("bad field file header: " + path.string());
  const auto dims = get<std::int32_t>(is);
  const auto bnd = get<std::int32_t>(is);
  if (dims < 1 || dims > 2) throw std::runtime_error("bad dims in " + path.string());
  std::vector<Axis> axes;
  for (int d = 0; d < dims; ++d) {
    Axis a;
    a.x_min = get<double>(is);
    a.x_max = get<double>(is);
    a.n = static_cast<int>(get<std::int64_t>(is));
    axes.push_back(a);
  }
  Grid g(axes, bnd == 0 ? Boundary::periodic : Boundary::vanishing);
  const double time = get<double>(is);
  ComplexField f(g, time);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    f[i] = Complex{re, im};
  }
  if (!is) throw std::runtime_error("truncated field file: " + path.string());
  return f;
}

namespace {

template <class T, class Writer>
void write_csv_impl(const Field<T>& f, const std::filesystem::path& path, Writer writer,
                    const char* header) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os.precision(17);
  const Grid& g = f.grid();
  os << (g.dims() == 1 ? "x" : "x0,x1") << "," << header << "\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto p = g.point(i);
    os << p[0];
    if (g.dims() > 1) os << "," << p[1];
    writer(os, f[i]);
    os << "\n";
  }
}

}  // namespace

void write_csv(const ComplexField& f, const std::filesystem::path& path) {
  write_csv_impl(
      f, path, [](std::ostream& os, const Complex& v) { os << "," << v.real() << "," << v.imag(); },
      "re,im");
}

void write_csv(const RealField& f, const std::filesystem::path& path) {
  write_csv_impl(
      f, path, [](std::ostream& os, double v) { os << "," << v; }, "value");
}

}  // namespace pilotwave
