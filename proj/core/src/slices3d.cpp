#include "excloak/helmholtz3d/slices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "excloak/parallel.hpp"

namespace excloak::helmholtz3d {

FieldSlice slice_field(const std::function<cplx(const Vec3&)>& field, double z_level,
                       double half_width, int resolution) {
  if (resolution < 2) throw std::domain_error("slice_field: resolution must be >= 2");
  if (!(half_width > 0.0)) throw std::domain_error("slice_field: half_width must be > 0");
  FieldSlice s;
  s.z = z_level;
  s.half_width = half_width;
  s.resolution = resolution;
  s.values.resize(static_cast<std::size_t>(resolution) * resolution);
  parallel_for(s.values.size(), [&](std::size_t idx) {
    const int j = static_cast<int>(idx) / resolution;
    const int i = static_cast<int>(idx) % resolution;
    s.values[idx] = field(Vec3(s.x_at(i), s.y_at(j), z_level));
  });
  return s;
}

void write_slice_csv(const std::string& path, const FieldSlice& slice) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_slice_csv: cannot open " + path);
  out << "x,y,z,re_u,im_u\n";
  char buf[160];
  const int res = slice.resolution;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const cplx v = slice.values[static_cast<std::size_t>(j) * res + i];
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", slice.x_at(i),
                    slice.y_at(j), slice.z, v.real(), v.imag());
      out << buf;
    }
  }
}

void write_slice_pgm(const std::string& path, const FieldSlice& slice, double lo, double hi) {
  if (!(hi > lo)) throw std::domain_error("write_slice_pgm: need hi > lo");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_slice_pgm: cannot open " + path);
  const int res = slice.resolution;
  out << "P5\n" << res << " " << res << "\n255\n";
  std::vector<unsigned char> row(res);
  for (int j = res - 1; j >= 0; --j) {  // image rows top-down, y descending
    for (int i = 0; i < res; ++i) {
      const double v = slice.values[static_cast<std::size_t>(j) * res + i].real();
      const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
      row[i] = static_cast<unsigned char>(std::lround(255.0 * t));
    }
    out.write(reinterpret_cast<const char*>(row.data()), res);
  }
}

}  // namespace excloak::helmholtz3d
