#include "excloak/laplace2d/field_export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "excloak/parallel.hpp"

namespace excloak::laplace2d {

std::vector<double> sample_field(const FieldGrid2D& grid,
                                 const std::function<double(double, double)>& f) {
  if (grid.resolution < 2) throw std::domain_error("FieldGrid2D: resolution must be >= 2");
  const int res = grid.resolution;
  std::vector<double> out(static_cast<std::size_t>(res) * res);
  parallel_for(out.size(), [&](std::size_t idx) {
    const int j = static_cast<int>(idx) / res;
    const int i = static_cast<int>(idx) % res;
    out[idx] = f(grid.x_at(i), grid.y_at(j));
  });
  return out;
}

void write_field_csv(const std::string& path, const FieldGrid2D& grid,
                     const std::vector<double>& values) {
  const int res = grid.resolution;
  if (values.size() != static_cast<std::size_t>(res) * res)
    throw std::domain_error("write_field_csv: value count does not match grid");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field_csv: cannot open " + path);
  out << "x,y,re_u\n";
  char buf[96];
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", grid.x_at(i), grid.y_at(j),
                    values[static_cast<std::size_t>(j) * res + i]);
      out << buf;
    }
  }
}

void write_pgm_bytes(const std::string& path, int width, int height,
                     const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() != static_cast<std::size_t>(width) * height)
    throw std::domain_error("write_pgm_bytes: byte count does not match dimensions");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pgm_bytes: cannot open " + path);
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_pgm_mask(const std::string& path, int width, int height,
                    const std::vector<double>& values, double level) {
  if (values.size() != static_cast<std::size_t>(width) * height)
    throw std::domain_error("write_pgm_mask: value count does not match dimensions");
  std::vector<std::uint8_t> bytes(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    bytes[i] = std::abs(values[i]) > level ? 255 : 0;
  write_pgm_bytes(path, width, height, bytes);
}

}  // namespace excloak::laplace2d
