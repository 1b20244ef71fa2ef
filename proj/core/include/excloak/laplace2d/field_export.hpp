#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace excloak::laplace2d {

/// Uniform grid over [cx-hw, cx+hw] x [cy-hw, cy+hw], row-major with y
/// ascending by row and x ascending within a row.
struct FieldGrid2D {
  double cx = 0.0, cy = 0.0;
  double half_width = 1.0;
  int resolution = 64;

  double x_at(int i) const { return cx - half_width + 2.0 * half_width * i / (resolution - 1); }
  double y_at(int j) const { return cy - half_width + 2.0 * half_width * j / (resolution - 1); }
};

/// Samples a real field on the grid (parallel over points).
std::vector<double> sample_field(const FieldGrid2D& grid,
                                 const std::function<double(double, double)>& f);

/// CSV with header "x,y,re_u", one row per grid cell in row-major order.
void write_field_csv(const std::string& path, const FieldGrid2D& grid,
                     const std::vector<double>& values);

/// 8-bit binary PGM (P5): 255 where |value| exceeds `level`, 0 elsewhere.
void write_pgm_mask(const std::string& path, int width, int height,
                    const std::vector<double>& values, double level);

/// 8-bit binary PGM (P5) from raw bytes.
void write_pgm_bytes(const std::string& path, int width, int height,
                     const std::vector<std::uint8_t>& bytes);

}  // namespace excloak::laplace2d
