#pragma once

#include <functional>
#include <string>
#include <vector>

#include "excloak/types.hpp"

namespace excloak::helmholtz3d {

/// Complex samples of a field on a constant-z square slice, row-major with
/// y ascending by row and x ascending within a row.
struct FieldSlice {
  double z = 0.0;
  double half_width = 1.0;
  int resolution = 2;
  std::vector<cplx> values;

  double x_at(int i) const { return -half_width + 2.0 * half_width * i / (resolution - 1); }
  double y_at(int j) const { return -half_width + 2.0 * half_width * j / (resolution - 1); }
};

FieldSlice slice_field(const std::function<cplx(const Vec3&)>& field, double z_level,
                       double half_width, int resolution);

/// CSV with header "x,y,z,re_u,im_u", one row per sample in row-major order.
void write_slice_csv(const std::string& path, const FieldSlice& slice);

/// Binary PGM (P5) of the real part, linearly mapped from [lo, hi] to
/// [0, 255]; the caller records the range in a sidecar file.
void write_slice_pgm(const std::string& path, const FieldSlice& slice, double lo, double hi);

}  // namespace excloak::helmholtz3d
