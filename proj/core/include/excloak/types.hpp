#pragma once

#include <Eigen/Dense>
#include <complex>

namespace excloak {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kImag{0.0, 1.0};

}  // namespace excloak
