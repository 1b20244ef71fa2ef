#include "excloak/elastica/tensors.hpp"

namespace excloak::elastica {

Tensor4 Tensor4::isotropic(int dim, double lam, double mu) {
  Tensor4 c(dim);
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l)
          c(i, j, k, l) = lam * d(i, j) * d(k, l) + mu * (d(i, k) * d(j, l) + d(i, l) * d(j, k));
  return c;
}

}  // namespace excloak::elastica
