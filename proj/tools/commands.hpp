#pragma once

#include <CLI11.hpp>

namespace excloak::tools {

void register_poly_map(CLI::App& app);
void register_laplace_demo(CLI::App& app);
void register_helm_slices(CLI::App& app);
void register_helm_perf(CLI::App& app);
void register_tetra_geom(CLI::App& app);
void register_elastic_verify(CLI::App& app);

}  // namespace excloak::tools
