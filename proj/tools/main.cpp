#include <CLI11.hpp>
#include <cstdio>
#include <exception>

#include "commands.hpp"
#include "excloak/errors.hpp"
#include "excloak/version.hpp"

// Exit codes: 0 success, 2 validation error, 3 numerical failure.
int main(int argc, char** argv) {
  CLI::App app{"Active exterior cloaking simulations: quasistatic 2-D device "
               "fields, 3-D Helmholtz multipolar cloaks, and torque-spring "
               "elastodynamics"};
  app.set_version_flag("--version", excloak::kVersion);
  app.set_config("--config", "", "Plain key = value configuration file");
  app.require_subcommand(1);

  excloak::tools::register_poly_map(app);
  excloak::tools::register_laplace_demo(app);
  excloak::tools::register_helm_slices(app);
  excloak::tools::register_helm_perf(app);
  excloak::tools::register_tetra_geom(app);
  excloak::tools::register_elastic_verify(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const excloak::numeric_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
