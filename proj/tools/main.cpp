#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qm/commands.hpp"
#include "qm/config.hpp"
#include "qm/errors.hpp"
#include "qm/output.hpp"
#include "qm/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kNumerical = 3 };

int fail(int code, const std::string& message) {
  std::fprintf(stderr, "qm: %s\n", message.c_str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qm::cli;

  CLI::App app{"Lipschitz seminorms and Monge-Kantorovich distances on filtered AF algebras", "qm"};
  app.require_subcommand(1);

  std::string instance = "interval";
  std::string beta = "geom:0.5";
  std::string format = "json";
  RunConfig config;
  app.add_option("instance", instance, "interval | cantor | uhf")->required();
  app.add_option("--level", config.level, "Truncation level (interval), depth (cantor) or sites (uhf)")
      ->required();
  app.add_option("--beta", beta, "geom:r | harmonic | from-element:<e> | from-element-squared:<e>")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for random states and samples")->capture_default_str();
  app.add_option("--out", config.out, "Output path (default stdout)");
  app.add_option("--format", format, "json | csv")->capture_default_str();
  app.fallthrough();

  auto* distances = app.add_subcommand("distances", "Pure-state distance matrix, LP and closed form");
  std::string element;
  auto* domain = app.add_subcommand("domain", "beta_a / beta_a^2 diagnostics for an element");
  domain->add_option("--element", element, "p1[:cutoff] or an element file")->required();
  auto* seminorm = app.add_subcommand("seminorm", "Per-level terms of L_beta(a)");
  seminorm->add_option("--element", element, "Element name or file")->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "Suite name")
      ->capture_default_str()
      ->check(CLI::IsMember(verify_suites()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    config.instance = parse_instance(instance);
    config.beta = parse_beta(beta);
    config.format = parse_format(format);
    config.validate();
    const Workspace ws = make_workspace(config);

    Artifact artifact;
    if (distances->parsed()) {
      artifact = cmd_distances(ws);
    } else if (domain->parsed()) {
      artifact = cmd_domain(ws, element);
    } else if (seminorm->parsed()) {
      artifact = cmd_seminorm(ws, element);
    } else {
      artifact = to_artifact(ws, run_verify(ws, suite));
    }
    write_artifact(config, artifact);
    return artifact.exit_code;
  } catch (const qm::ZeroResidual& e) {
    return fail(kBadInput, e.what());
  } catch (const qm::NumericalFailure& e) {
    return fail(kNumerical, e.what());
  } catch (const qm::Error& e) {
    return fail(kBadInput, e.what());
  } catch (const std::exception& e) {
    return fail(kNumerical, e.what());
  }
}
