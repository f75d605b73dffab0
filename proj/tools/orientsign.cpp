// Command line front end.  Every command reads JSON, writes one JSON
// document to stdout, and exits 0 on success; errors come back as
// {"error": {...}} with a stable nonzero exit code per error family.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orientsign/orientsign.hpp"

namespace {

using namespace orientsign;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), errc::malformed_json,
          "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const RunResult& r) {
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << r.doc.dump(2) << "\n";
  return r.exitCode;
}

template <typename F>
int with_input(const std::string& path, F&& fn) {
  json input;
  try {
    input = parse_json_text(read_file(path));
  } catch (const Error& e) {
    return emit(RunResult{error_to_json(e), errc_exit_code(e.kind()), {}});
  }
  return emit(fn(input));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orientation signs for determinant lines over real curves"};
  app.set_version_flag("--version", "orientsign 0.1.0");
  app.require_subcommand(1);

  std::string file;
  bool explain = false;
  bool oracle = false;
  bool classes = false;
  int genus = 0, components = 0, ambient = 0, degree = 0;
  std::string backend = "auto";
  int rc = 0;

  auto* validate = app.add_subcommand("validate", "validate input data");
  validate->add_option("file", file, "input JSON file")->required();
  validate->callback([&] { rc = with_input(file, run_validate); });

  auto* sign = app.add_subcommand(
      "sign", "sign of an automorphism class on determinant orientations");
  sign->add_option("file", file, "input JSON file")->required();
  sign->add_flag("--explain", explain, "list the contributing factors");
  sign->add_flag("--oracle", oracle,
                 "use the enumerative pin computation instead of the closed form");
  sign->callback([&] {
    rc = with_input(file, [&](const json& in) {
      return run_sign(in, explain,
                      oracle ? PinBackend::brute_force : PinBackend::closed_form);
    });
  });

  auto* teich = app.add_subcommand(
      "teich", "sign of a diffeomorphism class on Teichmueller orientations");
  teich->add_option("file", file, "input JSON file")->required();
  teich->callback([&] { rc = with_input(file, run_teich); });

  auto* moduli = app.add_subcommand(
      "moduli-w1", "first Stiefel-Whitney pairing against a loop monodromy");
  moduli->add_option("file", file, "input JSON file")->required();
  moduli->add_flag("--explain", explain, "list the contributing factors");
  moduli->callback([&] {
    rc = with_input(file,
                    [&](const json& in) { return run_moduli_w1(in, explain); });
  });

  auto* spin = app.add_subcommand("spin-count",
                                  "number of real spin structures on a curve");
  spin->add_option("-g,--genus", genus, "curve genus")->required();
  spin->add_option("-k,--components", components, "real components")->required();
  spin->add_flag("--classes", classes,
                 "also list restriction classes and the count per class");
  spin->callback([&] { rc = emit(run_spin_count(genus, components, classes)); });

  auto* adapted =
      app.add_subcommand("adapted", "is a divisor shape adapted to a bundle");
  adapted->add_option("file", file, "input JSON file")->required();
  adapted
      ->add_option("--backend", backend,
                   "feasibility backend: auto, search, or parity")
      ->check(CLI::IsMember({"auto", "search", "parity"}));
  adapted->callback([&] {
    AdaptedBackend be = backend == "search"  ? AdaptedBackend::search
                        : backend == "parity" ? AdaptedBackend::parity
                                              : AdaptedBackend::automatic;
    rc = with_input(file, [&](const json& in) { return run_adapted(in, be); });
  });

  auto* hyper = app.add_subcommand(
      "hypersurface",
      "first Stiefel-Whitney pairing for real hypersurface families");
  hyper->add_option("file", file, "input JSON file")->required();
  hyper->add_option("-N,--ambient", ambient, "ambient projective dimension")
      ->required();
  hyper->add_option("-d,--degree", degree, "hypersurface degree")->required();
  hyper->add_flag("--explain", explain, "list the contributing factors");
  hyper->callback([&] {
    rc = with_input(file, [&](const json& in) {
      return run_hypersurface(ambient, degree, in, explain);
    });
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
