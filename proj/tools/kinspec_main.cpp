#include <iostream>

#include <CLI11.hpp>

#include "kinspec/error.hpp"
#include "kinspec/manifest.hpp"
#include "kinspec/runner.hpp"
#include "kinspec/scenarios.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Spectral kinetic solver driver"};
  kinspec::ConfigOverrides o;
  bool print_manifest = false;
  bool list = false;

  app.add_option("--scenario", o.scenario, "Preset: trend, temperature_gradient, poiseuille, ghost, ghost_coarse");
  app.add_option("--config", o.config_file, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--epsilon", o.epsilon, "Knudsen number");
  app.add_option("--nx", o.nx, "Cells along x");
  app.add_option("--ny", o.ny, "Cells along y (2D domains)");
  app.add_option("--nv", o.nv, "Velocity nodes per axis");
  app.add_option("--dt", o.dt, "Time step");
  app.add_option("--t-final", o.t_final, "Final time");
  app.add_option("--kernel", o.kernel, "Collision path")->check(CLI::IsMember({"classical", "fast"}));
  app.add_option("--mode", o.mode, "Time integrator")->check(CLI::IsMember({"explicit", "imex"}));
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--threads", o.threads, "Worker threads");
  app.add_option("--checkpoint-every", o.checkpoint_every, "Simulated time between checkpoints");
  app.add_option("--resume", o.resume, "Checkpoint to resume from")->check(CLI::ExistingFile);
  app.add_flag("--force-resume", o.force_resume, "Accept a checkpoint with a different manifest hash");
  app.add_flag("--print-manifest", print_manifest, "Print the resolved configuration and exit");
  app.add_flag("--list-scenarios", list, "List presets and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kinspec::kExitConfig;
  }
  if (list) {
    for (const auto& name : kinspec::preset_names()) std::cout << name << "\n";
    return 0;
  }
  if (o.force_resume && !o.resume) {
    std::cerr << "error: --force-resume needs --resume\n";
    return kinspec::kExitConfig;
  }

  kinspec::RunManifest manifest;
  try {
    manifest = kinspec::parse_config(o);
  } catch (const kinspec::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kinspec::kExitConfig;
  }
  if (print_manifest) {
    std::cout << kinspec::config_to_json(manifest.config) << "\n";
    return 0;
  }
  const kinspec::RunOutcome r = kinspec::run(manifest, std::cerr);
  if (r.exit_code != kinspec::kExitOk) {
    std::cerr << "error: " << r.message << "\n";
  } else {
    std::cerr << r.message << ", t = " << r.time << ", output in " << manifest.config.output.dir << "\n";
  }
  return r.exit_code;
}
