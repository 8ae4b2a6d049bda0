#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "arrpi/arrpi.hpp"

// Command-line front end. One subcommand per pipeline stage:
//   analyze       singular points, Lefschetz pairs, classes
//   presentation  van Kampen presentation of the complement's group
//   structure     closed-form group structure, when the formula applies
//   verify        invariant suite, one PASS/FAIL line per check
int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of real line arrangement complements"};
  app.require_subcommand(1);

  arrpi::RunConfig cfg;
  std::string format = "plain";
  bool projective = false;
  bool full = false, economical = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", cfg.input_path, "arrangement JSON file")->required();
    cmd->add_option("--format", format, "output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    cmd->add_flag("--no-normalize", cfg.no_normalize,
                  "fail on shared x-coordinates instead of shearing");
    return cmd;
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_flag("--projective", projective, "projective plane (adds Gn...G1 = 1)");
    return cmd;
  };

  CLI::App* analyze = add_common(app.add_subcommand("analyze", "geometry and combinatorics"));
  (void)analyze;

  CLI::App* present =
      add_mode(add_common(app.add_subcommand("presentation", "emit the group presentation")));
  present->add_flag("--full", full, "one relation per braid and generator");
  present->add_flag("--economical", economical, "per-point node/multiple-point relations (default)");

  add_mode(add_common(app.add_subcommand("structure", "closed-form group structure")));

  CLI::App* verify = add_common(app.add_subcommand("verify", "run the invariant suite"));
  verify->add_option("--probe", cfg.probe, "finite probe group: s3, s4, d4, z2z2 (default s3)");
  verify->add_option("--probe-file", cfg.probe_file, "multiplication table file (order, then NxN)");
  verify->add_option("--budget", cfg.budget, "finite-quotient search budget");

  CLI11_PARSE(app, argc, argv);

  if (full && economical) {
    std::cerr << "error: --full and --economical are mutually exclusive\n";
    return arrpi::exit_code::parse_error;
  }
  cfg.style = full ? arrpi::RelationStyle::full : arrpi::RelationStyle::economical;
  cfg.mode = projective ? arrpi::PresentationMode::projective : arrpi::PresentationMode::affine;
  cfg.format = format == "json" ? arrpi::OutputFormat::json_format : arrpi::OutputFormat::plain;

  if (app.got_subcommand("analyze")) cfg.command = arrpi::Command::analyze;
  else if (app.got_subcommand("presentation")) cfg.command = arrpi::Command::presentation;
  else if (app.got_subcommand("structure")) cfg.command = arrpi::Command::structure;
  else cfg.command = arrpi::Command::verify;

  return arrpi::run(cfg, std::cout, std::cerr);
}
