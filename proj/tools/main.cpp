#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace rotform::cli;

  CLI::App app{"rotform: scalar products on a 3d real vector space and their rotation groups"};
  app.require_subcommand(1);

  RecoverOptions recover;
  auto* rec = app.add_subcommand("recover",
                                 "recover the scalar product from flag transport alone");
  rec->add_option("--form", recover.form_path, "form file (3 rows of 3 numbers)");
  rec->add_flag("--random", recover.random, "use a seeded random SPD form instead of a file");
  rec->add_option("--seed", recover.seed, "seed for --random");
  rec->add_option("--cond", recover.max_condition, "condition bound for --random");
  rec->add_option("--unit", recover.unit, "length unit representative as x,y,z");
  rec->add_option("--tol", recover.tol, "relative tolerance for residual checks");

  VerifyOptions verify;
  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", verify.suite,
                  "all|ubh|dluu|orbit|pythagoras|forward|roundtrip|haar");
  ver->add_option("--trials", verify.trials, "trials per suite (Haar sample count for haar)");
  ver->add_option("--seed", verify.seed, "suite seed");
  ver->add_option("--form", verify.form_path, "form file");
  ver->add_flag("--random", verify.random, "use a seeded random SPD form instead of a file");
  ver->add_option("--cond", verify.max_condition, "condition bound for --random");
  ver->add_option("--unit", verify.unit, "length unit representative as x,y,z");

  TransportOptions transport;
  auto* tra = app.add_subcommand("transport", "print the unique rotation carrying one flag "
                                              "to another");
  tra->add_option("--form", transport.form_path, "form file")->required();
  tra->add_option("--from", transport.from, "source flag as x,y,z;x,y,z")->required();
  tra->add_option("--to", transport.to, "target flag as x,y,z;x,y,z")->required();

  PythagorasOptions pythagoras;
  auto* pyt = app.add_subcommand("pythagoras", "check a^2 + b^2 = c^2 on a perpendicular pair");
  pyt->add_option("--form", pythagoras.form_path, "form file")->required();
  pyt->add_option("--unit", pythagoras.unit, "length unit representative as x,y,z");
  pyt->add_option("--v", pythagoras.v, "first leg as x,y,z")->required();
  pyt->add_option("--w", pythagoras.w, "second leg as x,y,z")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (rec->parsed()) return cmd_recover(recover, std::cout, std::cerr);
  if (ver->parsed()) return cmd_verify(verify, std::cout, std::cerr);
  if (tra->parsed()) return cmd_transport(transport, std::cout, std::cerr);
  return cmd_pythagoras(pythagoras, std::cout, std::cerr);
}
