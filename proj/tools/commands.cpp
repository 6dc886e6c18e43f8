#include "commands.hpp"

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "form_io.hpp"
#include "rotform/reconstruction.hpp"
#include "rotform/rotation_group.hpp"
#include "rotform/verification.hpp"

namespace rotform::cli {

namespace {

bool is_contract_failure(const Error& e) {
  return dynamic_cast<const NotCollinear*>(&e) != nullptr ||
         dynamic_cast<const NonPositiveScale*>(&e) != nullptr ||
         dynamic_cast<const AsymmetricResult*>(&e) != nullptr ||
         dynamic_cast<const NotPositiveDefinite*>(&e) != nullptr ||
         dynamic_cast<const OracleContractViolation*>(&e) != nullptr;
}

/// Loads the form from a file or generates a seeded random SPD one.
SymmetricForm resolve_form(const std::string& path, bool random, std::uint64_t seed,
                           double max_condition) {
  if (random == !path.empty()) {
    throw Error("exactly one of --form and --random must be given");
  }
  if (random) {
    std::mt19937_64 rng(seed);
    return random_spd_form(rng, max_condition);
  }
  return load_form_file(path);
}

}  // namespace

int cmd_recover(const RecoverOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<SymmetricForm> form;
  std::optional<LengthUnit> unit;
  try {
    form = resolve_form(opts.form_path, opts.random, opts.seed, opts.max_condition);
    unit = LengthUnit(parse_vec3(opts.unit));
  } catch (const Error& e) {
    err << "recover: " << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    const FormOracle oracle = make_oracle(*form, opts.tol);
    const SymmetricForm recovered = recover_form(oracle, *unit, opts.tol);
    out << format_form(recovered.mat());
    return kExitOk;
  } catch (const Error& e) {
    err << "recover: " << e.what() << "\n";
    return is_contract_failure(e) ? kExitOracleContract : kExitBadInput;
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  namespace v = verification;
  static const std::array<std::string, 7> kAll = {"ubh",     "dluu",      "orbit", "pythagoras",
                                                  "forward", "roundtrip", "haar"};

  std::vector<std::string> suites;
  if (opts.suite == "all") {
    suites.assign(kAll.begin(), kAll.end());
  } else if (std::find(kAll.begin(), kAll.end(), opts.suite) != kAll.end()) {
    suites.push_back(opts.suite);
  } else {
    err << "verify: unknown suite '" << opts.suite << "'\n";
    return kExitBadInput;
  }
  if (opts.trials < 1) {
    err << "verify: --trials must be at least 1\n";
    return kExitBadInput;
  }

  std::optional<SymmetricForm> form;
  std::optional<LengthUnit> unit;
  try {
    form = resolve_form(opts.form_path, opts.random, opts.seed, opts.max_condition);
    unit = LengthUnit(parse_vec3(opts.unit));
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitBadInput;
  }

  int failures = 0;
  try {
    const FormOracle oracle = make_oracle(*form);
    for (const std::string& name : suites) {
      v::TrialReport rep;
      if (name == "ubh") {
        rep = v::check_ubh(oracle, opts.trials, opts.seed);
      } else if (name == "dluu") {
        rep = v::check_dluu(oracle, opts.trials, opts.seed);
      } else if (name == "orbit") {
        rep = v::check_orbit_ray(oracle, *unit, opts.trials, opts.seed);
      } else if (name == "pythagoras") {
        rep = v::check_pythagoras(oracle, *unit, opts.trials, opts.seed);
      } else if (name == "forward") {
        rep = v::check_forward(*form, opts.trials, opts.seed);
      } else if (name == "roundtrip") {
        rep = v::check_roundtrip(*form, *unit, opts.seed);
      } else {
        rep = v::check_haar_crosscheck(*form, opts.trials, opts.seed);
      }
      out << v::report_json_line(rep) << "\n";
      failures += rep.failures;
    }
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitBadInput;
  }
  return failures == 0 ? kExitOk : kExitSuiteFailure;
}

int cmd_transport(const TransportOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const SymmetricForm form = load_form_file(opts.form_path);
    const auto [v1, w1] = parse_flag_arg(opts.from);
    const auto [v2, w2] = parse_flag_arg(opts.to);
    const Flag from(v1, w1);
    const Flag to(v2, w2);
    const Rotation d = transport(form, from, to);

    const Mat3& m = form.mat();
    const double pullback = (d.m.transposed() * m * d.m - m).frobenius() / m.frobenius();
    out << format_form(d.m);
    out << "det " << fmt17(d.det()) << "\n";
    out << "pullback_residual " << fmt17(pullback) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "transport: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_pythagoras(const PythagorasOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<SymmetricForm> form;
  std::optional<LengthUnit> unit;
  Vec3 v, w;
  try {
    form = load_form_file(opts.form_path);
    unit = LengthUnit(parse_vec3(opts.unit));
    v = parse_vec3(opts.v);
    w = parse_vec3(opts.w);
  } catch (const Error& e) {
    err << "pythagoras: " << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    const FormOracle oracle = make_oracle(*form);
    if (!is_perp(oracle, w, v)) {
      err << "pythagoras: vectors are not perpendicular: w is perpendicular to v only when "
             "some rotation fixes v and maps w to its negative\n";
      return kExitBadInput;
    }
    const double a = norm(oracle, *unit, v);
    const double b = norm(oracle, *unit, w);
    const double c = norm(oracle, *unit, v + w);
    out << "a " << fmt17(a) << "\n";
    out << "b " << fmt17(b) << "\n";
    out << "c " << fmt17(c) << "\n";
    out << "residual " << fmt17(a * a + b * b - c * c) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "pythagoras: " << e.what() << "\n";
    return is_contract_failure(e) ? kExitOracleContract : kExitBadInput;
  }
}

}  // namespace rotform::cli
