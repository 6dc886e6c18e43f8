// Acceptance suite: exercises every guaranteed behavior end to end and
// prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "rotform/reconstruction.hpp"
#include "rotform/rotation_group.hpp"
#include "rotform/verification.hpp"

using namespace rotform;
namespace vf = rotform::verification;

namespace {

int g_failed = 0;

class Timer {
 public:
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failed;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

SymmetricForm seeded_form(std::uint64_t seed) {
  std::mt19937_64 rng = vf::trial_rng(seed, 0);
  return random_spd_form(rng, 1e3);
}

const Vec3 kE1{1, 0, 0};
const Vec3 kE2{0, 1, 0};

// 1. Round-trip: 50 seeded SPD forms with condition <= 1e3, unit e1; the
//    recovered form matches M / (n0^T M n0) to 1e-9 relative Frobenius.
void criterion_roundtrip() {
  Timer timer;
  double worst = 0.0;
  int bad = 0;
  for (int k = 0; k < 50; ++k) {
    const SymmetricForm m = seeded_form(1000 + k);
    const SymmetricForm b = recover_form(make_oracle(m), LengthUnit(kE1));
    const Mat3 target = m.mat() / m(kE1, kE1);
    const double res = (b.mat() - target).frobenius() / target.frobenius();
    worst = std::max(worst, res);
    if (!(res <= 1e-9)) ++bad;
  }
  criterion(1, "round-trip", bad == 0,
            "50 forms, max relative residual " + fmt(worst) + " (bound 1e-9), " +
                std::to_string(timer.ms()) + " ms");
}

// 2. Axiom suites: ubh, dluu, orbit pass 1000 seeded trials with 0 failures
//    and max residual <= 1e-9 on the Euclidean form and 10 random forms.
void criterion_axiom_suites() {
  Timer timer;
  const LengthUnit unit(kE1);
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const SymmetricForm m = k == 0 ? SymmetricForm(Mat3::identity()) : seeded_form(2000 + k);
    const FormOracle o = make_oracle(m);
    for (const vf::TrialReport& rep :
         {vf::check_ubh(o, 1000, 10 + k), vf::check_dluu(o, 1000, 20 + k),
          vf::check_orbit_ray(o, unit, 1000, 30 + k)}) {
      failures += rep.failures;
      worst = std::max(worst, rep.max_residual);
    }
  }
  criterion(2, "axiom suites", failures == 0 && worst <= 1e-9,
            "11 forms x 3 suites x 1000 trials, " + std::to_string(failures) +
                " failures, max residual " + fmt(worst) + " (bound 1e-9), " +
                std::to_string(timer.ms()) + " ms");
}

// 3. Pythagoras: 1000 seeded trials on random forms at 1e-9, and the
//    deterministic Euclidean 3-4-5 triangle printed by the CLI with
//    residual <= 1e-12.
void criterion_pythagoras() {
  Timer timer;
  const LengthUnit unit(kE1);
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const SymmetricForm m = seeded_form(3000 + k);
    const FormOracle o = make_oracle(m);
    const vf::TrialReport rep = vf::check_pythagoras(o, unit, 100, 40 + k);
    failures += rep.failures;
    worst = std::max(worst, rep.max_residual);
  }

  const auto dir = std::filesystem::temp_directory_path();
  const auto form_path = dir / "rotform_acceptance_id.txt";
  std::ofstream(form_path) << "# Euclidean form\n1 0 0\n0 1 0\n0 0 1\n";

  cli::PythagorasOptions opts;
  opts.form_path = form_path.string();
  opts.unit = "1,0,0";
  opts.v = "3,0,0";
  opts.w = "0,4,0";
  std::ostringstream out, err;
  const int code = cli::cmd_pythagoras(opts, out, err);

  double a = 0, b = 0, c = 0, res = 1;
  std::string label;
  std::istringstream parse(out.str());
  parse >> label >> a >> label >> b >> label >> c >> label >> res;

  const bool triangle_ok = code == 0 && std::abs(a - 3.0) <= 1e-12 &&
                           std::abs(b - 4.0) <= 1e-12 && std::abs(c - 5.0) <= 1e-12 &&
                           std::abs(res) <= 1e-12;
  criterion(3, "pythagoras", failures == 0 && worst <= 1e-9 && triangle_ok,
            "1000 random trials, max residual " + fmt(worst) + "; 3-4-5 prints a=" + fmt(a) +
                " b=" + fmt(b) + " c=" + fmt(c) + " residual " + fmt(res) + " (bound 1e-12), " +
                std::to_string(timer.ms()) + " ms");
}

// 4. Forward direction: 1000 trials per form; transports preserve the form,
//    have det 1, map the flag, and satisfy cocycle/inverse identities.
void criterion_forward() {
  Timer timer;
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const SymmetricForm m = k == 0 ? SymmetricForm(Mat3::identity()) : seeded_form(4000 + k);
    const vf::TrialReport rep = vf::check_forward(m, 1000, 50 + k);
    failures += rep.failures;
    worst = std::max(worst, rep.max_residual);
  }
  criterion(4, "forward direction", failures == 0 && worst <= 1e-9,
            "11 forms x 1000 trials, " + std::to_string(failures) + " failures, max residual " +
                fmt(worst) + " (bound 1e-9), " + std::to_string(timer.ms()) + " ms");
}

// 5. Membership agreement: for 10 random forms, 100 Haar members and 100
//    random non-members classify identically under M and the recovered B.
void criterion_membership_agreement() {
  Timer timer;
  int agreements = 0;
  const int expected = 10 * 200;
  for (int k = 0; k < 10; ++k) {
    const SymmetricForm m = seeded_form(5000 + k);
    const SymmetricForm b = recover_form(make_oracle(m), LengthUnit(kE1));
    std::mt19937_64 rng = vf::trial_rng(6000 + k, 0);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const Rotation d = haar_sample(m, rng);
      if (so_membership(m, d) == so_membership(b, d)) ++agreements;
    }
    for (int i = 0; i < 100; ++i) {
      Rotation d;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d.m(r, c) = normal(rng);
      if (so_membership(m, d) == so_membership(b, d)) ++agreements;
    }
  }
  criterion(5, "membership agreement", agreements == expected,
            std::to_string(agreements) + "/" + std::to_string(expected) + " agreements, " +
                std::to_string(timer.ms()) + " ms");
}

// 6. Haar cross-check: averaged_form with 1e5 samples agrees with the
//    reconstruction to scale-free Frobenius distance <= 0.05 on the
//    Euclidean form and diag(1,4,9).
void criterion_haar_crosscheck() {
  Timer timer;
  const vf::TrialReport euclid =
      vf::check_haar_crosscheck(SymmetricForm(Mat3::identity()), 100000, 61);
  const vf::TrialReport diag =
      vf::check_haar_crosscheck(SymmetricForm(Mat3::from_diag(1, 4, 9)), 100000, 62);
  const bool ok = euclid.failures == 0 && diag.failures == 0 && euclid.max_residual <= 0.05 &&
                  diag.max_residual <= 0.05;
  criterion(6, "haar cross-check", ok,
            "distances " + fmt(euclid.max_residual) + " and " + fmt(diag.max_residual) +
                " (bound 0.05), " + std::to_string(timer.ms()) + " ms");
}

// 7. Mutation sensitivity: each shipped broken oracle fails at least one
//    suite.
void criterion_mutation_sensitivity() {
  Timer timer;
  const SymmetricForm m(Mat3::from_diag(1, 4, 9));
  const LengthUnit unit(kE1);

  const auto battery = [&](const TransportOracle& o) {
    int failures = 0;
    failures += vf::check_ubh(o, 100, 71).failures;
    failures += vf::check_dluu(o, 100, 72).failures;
    failures += vf::check_orbit_ray(o, unit, 100, 73).failures;
    failures += vf::check_pythagoras(o, unit, 100, 74).failures;
    return failures;
  };

  const vf::DetFlipOracle det_flip(m);
  const vf::UniformScaleOracle scaled(m);
  const vf::TransposeOracle transposed(m);
  const vf::ShearOracle sheared(m);

  const int f1 = battery(det_flip);
  const int f2 = battery(scaled);
  const int f3 = battery(transposed);
  const int f4 = battery(sheared);
  const bool ok = f1 > 0 && f2 > 0 && f3 > 0 && f4 > 0;
  criterion(7, "mutation sensitivity", ok,
            "failures per mutant: det-flip " + std::to_string(f1) + ", scale " +
                std::to_string(f2) + ", transpose " + std::to_string(f3) + ", shear " +
                std::to_string(f4) + " (each must be > 0), " + std::to_string(timer.ms()) +
                " ms");
}

}  // namespace

int main() {
  criterion_roundtrip();
  criterion_axiom_suites();
  criterion_pythagoras();
  criterion_forward();
  criterion_membership_agreement();
  criterion_haar_crosscheck();
  criterion_mutation_sensitivity();

  if (g_failed == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria failed\n", g_failed);
  }
  return g_failed;
}
