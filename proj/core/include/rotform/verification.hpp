#pragma once

#include <cstdint>
#include <string>

#include "rotform/reconstruction.hpp"

namespace rotform::verification {

/// Result of one randomized suite. Every field except millis (wall time) is
/// a pure function of (suite, seed, trials, form).
struct TrialReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double max_residual = 0.0;
  std::uint64_t seed = 0;
  std::int64_t millis = 0;
};

/// One-line JSON object {"failures":..,"max_residual":..,"millis":..,
/// "seed":..,"suite":..,"trials":..} with doubles in round-trip-exact
/// %.17g formatting.
std::string report_json_line(const TrialReport& r);

/// Deterministic per-trial random stream derived from (seed, trial index),
/// identical whether trials run serially or in parallel.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Standard normal coordinates, redrawn while the norm is below 1e-3.
Vec3 random_vector(std::mt19937_64& rng);

/// Vector pair redrawn until the independence measure reaches 1e-6.
Flag random_flag(std::mt19937_64& rng);

/// min over s > 0 of |s A - B|_F / |B|_F, with s = <A,B>_F / <A,A>_F.
double scale_free_distance(const Mat3& a, const Mat3& b);

// Randomized suites. A trial fails when any of its residuals exceeds 1e-9
// (relative) or an operation reports a contract violation; max_residual
// tracks the largest finite residual seen.

/// Flip involutions: the three transports [v,w] -> [-v,w] / [v,-w] / [w,v]
/// square to the identity, act on the ray as stated, and the transport
/// within one flag class is the identity (uniqueness).
TrialReport check_ubh(const TransportOracle& o, int trials, std::uint64_t seed);

/// A rotation mapping a ray to itself fixes it pointwise.
TrialReport check_dluu(const TransportOracle& o, int trials, std::uint64_t seed);

/// The induced norm does not depend on the auxiliary flag openers (each
/// trial recomputes it with 10 random auxiliary pairs).
TrialReport check_orbit_ray(const TransportOracle& o, const LengthUnit& unit, int trials,
                            std::uint64_t seed);

/// For perpendicular pairs, a^2 + b^2 = c^2 with c the norm of the sum.
TrialReport check_pythagoras(const TransportOracle& o, const LengthUnit& unit, int trials,
                             std::uint64_t seed);

/// Forward direction: transports preserve the form, have det 1, map the
/// flag, and satisfy the cocycle and inverse identities.
TrialReport check_forward(const SymmetricForm& m, int trials, std::uint64_t seed);

/// Round trip: the recovered form equals M / (n0^T M n0) in Frobenius norm,
/// and membership of 100 Haar samples plus 100 random non-members agrees
/// under M and under the recovered form.
TrialReport check_roundtrip(const SymmetricForm& m, const LengthUnit& unit,
                            std::uint64_t seed = 0);

/// Integration route: the Haar-averaged pullback of the coordinate dot
/// product matches the reconstructed form within 3/sqrt(n) + 0.02 in
/// scale-free Frobenius distance. With n_samples = 1 the distance is only
/// reported, not asserted.
TrialReport check_haar_crosscheck(const SymmetricForm& m, int n_samples, std::uint64_t seed);

/// TransportOracle interface invariants: transported flags land on the
/// target flag and self-transport is the identity.
TrialReport check_oracle_invariants(const TransportOracle& o, int trials, std::uint64_t seed);

// Broken oracles. Each wraps an honest transport and corrupts its output in
// a way that violates exactly the axioms the suites exercise.

/// Negates the third row of every result: flips the determinant sign.
class DetFlipOracle final : public TransportOracle {
 public:
  explicit DetFlipOracle(const SymmetricForm& b) : base_(b) {}
  Rotation transport(const Flag& from, const Flag& to) const override;
  std::string_view tag() const override { return "mutant-det-flip"; }

 private:
  FormOracle base_;
};

/// Scales every result by 1.01: breaks axis length preservation.
class UniformScaleOracle final : public TransportOracle {
 public:
  explicit UniformScaleOracle(const SymmetricForm& b) : base_(b) {}
  Rotation transport(const Flag& from, const Flag& to) const override;
  std::string_view tag() const override { return "mutant-uniform-scale"; }

 private:
  FormOracle base_;
};

/// Returns the transpose of every result: swaps the transport direction.
class TransposeOracle final : public TransportOracle {
 public:
  explicit TransposeOracle(const SymmetricForm& b) : base_(b) {}
  Rotation transport(const Flag& from, const Flag& to) const override;
  std::string_view tag() const override { return "mutant-transpose"; }

 private:
  FormOracle base_;
};

/// Left-multiplies every result by a unit shear: det stays 1 but the form
/// is no longer preserved.
class ShearOracle final : public TransportOracle {
 public:
  explicit ShearOracle(const SymmetricForm& b) : base_(b) {}
  Rotation transport(const Flag& from, const Flag& to) const override;
  std::string_view tag() const override { return "mutant-shear"; }

 private:
  FormOracle base_;
};

}  // namespace rotform::verification
