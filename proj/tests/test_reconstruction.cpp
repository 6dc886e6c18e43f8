#include <doctest.h>

#include <vector>

#include "rotform/reconstruction.hpp"
#include "rotform/sym_eigen.hpp"
#include "rotform/verification.hpp"
#include "test_helpers.hpp"

using namespace rotform;
using namespace rotform::test;
namespace vf = rotform::verification;

TEST_CASE("flip_involution on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());

  SUBCASE("axis pair") {
    const Rotation r = flip_involution(euclid, e1, e2);
    CHECK(mat_dist(r.m, Mat3::from_diag(1, -1, -1)) <= 1e-15);
  }
  SUBCASE("the flag class decides, not the representative") {
    // [e1, e1+e2] = [e1, e2] as flags, so the involution is the same.
    const Rotation r = flip_involution(euclid, e1, e1 + e2);
    CHECK(mat_dist(r.m, Mat3::from_diag(1, -1, -1)) <= 1e-12);
  }
  SUBCASE("diag(1,4,9): fixes e2, negates e3, det 1") {
    const FormOracle o = make_oracle(diag149());
    const Rotation r = flip_involution(o, e2, e3);
    CHECK(mat_dist(r.m, Mat3::from_diag(-1, 1, -1)) <= 1e-12);
  }
}

TEST_CASE("is_perp on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());

  CHECK(is_perp(euclid, e2, e1));
  CHECK_FALSE(is_perp(euclid, e1 + e2, e1));

  // Zero cases are answered without a flag.
  CHECK(is_perp(euclid, Vec3{0, 0, 0}, e1));
  CHECK(is_perp(euclid, e1, Vec3{0, 0, 0}));
  CHECK(is_perp(euclid, Vec3{0, 0, 0}, Vec3{0, 0, 0}));

  // Nonzero dependent vectors: only the zero vector is perpendicular to
  // itself.
  CHECK_FALSE(is_perp(euclid, e1, e1));
  CHECK_FALSE(is_perp(euclid, e1 * 2.0, e1));
  CHECK_FALSE(is_perp(euclid, -e1, e1));
}

TEST_CASE("perpendicularity witnesses satisfy their invariants") {
  std::mt19937_64 rng(201);
  const SymmetricForm m = diag149();
  const FormOracle o = make_oracle(m);
  for (int t = 0; t < 50; ++t) {
    const Vec3 v = vf::random_vector(rng);
    const Vec3 u = perp_vector(o, v);
    const auto witness = perpendicularity_witness(o, u, v);
    REQUIRE(witness.has_value());
    CHECK(vec_dist(witness->r * v, v) <= kDefaultTol * v.norm());
    CHECK(vec_dist(witness->r * u, -u) <= kDefaultTol * u.norm());
    CHECK(mat_dist((witness->r * witness->r).m, Mat3::identity()) <= kDefaultTol * 10);
  }
}

TEST_CASE("perpendicularity is symmetric") {
  std::mt19937_64 rng(203);
  for (int t = 0; t < 60; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);

    // Generic pairs (almost surely not perpendicular).
    const Vec3 a = vf::random_vector(rng);
    const Vec3 b = vf::random_vector(rng);
    CHECK(is_perp(o, a, b) == is_perp(o, b, a));

    // Constructed perpendicular pairs.
    const Vec3 u = perp_vector(o, a);
    CHECK(is_perp(o, u, a));
    CHECK(is_perp(o, a, u));
  }
}

TEST_CASE("perp_vector on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());

  SUBCASE("axis input with auxiliary e2") {
    // r = diag(1,-1,-1), so u = e2 - r e2 = 2 e2.
    const Vec3 u = perp_vector(euclid, e1);
    CHECK(vec_dist(u, e2 * 2.0) <= 1e-15);
  }
  SUBCASE("Euclidean orthogonality against the coordinate dot product") {
    const Vec3 n{1, 1, 0};
    const Vec3 u = perp_vector(euclid, n);
    CHECK(u.norm() > 0.1);
    CHECK(std::abs(dot(u, n)) <= kDefaultTol * u.norm() * n.norm());
  }
  SUBCASE("hidden-form orthogonality for diag(1,4,9)") {
    const SymmetricForm m = diag149();
    const FormOracle o = make_oracle(m);
    const Vec3 u = perp_vector(o, e1);
    CHECK(u.norm() > 0.1);
    CHECK(std::abs(m(u, e1)) <= kDefaultTol * u.norm());
  }
  SUBCASE("zero input is refused") {
    CHECK_THROWS_AS(perp_vector(euclid, Vec3{0, 0, 0}), ZeroVector);
  }
}

TEST_CASE("vectors perpendicular to n form a plane") {
  std::mt19937_64 rng(207);
  const SymmetricForm m = diag149();
  const FormOracle o = make_oracle(m);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const Vec3 n = vf::random_vector(rng);

    // Perpendicular samples from different auxiliaries and their span.
    std::vector<Vec3> samples;
    for (int k = 0; k < 3; ++k) {
      if (independence_measure(n, axis(k)) < 1e-6) continue;
      samples.push_back(perp_vector_with_aux(o, n, axis(k)));
    }
    REQUIRE(samples.size() >= 2);
    for (int k = 0; k < 5; ++k) {
      samples.push_back(samples[0] * nd(rng) + samples[1] * nd(rng));
    }

    Mat3 scatter;
    for (const Vec3& u : samples) {
      if (u.norm() < 1e-3) continue;
      const Vec3 s = u / u.norm();
      scatter = scatter + outer(s, s);
      CHECK(is_perp(o, s, n));
    }
    const SymmetricEigen eig = eigen_symmetric(scatter);
    // Rank 2: one eigenvalue vanishes, two stay well away from zero.
    CHECK(eig.values[0] <= 1e-9 * eig.values[2]);
    CHECK(eig.values[1] >= 1e-3 * eig.values[2]);
  }
}

TEST_CASE("half_turn on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());
  CHECK(mat_dist(half_turn(euclid, e1).m, Mat3::from_diag(1, -1, -1)) <= 1e-12);
  CHECK(mat_dist(half_turn(euclid, e3).m, Mat3::from_diag(-1, -1, 1)) <= 1e-12);
  CHECK_THROWS_AS(half_turn(euclid, Vec3{0, 0, 0}), ZeroVector);
}

TEST_CASE("half_turn conjugation and scale invariance") {
  std::mt19937_64 rng(211);
  for (int t = 0; t < 40; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 n = vf::random_vector(rng);
    const Rotation rn = half_turn(o, n);

    // r_{dn} = d r_n d^-1 for group elements d.
    const Rotation d = o.transport(vf::random_flag(rng), vf::random_flag(rng));
    const Rotation lhs = half_turn(o, d * n);
    const Rotation rhs = d * rn * d.inverse();
    CHECK(mat_dist(lhs.m, rhs.m) <= 1e-8 * std::max(1.0, rhs.m.frobenius()));

    // r_{lambda n} = r_n for lambda != 0, including negative lambda.
    CHECK(mat_dist(half_turn(o, n * 2.5).m, rn.m) <= kDefaultTol * 10);
    CHECK(mat_dist(half_turn(o, n * -3.0).m, rn.m) <= kDefaultTol * 10);
  }
}

TEST_CASE("alpha on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());
  CHECK(alpha(euclid, e1, e1) == doctest::Approx(2.0));
  CHECK(alpha(euclid, e1, e2) == doctest::Approx(0.0));
  CHECK(alpha(euclid, e1, e1 + e2) == doctest::Approx(2.0));
}

TEST_CASE("alpha form invariants") {
  std::mt19937_64 rng(213);
  for (int t = 0; t < 40; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    const AlphaForm av(o, v);

    // Value 2 at the base.
    CHECK(av(v) == doctest::Approx(2.0).epsilon(1e-9));

    // Linearity over random combinations.
    const Vec3 w1 = vf::random_vector(rng);
    const Vec3 w2 = vf::random_vector(rng);
    std::normal_distribution<double> nd(0.0, 1.0);
    const double a = nd(rng);
    CHECK(av(w1 * a + w2) == doctest::Approx(a * av(w1) + av(w2)).epsilon(1e-8));

    // Vanishes on perpendicular vectors.
    CHECK(std::abs(av(perp_vector(o, v))) <= 1e-8);
  }
}

TEST_CASE("alpha transformation laws") {
  std::mt19937_64 rng(217);
  for (int t = 0; t < 40; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    const Vec3 w = vf::random_vector(rng);

    // alpha_{dv}(d w) = alpha_v(w) for group elements d.
    const Rotation d = o.transport(vf::random_flag(rng), vf::random_flag(rng));
    CHECK(alpha(o, d * v, d * w) == doctest::Approx(alpha(o, v, w)).epsilon(1e-8));

    // alpha_{lambda v} = lambda^-1 alpha_v.
    std::uniform_real_distribution<double> nz(0.2, 4.0);
    double lambda = nz(rng);
    if (t % 2 == 0) lambda = -lambda;
    CHECK(alpha(o, v * lambda, w) == doctest::Approx(alpha(o, v, w) / lambda).epsilon(1e-8));
  }
}

TEST_CASE("alpha swap symmetry") {
  std::mt19937_64 rng(219);
  const LengthUnit unit(e1);
  for (int t = 0; t < 40; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    const Vec3 w = vf::random_vector(rng);

    // Unit-norm representatives lie on one orbit, hence are swapped by a
    // rotation: alpha_v(w) = alpha_w(v) there.
    const Vec3 vhat = v / norm(o, unit, v);
    const Vec3 what = w / norm(o, unit, w);
    CHECK(alpha(o, vhat, what) == doctest::Approx(alpha(o, what, vhat)).epsilon(1e-8));

    // Equivalent general identity: |v|^2 alpha_v(w) = |w|^2 alpha_w(v).
    const double nv = norm(o, unit, v);
    const double nw = norm(o, unit, w);
    CHECK(nv * nv * alpha(o, v, w) ==
          doctest::Approx(nw * nw * alpha(o, w, v)).epsilon(1e-8));
  }
}

TEST_CASE("norm on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());
  const LengthUnit unit(e1);

  CHECK(norm(euclid, unit, e1) == doctest::Approx(1.0));
  CHECK(norm(euclid, unit, e2 * 3.0) == doctest::Approx(3.0));
  CHECK(norm(euclid, unit, Vec3{0, 0, 0}) == 0.0);

  // Hidden-form closed form: |v| = sqrt(v^T M v / n0^T M n0).
  const FormOracle o = make_oracle(diag149());
  CHECK(norm(o, unit, e2) == doctest::Approx(2.0));
  CHECK(norm(o, LengthUnit(e2), e2) == doctest::Approx(1.0));
}

TEST_CASE("norm matches the hidden-form closed form on random input") {
  std::mt19937_64 rng(223);
  for (int t = 0; t < 60; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 n0 = vf::random_vector(rng);
    const LengthUnit unit(n0);
    const Vec3 v = vf::random_vector(rng);
    CHECK(norm(o, unit, v) == doctest::Approx(norm_oracle(m, n0, v)).epsilon(1e-9));
  }
}

TEST_CASE("norm homogeneity and invariance") {
  std::mt19937_64 rng(227);
  const LengthUnit unit(e1);
  for (int t = 0; t < 40; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    const double nv = norm(o, unit, v);

    std::uniform_real_distribution<double> pos(0.0, 4.0);
    const double lambda = pos(rng);
    CHECK(norm(o, unit, v * lambda) == doctest::Approx(lambda * nv).epsilon(1e-8));

    const Rotation d = o.transport(vf::random_flag(rng), vf::random_flag(rng));
    CHECK(norm(o, unit, d * v) == doctest::Approx(nv).epsilon(1e-8));
  }
}

TEST_CASE("scalar_product on pinned cases") {
  const FormOracle euclid = make_oracle(euclidean());
  const LengthUnit unit(e1);

  CHECK(scalar_product(euclid, unit, e1, e1) == doctest::Approx(1.0));
  CHECK(scalar_product(euclid, unit, Vec3{0, 0, 0}, e2) == 0.0);
  // Recovers the coordinate dot product: b(e1+e2, e2) = 1.
  CHECK(scalar_product(euclid, unit, e1 + e2, e2) == doctest::Approx(1.0));
}

TEST_CASE("scalar_product is bilinear, symmetric, and positive") {
  std::mt19937_64 rng(229);
  const LengthUnit unit(e1);
  for (int t = 0; t < 30; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    const Vec3 w1 = vf::random_vector(rng);
    const Vec3 w2 = vf::random_vector(rng);
    std::normal_distribution<double> nd(0.0, 1.0);
    const double a = nd(rng);

    const double lhs = scalar_product(o, unit, v, w1 * a + w2);
    const double rhs = a * scalar_product(o, unit, v, w1) + scalar_product(o, unit, v, w2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));

    CHECK(scalar_product(o, unit, v, w1) ==
          doctest::Approx(scalar_product(o, unit, w1, v)).epsilon(1e-8));
    CHECK(scalar_product(o, unit, v, v) > 0.0);
  }
}

TEST_CASE("recover_form on pinned cases") {
  SUBCASE("Euclidean oracle, unit e1: exactly the identity") {
    const SymmetricForm b = recover_form(make_oracle(euclidean()), LengthUnit(e1));
    CHECK(mat_dist(b.mat(), Mat3::identity()) == 0.0);
  }
  SUBCASE("diag(1,4,9), unit e1") {
    const SymmetricForm b = recover_form(make_oracle(diag149()), LengthUnit(e1));
    CHECK(mat_dist(b.mat(), Mat3::from_diag(1, 4, 9)) <= 1e-8);
  }
  SUBCASE("diag(1,4,9), unit e2: rescaled by n0^T M n0 = 4") {
    const SymmetricForm b = recover_form(make_oracle(diag149()), LengthUnit(e2));
    CHECK(mat_dist(b.mat(), Mat3::from_diag(0.25, 1.0, 2.25)) <= 1e-8);
  }
}

TEST_CASE("recover_form matches the closed form on random input") {
  std::mt19937_64 rng(233);
  for (int t = 0; t < 30; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const Vec3 n0 = vf::random_vector(rng);
    const SymmetricForm b = recover_form(make_oracle(m), LengthUnit(n0));
    const Mat3 expected = recovered_oracle(m, n0);
    CHECK(mat_dist(b.mat(), expected) <= 1e-9 * expected.frobenius());
  }
}

TEST_CASE("pythagoras holds for constructed perpendicular pairs") {
  std::mt19937_64 rng(239);
  const LengthUnit unit(e1);
  for (int t = 0; t < 40; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    std::normal_distribution<double> nd(0.0, 1.0);
    const Vec3 w = perp_vector(o, v) * std::exp(nd(rng));

    const double a = norm(o, unit, v);
    const double b = norm(o, unit, w);
    const double c = norm(o, unit, v + w);
    CHECK(std::abs(a * a + b * b - c * c) <= kDefaultTol * c * c);
  }
}

TEST_CASE("axis-stabilizing transports fix the axis pointwise") {
  std::mt19937_64 rng(241);
  for (int t = 0; t < 60; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 u = vf::random_vector(rng);
    Vec3 w1, w2;
    do {
      w1 = vf::random_vector(rng);
    } while (independence_measure(u, w1) < 1e-6);
    do {
      w2 = vf::random_vector(rng);
    } while (independence_measure(u, w2) < 1e-6);
    const Rotation d = o.transport(Flag(u, w1), Flag(u, w2));
    CHECK(vec_dist(d * u, u) <= kDefaultTol * u.norm());
  }
}

TEST_CASE("norm does not depend on the auxiliary flags") {
  std::mt19937_64 rng(251);
  const LengthUnit unit(e1);
  for (int t = 0; t < 20; ++t) {
    const SymmetricForm m = random_spd_form(rng);
    const FormOracle o = make_oracle(m);
    const Vec3 v = vf::random_vector(rng);
    const double reference = norm(o, unit, v);
    for (int k = 0; k < 10; ++k) {
      Vec3 aux_unit, aux_v;
      do {
        aux_unit = vf::random_vector(rng);
      } while (independence_measure(unit.vector(), aux_unit) < 1e-6);
      do {
        aux_v = vf::random_vector(rng);
      } while (independence_measure(v, aux_v) < 1e-6);
      const double value = norm_with_aux(o, unit, v, aux_unit, aux_v);
      CHECK(std::abs(value - reference) <= kDefaultTol * std::abs(reference));
    }
  }
}

TEST_CASE("broken oracles are rejected by the contract checks") {
  const SymmetricForm m = diag149();
  const vf::UniformScaleOracle scaled(m);
  CHECK_THROWS_AS(half_turn(scaled, e1 + e2), OracleContractViolation);

  const vf::ShearOracle sheared(m);
  CHECK_THROWS_AS(flip_involution(sheared, e2, e3), OracleContractViolation);
  CHECK_THROWS_AS(half_turn(sheared, e1 + e2), OracleContractViolation);
}

namespace {

// Answers from one of two groups depending on the source ray: each single
// answer is a legitimate transport, but they belong to no common form.
class TwoFacedOracle final : public TransportOracle {
 public:
  TwoFacedOracle()
      : first_(SymmetricForm(Mat3::identity())),
        second_(SymmetricForm(Mat3::from_rows({2, 0.5, 0}, {0.5, 1, 0}, {0, 0, 1}))) {}

  Rotation transport(const Flag& from, const Flag& to) const override {
    const Vec3 ray = from.v() / from.v().norm();
    return std::abs(ray.x) > 0.5 ? first_.transport(from, to) : second_.transport(from, to);
  }
  std::string_view tag() const override { return "two-faced"; }

 private:
  FormOracle first_;
  FormOracle second_;
};

}  // namespace

TEST_CASE("recover_form rejects an oracle that mixes two forms") {
  const TwoFacedOracle oracle;
  CHECK_THROWS_AS(recover_form(oracle, LengthUnit(e1)), AsymmetricResult);
}
