#include "yam/cohomology.hpp"
#include "yam/generators.hpp"

#include <gtest/gtest.h>

#include "cohomology_oracle.hpp"

using namespace yam;
using namespace yam::oracle;

namespace {

std::vector<AssYRepresentation> small_representations() {
  std::vector<AssYRepresentation> out = {
      zero_representation(fixture_zero(1), 1),
      zero_representation(fixture_zero(2), 2),
      zero_representation(fixture_zero(2), 1),
      adjoint_representation(fixture_k1()),
      adjoint_representation(fixture_n2()),
      zero_representation(fixture_n2(), 1),
      adjoint_representation(diass_to_assy(fixture_d1())),
      adjoint_representation(ass_to_assy(fixture_t2_ass())),
  };
  Bimodule one_sided{2, Op({1, 2}, 2), Op({2, 1}, 2)};
  one_sided.left({0, 0, 0}) = 1;
  one_sided.left({0, 1, 1}) = 1;
  out.push_back(bimodule_representation(fixture_k1_ass(), one_sided));
  Rng rng(31337);
  for (int i = 0; i < 4; ++i) {
    auto d = random_diass(1 + i % 2, rng, i % 2 == 0);
    out.push_back(diass_representation(d, adjoint_diass_representation(d)));
  }
  return out;
}

CochainTriple k1_triple(int mu, int f, int g) {
  CochainTriple t = zero_cochain(1, 1);
  t.mu({0, 0, 0}) = mu;
  t.F({0, 0, 0, 0}) = f;
  t.G({0, 0, 0, 0}) = g;
  return t;
}

}  // namespace

TEST(Cocycle, IdentityShapes) {
  const auto& ids = cocycle_identities();
  ASSERT_EQ(ids.size(), 13u);
  for (const auto& id : ids) EXPECT_FALSE(id.expr.empty()) << id.name;
  for (Index n : {1, 2})
    for (Index m : {1, 2}) {
      auto r = zero_representation(fixture_zero(n), m);
      Matrix c = cocycle_matrix(r);
      EXPECT_EQ(c.rows(), m * (n * n * n + 5 * n * n * n * n + 7 * n * n * n * n * n));
      EXPECT_EQ(c.cols(), m * n * n + 2 * m * n * n * n);
    }
}

TEST(Cocycle, ZeroRepresentationOnZeroAlgebra) {
  for (Index n : {1, 2})
    for (Index m : {1, 2}) {
      auto r = zero_representation(fixture_zero(n), m);
      auto h = cohomology(r);
      EXPECT_EQ(h.dim_Z, m * n * n + m * n * n * n);
      EXPECT_EQ(h.dim_B, 0);
      EXPECT_EQ(h.dim_H, h.dim_Z);
      for (const auto& z : h.z_basis) EXPECT_EQ(z.F, z.G);
      EXPECT_EQ(derivation_space(r).size(), static_cast<std::size_t>(m * n));
    }
  auto h11 = cohomology(zero_representation(fixture_zero(1), 1));
  EXPECT_EQ(h11.dim_H, 2);
}

TEST(Cocycle, K1Adjoint) {
  auto r = adjoint_representation(fixture_k1());
  auto h = cohomology(r);
  EXPECT_EQ(h.dim_Z, 2);
  EXPECT_EQ(h.dim_B, 1);
  EXPECT_EQ(h.dim_H, 1);
  for (const auto& z : h.z_basis) EXPECT_EQ(z.F, z.G);
  Matrix lambda(1, 1);
  lambda << Rational(3, 2);
  CochainTriple expected_cob = zero_cochain(1, 1);
  expected_cob.mu({0, 0, 0}) = Rational(3, 2);
  expected_cob.F({0, 0, 0, 0}) = 3;
  expected_cob.G({0, 0, 0, 0}) = 3;
  EXPECT_EQ(coboundary_of(lambda, r), expected_cob);
  EXPECT_EQ(coboundary_of(Matrix::Zero(1, 1), r), zero_cochain(1, 1));
  ASSERT_EQ(h.b_basis.size(), 1u);
  Vector b = pack(h.b_basis[0]);
  Vector expected(3);
  expected << 1, 2, 2;
  EXPECT_TRUE(in_span(Matrix(b), expected));
  EXPECT_TRUE(derivation_space(r).empty());
}

TEST(Cocycle, TwistedSemidirectOnK1) {
  auto r = adjoint_representation(fixture_k1());
  EXPECT_EQ(twisted_semidirect(r, zero_cochain(1, 1)), semidirect(r));
  EXPECT_TRUE(check_axioms(twisted_semidirect(r, k1_triple(0, 1, 1))).passed());
  EXPECT_TRUE(is_cocycle(k1_triple(0, 1, 1), r));
  auto bad = check_axioms(twisted_semidirect(r, k1_triple(0, 1, 0)));
  EXPECT_TRUE(bad.failed_families().count("AY1"));
  EXPECT_FALSE(is_cocycle(k1_triple(0, 1, 0), r));
}

TEST(Cocycle, ZeroCoboundaryOnZeroRepresentation) {
  auto r = zero_representation(fixture_zero(2), 2);
  Matrix f(2, 2);
  f << 1, -2, 3, 5;
  EXPECT_EQ(coboundary_of(f, r), zero_cochain(2, 2));
}

TEST(Cocycle, CoboundariesAreCocycles) {
  Rng rng(17);
  for (const auto& r : small_representations()) {
    const Index n = r.base.dim, m = r.module_dim;
    Matrix c = cocycle_matrix(r);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix f(m, n);
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) f(i, j) = random_small_rational(rng);
      EXPECT_TRUE(is_zero_matrix(Vector(c * pack(coboundary_of(f, r)))));
    }
    auto h = cohomology(r);
    EXPECT_GE(h.dim_H, 0);
    EXPECT_LE(h.dim_B, h.dim_Z);
    Matrix z(unknown_count(n, m), 0);
    for (const auto& t : h.z_basis) z = hstack(z, Matrix(pack(t)));
    for (const auto& t : h.b_basis) EXPECT_TRUE(in_span(z, pack(t)));
    // representatives are independent modulo B
    Matrix bh(unknown_count(n, m), 0);
    for (const auto& t : h.b_basis) bh = hstack(bh, Matrix(pack(t)));
    for (const auto& t : h.h_representatives) bh = hstack(bh, Matrix(pack(t)));
    EXPECT_EQ(rank(bh), h.dim_Z);
  }
}

TEST(Cocycle, MatchesBruteForceOracle) {
  for (const auto& r : small_representations()) {
    const Index n = r.base.dim, m = r.module_dim;
    Matrix oracle = oracle_cocycle_matrix(r);
    const Index u = unknown_count(n, m);
    auto h = cohomology(r);
    EXPECT_EQ(h.dim_Z, u - rank(oracle)) << n << " " << m;
    for (const auto& z : h.z_basis) EXPECT_TRUE(is_zero_matrix(Vector(oracle * pack(z))));
    EXPECT_EQ(h.dim_B, rank(oracle_coboundaries(r)));
    EXPECT_EQ(oracle_coboundaries(r), coboundary_matrix(r));
  }
}

TEST(Cocycle, TwistedSemidirectIffCocycle) {
  Rng rng(99);
  int passes = 0, fails = 0;
  for (const auto& r : small_representations()) {
    const Index n = r.base.dim, m = r.module_dim;
    auto z = cocycle_space(r);
    for (int trial = 0; trial < 4; ++trial) {
      Vector x = Vector::Zero(unknown_count(n, m));
      if (trial % 2 == 0) {
        for (const auto& t : z) x += random_small_rational(rng) * pack(t);
      } else {
        for (Index i = 0; i < x.size(); ++i) x(i) = random_small_rational(rng, 1);
      }
      CochainTriple t = unpack_cochain(x, n, m);
      const bool ok = check_axioms(twisted_semidirect(r, t)).passed();
      EXPECT_EQ(ok, is_cocycle(t, r));
      (ok ? passes : fails)++;
    }
  }
  EXPECT_GT(passes, 5);
  EXPECT_GT(fails, 5);
}

TEST(Cocycle, RejectsInvalidRepresentation) {
  auto r = adjoint_representation(fixture_k1());
  r.actions["dot_am"]({0, 0, 0}) = 2;
  EXPECT_THROW(cohomology(r), RepresentationError);
}
