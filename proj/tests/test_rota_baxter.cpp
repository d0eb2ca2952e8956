#include "yam/cohomology.hpp"
#include "yam/functors.hpp"
#include "yam/generators.hpp"
#include "yam/rota_baxter.hpp"

#include <gtest/gtest.h>

#include <set>

namespace yam {
namespace {

RelativeRBO scalar_on_k1(const Rational& lambda) {
  Matrix r(1, 1);
  r(0, 0) = lambda;
  return RelativeRBO{adjoint_representation(fixture_k1()), r};
}

// An invertible derivation of A into its adjoint module, found in the
// derivation space, when one exists among a few small combinations.
std::optional<Matrix> invertible_derivation(const AssYRepresentation& rep, Rng& rng) {
  const std::vector<Matrix> ders = derivation_space(rep);
  if (ders.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Matrix f = Matrix::Zero(rep.module_dim, rep.base.dim);
    for (const Matrix& d : ders) f += random_small_rational(rng) * d;
    if (f.rows() == f.cols() && rank(f) == f.rows()) return f;
  }
  return std::nullopt;
}

AlgebraPresentation random_dendy_candidate(Index dim, Rng& rng) {
  AlgebraPresentation d = zero_algebra(AlgebraClass::DendY, dim);
  for (auto& [name, op] : d.ops)
    for (Index k = 0; k < op.size(); ++k)
      if (rng() % 4 == 0) op.tensor()(k) = random_small_rational(rng);
  return d;
}

std::set<std::string> failed_names(const AxiomReport& r) {
  std::set<std::string> out;
  for (const auto& f : r.failures) out.insert(f.identity);
  return out;
}

// The dendy algebra a < b = ab, a > b = 0 built from K1's product.
AlgebraPresentation k1_left_dendy() {
  AlgebraPresentation d = zero_algebra(AlgebraClass::Dend, 1);
  d.ops["prec"] = fixture_k1_ass().op("dot");
  return dend_to_dendy(d);
}

TEST(RotaBaxter, ZeroOperatorPasses) {
  for (const AssYRepresentation& rep : {adjoint_representation(fixture_k1()), adjoint_representation(fixture_n2()),
                                        zero_representation(fixture_k1(), 2)}) {
    const RelativeRBO r{rep, Matrix::Zero(rep.base.dim, rep.module_dim)};
    const AxiomReport report = check_rbo(r);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.identities, 3);
    EXPECT_TRUE(check_graph(r));
    EXPECT_EQ(induced_dendy(r), zero_algebra(AlgebraClass::DendY, rep.module_dim));
  }
}

TEST(RotaBaxter, ScalarOnK1OnlyZero) {
  // R(e) = l e: l^2 = 2 l^2 from RB1 and 2 l^3 = 6 l^3 from RB2, RB3.
  EXPECT_TRUE(check_rbo(scalar_on_k1(0)).passed());
  for (const Rational l : {Rational(1), Rational(-2), Rational(1, 3)}) {
    const AxiomReport report = check_rbo(scalar_on_k1(l));
    EXPECT_EQ(failed_names(report), (std::set<std::string>{"RB1", "RB2", "RB3"}));
    ASSERT_FALSE(report.failures.empty());
    EXPECT_EQ(report.failures.front().residual(0), -l * l);
    EXPECT_FALSE(check_graph(scalar_on_k1(l)));
    EXPECT_THROW(induced_dendy(scalar_on_k1(l)), RotaBaxterError);
  }
}

TEST(RotaBaxter, InvalidRepresentationThrows) {
  AssYRepresentation rep = adjoint_representation(fixture_k1());
  rep.actions["dot_am"] *= Rational(2);
  EXPECT_THROW(check_rbo(RelativeRBO{rep, Matrix::Zero(1, 1)}), RepresentationError);
  EXPECT_THROW(check_rbo(RelativeRBO{adjoint_representation(fixture_k1()), Matrix::Zero(2, 1)}),
               std::invalid_argument);
}

TEST(RotaBaxter, InverseOfDerivationOnN2) {
  // f(x) = x, f(y) = 2y differentiates x.x = y; the induced ternary ops vanish.
  const AssYRepresentation rep = adjoint_representation(fixture_n2());
  Matrix f = Matrix::Zero(2, 2);
  f(0, 0) = 1;
  f(1, 1) = 2;
  ASSERT_TRUE(is_zero_matrix(Vector(coboundary_matrix(rep) * Vector{{f(0, 0), f(0, 1), f(1, 0), f(1, 1)}})));
  const RelativeRBO r{rep, inverse(f)};
  EXPECT_TRUE(check_rbo(r).passed());
  EXPECT_TRUE(check_graph(r));
  const AlgebraPresentation d = induced_dendy(r);
  EXPECT_TRUE(check_axioms(d).passed());
  EXPECT_TRUE(check_homomorphism(r.map, total_of_dendy(d), rep.base));
}

TEST(RotaBaxter, RandomDerivationInverses) {
  Rng rng(17);
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const AlgebraPresentation a = trial % 3 == 0 ? fixture_n2() : ass_to_assy(random_ass(2, rng));
    const AssYRepresentation rep = adjoint_representation(a);
    const auto f = invertible_derivation(rep, rng);
    if (!f) continue;
    ++found;
    const RelativeRBO r{rep, inverse(*f)};
    ASSERT_TRUE(check_rbo(r).passed()) << trial;
    EXPECT_TRUE(check_graph(r));
    const AlgebraPresentation d = induced_dendy(r);
    EXPECT_TRUE(check_axioms(d).passed());
    EXPECT_TRUE(check_homomorphism(r.map, total_of_dendy(d), a));
  }
  EXPECT_GT(found, 0);
}

TEST(RotaBaxter, GraphAgreesWithIdentities) {
  Rng rng(23);
  int passing = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const AssYRepresentation rep = trial % 2 ? adjoint_representation(fixture_n2())
                                             : adjoint_representation(ass_to_assy(random_ass(2, rng)));
    Matrix r = Matrix::Zero(2, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        if (rng() % 3 == 0) r(i, j) = random_small_rational(rng);
    const RelativeRBO rbo{rep, r};
    const bool passes = check_rbo(rbo).passed();
    EXPECT_EQ(check_graph(rbo), passes) << trial;
    passing += passes;
  }
  EXPECT_GT(passing, 0);
  EXPECT_LT(passing, 60);
}

TEST(IdentityRbo, RoundTripsOnDendyAlgebras) {
  Rng rng(31);
  std::vector<AlgebraPresentation> samples = {zero_algebra(AlgebraClass::DendY, 2), k1_left_dendy(),
                                              assy_to_dendy(fixture_k1()), assy_to_dendy(fixture_n2())};
  for (int trial = 0; trial < 5; ++trial) {
    const AlgebraPresentation a = ass_to_assy(random_ass(2, rng));
    const AssYRepresentation rep = adjoint_representation(a);
    if (auto f = invertible_derivation(rep, rng)) samples.push_back(induced_dendy(RelativeRBO{rep, inverse(*f)}));
  }
  for (const AlgebraPresentation& d : samples) {
    ASSERT_TRUE(check_axioms(d).passed());
    const RelativeRBO r = identity_rbo_of(d);
    EXPECT_TRUE(check_representation(r.rep).passed());
    EXPECT_TRUE(check_rbo(r).passed());
    EXPECT_TRUE(check_graph(r));
    EXPECT_EQ(r.rep.base, total_of_dendy(d));
    EXPECT_EQ(induced_dendy(r), d);
  }
}

TEST(IdentityRbo, RejectsInvalidDendy) {
  AlgebraPresentation d = zero_algebra(AlgebraClass::DendY, 1);
  d.ops["curly1"]({0, 0, 0, 0}) = 1;
  ASSERT_FALSE(check_axioms(d).passed());
  EXPECT_THROW(identity_rbo_of(d), AxiomViolation);
}

TEST(IdentityRbo, PolarizedIdentitiesMatchDendyOneToOne) {
  EXPECT_EQ(polarized_identities().size(), axioms(AlgebraClass::DendY).size());
  std::set<std::string> mapped, dendy_names;
  for (const Identity& id : polarized_identities()) mapped.insert(dendy_identity_for(id.name));
  for (const Identity& id : axioms(AlgebraClass::DendY)) dendy_names.insert(id.name);
  EXPECT_EQ(mapped, dendy_names);
  EXPECT_EQ(dendy_identity_for("AY7.2[e]"), "DY7E.2");
  EXPECT_EQ(dendy_identity_for("AY1[c]"), "DY1C");
}

TEST(IdentityRbo, FailuresCorrespondOnRandomCandidates) {
  Rng rng(37);
  CheckOptions all;
  all.max_failures_per_identity = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const AlgebraPresentation d = random_dendy_candidate(trial % 2 ? 1 : 2, rng);
    std::set<std::string> from_rep;
    for (const std::string& name : failed_names(check_polarized(total_representation(d), all)))
      from_rep.insert(dendy_identity_for(name));
    EXPECT_EQ(from_rep, failed_names(check_axioms(d, all))) << trial;
  }
}

}  // namespace
}  // namespace yam
