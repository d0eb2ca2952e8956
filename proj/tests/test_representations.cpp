#include "yam/generators.hpp"
#include "yam/representations.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace yam;

namespace {

Op random_op(std::vector<Index> dims, Index out, Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Op op(std::move(dims), out);
  for (Index i = 0; i < op.size(); ++i) op.tensor()(i) = d(rng);
  return op;
}

AssYRepresentation random_action_data(const AlgebraPresentation& a, Index m, Rng& rng) {
  AssYRepresentation r = zero_representation(a, m);
  for (auto& [name, op] : r.actions) op = random_op(op.input_dims(), m, rng, 0, 1);
  return r;
}

// Valid assy algebras of dimension <= 2 from the passages.
AlgebraPresentation random_assy_source(Rng& rng, int which) {
  switch (which % 4) {
    case 0: return ass_to_assy(random_ass(1 + static_cast<Index>(rng() % 2), rng));
    case 1: return diass_to_assy(random_diass(2, rng, false));
    case 2: return diass_to_assy(random_diass(2, rng, true));
    default: return fixture_n2();
  }
}

using FailureKey = std::pair<std::string, std::vector<Index>>;

}  // namespace

TEST(Representation, AdjointOfK1) {
  auto k1 = fixture_k1();
  auto r = adjoint_representation(k1);
  EXPECT_EQ(r.module_dim, 1);
  for (const auto& [name, pattern] : action_slots())
    EXPECT_EQ(r.action(name).tensor(), k1.op(name.substr(0, name.find('_'))).tensor()) << name;
  auto s = semidirect(r);
  EXPECT_EQ(s.dim, 2);
  EXPECT_TRUE(check_axioms(s).passed());
  EXPECT_TRUE(check_representation(r).passed());
}

TEST(Representation, K1WithDoubledLeftActionFailsAY1) {
  auto r = adjoint_representation(fixture_k1());
  r.actions["dot_am"]({0, 0, 0}) = 2;
  auto report = check_representation(r);
  ASSERT_FALSE(report.passed());
  EXPECT_TRUE(report.failed_families().count("AY1"));
  // (e.e).u - e.(e.u) + {e,e,u} - {{e,e,u}} = 2u - 4u + u - u
  bool found = false;
  for (const auto& f : report.failures)
    if (f.identity == "AY1" && f.tuple == std::vector<Index>{0, 0, 1}) {
      Vector expected(2);
      expected << 0, -2;
      EXPECT_EQ(f.residual, expected);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Representation, ZeroActions) {
  for (const auto& a : {fixture_zero(1), fixture_zero(2), fixture_k1(), fixture_n2(), diass_to_assy(fixture_d1())}) {
    for (Index m : {0, 1, 2}) {
      auto r = zero_representation(a, m);
      EXPECT_TRUE(check_representation(r).passed());
      auto s = semidirect(r);
      for (const auto& [name, op] : s.ops) {
        const std::vector<Index> zeros(static_cast<std::size_t>(op.arity()), 0);
        EXPECT_EQ(extract_block(op, zeros, std::vector<Index>(zeros.size(), a.dim), 0, a.dim), a.op(name));
        Op rest = op;
        add_block(rest, -a.op(name), zeros, 0);
        EXPECT_TRUE(rest.is_zero()) << name;
      }
    }
  }
  for (Index n : {1, 2})
    for (Index m : {1, 3}) EXPECT_EQ(semidirect(zero_representation(fixture_zero(n), m)), fixture_zero(n + m));
}

TEST(Representation, ValidateRejectsBadShapes) {
  auto r = adjoint_representation(fixture_n2());
  r.actions["curly_ama"] = Op({2, 2, 1}, 2);
  EXPECT_THROW(r.validate(), std::invalid_argument);
  auto s = adjoint_representation(fixture_n2());
  s.actions.erase("dcurly_maa");
  EXPECT_THROW(s.validate(), std::invalid_argument);
  auto t = adjoint_representation(fixture_n2());
  t.actions["extra"] = Op({2}, 2);
  EXPECT_THROW(t.validate(), std::invalid_argument);
}

TEST(Polarized, FiftyEightIdentities) {
  const auto& ids = polarized_identities();
  EXPECT_EQ(ids.size(), 58u);
  std::set<std::string> names;
  for (const auto& id : ids) {
    names.insert(id.name);
    // exactly one op on each root path is an action, so each monomial
    // mentions at least one action name
    for (const auto& mono : id.expr) {
      std::function<bool(const Term&)> has_action = [&](const Term& t) {
        if (t.is_variable()) return false;
        if (t.op.find('_') != std::string::npos) return true;
        for (const auto& a : t.args)
          if (has_action(a)) return true;
        return false;
      };
      EXPECT_TRUE(has_action(mono.term)) << id.name;
    }
  }
  EXPECT_EQ(names.size(), 58u);
  EXPECT_TRUE(names.count("AY1[c]"));
  EXPECT_TRUE(names.count("AY7.2[e]"));
}

// The semidirect check and the polarized identities fail on the same
// (identity, tuple) pairs once the M entry is shifted back.
TEST(Polarized, AgreesWithSemidirectOnRandomActionData) {
  Rng rng(424242);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraPresentation a = random_assy_source(rng, trial);
    const Index n = a.dim, m = 1 + static_cast<Index>(trial % 2);
    AssYRepresentation r;
    switch (trial % 5) {
      case 0: r = zero_representation(a, m); break;
      case 1: r = adjoint_representation(a); break;
      default: r = random_action_data(a, m, rng); break;
    }
    if (trial % 5 == 1 && trial % 2 == 0) {
      auto& op = r.actions["curly_maa"];
      op.tensor()(static_cast<Index>(rng() % static_cast<std::uint64_t>(op.size()))) += 1;
    }
    auto direct = check_representation(r, CheckOptions{0});
    auto polar = check_polarized(r, CheckOptions{0});
    EXPECT_EQ(direct.passed(), polar.passed()) << "trial " << trial;
    EXPECT_EQ(direct.failed_families(), polar.failed_families()) << "trial " << trial;
    std::set<FailureKey> lhs, rhs;
    for (const auto& f : direct.failures) {
      Index in_m = 0, pos = 0;
      for (std::size_t i = 0; i < f.tuple.size(); ++i)
        if (f.tuple[i] >= n) ++in_m, pos = static_cast<Index>(i);
      ASSERT_EQ(in_m, 1) << "trial " << trial << " " << f.identity;
      EXPECT_TRUE(is_zero_matrix(Vector(f.residual.head(n))));
      std::vector<Index> t = f.tuple;
      t[static_cast<std::size_t>(pos)] -= n;
      std::string name;
      for (const auto& id : axioms(AlgebraClass::AssY))
        if (id.name == f.identity) name = id.name + "[" + id.variables[static_cast<std::size_t>(pos)] + "]";
      lhs.insert({name, t});
    }
    for (const auto& f : polar.failures) rhs.insert({f.identity, f.tuple});
    EXPECT_EQ(lhs, rhs) << "trial " << trial;
    (direct.passed() ? valid : invalid)++;
  }
  EXPECT_GT(valid, 10);
  EXPECT_GT(invalid, 10);
}

TEST(Derived, PullbackAlongIdentityIsAdjoint) {
  for (const auto& a : {fixture_k1(), fixture_n2(), diass_to_assy(fixture_d1())}) {
    auto adj = adjoint_representation(a);
    EXPECT_EQ(pullback_representation(Matrix::Identity(a.dim, a.dim), a, adj), adj);
  }
  Matrix two(1, 1);
  two << 2;
  EXPECT_THROW(pullback_representation(two, fixture_k1(), adjoint_representation(fixture_k1())),
               std::invalid_argument);
}

TEST(Derived, PullbackAlongHomomorphisms) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraPresentation a = random_assy_source(rng, trial);
    Matrix t = random_invertible(a.dim, rng);
    AlgebraPresentation moved = transport(a, t);
    ASSERT_TRUE(check_homomorphism(t, moved, a));
    auto r = pullback_representation(t, moved, adjoint_representation(a));
    EXPECT_TRUE(check_representation(r).passed());
  }
  // the sign flip of x is an automorphism of N2
  auto n2 = fixture_n2();
  Matrix flip(2, 2);
  flip << -1, 0, 0, 1;
  auto r = pullback_representation(flip, n2, adjoint_representation(n2));
  EXPECT_EQ(r.action("dot_am")({0, 0, 1}), Rational(-1));
}

TEST(Derived, DiassRepresentationOfD1) {
  auto d1 = fixture_d1();
  auto r = diass_representation(d1, adjoint_diass_representation(d1));
  EXPECT_EQ(r.base, diass_to_assy(d1));
  EXPECT_EQ(r.action("dot_am")({0, 0, 0}), Rational(2));
  EXPECT_EQ(r.action("dot_ma")({0, 0, 0}), Rational(2));
  for (const char* name : {"curly_aam", "curly_ama", "curly_maa", "dcurly_aam", "dcurly_ama", "dcurly_maa"})
    EXPECT_EQ(r.action(name)({0, 0, 0, 0}), Rational(-1)) << name;
  EXPECT_TRUE(check_representation(r).passed());
  EXPECT_EQ(r, adjoint_representation(diass_to_assy(d1)));
}

TEST(Derived, DiassRepresentationRejectsInvalidData) {
  auto d1 = fixture_d1();
  auto m = adjoint_diass_representation(d1);
  m.left_dm({0, 0, 0}) = 3;
  EXPECT_THROW(diass_representation(d1, m), RepresentationError);
}

TEST(Derived, DiassRepresentationsOfRandomDiass) {
  Rng rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    auto d = random_diass(1 + trial % 2, rng, trial % 2 == 1);
    auto adj = adjoint_diass_representation(d);
    EXPECT_TRUE(check_axioms(diass_semidirect(d, adj)).passed());
    auto r = diass_representation(d, adj);
    EXPECT_TRUE(check_representation(r).passed());
    DiassRepresentation zero{2, Op({d.dim, 2}, 2), Op({2, d.dim}, 2), Op({d.dim, 2}, 2), Op({2, d.dim}, 2)};
    EXPECT_TRUE(check_representation(diass_representation(d, zero)).passed());
  }
}

TEST(Derived, BimoduleRepresentation) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_ass(1 + trial % 3, rng);
    auto r = bimodule_representation(a, regular_bimodule(a));
    EXPECT_EQ(r, adjoint_representation(ass_to_assy(a)));
    auto z = bimodule_representation(a, zero_bimodule(a, 2));
    EXPECT_TRUE(check_representation(z).passed());
  }
  auto k1 = fixture_k1_ass();
  Bimodule bad{1, Op({1, 1}, 1), Op({1, 1}, 1)};
  bad.left({0, 0, 0}) = 2;
  EXPECT_THROW(bimodule_representation(k1, bad), RepresentationError);
}

// K1 acting on Q^2 by the identity on the left and by zero on the right.
TEST(Derived, BimoduleRepresentationOneSided) {
  auto k1 = fixture_k1_ass();
  Bimodule m{2, Op({1, 2}, 2), Op({2, 1}, 2)};
  m.left({0, 0, 0}) = 1;
  m.left({0, 1, 1}) = 1;
  auto r = bimodule_representation(k1, m);
  for (Index j = 0; j < 2; ++j)
    for (Index k = 0; k < 2; ++k)
      EXPECT_EQ(r.action("curly_aam")({0, 0, j, k}), r.action("dot_am")({0, j, k}));
  EXPECT_TRUE(r.action("curly_maa").is_zero());
  EXPECT_TRUE(r.action("dcurly_ama").is_zero());
}

TEST(Derived, ReductiveBimoduleOfEnvelopeSplitIsAdjoint) {
  Rng rng(3);
  std::vector<AlgebraPresentation> sources = {fixture_k1(), fixture_n2(), diass_to_assy(fixture_d1())};
  for (int trial = 0; trial < 4; ++trial) sources.push_back(random_assy_source(rng, trial));
  for (const auto& a : sources) {
    auto env = envelope(a);
    const auto& split = env.split;
    ReductiveBimodule rb{regular_bimodule(split.algebra), split.projector0, split.projector1};
    auto r = reductive_bimodule_representation(split, rb);
    EXPECT_EQ(r, adjoint_representation(a));
  }
}

TEST(Derived, ReductiveBimoduleRejectsBrokenContainment) {
  auto env = envelope(fixture_n2());
  const auto& split = env.split;
  // swapping the module projectors breaks A0.M0 in M0 unless A0 acts trivially
  ReductiveBimodule swapped{regular_bimodule(split.algebra), split.projector1, split.projector0};
  EXPECT_THROW(reductive_bimodule_representation(split, swapped), std::invalid_argument);
  const Index m = split.algebra.dim;
  Matrix half = Matrix::Identity(m, m) * Rational(1, 2);
  ReductiveBimodule not_projector{regular_bimodule(split.algebra), half, half};
  EXPECT_THROW(reductive_bimodule_representation(split, not_projector), std::invalid_argument);
}

TEST(Derived, AtsRepresentation) {
  AlgebraPresentation t{AlgebraClass::Ats, 1, {{"curly", Op::on_space(3, 1)}}};
  t.ops["curly"]({0, 0, 0, 0}) = 1;
  Op one({1, 1, 1}, 1);
  one({0, 0, 0, 0}) = 1;
  auto r = ats_representation(t, 1, one, one, one);
  EXPECT_EQ(r, adjoint_representation(ats_to_assy(t)));
  Op two = one;
  two({0, 0, 0, 0}) = 2;
  EXPECT_THROW(ats_representation(t, 1, two, one, one), RepresentationError);
}

TEST(Induced, AdjointOfK1AndZero) {
  auto k1 = fixture_k1();
  auto l = induced_liey_rep(adjoint_representation(k1));
  EXPECT_TRUE(l.rho.is_zero());
  EXPECT_TRUE(l.nu.is_zero());
  auto z = induced_liey_rep(zero_representation(fixture_n2(), 2));
  EXPECT_TRUE(z.rho.is_zero());
  EXPECT_TRUE(z.nu.is_zero());
  auto d1 = fixture_d1();
  auto dr = induced_liey_rep(diass_representation(d1, adjoint_diass_representation(d1)));
  EXPECT_TRUE(dr.rho.is_zero());
  EXPECT_TRUE(dr.nu.is_zero());
}

TEST(Induced, RejectsInvalidRepresentation) {
  auto r = adjoint_representation(fixture_k1());
  r.actions["dot_am"]({0, 0, 0}) = 2;
  EXPECT_THROW(induced_liey_rep(r), RepresentationError);
}

TEST(Induced, CompatibleWithSemidirect) {
  Rng rng(2718);
  int nonzero = 0;
  for (int trial = 0; trial < 16; ++trial) {
    AlgebraPresentation a = random_assy_source(rng, trial);
    AssYRepresentation r;
    switch (trial % 3) {
      case 0: r = adjoint_representation(a); break;
      case 1: r = zero_representation(a, 2); break;
      default: {
        auto d = random_diass(2, rng, trial % 2 == 0);
        r = diass_representation(d, adjoint_diass_representation(d));
        break;
      }
    }
    auto l = induced_liey_rep(r);
    EXPECT_EQ(liey_semidirect(l), assy_to_liey(semidirect(r))) << "trial " << trial;
    EXPECT_TRUE(check_liey_representation(l).passed()) << "trial " << trial;
    nonzero += !l.rho.is_zero() || !l.nu.is_zero();
  }
  // T2 is not commutative, so its adjoint has rho = ad != 0
  auto t2 = ass_to_assy(fixture_t2_ass());
  auto l = induced_liey_rep(adjoint_representation(t2));
  EXPECT_FALSE(l.rho.is_zero());
  EXPECT_EQ(liey_semidirect(l), assy_to_liey(semidirect(adjoint_representation(t2))));
  EXPECT_GT(nonzero, 0);
}

TEST(LieYRep, ZeroOnZero) {
  LieYRepresentation rep{zero_algebra(AlgebraClass::LieY, 2), 1, Op({2, 1}, 1), Op({2, 2, 1}, 1)};
  EXPECT_EQ(liey_semidirect(rep), zero_algebra(AlgebraClass::LieY, 3));
  EXPECT_TRUE(check_liey_representation(rep).passed());
}

TEST(LieYRep, BrokenRhoFailsLY3) {
  auto t2 = ass_to_assy(fixture_t2_ass());
  auto l = induced_liey_rep(adjoint_representation(t2));
  ASSERT_TRUE(check_liey_representation(l).passed());
  // double rho(e_0) only
  for (Index u = 0; u < l.module_dim; ++u)
    for (Index o = 0; o < l.module_dim; ++o) l.rho({0, u, o}) *= 2;
  auto report = check_liey_representation(l);
  ASSERT_FALSE(report.passed());
  EXPECT_TRUE(report.failed_families().count("LY3"));
}
