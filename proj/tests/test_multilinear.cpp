#include "yam/identities.hpp"
#include "yam/multilinear.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace yam;

namespace {

Vector vec(std::initializer_list<int> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

Op random_op(std::vector<Index> dims, Index out, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Op op(std::move(dims), out);
  for (Index i = 0; i < op.size(); ++i) op.tensor()(i) = Rational(d(rng), 1 + (d(rng) + 3) % 3);
  return op;
}

Vector random_vec(Index n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

}  // namespace

TEST(Evaluate, Examples) {
  Op zero({2, 3}, 2);
  EXPECT_TRUE(is_zero_matrix(evaluate(zero, {vec({1, 2}), vec({3, 4, 5})})));
  Op one = Op::on_space(2, 1);
  one({0, 0, 0}) = 1;
  EXPECT_EQ(evaluate(one, {vec({1}), vec({1})}), vec({1}));
  Op curly = Op::on_space(3, 1);
  curly({0, 0, 0, 0}) = 1;
  EXPECT_EQ(evaluate(curly, {vec({2}), vec({3}), vec({1})}), vec({6}));
}

TEST(Evaluate, RejectsBadDimensions) {
  Op op({2, 2}, 1);
  EXPECT_THROW(evaluate(op, {vec({1, 2}), vec({1})}), std::invalid_argument);
  EXPECT_THROW(evaluate(op, {vec({1, 2})}), std::invalid_argument);
}

TEST(Evaluate, BasisTuplesReproduceTensor) {
  std::mt19937_64 rng(7);
  Op op = random_op({2, 3, 2}, 3, rng);
  for_each_tuple(op.input_dims(), [&](std::span<const Index> t) {
    Vector v = evaluate(op, {unit_vector<Rational>(2, t[0]), unit_vector<Rational>(3, t[1]),
                             unit_vector<Rational>(2, t[2])});
    for (Index j = 0; j < 3; ++j) EXPECT_EQ(v(j), op.at(t, j));
  });
}

TEST(Evaluate, IsMultilinearInEverySlot) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Op op = random_op({2, 3, 2}, 2, rng);
    std::vector<Vector> args{random_vec(2, rng), random_vec(3, rng), random_vec(2, rng)};
    Vector base = evaluate(op, std::span<const Vector>(args));
    for (std::size_t s = 0; s < 3; ++s) {
      Rational lambda(static_cast<int>(trial) - 20, 7);
      auto scaled = args;
      scaled[s] *= lambda;
      EXPECT_EQ(evaluate(op, std::span<const Vector>(scaled)), Vector(base * lambda));
      auto other = args;
      Vector w = random_vec(args[s].size(), rng);
      other[s] = w;
      auto sum = args;
      sum[s] += w;
      EXPECT_EQ(evaluate(op, std::span<const Vector>(sum)),
                Vector(base + evaluate(op, std::span<const Vector>(other))));
    }
  }
}

TEST(Transforms, PullbackPushforwardPermuteSubstitute) {
  std::mt19937_64 rng(3);
  Op op = random_op({2, 2}, 2, rng);
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 0, 1;
  b << 0, 1, 1, 0;
  Vector x = random_vec(2, rng), y = random_vec(2, rng), z = random_vec(2, rng);
  EXPECT_EQ(evaluate(pullback(op, {a, b}), {x, y}), evaluate(op, {Vector(a * x), Vector(b * y)}));
  EXPECT_EQ(evaluate(pushforward(a, op), {x, y}), Vector(a * evaluate(op, {x, y})));
  EXPECT_EQ(evaluate(permute_slots(op, {1, 0}), {x, y}), evaluate(op, {y, x}));
  Op t = random_op({2, 3, 2}, 2, rng);
  Vector w = random_vec(3, rng);
  EXPECT_EQ(evaluate(permute_slots(t, {2, 0, 1}), {w, y, x}), evaluate(t, {x, w, y}));
  EXPECT_EQ(evaluate(substitute(op, 0, op), {x, y, z}), evaluate(op, {evaluate(op, {x, y}), z}));
  EXPECT_EQ(evaluate(substitute(op, 1, op), {x, y, z}), evaluate(op, {x, evaluate(op, {y, z})}));
}

TEST(Transforms, BlocksRoundTrip) {
  std::mt19937_64 rng(5);
  Op piece = random_op({2, 1}, 1, rng);
  Op big({3, 3}, 3);
  add_block(big, piece, {0, 2}, 2);
  EXPECT_EQ(extract_block(big, {0, 2}, {2, 1}, 2, 1), piece);
  EXPECT_TRUE(extract_block(big, {0, 0}, {2, 2}, 0, 2).is_zero());
}

TEST(Identities, ParserDistributesAndChains) {
  auto ids = parse_identities("T", "a b c", "f(a + b, c) = 2*f(a,c) = g(a,b,c)");
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_EQ(ids[0].name, "T.1");
  EXPECT_EQ(to_string(ids[0]), "-f(a,c) + f(b,c) = 0");
  EXPECT_EQ(to_string(ids[1]), "2*f(a,c) - g(a,b,c) = 0");
  auto single = parse_identity("S", "x y", "h(x,y) + h(y,x)");
  EXPECT_EQ(single.name, "S");
  EXPECT_EQ(single.expr.size(), 2u);
  EXPECT_THROW(parse_identity("bad", "a", "f(a,b)"), std::invalid_argument);
  EXPECT_THROW(parse_identity("bad", "a", "f(a"), std::invalid_argument);
  EXPECT_TRUE(parse_identity("Z", "a", "f(a) - f(a) = 0").expr.empty());
}

TEST(Identities, CheckReportsWitnesses) {
  Op mul = Op::on_space(2, 2);
  mul({0, 0, 1}) = 1;  // x*x = y
  OpTable ops;
  ops.set("mul", mul);
  auto comm = parse_identity("comm", "a b", "mul(a,b) = mul(b,a)");
  std::vector<Index> dims{2, 2};
  EXPECT_TRUE(check_identity(comm, ops, dims, 20).failures.empty());
  Op skew = mul;
  skew({0, 1, 0}) = 1;
  ops.set("mul", skew);
  auto res = check_identity(comm, ops, dims, 20);
  ASSERT_EQ(res.failures.size(), 2u);
  EXPECT_EQ(res.failures[0].tuple, (std::vector<Index>{0, 1}));
  EXPECT_EQ(res.failures[0].residual, vec({1, 0}));
  EXPECT_EQ(res.tuples, 4);
  EXPECT_EQ(check_identity(comm, ops, dims, 1).failures.size(), 1u);
  EXPECT_EQ(check_identity(comm, ops, dims, 1).failures_total, 2);
}

TEST(IdentityMatrix, SpecExamples) {
  for (Index n : {1, 2})
    for (Index m : {1, 2}) {
      UnknownLayout x;
      x.add("X", {n, n}, m);
      Matrix a = identity_matrix_of(parse_identity("X0", "a b", "X(a,b) = 0"), x, OpTable{}, std::vector<Index>{n, n});
      EXPECT_EQ(a.rows(), m * n * n);
      EXPECT_EQ(a, Matrix(Matrix::Identity(m * n * n, m * n * n)));
      UnknownLayout fg;
      fg.add("F", {n, n, n}, m);
      fg.add("G", {n, n, n}, m);
      Matrix b = identity_matrix_of(parse_identity("FG", "a b c", "F(a,b,c) - G(a,b,c) = 0"), fg, OpTable{},
                                    std::vector<Index>{n, n, n});
      EXPECT_EQ(kernel_basis(b).cols(), m * n * n * n);
    }
  Op k1 = Op::on_space(2, 1);
  k1({0, 0, 0}) = 1;
  OpTable known;
  known.set("dot", k1);
  UnknownLayout x;
  x.add("X", {1, 1}, 1);
  Matrix c = identity_matrix_of(parse_identity("A", "a b c", "X(dot(a,b),c) - X(a,dot(b,c)) = 0"), x, known,
                                std::vector<Index>{1, 1, 1});
  EXPECT_EQ(kernel_basis(c).cols(), 1);
  EXPECT_THROW(identity_matrix_of(parse_identity("Q", "a b", "X(X(a,b),a) = 0"), x, known, std::vector<Index>{1, 1}),
               std::invalid_argument);
  EXPECT_THROW(identity_matrix_of(parse_identity("Q", "a b", "dot(a,b) = X(a,b)"), x, known, std::vector<Index>{1, 1}),
               std::invalid_argument);
}

// Kernel membership must coincide with direct evaluation of the identity.
TEST(IdentityMatrix, AgreesWithBruteForceEvaluation) {
  std::mt19937_64 rng(17);
  const Index n = 2;
  Op dot = random_op({n, n}, n, rng);
  OpTable known;
  known.set("dot", dot);
  UnknownLayout u;
  u.add("X", {n, n}, n);
  u.add("Y", {n, n, n}, n);
  auto id = parse_identity("mix", "a b c", "X(dot(a,b),c) + dot(X(a,b),c) - X(a,dot(b,c)) - dot(a,X(b,c)) + Y(a,b,c)");
  std::vector<Index> dims{n, n, n};
  Matrix sys = identity_matrix_of(id, u, known, dims);
  Matrix ker = kernel_basis(sys);
  auto satisfies = [&](const Vector& x) {
    auto ops = u.unpack(x);
    OpTable all = known;
    for (auto& [name, op] : ops) all.set(name, op);
    return check_identity(id, all, dims, 1).failures.empty();
  };
  for (Index c = 0; c < ker.cols(); ++c) EXPECT_TRUE(satisfies(ker.col(c)));
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Vector x(u.size());
    for (Index i = 0; i < x.size(); ++i) x(i) = d(rng);
    if (trial % 2 == 0) {
      x = Vector::Zero(u.size());
      for (Index c = 0; c < ker.cols(); ++c) x += ker.col(c) * Rational(d(rng));
    }
    EXPECT_EQ(satisfies(x), is_zero_matrix(Vector(sys * x)));
  }
}
