#include "yam/generators.hpp"

#include "yam/functors.hpp"

namespace yam {

namespace {

Op table2(std::initializer_list<std::array<Index, 3>> entries) {
  Op op = Op::on_space(2, 2);
  for (const auto& [i, j, k] : entries) op({i, j, k}) += 1;
  return op;
}

AlgebraPresentation ass(Op dot) { return AlgebraPresentation{AlgebraClass::Ass, dot.output_dim(), {{"dot", dot}}}; }

}  // namespace

Rational random_small_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return Rational(num(rng), den(rng));
}

Matrix random_invertible(Index n, Rng& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  while (true) {
    Matrix t(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) t(i, j) = d(rng);
    if (rank(t) == n) return t;
  }
}

AlgebraPresentation transport(const AlgebraPresentation& a, const Matrix& t) {
  const Matrix inv = inverse(t);
  AlgebraPresentation out = a;
  for (auto& [name, op] : out.ops) {
    std::vector<Matrix> maps(static_cast<std::size_t>(op.arity()), t);
    op = pushforward(inv, pullback(op, maps));
  }
  return out;
}

const std::vector<AlgebraPresentation>& known_associative_dim2() {
  // basis (e, x)
  static const std::vector<AlgebraPresentation> list = {
      ass(Op::on_space(2, 2)),
      ass(table2({{0, 0, 1}})),
      ass(table2({{0, 0, 0}})),
      ass(table2({{0, 0, 0}, {0, 1, 1}})),
      ass(table2({{0, 0, 0}, {1, 0, 1}})),
      ass(table2({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}})),
      ass(table2({{0, 0, 0}, {1, 1, 1}})),
  };
  return list;
}

AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.kind != b.kind) throw std::invalid_argument("direct_sum: class mismatch");
  AlgebraPresentation out{a.kind, a.dim + b.dim, {}};
  for (const auto& [name, op] : a.ops) {
    Op sum = Op::on_space(op.arity(), out.dim);
    add_block(sum, op, std::vector<Index>(static_cast<std::size_t>(op.arity()), 0), 0);
    add_block(sum, b.op(name), std::vector<Index>(static_cast<std::size_t>(op.arity()), a.dim), a.dim);
    out.ops.emplace(name, sum);
  }
  return out;
}

AlgebraPresentation random_ass(Index n, Rng& rng) {
  const auto& known = known_associative_dim2();
  std::uniform_int_distribution<std::size_t> pick(0, known.size() - 1);
  AlgebraPresentation base;
  if (n == 1) {
    Op dot = Op::on_space(2, 1);
    dot({0, 0, 0}) = random_small_rational(rng);
    base = ass(dot);
  } else if (n == 2) {
    base = known[pick(rng)];
  } else if (n == 3) {
    Op dot = Op::on_space(2, 1);
    dot({0, 0, 0}) = std::uniform_int_distribution<int>(0, 1)(rng);
    base = direct_sum(known[pick(rng)], ass(dot));
  } else {
    throw std::invalid_argument("random_ass: dimension 1 to 3 supported");
  }
  return transport(base, random_invertible(n, rng));
}

std::optional<Vector> unit_of(const AlgebraPresentation& a) {
  const Index n = a.dim;
  const Op& dot = a.op("dot");
  // u.e_j = e_j and e_j.u = e_j, linear in u
  Matrix sys(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k)
      for (Index i = 0; i < n; ++i) {
        sys(j * n + k, i) = dot({i, j, k});
        sys(n * n + j * n + k, i) = dot({j, i, k});
        rhs(j * n + k) = rhs(n * n + j * n + k) = j == k ? 1 : 0;
      }
  return solve(sys, rhs);
}

Matrix random_averaging_operator(const AlgebraPresentation& a, Rng& rng) {
  const Index n = a.dim;
  auto unit = unit_of(a);
  if (unit && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    Matrix p(n, n);
    for (Index j = 0; j < n; ++j) p.col(j) = *unit * random_small_rational(rng);
    return p;
  }
  return Matrix(Matrix::Identity(n, n)) * random_small_rational(rng);
}

AlgebraPresentation random_diass(Index n, Rng& rng, bool averaging) {
  AlgebraPresentation a = random_ass(n, rng);
  if (averaging) return averaging_diass(a, random_averaging_operator(a, rng));
  return AlgebraPresentation{AlgebraClass::Diass, n, {{"left", a.op("dot")}, {"right", a.op("dot")}}};
}

AlgebraPresentation random_candidate(AlgebraClass c, Index dim, Rng& rng, int sparsity) {
  AlgebraPresentation a = zero_algebra(c, dim);
  for (auto& [name, op] : a.ops)
    for (Index k = 0; k < op.size(); ++k)
      if (rng() % static_cast<unsigned>(sparsity) == 0) op.tensor()(k) = random_small_rational(rng);
  return a;
}

}  // namespace yam
