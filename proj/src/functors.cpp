#include "yam/functors.hpp"

#include <functional>

namespace yam {

namespace {

std::vector<Index> dims_of(int arity, Index n) { return std::vector<Index>(static_cast<std::size_t>(arity), n); }

Op derive(const AlgebraPresentation& a, int arity, std::string_view expr) {
  const char* vars = arity == 2 ? "a b" : "a b c";
  return tabulate(vars, expr, a.table(), dims_of(arity, a.dim), a.dim);
}

AlgebraPresentation make(AlgebraClass c, Index n, std::map<std::string, Op> ops) {
  AlgebraPresentation out{c, n, std::move(ops)};
  out.validate();
  return out;
}

Vector kron(const Vector& u, const Vector& v) {
  Vector out(u.size() * v.size());
  for (Index i = 0; i < u.size(); ++i) out.segment(i * v.size(), v.size()) = v * u(i);
  return out;
}

Matrix block_diag_identity(Index first, Index second, bool first_part) {
  Matrix p = Matrix::Zero(first + second, first + second);
  if (first_part)
    p.topLeftCorner(first, first) = Matrix::Identity(first, first);
  else
    p.bottomRightCorner(second, second) = Matrix::Identity(second, second);
  return p;
}

}  // namespace

AlgebraPresentation ass_to_assy(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::Ass);
  Op chain = derive(a, 3, "dot(dot(a,b),c)");
  return make(AlgebraClass::AssY, a.dim, {{"dot", a.op("dot")}, {"curly", chain}, {"dcurly", chain}});
}

AlgebraPresentation ass_to_lie(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::Ass);
  return make(AlgebraClass::Lie, a.dim, {{"bracket", derive(a, 2, "dot(a,b) - dot(b,a)")}});
}

AlgebraPresentation ats_to_assy(const AlgebraPresentation& t) {
  require_axioms(t, AlgebraClass::Ats);
  return make(AlgebraClass::AssY, t.dim,
              {{"dot", Op::on_space(2, t.dim)}, {"curly", t.op("curly")}, {"dcurly", t.op("curly")}});
}

AlgebraPresentation ats_to_lts(const AlgebraPresentation& t) {
  require_axioms(t, AlgebraClass::Ats);
  return make(AlgebraClass::Lts, t.dim,
              {{"tbracket", derive(t, 3, "curly(a,b,c) - curly(b,a,c) - curly(c,a,b) + curly(c,b,a)")}});
}

AlgebraPresentation lie_to_liey(const AlgebraPresentation& g) {
  require_axioms(g, AlgebraClass::Lie);
  return make(AlgebraClass::LieY, g.dim,
              {{"bracket", g.op("bracket")}, {"tbracket", derive(g, 3, "bracket(bracket(a,b),c)")}});
}

AlgebraPresentation lts_to_liey(const AlgebraPresentation& t) {
  require_axioms(t, AlgebraClass::Lts);
  return make(AlgebraClass::LieY, t.dim, {{"bracket", Op::on_space(2, t.dim)}, {"tbracket", t.op("tbracket")}});
}

AlgebraPresentation leibniz_to_liey(const AlgebraPresentation& l) {
  require_axioms(l, AlgebraClass::Leibniz);
  return make(AlgebraClass::LieY, l.dim,
              {{"bracket", derive(l, 2, "bracket(a,b) - bracket(b,a)")},
               {"tbracket", derive(l, 3, "-bracket(bracket(a,b),c)")}});
}

AlgebraPresentation diass_to_leibniz(const AlgebraPresentation& d) {
  require_axioms(d, AlgebraClass::Diass);
  return make(AlgebraClass::Leibniz, d.dim, {{"bracket", derive(d, 2, "right(a,b) - left(b,a)")}});
}

AlgebraPresentation diass_to_assy(const AlgebraPresentation& d) {
  require_axioms(d, AlgebraClass::Diass);
  return make(AlgebraClass::AssY, d.dim,
              {{"dot", derive(d, 2, "left(a,b) + right(a,b)")},
               {"curly", derive(d, 3, "-right(right(a,b),c)")},
               {"dcurly", derive(d, 3, "-left(left(a,b),c)")}});
}

AlgebraPresentation diass_to_wats(const AlgebraPresentation& d) {
  AlgebraPresentation a = diass_to_assy(d);
  return make(AlgebraClass::Wats, d.dim, {{"curly", a.op("curly")}, {"dcurly", a.op("dcurly")}});
}

AlgebraPresentation assy_to_liey(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::AssY);
  return make(AlgebraClass::LieY, a.dim,
              {{"bracket", derive(a, 2, "dot(a,b) - dot(b,a)")},
               {"tbracket", derive(a, 3, "curly(a,b,c) - curly(b,a,c) - dcurly(c,a,b) + dcurly(c,b,a)")}});
}

AlgebraPresentation assy_to_wats(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::AssY);
  return make(AlgebraClass::Wats, a.dim, {{"curly", a.op("curly")}, {"dcurly", a.op("dcurly")}});
}

AlgebraPresentation assy_to_dendy(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::AssY);
  AlgebraPresentation d = zero_algebra(AlgebraClass::DendY, a.dim);
  d.ops["prec"] = a.op("dot");
  d.ops["curly1"] = a.op("curly");
  d.ops["dcurly1"] = a.op("dcurly");
  return d;
}

AlgebraPresentation dend_to_dendy(const AlgebraPresentation& d) {
  require_axioms(d, AlgebraClass::Dend);
  Op one = derive(d, 3, "prec(prec(a,b),c)");
  Op two = derive(d, 3, "prec(succ(a,b),c)");
  Op three = derive(d, 3, "succ(prec(a,b) + succ(a,b),c)");
  return make(AlgebraClass::DendY, d.dim,
              {{"prec", d.op("prec")}, {"succ", d.op("succ")}, {"curly1", one}, {"curly2", two}, {"curly3", three},
               {"dcurly1", one}, {"dcurly2", two}, {"dcurly3", three}});
}

AlgebraPresentation total_of_dendy(const AlgebraPresentation& d) {
  require_axioms(d, AlgebraClass::DendY);
  return make(AlgebraClass::AssY, d.dim,
              {{"dot", d.op("prec") + d.op("succ")},
               {"curly", d.op("curly1") + d.op("curly2") + d.op("curly3")},
               {"dcurly", d.op("dcurly1") + d.op("dcurly2") + d.op("dcurly3")}});
}

AlgebraPresentation wats_to_diass(const AlgebraPresentation& w) {
  require_axioms(w, AlgebraClass::Wats);
  const Index n = w.dim;
  Op left = Op::on_space(2, n * n), right = Op::on_space(2, n * n);
  const Op& curly = w.op("curly");
  const Op& dcurly = w.op("dcurly");
  auto e = [n](Index i) { return unit_vector<Rational>(n, i); };
  std::vector<Index> dims{n, n, n, n};
  for_each_tuple(dims, [&](std::span<const Index> t) {
    const Index a = t[0], b = t[1], c = t[2], d = t[3];
    std::vector<Index> pair{a * n + b, c * n + d};
    // (a(x)b) -| (c(x)d) = a (x) {b,c,d};  (a(x)b) |- (c(x)d) = {{a,b,c}} (x) d
    left.output_at(pair) = kron(e(a), evaluate(curly, {e(b), e(c), e(d)}));
    right.output_at(pair) = kron(evaluate(dcurly, {e(a), e(b), e(c)}), e(d));
  });
  return make(AlgebraClass::Diass, n * n, {{"left", left}, {"right", right}});
}

AlgebraPresentation dendy_from_triple_system(Index dim, const Op& curly1, const Op& curly2, const Op& curly3) {
  AlgebraPresentation d = zero_algebra(AlgebraClass::DendY, dim);
  d.ops["curly1"] = d.ops["dcurly1"] = curly1;
  d.ops["curly2"] = d.ops["dcurly2"] = curly2;
  d.ops["curly3"] = d.ops["dcurly3"] = curly3;
  require_axioms(d, AlgebraClass::DendY);
  return d;
}

bool is_averaging_operator(const AlgebraPresentation& a, const Matrix& p) {
  if (a.kind != AlgebraClass::Ass) throw std::invalid_argument("averaging operator: ass algebra required");
  if (p.rows() != a.dim || p.cols() != a.dim) throw std::invalid_argument("averaging operator: shape mismatch");
  OpTable t = a.table();
  t.set("P", linear_op(p));
  auto ids = parse_identities("averaging", "a b", "dot(P(a),P(b)) = P(dot(P(a),b)) = P(dot(a,P(b)))");
  for (const auto& id : ids)
    if (check_identity(id, t, dims_of(2, a.dim), 1).failures_total > 0) return false;
  return true;
}

AlgebraPresentation averaging_diass(const AlgebraPresentation& a, const Matrix& p) {
  require_axioms(a, AlgebraClass::Ass);
  if (!is_averaging_operator(a, p)) throw std::invalid_argument("not an averaging operator");
  OpTable t = a.table();
  t.set("P", linear_op(p));
  return make(AlgebraClass::Diass, a.dim,
              {{"left", tabulate("a b", "dot(a,P(b))", t, dims_of(2, a.dim), a.dim)},
               {"right", tabulate("a b", "dot(P(a),b)", t, dims_of(2, a.dim), a.dim)}});
}

AlgebraPresentation tensor_square_assy(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::Ass);
  const Index n = a.dim, nn = n * n;
  const Op& dot = a.op("dot");
  auto e = [n](Index i) { return unit_vector<Rational>(n, i); };
  auto mul = [&](const Vector& x, const Vector& y) { return evaluate(dot, {x, y}); };
  Op bullet = Op::on_space(2, nn), curly = Op::on_space(3, nn), dcurly = Op::on_space(3, nn);
  std::vector<Index> d2{n, n, n, n}, d3{n, n, n, n, n, n};
  for_each_tuple(d2, [&](std::span<const Index> t) {
    std::vector<Index> idx{t[0] * n + t[1], t[2] * n + t[3]};
    bullet.output_at(idx) = kron(mul(mul(e(t[0]), e(t[1])), e(t[2])), e(t[3])) +
                            kron(e(t[0]), mul(mul(e(t[1]), e(t[2])), e(t[3])));
  });
  for_each_tuple(d3, [&](std::span<const Index> t) {
    std::vector<Index> idx{t[0] * n + t[1], t[2] * n + t[3], t[4] * n + t[5]};
    Vector left = e(t[0]);
    for (int k = 1; k < 5; ++k) left = mul(left, e(t[static_cast<std::size_t>(k)]));
    Vector right = e(t[5]);
    for (int k = 4; k >= 1; --k) right = mul(e(t[static_cast<std::size_t>(k)]), right);
    curly.output_at(idx) = -kron(left, e(t[5]));
    dcurly.output_at(idx) = -kron(e(t[0]), right);
  });
  return make(AlgebraClass::AssY, nn, {{"dot", bullet}, {"curly", curly}, {"dcurly", dcurly}});
}

Bimodule regular_bimodule(const AlgebraPresentation& a) { return Bimodule{a.dim, a.op("dot"), a.op("dot")}; }

Bimodule zero_bimodule(const AlgebraPresentation& a, Index dim) {
  return Bimodule{dim, Op({a.dim, dim}, dim), Op({dim, a.dim}, dim)};
}

namespace {

OpTable bimodule_table(const AlgebraPresentation& a, const Bimodule& m) {
  if (m.left.input_dims() != std::vector<Index>{a.dim, m.dim} || m.left.output_dim() != m.dim ||
      m.right.input_dims() != std::vector<Index>{m.dim, a.dim} || m.right.output_dim() != m.dim)
    throw std::invalid_argument("bimodule: action shapes do not match");
  OpTable t = a.table();
  t.set("lact", m.left);
  t.set("ract", m.right);
  return t;
}

}  // namespace

AxiomReport check_bimodule(const AlgebraPresentation& a, const Bimodule& m) {
  if (a.kind != AlgebraClass::Ass) throw std::invalid_argument("bimodule: ass algebra required");
  OpTable t = bimodule_table(a, m);
  std::vector<Identity> ids;
  for (const char* text : {"lact(dot(a,b),u) = lact(a,lact(b,u))", "ract(lact(a,u),b) = lact(a,ract(u,b))",
                           "ract(ract(u,a),b) = ract(u,dot(a,b))"})
    ids.push_back(parse_identity("bimodule", "a b u", text));
  ids[0].name = "left";
  ids[1].name = "middle";
  ids[2].name = "right";
  const Index n = a.dim, k = m.dim;
  return run_identities("bimodule", ids, t, [n, k](const Identity&) { return std::vector<Index>{n, n, k}; });
}

AlgebraPresentation bimodule_sum_assy(const AlgebraPresentation& a, const Bimodule& m) {
  require_axioms(a, AlgebraClass::Ass);
  auto report = check_bimodule(a, m);
  if (!report.passed()) throw AxiomViolation(std::move(report));
  OpTable t = bimodule_table(a, m);
  const Index n = a.dim, k = m.dim, total = n + k;
  Op dot = Op::on_space(2, total), curly = Op::on_space(3, total), dcurly = Op::on_space(3, total);
  add_block(dot, Rational(2) * a.op("dot"), {0, 0}, 0);
  add_block(dot, m.left, {0, n}, n);
  add_block(dot, m.right, {n, 0}, n);
  Op triple = -tabulate("a b c", "dot(dot(a,b),c)", t, {n, n, n}, n);
  add_block(curly, triple, {0, 0, 0}, 0);
  add_block(dcurly, triple, {0, 0, 0}, 0);
  add_block(curly, -tabulate("a b w", "lact(dot(a,b),w)", t, {n, n, k}, k), {0, 0, n}, n);
  add_block(dcurly, -tabulate("u b c", "ract(ract(u,b),c)", t, {k, n, n}, k), {n, 0, 0}, n);
  return make(AlgebraClass::AssY, total, {{"dot", dot}, {"curly", curly}, {"dcurly", dcurly}});
}

void validate(const ReductiveDecomposition& r) {
  require_axioms(r.algebra, AlgebraClass::Ass);
  const Index n = r.algebra.dim;
  const Matrix& p0 = r.projector0;
  const Matrix& p1 = r.projector1;
  if (p0.rows() != n || p0.cols() != n || p1.rows() != n || p1.cols() != n)
    throw std::invalid_argument("reductive decomposition: projector shape mismatch");
  if (!(Matrix(p0 + p1) == Matrix(Matrix::Identity(n, n))))
    throw std::invalid_argument("reductive decomposition: projectors do not sum to the identity");
  if (!(Matrix(p0 * p0) == p0) || !(Matrix(p1 * p1) == p1))
    throw std::invalid_argument("reductive decomposition: projector not idempotent");
  const Matrix a0 = column_basis(p0), a1 = column_basis(p1);
  const Op& dot = r.algebra.op("dot");
  auto stays = [&](const Matrix& xs, const Matrix& ys, const Matrix& other, const char* what) {
    for (Index i = 0; i < xs.cols(); ++i)
      for (Index j = 0; j < ys.cols(); ++j)
        if (!is_zero_matrix(Vector(other * evaluate(dot, {Vector(xs.col(i)), Vector(ys.col(j))}))))
          throw std::invalid_argument(std::string("reductive decomposition: ") + what);
  };
  stays(a0, a0, p1, "A0.A0 not in A0");
  stays(a0, a1, p0, "A0.A1 not in A1");
  stays(a1, a0, p0, "A1.A0 not in A1");
}

AlgebraPresentation from_reductive(const ReductiveDecomposition& r) {
  validate(r);
  const Index n = r.algebra.dim;
  const Matrix inc = column_basis(r.projector1);
  const Index k = inc.cols();
  if (k == 0) return zero_algebra(AlgebraClass::AssY, 0);
  Matrix coord(k, n);
  for (Index j = 0; j < n; ++j) {
    auto x = solve(inc, Vector(r.projector1.col(j)));
    if (!x) throw std::logic_error("from_reductive: projector image not spanned by its pivot columns");
    coord.col(j) = *x;
  }
  OpTable t = r.algebra.table();
  t.set("inc", linear_op(inc));
  t.set("coord", linear_op(coord));
  t.set("pr0", linear_op(r.projector0));
  return make(AlgebraClass::AssY, k,
              {{"dot", tabulate("a b", "coord(dot(inc(a),inc(b)))", t, {k, k}, k)},
               {"curly", tabulate("a b c", "coord(dot(pr0(dot(inc(a),inc(b))),inc(c)))", t, {k, k, k}, k)},
               {"dcurly", tabulate("a b c", "coord(dot(inc(a),pr0(dot(inc(b),inc(c)))))", t, {k, k, k}, k)}});
}

Vector sigma_tau_vector(const AlgebraPresentation& a, const Vector& x, const Vector& y) {
  auto [s, t] = sigma_tau_of(a, x, y);
  const Index n = a.dim;
  Vector v(2 * n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      v(i * n + j) = s(i, j);
      v(n * n + i * n + j) = t(i, j);
    }
  return v;
}

EnvelopePresentation envelope(const AlgebraPresentation& a) {
  require_axioms(a, AlgebraClass::AssY);
  const Index n = a.dim, nn = n * n;
  auto e = [n](Index i) { return unit_vector<Rational>(n, i); };
  Matrix gens(2 * nn, nn);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gens.col(i * n + j) = sigma_tau_vector(a, e(i), e(j));

  EnvelopePresentation env;
  env.base = a;
  const auto piv = pivot_columns(gens);
  const Index m = static_cast<Index>(piv.size());
  env.mA_basis = Matrix(2 * nn, m);
  for (Index s = 0; s < m; ++s) {
    env.mA_basis.col(s) = gens.col(piv[static_cast<std::size_t>(s)]);
    env.generator_pairs.emplace_back(piv[static_cast<std::size_t>(s)] / n, piv[static_cast<std::size_t>(s)] % n);
  }
  if (rank(env.mA_basis) != rank(gens)) throw std::logic_error("envelope: basis does not span the generators");

  auto coords = [&](const Vector& v) -> Vector {
    if (m == 0) {
      if (!is_zero_matrix(v)) throw std::logic_error("envelope: vector outside M(A)");
      return Vector(0);
    }
    auto x = solve(env.mA_basis, v);
    if (!x) throw std::logic_error("envelope: vector outside M(A)");
    return *x;
  };

  // generator products g_ij * g_kl = Delta({e_i,e_j,e_k}, e_l)
  const Op& curly = a.op("curly");
  const Op& dcurly = a.op("dcurly");
  std::vector<Vector> prod(static_cast<std::size_t>(nn * nn));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l)
          prod[static_cast<std::size_t>((i * n + j) * nn + k * n + l)] =
              sigma_tau_vector(a, evaluate(curly, {e(i), e(j), e(k)}), e(l));
  auto product = [&](Index g, Index h) -> const Vector& { return prod[static_cast<std::size_t>(g * nn + h)]; };

  const Matrix relations = kernel_basis(gens);
  for (Index r = 0; r < relations.cols(); ++r) {
    const Vector rel = relations.col(r);
    for (Index h = 0; h < nn; ++h) {
      Vector lhs = Vector::Zero(2 * nn), rhs = Vector::Zero(2 * nn);
      for (Index g = 0; g < nn; ++g) {
        if (is_zero(rel(g))) continue;
        lhs += product(g, h) * rel(g);
        rhs += product(h, g) * rel(g);
      }
      if (!is_zero_matrix(lhs))
        throw WellDefinednessError("envelope: star product not well defined in the left argument", rel);
      if (!is_zero_matrix(rhs))
        throw WellDefinednessError("envelope: star product not well defined in the right argument", rel);
    }
  }

  env.star = Op::on_space(2, m);
  env.act_left = Op({m, n}, n);
  env.act_right = Op({n, m}, n);
  env.delta = Op({n, n}, m);
  for (Index s = 0; s < m; ++s) {
    const auto [as, bs] = env.generator_pairs[static_cast<std::size_t>(s)];
    for (Index t = 0; t < m; ++t) {
      std::vector<Index> st{s, t};
      env.star.output_at(st) = coords(product(as * n + bs, env.generator_pairs[static_cast<std::size_t>(t)].first * n +
                                                               env.generator_pairs[static_cast<std::size_t>(t)].second));
    }
    for (Index c = 0; c < n; ++c) {
      std::vector<Index> sc{s, c}, cs{c, s};
      env.act_left.output_at(sc) = evaluate(curly, {e(as), e(bs), e(c)});
      env.act_right.output_at(cs) = evaluate(dcurly, {e(c), e(as), e(bs)});
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::vector<Index> ij{i, j};
      env.delta.output_at(ij) = coords(gens.col(i * n + j));
    }

  Op total = Op::on_space(2, m + n);
  add_block(total, env.star, {0, 0}, 0);
  add_block(total, env.delta, {m, m}, 0);
  add_block(total, env.act_left, {0, m}, m);
  add_block(total, env.act_right, {m, 0}, m);
  add_block(total, a.op("dot"), {m, m}, m);
  env.total = make(AlgebraClass::Ass, m + n, {{"dot", total}});
  env.split = ReductiveDecomposition{env.total, block_diag_identity(m, n, true), block_diag_identity(m, n, false)};
  validate(env.split);  // also requires associativity of the total algebra
  if (!(from_reductive(env.split) == a)) throw std::logic_error("envelope: induced structure differs from the input");
  return env;
}

bool check_diagram(Diagram which, const AlgebraPresentation& input) {
  if (which == Diagram::Ass) return assy_to_liey(ass_to_assy(input)) == lie_to_liey(ass_to_lie(input));
  return assy_to_liey(diass_to_assy(input)) == leibniz_to_liey(diass_to_leibniz(input));
}

namespace {

using Passage = std::function<AlgebraPresentation(const AlgebraPresentation&)>;

const std::map<std::pair<AlgebraClass, AlgebraClass>, Passage>& passages() {
  using C = AlgebraClass;
  static const std::map<std::pair<C, C>, Passage> table = {
      {{C::Ass, C::AssY}, ass_to_assy},
      {{C::Ass, C::Lie}, ass_to_lie},
      {{C::Ass, C::LieY}, [](const AlgebraPresentation& a) { return assy_to_liey(ass_to_assy(a)); }},
      {{C::Ats, C::AssY}, ats_to_assy},
      {{C::Ats, C::Lts}, ats_to_lts},
      {{C::Ats, C::LieY}, [](const AlgebraPresentation& a) { return lts_to_liey(ats_to_lts(a)); }},
      {{C::Lie, C::LieY}, lie_to_liey},
      {{C::Lts, C::LieY}, lts_to_liey},
      {{C::Leibniz, C::LieY}, leibniz_to_liey},
      {{C::Diass, C::AssY}, diass_to_assy},
      {{C::Diass, C::Leibniz}, diass_to_leibniz},
      {{C::Diass, C::Wats}, diass_to_wats},
      {{C::Diass, C::LieY}, [](const AlgebraPresentation& a) { return assy_to_liey(diass_to_assy(a)); }},
      {{C::AssY, C::LieY}, assy_to_liey},
      {{C::AssY, C::Wats}, assy_to_wats},
      {{C::AssY, C::DendY}, assy_to_dendy},
      {{C::Dend, C::DendY}, dend_to_dendy},
      {{C::Dend, C::AssY}, [](const AlgebraPresentation& a) { return total_of_dendy(dend_to_dendy(a)); }},
      {{C::DendY, C::AssY}, total_of_dendy},
      {{C::Wats, C::Diass}, wats_to_diass},
  };
  return table;
}

}  // namespace

AlgebraPresentation construct(const AlgebraPresentation& input, AlgebraClass target) {
  auto it = passages().find({input.kind, target});
  if (it == passages().end())
    throw std::invalid_argument("no construction from " + to_string(input.kind) + " to " + to_string(target));
  return it->second(input);
}

std::vector<AlgebraClass> construct_targets(AlgebraClass source) {
  std::vector<AlgebraClass> out;
  for (const auto& [key, fn] : passages())
    if (key.first == source) out.push_back(key.second);
  return out;
}

}  // namespace yam
