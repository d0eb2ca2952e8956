#include "yam/deform_ext.hpp"

namespace yam {

namespace {

const std::vector<std::string>& structure_names() {
  static const std::vector<std::string> names = {"dot", "curly", "dcurly"};
  return names;
}

const Op& part(const CochainTriple& t, const std::string& name) {
  if (name == "dot") return t.mu;
  if (name == "curly") return t.F;
  return t.G;
}

// All ways to write total as an ordered sum of parts nonnegative integers.
void compositions(Index total, Index parts, std::vector<Index>& current, const std::function<void()>& fn) {
  if (parts == 0) {
    if (total == 0) fn();
    return;
  }
  if (parts == 1) {
    current.push_back(total);
    fn();
    current.pop_back();
    return;
  }
  for (Index first = 0; first <= total; ++first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, fn);
    current.pop_back();
  }
}

Index count_ops(const Term& t) {
  if (t.is_variable()) return 0;
  Index c = 1;
  for (const Term& a : t.args) c += count_ops(a);
  return c;
}

void label_orders(Term& t, const std::vector<Index>& orders, std::size_t& next) {
  if (t.is_variable()) return;
  t.op += std::to_string(orders[next++]);
  for (Term& a : t.args) label_orders(a, orders, next);
}

std::vector<Identity> expanded_identities(Index order) {
  std::vector<Identity> out;
  for (Index k = 0; k <= order; ++k)
    for (const Identity& id : axioms(AlgebraClass::AssY)) {
      Identity e{id.family, id.name + "/" + std::to_string(k), id.variables, {}};
      for (const Monomial& mono : id.expr) {
        std::vector<Index> current;
        compositions(k, count_ops(mono.term), current, [&] {
          Term t = mono.term;
          std::size_t next = 0;
          label_orders(t, current, next);
          e.expr.push_back(Monomial{mono.coefficient, std::move(t)});
        });
      }
      out.push_back(std::move(e));
    }
  return out;
}

void check_cochain_shape(const CochainTriple& t, Index n, Index m, const char* what) {
  if (t.mu.input_dims() != std::vector<Index>{n, n} || t.mu.output_dim() != m ||
      t.F.input_dims() != std::vector<Index>{n, n, n} || t.F.output_dim() != m ||
      t.G.input_dims() != std::vector<Index>{n, n, n} || t.G.output_dim() != m)
    throw std::invalid_argument(std::string(what) + ": cochain shape mismatch");
}

// phi_0 = Id, then the given terms.
std::vector<Matrix> series_with_identity(Index n, const std::vector<Matrix>& phis) {
  std::vector<Matrix> out = {Matrix::Identity(n, n)};
  for (const Matrix& p : phis) {
    if (p.rows() != n || p.cols() != n) throw std::invalid_argument("deformation: map shape mismatch");
    out.push_back(p);
  }
  return out;
}

// Sum over compositions of k into arity + 1 parts of X'_i(phi_j1 a, ...).
Op pulled_back_sum(const TruncatedDeformation& d, const std::string& name, const std::vector<Matrix>& phi, Index k) {
  const Op& shape = d.base.op(name);
  Op sum(shape.input_dims(), shape.output_dim());
  std::vector<Index> current;
  compositions(k, shape.arity() + 1, current, [&] {
    std::vector<Matrix> maps;
    for (std::size_t s = 1; s < current.size(); ++s) maps.push_back(phi[static_cast<std::size_t>(current[s])]);
    sum += pullback(part(d.term(current[0]), name), maps);
  });
  return sum;
}

IdentityFailure first_difference(const std::string& label, const Op& lhs, const Op& rhs) {
  IdentityFailure f{label, {}, {}};
  for_each_tuple(lhs.input_dims(), [&](std::span<const Index> t) {
    if (!f.tuple.empty()) return;
    Vector diff = lhs.output_at(t) - rhs.output_at(t);
    if (!is_zero_matrix(diff)) {
      f.tuple.assign(t.begin(), t.end());
      f.residual = diff;
    }
  });
  return f;
}

}  // namespace

CochainTriple TruncatedDeformation::term(Index i) const {
  if (i == 0) return CochainTriple{base.op("dot"), base.op("curly"), base.op("dcurly")};
  if (i < 0 || i > order()) throw std::out_of_range("deformation: term order out of range");
  return terms[static_cast<std::size_t>(i - 1)];
}

void TruncatedDeformation::validate() const {
  base.validate();
  if (base.kind != AlgebraClass::AssY) throw std::invalid_argument("deformation: base must be an assy algebra");
  if (terms.empty()) throw std::invalid_argument("deformation: order must be at least 1");
  for (const auto& t : terms) check_cochain_shape(t, base.dim, base.dim, "deformation");
}

TruncatedDeformation zero_deformation(const AlgebraPresentation& a, Index order) {
  TruncatedDeformation d{a, std::vector<CochainTriple>(static_cast<std::size_t>(order), zero_cochain(a.dim, a.dim))};
  d.validate();
  return d;
}

AxiomReport check_deformation(const TruncatedDeformation& d, const CheckOptions& opts) {
  d.validate();
  OpTable t;
  for (Index i = 0; i <= d.order(); ++i) {
    const CochainTriple term = d.term(i);
    for (const auto& name : structure_names()) t.set(name + std::to_string(i), part(term, name));
  }
  const Index n = d.base.dim;
  return run_identities(
      "deformation", expanded_identities(d.order()), t,
      [n](const Identity& id) { return std::vector<Index>(id.variables.size(), n); }, opts);
}

Index order_of(const IdentityFailure& f) {
  const auto slash = f.identity.rfind('/');
  if (slash == std::string::npos) throw std::invalid_argument("no order in " + f.identity);
  return std::stoll(f.identity.substr(slash + 1));
}

std::optional<Infinitesimal> infinitesimal(const TruncatedDeformation& d) {
  auto report = check_deformation(d);
  if (!report.passed()) throw AxiomViolation(std::move(report));
  for (Index k = 1; k <= d.order(); ++k) {
    CochainTriple t = d.term(k);
    if (t.mu.is_zero() && t.F.is_zero() && t.G.is_zero()) continue;
    const bool cocycle = is_cocycle(t, adjoint_representation(d.base));
    return Infinitesimal{k, std::move(t), cocycle};
  }
  return std::nullopt;
}

TruncatedDeformation transport(const TruncatedDeformation& d, const std::vector<Matrix>& phis) {
  d.validate();
  const Index n = d.base.dim, order = d.order();
  if (static_cast<Index>(phis.size()) != order) throw std::invalid_argument("transport: need one map per order");
  const std::vector<Matrix> phi = series_with_identity(n, phis);
  // inverse series: psi_0 = Id, psi_k = -sum_{i=1..k} phi_i psi_{k-i}
  std::vector<Matrix> psi = {Matrix::Identity(n, n)};
  for (Index k = 1; k <= order; ++k) {
    Matrix s = Matrix::Zero(n, n);
    for (Index i = 1; i <= k; ++i) s -= phi[static_cast<std::size_t>(i)] * psi[static_cast<std::size_t>(k - i)];
    psi.push_back(s);
  }
  TruncatedDeformation out = zero_deformation(d.base, order);
  for (Index k = 1; k <= order; ++k) {
    std::map<std::string, Op> parts;
    for (const auto& name : structure_names()) {
      const Op& shape = d.base.op(name);
      Op sum(shape.input_dims(), shape.output_dim());
      std::vector<Index> current;
      compositions(k, shape.arity() + 2, current, [&] {
        std::vector<Matrix> maps;
        for (std::size_t s = 2; s < current.size(); ++s) maps.push_back(psi[static_cast<std::size_t>(current[s])]);
        sum += pushforward(phi[static_cast<std::size_t>(current[0])], pullback(part(d.term(current[1]), name), maps));
      });
      parts.emplace(name, std::move(sum));
    }
    out.terms[static_cast<std::size_t>(k - 1)] = CochainTriple{parts.at("dot"), parts.at("curly"), parts.at("dcurly")};
  }
  return out;
}

EquivalenceReport check_equivalence(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                                    const std::vector<Matrix>& phis) {
  d1.validate();
  d2.validate();
  const Index n = d1.base.dim, order = d1.order();
  if (d2.base.dim != n || d2.order() != order || static_cast<Index>(phis.size()) != order)
    throw std::invalid_argument("check_equivalence: shape mismatch");
  const std::vector<Matrix> phi = series_with_identity(n, phis);
  EquivalenceReport report;
  for (Index k = 0; k <= order && report.failures.empty(); ++k)
    for (const auto& name : structure_names()) {
      const Op& shape = d1.base.op(name);
      Op lhs(shape.input_dims(), shape.output_dim());
      for (Index i = 0; i <= k; ++i)
        lhs += pushforward(phi[static_cast<std::size_t>(i)], part(d1.term(k - i), name));
      const Op rhs = pulled_back_sum(d2, name, phi, k);
      if (!(lhs == rhs)) {
        report.failures.push_back(first_difference(name + "/" + std::to_string(k), lhs, rhs));
        break;
      }
    }
  if (!report.equivalent()) return report;
  auto i1 = infinitesimal(d1);
  auto i2 = infinitesimal(d2);
  if (i1 && i2 && i1->order == 1 && i2->order == 1) {
    const Vector diff = pack(i1->triple) - pack(i2->triple);
    if (!(diff == pack(coboundary_of(phis.front(), adjoint_representation(d1.base)))))
      throw std::logic_error("check_equivalence: infinitesimals do not differ by the coboundary of phi_1");
    report.infinitesimals_checked = true;
  }
  return report;
}

void validate(const ExtensionPresentation& e) {
  e.total.validate();
  if (e.total.kind != AlgebraClass::AssY) throw std::invalid_argument("extension: total must be an assy algebra");
  const Index n = e.base_dim(), m = e.module_dim(), big = e.total.dim;
  if (e.inclusion.rows() != big || e.projection.cols() != big || n + m != big)
    throw std::invalid_argument("extension: dimensions do not add up");
  if (!is_zero_matrix(Matrix(e.projection * e.inclusion))) throw std::invalid_argument("extension: p i is not zero");
  if (rank(e.inclusion) != m) throw std::invalid_argument("extension: i is not injective");
  if (rank(e.projection) != n) throw std::invalid_argument("extension: p is not surjective");
  if (e.section && !(Matrix(e.projection * *e.section) == Matrix(Matrix::Identity(n, n))))
    throw std::invalid_argument("extension: p s is not the identity");
  auto report = check_axioms(e.total);
  if (!report.passed()) throw std::invalid_argument("extension: total fails the assy axioms: " + report.summary());
  const Matrix basis = Matrix::Identity(big, big);
  for (const auto& [name, op] : e.total.ops) {
    const int r = op.arity();
    for (int mask = 1; mask < (1 << r); ++mask) {
      std::vector<Index> dims;
      int in_m = 0;
      for (int s = 0; s < r; ++s) {
        const bool ms = (mask >> s) & 1;
        dims.push_back(ms ? m : big);
        in_m += ms;
      }
      for_each_tuple(dims, [&](std::span<const Index> t) {
        std::vector<Vector> args;
        for (int s = 0; s < r; ++s)
          args.push_back((mask >> s) & 1 ? Vector(e.inclusion.col(t[static_cast<std::size_t>(s)]))
                                         : Vector(basis.col(t[static_cast<std::size_t>(s)])));
        const Vector out = evaluate(op, std::span<const Vector>(args));
        if (in_m >= 2 && !is_zero_matrix(out))
          throw std::invalid_argument("extension: i(M) is not abelian under " + name);
        if (in_m == 1 && !is_zero_matrix(Vector(e.projection * out)))
          throw std::invalid_argument("extension: i(M) is not an ideal under " + name);
      });
    }
  }
}

ExtensionPresentation extension_from_cocycle(const AssYRepresentation& r, const CochainTriple& t) {
  if (!is_cocycle(t, r)) throw std::invalid_argument("extension_from_cocycle: the triple is not a cocycle");
  const Index n = r.base.dim, m = r.module_dim;
  Matrix i = Matrix::Zero(n + m, m), p = Matrix::Zero(n, n + m), s = Matrix::Zero(n + m, n);
  i.bottomRows(m) = Matrix::Identity(m, m);
  p.leftCols(n) = Matrix::Identity(n, n);
  s.topRows(n) = Matrix::Identity(n, n);
  ExtensionPresentation e{twisted_semidirect(r, t), i, p, s};
  validate(e);
  return e;
}

Matrix section_of(const ExtensionPresentation& e) {
  if (e.section) return *e.section;
  const Index n = e.base_dim();
  Matrix s(e.total.dim, n);
  for (Index j = 0; j < n; ++j) {
    auto x = solve(e.projection, unit_vector<Rational>(n, j));
    if (!x) throw std::invalid_argument("extension: p admits no section");
    s.col(j) = *x;
  }
  return s;
}

ExtractedCocycle cocycle_from_extension(const ExtensionPresentation& e) {
  validate(e);
  const Index n = e.base_dim(), m = e.module_dim();
  const Matrix s = section_of(e);
  // coordinates along i(M) + s(A): the first m rows of [i s]^-1
  const Matrix coord = inverse(hstack(e.inclusion, s)).topRows(m);
  OpTable t;
  t.set("edot", e.total.op("dot"));
  t.set("ecurly", e.total.op("curly"));
  t.set("edcurly", e.total.op("dcurly"));
  t.set("s", linear_op(s));
  t.set("inc", linear_op(e.inclusion));
  t.set("r", linear_op(coord));
  t.set("p", linear_op(e.projection));
  AlgebraPresentation base{AlgebraClass::AssY, n,
                           {{"dot", tabulate("a b", "p(edot(s(a),s(b)))", t, {n, n}, n)},
                            {"curly", tabulate("a b c", "p(ecurly(s(a),s(b),s(c)))", t, {n, n, n}, n)},
                            {"dcurly", tabulate("a b c", "p(edcurly(s(a),s(b),s(c)))", t, {n, n, n}, n)}}};
  base.validate();
  for (const auto& name : structure_names()) t.set(name, base.op(name));
  std::map<std::string, Op> actions;
  for (const auto& [action, pattern] : action_slots()) {
    const std::string op = "e" + action.substr(0, action.find('_'));
    std::string vars, args;
    std::vector<Index> dims;
    const char* names[] = {"a", "b", "c"};
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      const bool in_m = pattern[k] == 'm';
      vars += std::string(k ? " " : "") + names[k];
      args += std::string(k ? "," : "") + (in_m ? "inc(" : "s(") + names[k] + ")";
      dims.push_back(in_m ? m : n);
    }
    actions.emplace(action, tabulate(vars, "r(" + op + "(" + args + "))", t, dims, m));
  }
  AssYRepresentation induced{base, m, std::move(actions)};
  induced.validate();
  CochainTriple triple{
      tabulate("a b", "r(edot(s(a),s(b))) - r(s(dot(a,b)))", t, {n, n}, m),
      tabulate("a b c", "r(ecurly(s(a),s(b),s(c))) - r(s(curly(a,b,c)))", t, {n, n, n}, m),
      tabulate("a b c", "r(edcurly(s(a),s(b),s(c))) - r(s(dcurly(a,b,c)))", t, {n, n, n}, m)};
  return ExtractedCocycle{std::move(triple), std::move(induced)};
}

namespace {

void require_same_induced(const ExtractedCocycle& x1, const ExtractedCocycle& x2) {
  if (!(x1.induced == x2.induced))
    throw std::invalid_argument("extensions: induced representations differ");
}

}  // namespace

bool extensions_isomorphic_via(const ExtensionPresentation& e1, const ExtensionPresentation& e2, const Matrix& f) {
  const ExtractedCocycle x1 = cocycle_from_extension(e1), x2 = cocycle_from_extension(e2);
  require_same_induced(x1, x2);
  const Index n = e1.base_dim(), m = e1.module_dim();
  if (f.rows() != m || f.cols() != n) throw std::invalid_argument("extensions: f has the wrong shape");
  const Matrix s1 = section_of(e1), s2 = section_of(e2);
  const Matrix r1 = inverse(hstack(e1.inclusion, s1)).topRows(m);
  const Matrix phi = s2 * e1.projection + e2.inclusion * (r1 + f * e1.projection);
  return rank(phi) == n + m && Matrix(phi * e1.inclusion) == e2.inclusion &&
         Matrix(e2.projection * phi) == e1.projection && check_homomorphism(phi, e1.total, e2.total);
}

std::optional<Matrix> find_isomorphism_witness(const ExtensionPresentation& e1, const ExtensionPresentation& e2) {
  const ExtractedCocycle x1 = cocycle_from_extension(e1), x2 = cocycle_from_extension(e2);
  require_same_induced(x1, x2);
  const Index n = e1.base_dim(), m = e1.module_dim();
  auto x = solve(coboundary_matrix(x1.induced), Vector(pack(x1.triple) - pack(x2.triple)));
  if (!x) return std::nullopt;
  Matrix f(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) f(i, j) = (*x)(i * n + j);
  if (!extensions_isomorphic_via(e1, e2, f)) throw std::logic_error("extensions: coboundary witness fails to map");
  return f;
}

}  // namespace yam
