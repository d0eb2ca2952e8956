#include "yam/cohomology.hpp"

namespace yam {

UnknownLayout cochain_layout(Index n, Index m) {
  UnknownLayout l;
  l.add("mu", {n, n}, m);
  l.add("F", {n, n, n}, m);
  l.add("G", {n, n, n}, m);
  return l;
}

Vector pack(const CochainTriple& t) {
  const Index m = t.mu.output_dim(), n = t.mu.arity() == 2 ? t.mu.input_dim(0) : 0;
  return cochain_layout(n, m).pack({{"mu", t.mu}, {"F", t.F}, {"G", t.G}});
}

CochainTriple unpack_cochain(const Vector& x, Index n, Index m) {
  auto ops = cochain_layout(n, m).unpack(x);
  return CochainTriple{ops.at("mu"), ops.at("F"), ops.at("G")};
}

CochainTriple zero_cochain(Index n, Index m) { return CochainTriple{Op({n, n}, m), Op({n, n, n}, m), Op({n, n, n}, m)}; }

namespace {

const std::map<std::string, std::string>& cochain_names() {
  static const std::map<std::string, std::string> names = {{"dot", "mu"}, {"curly", "F"}, {"dcurly", "G"}};
  return names;
}

// Every way of replacing one op node of t by its cochain, with the ops above
// it turned into the matching actions.
void cochain_variants(const Term& t, std::vector<Term>& out) {
  if (t.is_variable()) return;
  Term own = t;
  own.op = cochain_names().at(t.op);
  out.push_back(std::move(own));
  for (std::size_t k = 0; k < t.args.size(); ++k) {
    std::vector<Term> inner;
    cochain_variants(t.args[k], inner);
    std::string pattern(t.args.size(), 'a');
    pattern[k] = 'm';
    for (Term& v : inner) {
      Term copy = t;
      copy.op = t.op + "_" + pattern;
      copy.args[k] = std::move(v);
      out.push_back(std::move(copy));
    }
  }
}

void require_representation(const AssYRepresentation& r) {
  auto report = check_representation(r);
  if (!report.passed()) throw RepresentationError(std::move(report));
}

}  // namespace

const std::vector<Identity>& cocycle_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const Identity& id : axioms(AlgebraClass::AssY)) {
      Identity c{id.family, id.name, id.variables, {}};
      for (const Monomial& mono : id.expr) {
        std::vector<Term> variants;
        cochain_variants(mono.term, variants);
        for (Term& v : variants) c.expr.push_back(Monomial{mono.coefficient, std::move(v)});
      }
      out.push_back(std::move(c));
    }
    return out;
  }();
  return ids;
}

Matrix cocycle_matrix(const AssYRepresentation& r) {
  require_representation(r);
  const Index n = r.base.dim, m = r.module_dim;
  const UnknownLayout layout = cochain_layout(n, m);
  const OpTable known = r.table();
  std::vector<Vector> rows;
  for (const Identity& id : cocycle_identities()) {
    const std::vector<Index> dims(id.variables.size(), n);
    for_each_identity_row(id, layout, known, dims, [&](const Vector& row) { rows.push_back(row); });
  }
  Matrix out(static_cast<Index>(rows.size()), layout.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = rows[i].transpose();
  return out;
}

CochainTriple coboundary_of(const Matrix& f, const AssYRepresentation& r) {
  r.validate();
  const Index n = r.base.dim, m = r.module_dim;
  if (f.rows() != m || f.cols() != n) throw std::invalid_argument("coboundary_of: map shape mismatch");
  OpTable t = r.table();
  t.set("f", linear_op(f));
  return CochainTriple{
      tabulate("a b", "dot_ma(f(a),b) + dot_am(a,f(b)) - f(dot(a,b))", t, {n, n}, m),
      tabulate("a b c", "curly_maa(f(a),b,c) + curly_ama(a,f(b),c) + curly_aam(a,b,f(c)) - f(curly(a,b,c))", t,
               {n, n, n}, m),
      tabulate("a b c", "dcurly_maa(f(a),b,c) + dcurly_ama(a,f(b),c) + dcurly_aam(a,b,f(c)) - f(dcurly(a,b,c))", t,
               {n, n, n}, m)};
}

Matrix coboundary_matrix(const AssYRepresentation& r) {
  const Index n = r.base.dim, m = r.module_dim;
  Matrix out(cochain_layout(n, m).size(), m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix f = Matrix::Zero(m, n);
      f(i, j) = 1;
      out.col(i * n + j) = pack(coboundary_of(f, r));
    }
  return out;
}

namespace {

std::vector<CochainTriple> as_cochains(const Matrix& columns, Index n, Index m) {
  std::vector<CochainTriple> out;
  for (Index k = 0; k < columns.cols(); ++k) out.push_back(unpack_cochain(columns.col(k), n, m));
  return out;
}

}  // namespace

std::vector<CochainTriple> cocycle_space(const AssYRepresentation& r) {
  return as_cochains(kernel_basis(cocycle_matrix(r)), r.base.dim, r.module_dim);
}

std::vector<CochainTriple> coboundary_space(const AssYRepresentation& r) {
  require_representation(r);
  return as_cochains(column_basis(coboundary_matrix(r)), r.base.dim, r.module_dim);
}

std::vector<Matrix> derivation_space(const AssYRepresentation& r) {
  require_representation(r);
  const Index n = r.base.dim, m = r.module_dim;
  const Matrix k = kernel_basis(coboundary_matrix(r));
  std::vector<Matrix> out;
  for (Index c = 0; c < k.cols(); ++c) {
    Matrix f(m, n);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) f(i, j) = k(i * n + j, c);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_cocycle(const CochainTriple& t, const AssYRepresentation& r) {
  return is_zero_matrix(Vector(cocycle_matrix(r) * pack(t)));
}

CohomologyResult cohomology(const AssYRepresentation& r) {
  const Index n = r.base.dim, m = r.module_dim;
  const Matrix cocycles = cocycle_matrix(r);
  const Matrix z = kernel_basis(cocycles);
  const Matrix b = column_basis(coboundary_matrix(r));
  if (!is_zero_matrix(Matrix(cocycles * b))) throw std::logic_error("cohomology: a coboundary is not a cocycle");
  Matrix span = b;
  Index span_rank = b.cols();
  Matrix reps(z.rows(), 0);
  for (Index k = 0; k < z.cols(); ++k) {
    Matrix candidate = hstack(span, Matrix(z.col(k)));
    if (rank(candidate) == span_rank) continue;
    span = std::move(candidate);
    ++span_rank;
    reps = hstack(reps, Matrix(z.col(k)));
  }
  CohomologyResult out;
  out.dim_Z = z.cols();
  out.dim_B = b.cols();
  out.dim_H = out.dim_Z - out.dim_B;
  if (reps.cols() != out.dim_H) throw std::logic_error("cohomology: representative count differs from dim H");
  out.z_basis = as_cochains(z, n, m);
  out.b_basis = as_cochains(b, n, m);
  out.h_representatives = as_cochains(reps, n, m);
  return out;
}

AlgebraPresentation twisted_semidirect(const AssYRepresentation& r, const CochainTriple& t) { return semidirect(r, t); }

}  // namespace yam
