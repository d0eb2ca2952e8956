#include "yam/representations.hpp"

namespace yam {

namespace {

Index slot_dim(char c, Index n, Index m) { return c == 'm' ? m : n; }

std::vector<Index> slot_dims(const std::string& pattern, Index n, Index m) {
  std::vector<Index> dims;
  for (char c : pattern) dims.push_back(slot_dim(c, n, m));
  return dims;
}

AssYRepresentation make_rep(const AlgebraPresentation& base, Index m, std::map<std::string, Op> actions) {
  AssYRepresentation r{base, m, std::move(actions)};
  r.validate();
  return r;
}

// Representations built from valid source data must pass; a failure here is
// a bug, not bad input.
AssYRepresentation checked(AssYRepresentation r, const char* what) {
  auto report = check_representation(r);
  if (!report.passed())
    throw std::logic_error(std::string(what) + ": constructed representation fails: " + report.summary());
  return r;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& action_slots() {
  static const std::vector<std::pair<std::string, std::string>> slots = {
      {"dot_am", "am"},      {"dot_ma", "ma"},       {"curly_aam", "aam"},  {"curly_ama", "ama"},
      {"curly_maa", "maa"}, {"dcurly_aam", "aam"}, {"dcurly_ama", "ama"}, {"dcurly_maa", "maa"}};
  return slots;
}

const Op& AssYRepresentation::action(const std::string& name) const {
  auto it = actions.find(name);
  if (it == actions.end()) throw std::invalid_argument("representation: missing action " + name);
  return it->second;
}

OpTable AssYRepresentation::table() const {
  OpTable t = base.table();
  for (const auto& [name, op] : actions) t.set(name, op);
  return t;
}

void AssYRepresentation::validate() const {
  base.validate();
  if (base.kind != AlgebraClass::AssY) throw std::invalid_argument("representation: base must be an assy algebra");
  if (module_dim < 0) throw std::invalid_argument("representation: negative module dimension");
  for (const auto& [name, pattern] : action_slots()) {
    const Op& op = action(name);
    if (op.input_dims() != slot_dims(pattern, base.dim, module_dim) || op.output_dim() != module_dim)
      throw std::invalid_argument("representation: action " + name + " has the wrong shape");
  }
  for (const auto& [name, op] : actions) {
    bool known = false;
    for (const auto& s : action_slots()) known = known || s.first == name;
    if (!known) throw std::invalid_argument("representation: unexpected action " + name);
  }
}

AssYRepresentation zero_representation(const AlgebraPresentation& a, Index module_dim) {
  std::map<std::string, Op> actions;
  for (const auto& [name, pattern] : action_slots())
    actions.emplace(name, Op(slot_dims(pattern, a.dim, module_dim), module_dim));
  return make_rep(a, module_dim, std::move(actions));
}

AssYRepresentation adjoint_representation(const AlgebraPresentation& a) {
  std::map<std::string, Op> actions;
  for (const auto& [name, pattern] : action_slots()) actions.emplace(name, a.op(name.substr(0, name.find('_'))));
  return make_rep(a, a.dim, std::move(actions));
}

AlgebraPresentation semidirect(const AssYRepresentation& r) {
  const Index n = r.base.dim, m = r.module_dim;
  return semidirect(r, CochainTriple{Op({n, n}, m), Op({n, n, n}, m), Op({n, n, n}, m)});
}

AlgebraPresentation semidirect(const AssYRepresentation& r, const CochainTriple& twist) {
  r.validate();
  const Index n = r.base.dim, m = r.module_dim, total = n + m;
  if (twist.mu.input_dims() != std::vector<Index>{n, n} || twist.mu.output_dim() != m ||
      twist.F.input_dims() != std::vector<Index>{n, n, n} || twist.F.output_dim() != m ||
      twist.G.input_dims() != std::vector<Index>{n, n, n} || twist.G.output_dim() != m)
    throw std::invalid_argument("semidirect: twist shapes do not match");
  std::map<std::string, Op> ops;
  const std::map<std::string, const Op*> twists = {{"dot", &twist.mu}, {"curly", &twist.F}, {"dcurly", &twist.G}};
  for (const auto& [name, arity] : required_ops(AlgebraClass::AssY)) {
    Op op = Op::on_space(arity, total);
    add_block(op, r.base.op(name), std::vector<Index>(static_cast<std::size_t>(arity), 0), 0);
    add_block(op, *twists.at(name), std::vector<Index>(static_cast<std::size_t>(arity), 0), n);
    for (const auto& [action, pattern] : action_slots()) {
      if (action.substr(0, action.find('_')) != name) continue;
      std::vector<Index> offsets;
      for (char c : pattern) offsets.push_back(c == 'm' ? n : 0);
      add_block(op, r.action(action), offsets, n);
    }
    ops.emplace(name, std::move(op));
  }
  AlgebraPresentation out{AlgebraClass::AssY, total, std::move(ops)};
  out.validate();
  return out;
}

AxiomReport check_representation(const AssYRepresentation& r, const CheckOptions& opts) {
  AxiomReport report = check_axioms(semidirect(r), opts);
  report.label = "representation";
  return report;
}

namespace {

// Renames ops along the path from the M variable to the root; returns true
// when the subterm lies in M.
bool polarize(Term& t, int m_var) {
  if (t.is_variable()) return t.variable == m_var;
  std::string pattern;
  bool in_m = false;
  for (Term& arg : t.args) {
    const bool mm = polarize(arg, m_var);
    pattern += mm ? 'm' : 'a';
    in_m = in_m || mm;
  }
  if (in_m) t.op += "_" + pattern;
  return in_m;
}

}  // namespace

const std::vector<Identity>& polarized_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const Identity& id : axioms(AlgebraClass::AssY))
      for (std::size_t v = 0; v < id.variables.size(); ++v) {
        Identity p = id;
        p.name = id.name + "[" + id.variables[v] + "]";
        for (Monomial& mono : p.expr) polarize(mono.term, static_cast<int>(v));
        out.push_back(std::move(p));
      }
    return out;
  }();
  return ids;
}

Index polarized_variable(const Identity& id) {
  const auto open = id.name.rfind('[');
  if (open == std::string::npos) throw std::invalid_argument("not a polarized identity: " + id.name);
  const std::string var = id.name.substr(open + 1, id.name.size() - open - 2);
  for (std::size_t v = 0; v < id.variables.size(); ++v)
    if (id.variables[v] == var) return static_cast<Index>(v);
  throw std::invalid_argument("not a polarized identity: " + id.name);
}

AxiomReport check_polarized(const AssYRepresentation& r, const CheckOptions& opts) {
  r.validate();
  const Index n = r.base.dim, m = r.module_dim;
  return run_identities(
      "representation", polarized_identities(), r.table(),
      [n, m](const Identity& id) {
        std::vector<Index> dims(id.variables.size(), n);
        dims[static_cast<std::size_t>(polarized_variable(id))] = m;
        return dims;
      },
      opts);
}

AssYRepresentation bimodule_representation(const AlgebraPresentation& ass, const Bimodule& m) {
  require_axioms(ass, AlgebraClass::Ass);
  auto report = check_bimodule(ass, m);
  if (!report.passed()) throw RepresentationError(std::move(report));
  OpTable t = ass.table();
  t.set("lact", m.left);
  t.set("ract", m.right);
  const Index n = ass.dim, k = m.dim;
  Op aam = tabulate("a b u", "lact(dot(a,b),u)", t, {n, n, k}, k);
  Op ama = tabulate("a u b", "ract(lact(a,u),b)", t, {n, k, n}, k);
  Op maa = tabulate("u a b", "ract(ract(u,a),b)", t, {k, n, n}, k);
  return checked(make_rep(ass_to_assy(ass), k,
                          {{"dot_am", m.left},
                           {"dot_ma", m.right},
                           {"curly_aam", aam},
                           {"curly_ama", ama},
                           {"curly_maa", maa},
                           {"dcurly_aam", aam},
                           {"dcurly_ama", ama},
                           {"dcurly_maa", maa}}),
                 "bimodule_representation");
}

AssYRepresentation reductive_bimodule_representation(const ReductiveDecomposition& r, const ReductiveBimodule& rb) {
  validate(r);
  const Bimodule& mod = rb.module;
  auto report = check_bimodule(r.algebra, mod);
  if (!report.passed()) throw RepresentationError(std::move(report));
  const Index m = mod.dim;
  const Matrix& q0 = rb.projector0;
  const Matrix& q1 = rb.projector1;
  if (q0.rows() != m || q0.cols() != m || q1.rows() != m || q1.cols() != m)
    throw std::invalid_argument("reductive bimodule: projector shape mismatch");
  if (!(Matrix(q0 + q1) == Matrix(Matrix::Identity(m, m))))
    throw std::invalid_argument("reductive bimodule: projectors do not sum to the identity");
  if (!(Matrix(q0 * q0) == q0) || !(Matrix(q1 * q1) == q1))
    throw std::invalid_argument("reductive bimodule: projector not idempotent");

  const Matrix a0 = column_basis(r.projector0), a1 = column_basis(r.projector1);
  const Matrix m0 = column_basis(q0), m1 = column_basis(q1);
  // v lies in the part whose complementary projector kills it
  auto contained = [](const Op& act, const Matrix& xs, const Matrix& ys, const Matrix& complement, const char* what) {
    for (Index i = 0; i < xs.cols(); ++i)
      for (Index j = 0; j < ys.cols(); ++j) {
        const Vector v = evaluate(act, {Vector(xs.col(i)), Vector(ys.col(j))});
        if (!is_zero_matrix(Matrix(complement * v)))
          throw std::invalid_argument(std::string("reductive bimodule: ") + what + " fails");
      }
  };
  contained(mod.left, a0, m0, q1, "A0.M0 in M0");
  contained(mod.right, m0, a0, q1, "M0.A0 in M0");
  contained(mod.left, a0, m1, q0, "A0.M1 in M1");
  contained(mod.left, a1, m0, q0, "A1.M0 in M1");
  contained(mod.right, m1, a0, q0, "M1.A0 in M1");
  contained(mod.right, m0, a1, q0, "M0.A1 in M1");

  const AlgebraPresentation base = from_reductive(r);
  const Index k = base.dim, l = m1.cols();
  Matrix coord_m(l, m);
  for (Index j = 0; j < m; ++j) {
    auto x = solve(m1, Vector(q1.col(j)));
    if (!x) throw std::logic_error("reductive bimodule: projector image not spanned by its pivot columns");
    coord_m.col(j) = *x;
  }
  OpTable t = r.algebra.table();
  t.set("lact", mod.left);
  t.set("ract", mod.right);
  t.set("inca", linear_op(a1));
  t.set("incm", linear_op(m1));
  t.set("coordm", linear_op(coord_m));
  t.set("pra0", linear_op(r.projector0));
  t.set("prm0", linear_op(q0));
  auto build = [&](const char* vars, const char* expr, std::vector<Index> dims) {
    return tabulate(vars, expr, t, std::move(dims), l);
  };
  return checked(
      make_rep(base, l,
               {{"dot_am", build("a u", "coordm(lact(inca(a),incm(u)))", {k, l})},
                {"dot_ma", build("u a", "coordm(ract(incm(u),inca(a)))", {l, k})},
                {"curly_aam", build("a b u", "coordm(lact(pra0(dot(inca(a),inca(b))),incm(u)))", {k, k, l})},
                {"curly_ama", build("a u b", "coordm(ract(prm0(lact(inca(a),incm(u))),inca(b)))", {k, l, k})},
                {"curly_maa", build("u a b", "coordm(ract(prm0(ract(incm(u),inca(a))),inca(b)))", {l, k, k})},
                {"dcurly_aam", build("a b u", "coordm(lact(inca(a),prm0(lact(inca(b),incm(u)))))", {k, k, l})},
                {"dcurly_ama", build("a u b", "coordm(lact(inca(a),prm0(ract(incm(u),inca(b)))))", {k, l, k})},
                {"dcurly_maa", build("u a b", "coordm(ract(incm(u),pra0(dot(inca(a),inca(b)))))", {l, k, k})}}),
      "reductive_bimodule_representation");
}

AssYRepresentation pullback_representation(const Matrix& phi, const AlgebraPresentation& src,
                                           const AssYRepresentation& rep) {
  rep.validate();
  if (!check_homomorphism(phi, src, rep.base))
    throw std::invalid_argument("pullback_representation: map is not a homomorphism");
  const Index m = rep.module_dim;
  const Matrix id = Matrix::Identity(m, m);
  std::map<std::string, Op> actions;
  for (const auto& [name, pattern] : action_slots()) {
    std::vector<Matrix> maps;
    for (char c : pattern) maps.push_back(c == 'm' ? id : phi);
    actions.emplace(name, pullback(rep.action(name), maps));
  }
  return checked(make_rep(src, m, std::move(actions)), "pullback_representation");
}

DiassRepresentation adjoint_diass_representation(const AlgebraPresentation& d) {
  if (d.kind != AlgebraClass::Diass) throw std::invalid_argument("expected a diass algebra");
  return DiassRepresentation{d.dim, d.op("left"), d.op("left"), d.op("right"), d.op("right")};
}

AlgebraPresentation diass_semidirect(const AlgebraPresentation& d, const DiassRepresentation& m) {
  d.validate();
  if (d.kind != AlgebraClass::Diass) throw std::invalid_argument("expected a diass algebra");
  const Index n = d.dim, k = m.dim, total = n + k;
  for (const Op* op : {&m.left_dm, &m.right_dm})
    if (op->input_dims() != std::vector<Index>{n, k} || op->output_dim() != k)
      throw std::invalid_argument("diass representation: action shapes do not match");
  for (const Op* op : {&m.left_md, &m.right_md})
    if (op->input_dims() != std::vector<Index>{k, n} || op->output_dim() != k)
      throw std::invalid_argument("diass representation: action shapes do not match");
  Op left = Op::on_space(2, total), right = Op::on_space(2, total);
  add_block(left, d.op("left"), {0, 0}, 0);
  add_block(left, m.left_dm, {0, n}, n);
  add_block(left, m.left_md, {n, 0}, n);
  add_block(right, d.op("right"), {0, 0}, 0);
  add_block(right, m.right_dm, {0, n}, n);
  add_block(right, m.right_md, {n, 0}, n);
  AlgebraPresentation out{AlgebraClass::Diass, total, {{"left", left}, {"right", right}}};
  out.validate();
  return out;
}

AssYRepresentation diass_representation(const AlgebraPresentation& d, const DiassRepresentation& m) {
  require_axioms(d, AlgebraClass::Diass);
  auto report = check_axioms(diass_semidirect(d, m));
  if (!report.passed()) throw RepresentationError(std::move(report));
  OpTable t = d.table();
  t.set("ldm", m.left_dm);
  t.set("lmd", m.left_md);
  t.set("rdm", m.right_dm);
  t.set("rmd", m.right_md);
  const Index n = d.dim, k = m.dim;
  return checked(make_rep(diass_to_assy(d), k,
                          {{"dot_am", tabulate("a u", "ldm(a,u) + rdm(a,u)", t, {n, k}, k)},
                           {"dot_ma", tabulate("u a", "lmd(u,a) + rmd(u,a)", t, {k, n}, k)},
                           {"curly_aam", tabulate("a b u", "-rdm(right(a,b),u)", t, {n, n, k}, k)},
                           {"curly_ama", tabulate("a u b", "-rmd(rdm(a,u),b)", t, {n, k, n}, k)},
                           {"curly_maa", tabulate("u a b", "-rmd(rmd(u,a),b)", t, {k, n, n}, k)},
                           {"dcurly_aam", tabulate("a b u", "-ldm(left(a,b),u)", t, {n, n, k}, k)},
                           {"dcurly_ama", tabulate("a u b", "-lmd(ldm(a,u),b)", t, {n, k, n}, k)},
                           {"dcurly_maa", tabulate("u a b", "-lmd(lmd(u,a),b)", t, {k, n, n}, k)}}),
                 "diass_representation");
}

AssYRepresentation ats_representation(const AlgebraPresentation& t, Index module_dim, const Op& aam, const Op& ama,
                                      const Op& maa) {
  const AlgebraPresentation base = ats_to_assy(t);
  const Index n = t.dim, k = module_dim;
  AssYRepresentation r = make_rep(base, k,
                                  {{"dot_am", Op({n, k}, k)},
                                   {"dot_ma", Op({k, n}, k)},
                                   {"curly_aam", aam},
                                   {"curly_ama", ama},
                                   {"curly_maa", maa},
                                   {"dcurly_aam", aam},
                                   {"dcurly_ama", ama},
                                   {"dcurly_maa", maa}});
  auto report = check_representation(r);
  if (!report.passed()) throw RepresentationError(std::move(report));
  return r;
}

namespace {

OpTable liey_table(const LieYRepresentation& rep) {
  rep.base.validate();
  if (rep.base.kind != AlgebraClass::LieY) throw std::invalid_argument("liey representation: base must be liey");
  const Index n = rep.base.dim, m = rep.module_dim;
  if (rep.rho.input_dims() != std::vector<Index>{n, m} || rep.rho.output_dim() != m ||
      rep.nu.input_dims() != std::vector<Index>{n, n, m} || rep.nu.output_dim() != m)
    throw std::invalid_argument("liey representation: rho or nu has the wrong shape");
  OpTable t = rep.base.table();
  t.set("rho", rep.rho);
  t.set("nu", rep.nu);
  return t;
}

}  // namespace

Op lie_yamaguti_d(const LieYRepresentation& rep) {
  OpTable t = liey_table(rep);
  const Index n = rep.base.dim, m = rep.module_dim;
  return tabulate("x y w", "rho(x,rho(y,w)) - rho(y,rho(x,w)) - rho(bracket(x,y),w) - nu(x,y,w) + nu(y,x,w)", t,
                  {n, n, m}, m);
}

AlgebraPresentation liey_semidirect(const LieYRepresentation& rep) {
  OpTable t = liey_table(rep);
  const Index n = rep.base.dim, m = rep.module_dim, total = n + m;
  Op bracket = Op::on_space(2, total), tbracket = Op::on_space(3, total);
  add_block(bracket, rep.base.op("bracket"), {0, 0}, 0);
  add_block(bracket, rep.rho, {0, n}, n);
  add_block(bracket, tabulate("u y", "-rho(y,u)", t, {m, n}, m), {n, 0}, n);
  add_block(tbracket, rep.base.op("tbracket"), {0, 0, 0}, 0);
  add_block(tbracket, lie_yamaguti_d(rep), {0, 0, n}, n);
  add_block(tbracket, tabulate("u y z", "nu(y,z,u)", t, {m, n, n}, m), {n, 0, 0}, n);
  add_block(tbracket, tabulate("x v z", "-nu(x,z,v)", t, {n, m, n}, m), {0, n, 0}, n);
  AlgebraPresentation out{AlgebraClass::LieY, total, {{"bracket", bracket}, {"tbracket", tbracket}}};
  out.validate();
  return out;
}

AxiomReport check_liey_representation(const LieYRepresentation& rep) {
  AxiomReport report = check_axioms(liey_semidirect(rep));
  report.label = "liey representation";
  return report;
}

LieYRepresentation induced_liey_rep(const AssYRepresentation& r) {
  auto report = check_representation(r);
  if (!report.passed()) throw RepresentationError(std::move(report));
  OpTable t = r.table();
  const Index n = r.base.dim, m = r.module_dim;
  return LieYRepresentation{
      assy_to_liey(r.base), m, tabulate("a u", "dot_am(a,u) - dot_ma(u,a)", t, {n, m}, m),
      tabulate("a b u", "curly_maa(u,a,b) - curly_ama(a,u,b) - dcurly_ama(b,u,a) + dcurly_aam(b,a,u)", t, {n, n, m},
               m)};
}

}  // namespace yam
