#include "yam/rota_baxter.hpp"

#include "yam/functors.hpp"

#include <cctype>

namespace yam {

void RelativeRBO::validate() const {
  rep.validate();
  if (map.rows() != rep.base.dim || map.cols() != rep.module_dim)
    throw std::invalid_argument("relative Rota-Baxter operator: map must be " + std::to_string(rep.base.dim) + " x " +
                                std::to_string(rep.module_dim));
}

namespace {

const std::vector<Identity>& rbo_identities() {
  static const std::vector<Identity> ids = {
      parse_identity("RB1", "u v", "dot(R(u),R(v)) = R(dot_am(R(u),v) + dot_ma(u,R(v)))"),
      parse_identity("RB2", "u v w",
                     "curly(R(u),R(v),R(w)) = R(curly_aam(R(u),R(v),w) + curly_ama(R(u),v,R(w)) + "
                     "curly_maa(u,R(v),R(w)))"),
      parse_identity("RB3", "u v w",
                     "dcurly(R(u),R(v),R(w)) = R(dcurly_aam(R(u),R(v),w) + dcurly_ama(R(u),v,R(w)) + "
                     "dcurly_maa(u,R(v),R(w)))"),
  };
  return ids;
}

OpTable rbo_table(const RelativeRBO& r) {
  OpTable t = r.rep.table();
  t.set("R", linear_op(r.map));
  return t;
}

}  // namespace

AxiomReport check_rbo(const RelativeRBO& r, const CheckOptions& opts) {
  r.validate();
  AxiomReport rep_report = check_representation(r.rep);
  if (!rep_report.passed()) throw RepresentationError(std::move(rep_report));
  const Index m = r.rep.module_dim;
  return run_identities(
      "relative Rota-Baxter", rbo_identities(), rbo_table(r),
      [m](const Identity& id) { return std::vector<Index>(id.variables.size(), m); }, opts);
}

bool check_graph(const RelativeRBO& r) {
  r.validate();
  const Index n = r.rep.base.dim, m = r.rep.module_dim;
  Matrix graph(n + m, m);
  graph << r.map, Matrix::Identity(m, m);
  const AlgebraPresentation sd = semidirect(r.rep);
  for (const auto& [name, arity] : required_ops(AlgebraClass::AssY)) {
    // The op restricted to the graph, as a map M^k -> A + M.
    const Op restricted = pullback(sd.op(name), std::vector<Matrix>(static_cast<std::size_t>(arity), graph));
    bool closed = true;
    for_each_tuple(restricted.input_dims(), [&](std::span<const Index> t) {
      if (closed && !in_span(graph, Vector(restricted.output_at(t)))) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

AlgebraPresentation induced_dendy(const RelativeRBO& r) {
  AxiomReport report = check_rbo(r);
  if (!report.passed()) throw RotaBaxterError(std::move(report));
  const Index m = r.rep.module_dim;
  const OpTable t = rbo_table(r);
  AlgebraPresentation d{AlgebraClass::DendY, m, {}};
  d.ops["prec"] = tabulate("u v", "dot_ma(u,R(v))", t, {m, m}, m);
  d.ops["succ"] = tabulate("u v", "dot_am(R(u),v)", t, {m, m}, m);
  for (const std::string op : {"curly", "dcurly"}) {
    d.ops[op + "1"] = tabulate("u v w", op + "_maa(u,R(v),R(w))", t, {m, m, m}, m);
    d.ops[op + "2"] = tabulate("u v w", op + "_ama(R(u),v,R(w))", t, {m, m, m}, m);
    d.ops[op + "3"] = tabulate("u v w", op + "_aam(R(u),R(v),w)", t, {m, m, m}, m);
  }
  if (!check_axioms(d).passed()) throw std::logic_error("induced_dendy: the induced structure fails the dendy axioms");
  return d;
}

AssYRepresentation total_representation(const AlgebraPresentation& d) {
  if (d.kind != AlgebraClass::DendY) throw std::invalid_argument("total_representation: expected a dendy algebra");
  d.validate();
  AssYRepresentation r;
  r.base = AlgebraPresentation{AlgebraClass::AssY,
                               d.dim,
                               {{"dot", d.op("prec") + d.op("succ")},
                                {"curly", d.op("curly1") + d.op("curly2") + d.op("curly3")},
                                {"dcurly", d.op("dcurly1") + d.op("dcurly2") + d.op("dcurly3")}}};
  r.module_dim = d.dim;
  r.actions["dot_am"] = d.op("succ");
  r.actions["dot_ma"] = d.op("prec");
  for (const std::string op : {"curly", "dcurly"}) {
    r.actions[op + "_aam"] = d.op(op + "3");
    r.actions[op + "_ama"] = d.op(op + "2");
    r.actions[op + "_maa"] = d.op(op + "1");
  }
  return r;
}

RelativeRBO identity_rbo_of(const AlgebraPresentation& d) {
  require_axioms(d, AlgebraClass::DendY);
  RelativeRBO r{total_representation(d), Matrix::Identity(d.dim, d.dim)};
  if (!check_representation(r.rep).passed())
    throw std::logic_error("identity_rbo_of: D is not a representation of its total algebra");
  if (!check_rbo(r).passed()) throw std::logic_error("identity_rbo_of: Id is not a relative Rota-Baxter operator");
  return r;
}

std::string dendy_identity_for(const std::string& polarized_name) {
  const auto open = polarized_name.rfind('[');
  if (polarized_name.rfind("AY", 0) != 0 || open == std::string::npos || polarized_name.size() != open + 3 ||
      polarized_name.back() != ']')
    throw std::invalid_argument("not a polarized assy identity: " + polarized_name);
  const std::string stem = polarized_name.substr(2, open - 2);  // "7.2" or "1"
  const auto dot = stem.find('.');
  const std::string number = stem.substr(0, dot);
  const std::string link = dot == std::string::npos ? "" : stem.substr(dot);
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(polarized_name[open + 1])));
  return "DY" + number + letter + link;
}

}  // namespace yam
