#include "yam/algebras.hpp"

#include <array>
#include <sstream>

namespace yam {

namespace {

struct ClassInfo {
  AlgebraClass kind;
  const char* tag;
};

constexpr ClassInfo kClasses[] = {
    {AlgebraClass::Ass, "ass"},         {AlgebraClass::LieY, "liey"},   {AlgebraClass::Lts, "lts"},
    {AlgebraClass::Ats, "ats"},         {AlgebraClass::Wats, "wats"},   {AlgebraClass::Leibniz, "leibniz"},
    {AlgebraClass::Diass, "diass"},     {AlgebraClass::AssY, "assy"},   {AlgebraClass::Dend, "dend"},
    {AlgebraClass::DendY, "dendy"},     {AlgebraClass::Lie, "lie"},
};

using Table = std::vector<Identity>;

void add(Table& t, const std::string& family, const std::string& name, const char* vars, const char* text) {
  for (auto& id : parse_identities(name, vars, text)) {
    id.family = family;
    t.push_back(std::move(id));
  }
}

void add(Table& t, const std::string& family, const char* vars, const char* text) { add(t, family, family, vars, text); }

Table ass_table() {
  Table t;
  add(t, "assoc", "a b c", "dot(dot(a,b),c) = dot(a,dot(b,c))");
  return t;
}

Table lie_table() {
  Table t;
  add(t, "skew", "x y", "bracket(x,y) + bracket(y,x)");
  add(t, "Jacobi", "x y z", "bracket(bracket(x,y),z) + bracket(bracket(y,z),x) + bracket(bracket(z,x),y)");
  return t;
}

Table leibniz_table() {
  Table t;
  add(t, "Leibniz", "x y z", "bracket(x,bracket(y,z)) = bracket(bracket(x,y),z) + bracket(y,bracket(x,z))");
  return t;
}

Table liey_table() {
  Table t;
  add(t, "skew", "x y", "bracket(x,y) + bracket(y,x)");
  add(t, "skew3", "x y z", "tbracket(x,y,z) + tbracket(y,x,z)");
  add(t, "LY1", "x y z",
      "bracket(bracket(x,y),z) + bracket(bracket(y,z),x) + bracket(bracket(z,x),y)"
      " + tbracket(x,y,z) + tbracket(y,z,x) + tbracket(z,x,y)");
  add(t, "LY2", "x y z w", "tbracket(bracket(x,y),z,w) + tbracket(bracket(y,z),x,w) + tbracket(bracket(z,x),y,w)");
  add(t, "LY3", "x y z w", "tbracket(x,y,bracket(z,w)) = bracket(tbracket(x,y,z),w) + bracket(z,tbracket(x,y,w))");
  add(t, "LY4", "x y z w t",
      "tbracket(x,y,tbracket(z,w,t)) = tbracket(tbracket(x,y,z),w,t) + tbracket(z,tbracket(x,y,w),t)"
      " + tbracket(z,w,tbracket(x,y,t))");
  return t;
}

Table lts_table() {
  Table t;
  add(t, "skew3", "x y z", "tbracket(x,y,z) + tbracket(y,x,z)");
  add(t, "cyclic", "x y z", "tbracket(x,y,z) + tbracket(y,z,x) + tbracket(z,x,y)");
  add(t, "derivation", "x y z w t",
      "tbracket(x,y,tbracket(z,w,t)) = tbracket(tbracket(x,y,z),w,t) + tbracket(z,tbracket(x,y,w),t)"
      " + tbracket(z,w,tbracket(x,y,t))");
  return t;
}

Table ats_table() {
  Table t;
  add(t, "ATS", "a b c d e", "curly(curly(a,b,c),d,e) = curly(a,curly(b,c,d),e) = curly(a,b,curly(c,d,e))");
  return t;
}

void add_ay7_ay9(Table& t) {
  add(t, "AY7", "a b c d e", "curly(curly(a,b,c),d,e) = curly(a,dcurly(b,c,d),e) = curly(a,b,curly(c,d,e))");
  add(t, "AY9", "a b c d e", "dcurly(dcurly(a,b,c),d,e) = dcurly(a,curly(b,c,d),e) = dcurly(a,b,dcurly(c,d,e))");
}

Table wats_table() {
  Table t;
  add_ay7_ay9(t);
  return t;
}

Table assy_table() {
  Table t;
  add(t, "AY1", "a b c", "dot(dot(a,b),c) - dot(a,dot(b,c)) + curly(a,b,c) - dcurly(a,b,c) = 0");
  add(t, "AY2", "a b c d", "curly(dot(a,b),c,d) = curly(a,dot(b,c),d)");
  add(t, "AY3", "a b c d", "curly(a,b,dot(c,d)) = dot(curly(a,b,c),d)");
  add(t, "AY4", "a b c d", "dcurly(dot(a,b),c,d) = dot(a,dcurly(b,c,d))");
  add(t, "AY5", "a b c d", "dcurly(a,dot(b,c),d) = dcurly(a,b,dot(c,d))");
  add(t, "AY6", "a b c d", "dot(a,curly(b,c,d)) = dot(dcurly(a,b,c),d)");
  add(t, "AY7", "a b c d e", "curly(curly(a,b,c),d,e) = curly(a,dcurly(b,c,d),e) = curly(a,b,curly(c,d,e))");
  add(t, "AY8", "a b c d e", "curly(a,curly(b,c,d),e) = curly(dcurly(a,b,c),d,e)");
  add(t, "AY9", "a b c d e", "dcurly(dcurly(a,b,c),d,e) = dcurly(a,curly(b,c,d),e) = dcurly(a,b,dcurly(c,d,e))");
  add(t, "AY10", "a b c d e", "dcurly(a,dcurly(b,c,d),e) = dcurly(a,b,curly(c,d,e))");
  add(t, "AY11", "a b c d e", "curly(a,b,dcurly(c,d,e)) = dcurly(curly(a,b,c),d,e)");
  return t;
}

Table diass_table() {
  Table t;
  add(t, "assoc-left", "a b c", "left(left(a,b),c) = left(a,left(b,c))");
  add(t, "assoc-right", "a b c", "right(right(a,b),c) = right(a,right(b,c))");
  add(t, "D1", "a b c", "left(a,left(b,c)) = left(a,right(b,c))");
  add(t, "D2", "a b c", "left(right(a,b),c) = right(a,left(b,c))");
  add(t, "D3", "a b c", "right(right(a,b),c) = right(left(a,b),c)");
  return t;
}

Table dend_table() {
  Table t;
  add(t, "DD1", "a b c", "prec(prec(a,b),c) = prec(a,prec(b,c) + succ(b,c))");
  add(t, "DD2", "a b c", "prec(succ(a,b),c) = succ(a,prec(b,c))");
  add(t, "DD3", "a b c", "succ(prec(a,b) + succ(a,b),c) = succ(a,succ(b,c))");
  return t;
}

// curly_tot and dcurly_tot are the token sums, registered at check time.
Table dendy_table() {
  Table t;
  const char* v3 = "a b c";
  const char* v4 = "a b c d";
  const char* v5 = "a b c d e";
  add(t, "DY1", "DY1A", v3, "prec(prec(a,b),c) - prec(a,prec(b,c) + succ(b,c)) + curly1(a,b,c) - dcurly1(a,b,c) = 0");
  add(t, "DY1", "DY1B", v3, "prec(succ(a,b),c) - succ(a,prec(b,c)) + curly2(a,b,c) - dcurly2(a,b,c) = 0");
  add(t, "DY1", "DY1C", v3,
      "succ(prec(a,b) + succ(a,b),c) - succ(a,succ(b,c)) + curly3(a,b,c) - dcurly3(a,b,c) = 0");

  add(t, "DY2", "DY2A", v4, "curly1(prec(a,b),c,d) = curly1(a,prec(b,c) + succ(b,c),d)");
  add(t, "DY2", "DY2B", v4, "curly1(succ(a,b),c,d) = curly2(a,prec(b,c),d)");
  add(t, "DY2", "DY2C", v4, "curly2(prec(a,b) + succ(a,b),c,d) = curly2(a,succ(b,c),d)");
  add(t, "DY2", "DY2D", v4, "curly3(prec(a,b) + succ(a,b),c,d) = curly3(a,prec(b,c) + succ(b,c),d)");

  add(t, "DY3", "DY3A", v4, "curly1(a,b,prec(c,d) + succ(c,d)) = prec(curly1(a,b,c),d)");
  add(t, "DY3", "DY3B", v4, "curly2(a,b,prec(c,d) + succ(c,d)) = prec(curly2(a,b,c),d)");
  add(t, "DY3", "DY3C", v4, "curly3(a,b,prec(c,d)) = prec(curly3(a,b,c),d)");
  add(t, "DY3", "DY3D", v4, "curly3(a,b,succ(c,d)) = succ(curly_tot(a,b,c),d)");

  add(t, "DY4", "DY4A", v4, "dcurly1(prec(a,b),c,d) = prec(a,dcurly_tot(b,c,d))");
  add(t, "DY4", "DY4B", v4, "dcurly1(succ(a,b),c,d) = succ(a,dcurly1(b,c,d))");
  add(t, "DY4", "DY4C", v4, "dcurly2(prec(a,b) + succ(a,b),c,d) = succ(a,dcurly2(b,c,d))");
  add(t, "DY4", "DY4D", v4, "dcurly3(prec(a,b) + succ(a,b),c,d) = succ(a,dcurly3(b,c,d))");

  add(t, "DY5", "DY5A", v4, "dcurly1(a,prec(b,c) + succ(b,c),d) = dcurly1(a,b,prec(c,d) + succ(c,d))");
  add(t, "DY5", "DY5B", v4, "dcurly2(a,prec(b,c),d) = dcurly2(a,b,prec(c,d) + succ(c,d))");
  add(t, "DY5", "DY5C", v4, "dcurly2(a,succ(b,c),d) = dcurly3(a,b,prec(c,d))");
  add(t, "DY5", "DY5D", v4, "dcurly3(a,prec(b,c) + succ(b,c),d) = dcurly3(a,b,succ(c,d))");

  add(t, "DY6", "DY6A", v4, "prec(a,curly_tot(b,c,d)) = prec(dcurly1(a,b,c),d)");
  add(t, "DY6", "DY6B", v4, "succ(a,curly1(b,c,d)) = prec(dcurly2(a,b,c),d)");
  add(t, "DY6", "DY6C", v4, "succ(a,curly2(b,c,d)) = prec(dcurly3(a,b,c),d)");
  add(t, "DY6", "DY6D", v4, "succ(a,curly3(b,c,d)) = succ(dcurly_tot(a,b,c),d)");

  add(t, "DY7", "DY7A", v5, "curly1(curly1(a,b,c),d,e) = curly1(a,dcurly_tot(b,c,d),e) = curly1(a,b,curly_tot(c,d,e))");
  add(t, "DY7", "DY7B", v5, "curly1(curly2(a,b,c),d,e) = curly2(a,dcurly1(b,c,d),e) = curly2(a,b,curly_tot(c,d,e))");
  add(t, "DY7", "DY7C", v5, "curly1(curly3(a,b,c),d,e) = curly2(a,dcurly2(b,c,d),e) = curly3(a,b,curly1(c,d,e))");
  add(t, "DY7", "DY7D", v5, "curly2(curly_tot(a,b,c),d,e) = curly2(a,dcurly3(b,c,d),e) = curly3(a,b,curly2(c,d,e))");
  add(t, "DY7", "DY7E", v5,
      "curly3(curly_tot(a,b,c),d,e) = curly3(a,dcurly_tot(b,c,d),e) = curly3(a,b,curly3(c,d,e))");

  add(t, "DY8", "DY8A", v5, "curly1(a,curly_tot(b,c,d),e) = curly1(dcurly1(a,b,c),d,e)");
  add(t, "DY8", "DY8B", v5, "curly2(a,curly1(b,c,d),e) = curly1(dcurly2(a,b,c),d,e)");
  add(t, "DY8", "DY8C", v5, "curly2(a,curly2(b,c,d),e) = curly1(dcurly3(a,b,c),d,e)");
  add(t, "DY8", "DY8D", v5, "curly2(a,curly3(b,c,d),e) = curly2(dcurly_tot(a,b,c),d,e)");
  add(t, "DY8", "DY8E", v5, "curly3(a,curly_tot(b,c,d),e) = curly3(dcurly_tot(a,b,c),d,e)");

  add(t, "DY9", "DY9A", v5,
      "dcurly1(dcurly1(a,b,c),d,e) = dcurly1(a,curly_tot(b,c,d),e) = dcurly1(a,b,dcurly_tot(c,d,e))");
  add(t, "DY9", "DY9B", v5,
      "dcurly1(dcurly2(a,b,c),d,e) = dcurly2(a,curly1(b,c,d),e) = dcurly2(a,b,dcurly_tot(c,d,e))");
  add(t, "DY9", "DY9C", v5,
      "dcurly1(dcurly3(a,b,c),d,e) = dcurly2(a,curly2(b,c,d),e) = dcurly3(a,b,dcurly1(c,d,e))");
  add(t, "DY9", "DY9D", v5,
      "dcurly2(dcurly_tot(a,b,c),d,e) = dcurly2(a,curly3(b,c,d),e) = dcurly3(a,b,dcurly2(c,d,e))");
  add(t, "DY9", "DY9E", v5,
      "dcurly3(dcurly_tot(a,b,c),d,e) = dcurly3(a,curly_tot(b,c,d),e) = dcurly3(a,b,dcurly3(c,d,e))");

  add(t, "DY10", "DY10A", v5, "dcurly1(a,dcurly_tot(b,c,d),e) = dcurly1(a,b,curly_tot(c,d,e))");
  add(t, "DY10", "DY10B", v5, "dcurly2(a,dcurly1(b,c,d),e) = dcurly2(a,b,curly_tot(c,d,e))");
  add(t, "DY10", "DY10C", v5, "dcurly2(a,dcurly2(b,c,d),e) = dcurly3(a,b,curly1(c,d,e))");
  add(t, "DY10", "DY10D", v5, "dcurly2(a,dcurly3(b,c,d),e) = dcurly3(a,b,curly2(c,d,e))");
  add(t, "DY10", "DY10E", v5, "dcurly3(a,dcurly_tot(b,c,d),e) = dcurly3(a,b,curly3(c,d,e))");

  add(t, "DY11", "DY11A", v5, "curly1(a,b,dcurly_tot(c,d,e)) = dcurly1(curly1(a,b,c),d,e)");
  add(t, "DY11", "DY11B", v5, "curly2(a,b,dcurly_tot(c,d,e)) = dcurly1(curly2(a,b,c),d,e)");
  add(t, "DY11", "DY11C", v5, "curly3(a,b,dcurly1(c,d,e)) = dcurly1(curly3(a,b,c),d,e)");
  add(t, "DY11", "DY11D", v5, "curly3(a,b,dcurly2(c,d,e)) = dcurly2(curly_tot(a,b,c),d,e)");
  add(t, "DY11", "DY11E", v5, "curly3(a,b,dcurly3(c,d,e)) = dcurly3(curly_tot(a,b,c),d,e)");
  return t;
}

}  // namespace

std::string to_string(AlgebraClass c) {
  for (const auto& info : kClasses)
    if (info.kind == c) return info.tag;
  throw std::invalid_argument("unknown class");
}

AlgebraClass parse_class(std::string_view tag) {
  for (const auto& info : kClasses)
    if (tag == info.tag) return info.kind;
  throw std::invalid_argument("unknown class tag '" + std::string(tag) + "'");
}

const std::vector<std::pair<std::string, int>>& required_ops(AlgebraClass c) {
  static const std::map<AlgebraClass, std::vector<std::pair<std::string, int>>> table = {
      {AlgebraClass::Ass, {{"dot", 2}}},
      {AlgebraClass::Lie, {{"bracket", 2}}},
      {AlgebraClass::Leibniz, {{"bracket", 2}}},
      {AlgebraClass::LieY, {{"bracket", 2}, {"tbracket", 3}}},
      {AlgebraClass::Lts, {{"tbracket", 3}}},
      {AlgebraClass::Ats, {{"curly", 3}}},
      {AlgebraClass::Wats, {{"curly", 3}, {"dcurly", 3}}},
      {AlgebraClass::AssY, {{"dot", 2}, {"curly", 3}, {"dcurly", 3}}},
      {AlgebraClass::Diass, {{"left", 2}, {"right", 2}}},
      {AlgebraClass::Dend, {{"prec", 2}, {"succ", 2}}},
      {AlgebraClass::DendY,
       {{"prec", 2}, {"succ", 2}, {"curly1", 3}, {"curly2", 3}, {"curly3", 3}, {"dcurly1", 3}, {"dcurly2", 3},
        {"dcurly3", 3}}},
  };
  return table.at(c);
}

const Op& AlgebraPresentation::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) throw std::invalid_argument(to_string(kind) + " algebra has no operation '" + name + "'");
  return it->second;
}

OpTable AlgebraPresentation::table() const {
  OpTable t;
  for (const auto& [name, o] : ops) t.set(name, o);
  if (kind == AlgebraClass::DendY) {
    t.set("curly_tot", op("curly1") + op("curly2") + op("curly3"));
    t.set("dcurly_tot", op("dcurly1") + op("dcurly2") + op("dcurly3"));
  }
  return t;
}

void AlgebraPresentation::validate() const {
  const auto& req = required_ops(kind);
  for (const auto& [name, arity] : req) {
    auto it = ops.find(name);
    if (it == ops.end()) throw std::invalid_argument(to_string(kind) + ": missing operation '" + name + "'");
    const Op& o = it->second;
    bool ok = o.arity() == arity && o.output_dim() == dim;
    for (Index d : o.input_dims()) ok = ok && d == dim;
    if (!ok) throw std::invalid_argument(to_string(kind) + ": operation '" + name + "' does not match dim " + std::to_string(dim));
  }
  for (const auto& [name, o] : ops) {
    bool known = false;
    for (const auto& r : req) known = known || r.first == name;
    if (!known) throw std::invalid_argument(to_string(kind) + ": unexpected operation '" + name + "'");
  }
}

AlgebraPresentation zero_algebra(AlgebraClass c, Index dim) {
  AlgebraPresentation a{c, dim, {}};
  for (const auto& [name, arity] : required_ops(c)) a.ops.emplace(name, Op::on_space(arity, dim));
  return a;
}

std::set<std::string> AxiomReport::failed_families() const {
  std::set<std::string> out;
  for (const auto& [name, count] : failures_per_identity) {
    (void)count;
    auto it = family_of_identity.find(name);
    out.insert(it == family_of_identity.end() ? name : it->second);
  }
  return out;
}

std::set<std::string> AxiomReport::failed_identities() const {
  std::set<std::string> out;
  for (const auto& [name, count] : failures_per_identity) {
    (void)count;
    out.insert(name);
  }
  return out;
}

Index AxiomReport::families_passed() const {
  return static_cast<Index>(families.size()) - static_cast<Index>(failed_families().size());
}

std::string AxiomReport::summary() const {
  std::ostringstream s;
  s << label << ": " << families_passed() << "/" << families.size() << " families pass";
  return s.str();
}

const std::vector<Identity>& axioms(AlgebraClass c) {
  static const std::map<AlgebraClass, Table> tables = {
      {AlgebraClass::Ass, ass_table()},       {AlgebraClass::Lie, lie_table()},
      {AlgebraClass::Leibniz, leibniz_table()}, {AlgebraClass::LieY, liey_table()},
      {AlgebraClass::Lts, lts_table()},       {AlgebraClass::Ats, ats_table()},
      {AlgebraClass::Wats, wats_table()},     {AlgebraClass::AssY, assy_table()},
      {AlgebraClass::Diass, diass_table()},   {AlgebraClass::Dend, dend_table()},
      {AlgebraClass::DendY, dendy_table()},
  };
  return tables.at(c);
}

std::string family_of(const IdentityFailure& f, const std::vector<Identity>& table) {
  for (const auto& id : table)
    if (id.name == f.identity) return id.family;
  return f.identity;
}

AxiomReport run_identities(const std::string& label, const std::vector<Identity>& ids, const OpTable& ops,
                           const std::function<std::vector<Index>(const Identity&)>& var_dims,
                           const CheckOptions& opts) {
  AxiomReport r;
  r.label = label;
  for (const auto& id : ids) {
    if (r.families.empty() || r.families.back() != id.family) r.families.push_back(id.family);
    ++r.identities;
    r.family_of_identity[id.name] = id.family;
    auto dims = var_dims(id);
    auto res = check_identity(id, ops, dims, opts.max_failures_per_identity);
    r.evaluations += res.tuples;
    if (res.failures_total > 0) r.failures_per_identity[id.name] = res.failures_total;
    for (auto& f : res.failures) r.failures.push_back(std::move(f));
  }
  return r;
}

AxiomReport check_axioms(const AlgebraPresentation& a, const CheckOptions& opts) {
  a.validate();
  const Index n = a.dim;
  return run_identities(to_string(a.kind), axioms(a.kind), a.table(),
                        [n](const Identity& id) { return std::vector<Index>(id.variables.size(), n); }, opts);
}

namespace {

std::string violation_text(const AxiomReport& r) {
  std::string s = r.summary();
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    s += "; first failure " + f.identity + " at (";
    for (std::size_t i = 0; i < f.tuple.size(); ++i) s += (i ? "," : "") + std::to_string(f.tuple[i]);
    s += ")";
  }
  return s;
}

}  // namespace

AxiomViolation::AxiomViolation(AxiomReport report)
    : std::invalid_argument(violation_text(report)), report_(std::move(report)) {}

void require_axioms(const AlgebraPresentation& a, AlgebraClass expected) {
  if (a.kind != expected)
    throw std::invalid_argument("expected a " + to_string(expected) + " algebra, got " + to_string(a.kind));
  auto r = check_axioms(a);
  if (!r.passed()) throw AxiomViolation(std::move(r));
}

bool check_homomorphism(const Matrix& phi, const AlgebraPresentation& src, const AlgebraPresentation& dst) {
  if (src.kind != dst.kind) throw std::invalid_argument("check_homomorphism: class mismatch");
  if (phi.rows() != dst.dim || phi.cols() != src.dim) throw std::invalid_argument("check_homomorphism: map shape mismatch");
  for (const auto& [name, op] : src.ops) {
    std::vector<Matrix> maps(static_cast<std::size_t>(op.arity()), phi);
    if (!(pushforward(phi, op) == pullback(dst.op(name), maps))) return false;
  }
  return true;
}

std::pair<Matrix, Matrix> sigma_tau_of(const AlgebraPresentation& a, const Vector& x, const Vector& y) {
  if (a.kind != AlgebraClass::AssY) throw std::invalid_argument("sigma_tau_of: assy algebra required");
  const Index n = a.dim;
  Matrix sigma(n, n), tau(n, n);
  for (Index c = 0; c < n; ++c) {
    Vector e = unit_vector<Rational>(n, c);
    sigma.col(c) = evaluate(a.op("curly"), {x, y, e});
    tau.col(c) = evaluate(a.op("dcurly"), {e, x, y});
  }
  return {sigma, tau};
}

AxiomReport check_sigma_tau(const AlgebraPresentation& a) {
  a.validate();
  if (a.kind != AlgebraClass::AssY) throw std::invalid_argument("check_sigma_tau: assy algebra required");
  const Index n = a.dim;
  const Op& dot = a.op("dot");
  auto e = [n](Index i) { return unit_vector<Rational>(n, i); };
  auto mul = [&](const Vector& x, const Vector& y) { return evaluate(dot, {x, y}); };
  // sigma and tau are bilinear in their two labels
  std::vector<Matrix> sig(static_cast<std::size_t>(n * n)), ta(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto [s, t] = sigma_tau_of(a, e(i), e(j));
      sig[static_cast<std::size_t>(i * n + j)] = s;
      ta[static_cast<std::size_t>(i * n + j)] = t;
    }
  auto combine = [n](const std::vector<Matrix>& family, const Vector& x, const Vector& y) {
    Matrix out = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      if (is_zero(x(i))) continue;
      for (Index j = 0; j < n; ++j)
        if (!is_zero(y(j))) out += family[static_cast<std::size_t>(i * n + j)] * (x(i) * y(j));
    }
    return out;
  };
  auto sigma = [&](const Vector& x, const Vector& y) { return combine(sig, x, y); };
  auto tau = [&](const Vector& x, const Vector& y) { return combine(ta, x, y); };

  AxiomReport r;
  r.label = "assy (sigma/tau)";
  for (int k = 1; k <= 11; ++k) r.families.push_back("AY" + std::to_string(k));
  auto flatten = [](const Matrix& m) {
    Vector v(m.size());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
  };
  auto record = [&](const std::string& name, std::span<const Index> t, const Vector& residual) {
    ++r.evaluations;
    r.family_of_identity[name] = name.substr(0, name.find('.'));
    if (is_zero_matrix(residual)) return;
    auto& count = r.failures_per_identity[name];
    if (++count <= 20) r.failures.push_back(IdentityFailure{name, std::vector<Index>(t.begin(), t.end()), residual});
  };
  r.identities = 13;
  std::vector<Index> d3(3, n), d4(4, n);
  for_each_tuple(d3, [&](std::span<const Index> t) {
    Vector a0 = e(t[0]), b = e(t[1]), c = e(t[2]);
    record("AY1", t, mul(mul(a0, b), c) - mul(a0, mul(b, c)) + sigma(a0, b) * c - tau(b, c) * a0);
    record("AY2", t, flatten(sigma(mul(a0, b), c) - sigma(a0, mul(b, c))));
    record("AY5", t, flatten(tau(mul(a0, b), c) - tau(a0, mul(b, c))));
  });
  for_each_tuple(d4, [&](std::span<const Index> t) {
    Vector a0 = e(t[0]), b = e(t[1]), c = e(t[2]), d = e(t[3]);
    Matrix sab = sigma(a0, b), tab = tau(a0, b), scd = sigma(c, d), tcd = tau(c, d);
    Matrix sbc = sigma(b, c), tbc = tau(b, c);
    record("AY3", t, sab * mul(c, d) - mul(sab * c, d));
    record("AY4", t, tab * mul(c, d) - mul(c, tab * d));
    record("AY6", t, mul(a0, sbc * d) - mul(tbc * a0, d));
    record("AY7.1", t, flatten(sab * scd - sigma(sab * c, d)));
    record("AY7.2", t, flatten(sigma(sab * c, d) - sigma(a0, tcd * b)));
    record("AY8", t, flatten(sigma(a0, sbc * d) - sigma(tbc * a0, d)));
    record("AY9.1", t, flatten(tab * tcd - tau(c, tab * d)));
    record("AY9.2", t, flatten(tau(c, tab * d) - tau(scd * a0, b)));
    record("AY10", t, flatten(tau(tab * c, d) - tau(c, sab * d)));
    record("AY11", t, flatten(sab * tcd - tcd * sab));
  });
  return r;
}

namespace {

Op mul_table(Index n, std::initializer_list<std::array<Index, 3>> entries) {
  Op op = Op::on_space(2, n);
  for (const auto& [i, j, k] : entries) op({i, j, k}) = 1;
  return op;
}

AlgebraPresentation assy_of_ass(const Op& dot) {
  Op chain = substitute(dot, 0, dot);
  AlgebraPresentation a{AlgebraClass::AssY, dot.output_dim(), {}};
  a.ops.emplace("dot", dot);
  a.ops.emplace("curly", chain);
  a.ops.emplace("dcurly", chain);
  return a;
}

}  // namespace

AlgebraPresentation fixture_zero(Index n) { return zero_algebra(AlgebraClass::AssY, n); }

AlgebraPresentation fixture_k1_ass() {
  return AlgebraPresentation{AlgebraClass::Ass, 1, {{"dot", mul_table(1, {{0, 0, 0}})}}};
}

AlgebraPresentation fixture_k1() { return assy_of_ass(fixture_k1_ass().op("dot")); }

AlgebraPresentation fixture_n2_ass() {
  return AlgebraPresentation{AlgebraClass::Ass, 2, {{"dot", mul_table(2, {{0, 0, 1}})}}};
}

AlgebraPresentation fixture_n2() { return assy_of_ass(fixture_n2_ass().op("dot")); }

AlgebraPresentation fixture_d1() {
  Op dot = fixture_k1_ass().op("dot");
  return AlgebraPresentation{AlgebraClass::Diass, 1, {{"left", dot}, {"right", dot}}};
}

AlgebraPresentation fixture_t2_ass() {
  // basis (e, x): e.e = e, e.x = x
  return AlgebraPresentation{AlgebraClass::Ass, 2, {{"dot", mul_table(2, {{0, 0, 0}, {0, 1, 1}})}}};
}

}  // namespace yam
