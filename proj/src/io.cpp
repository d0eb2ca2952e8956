#include "yam/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace yam {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Index index_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(where, std::string("field '") + key + "' must be a nonnegative integer");
  return static_cast<Index>(v.get<long long>());
}

void fill(const Json& j, Op& op, std::vector<Index>& prefix, std::size_t depth, const std::string& where) {
  const std::vector<Index>& dims = op.input_dims();
  const Index expected = depth < dims.size() ? dims[depth] : op.output_dim();
  if (!j.is_array() || static_cast<Index>(j.size()) != expected)
    fail(where, "expected " + std::to_string(expected) + " entries at depth " + std::to_string(depth) + ", got " +
                    (j.is_array() ? std::to_string(j.size()) : std::string("a non-array")));
  for (Index k = 0; k < expected; ++k) {
    const Json& entry = j[static_cast<std::size_t>(k)];
    if (depth == dims.size()) {
      op.at(prefix, k) = rational_from_json(entry, where);
    } else {
      prefix.push_back(k);
      fill(entry, op, prefix, depth + 1, where);
      prefix.pop_back();
    }
  }
}

Json tensor_level(const Op& op, std::vector<Index>& prefix) {
  Json out = Json::array();
  const std::size_t depth = prefix.size();
  if (depth == op.input_dims().size()) {
    auto v = op.output_at(prefix);
    for (Index k = 0; k < v.size(); ++k) out.push_back(to_json(Rational(v(k))));
    return out;
  }
  for (Index k = 0; k < op.input_dims()[depth]; ++k) {
    prefix.push_back(k);
    out.push_back(tensor_level(op, prefix));
    prefix.pop_back();
  }
  return out;
}

}  // namespace

Json to_json(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) == 1 && num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max())
    return Json(num.convert_to<long long>());
  return Json(to_string(q));
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<unsigned long long>()));
    return Rational(BigInt(j.get<long long>()));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "entry " + j.dump() + " is not an exact rational (use an integer or a \"p/q\" string)");
}

Json to_json(const Op& op) {
  std::vector<Index> prefix;
  return tensor_level(op, prefix);
}

Op op_from_json(const Json& j, const std::vector<Index>& input_dims, Index output_dim, const std::string& where) {
  Op op(input_dims, output_dim);
  std::vector<Index> prefix;
  fill(j, op, prefix, 0, where);
  return op;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_json(Rational(m(r, c))));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    fail(where, "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      fail(where, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(to_json(Rational(v(k))));
  return out;
}

Vector vector_from_json(const Json& j, Index size, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size)
    fail(where, "expected a vector with " + std::to_string(size) + " entries");
  Vector v(size);
  for (Index k = 0; k < size; ++k) v(k) = rational_from_json(j[static_cast<std::size_t>(k)], where);
  return v;
}

Json to_json(const AlgebraPresentation& a) {
  Json ops = Json::object();
  for (const auto& [name, op] : a.ops) ops[name] = to_json(op);
  return Json{{"kind", to_string(a.kind)}, {"dim", a.dim}, {"ops", ops}};
}

AlgebraPresentation algebra_from_json(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(where, "field 'kind' must be a string");
  AlgebraPresentation a;
  try {
    a.kind = parse_class(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  a.dim = index_field(j, "dim", where);
  const Json& ops = field(j, "ops", where);
  if (!ops.is_object()) fail(where, "field 'ops' must be an object");
  for (const auto& [name, arity] : required_ops(a.kind)) {
    auto it = ops.find(name);
    if (it == ops.end()) fail(where, "missing operation '" + name + "'");
    a.ops[name] = op_from_json(*it, std::vector<Index>(static_cast<std::size_t>(arity), a.dim), a.dim,
                               where + ": operation '" + name + "'");
  }
  for (const auto& [name, value] : ops.items())
    if (!a.ops.count(name)) fail(where, "unexpected operation '" + name + "' for class " + to_string(a.kind));
  return a;
}

Json to_json(const AssYRepresentation& r) {
  Json actions = Json::object();
  for (const auto& [name, op] : r.actions) actions[name] = to_json(op);
  return Json{{"algebra", to_json(r.base)}, {"module_dim", r.module_dim}, {"actions", actions}};
}

AssYRepresentation representation_from_json(const Json& j, const fs::path& base_dir,
                                             const AlgebraPresentation* fallback) {
  const std::string where = "representation";
  if (!j.is_object()) fail(where, "expected an object");
  AssYRepresentation r;
  if (j.contains("algebra")) {
    fs::path dir;
    r.base = algebra_from_json(resolve(j["algebra"], base_dir, &dir), where + ": algebra");
  } else if (fallback) {
    r.base = *fallback;
  } else {
    fail(where, "missing field 'algebra'");
  }
  if (r.base.kind != AlgebraClass::AssY) fail(where, "the algebra must be of class assy");
  r.module_dim = index_field(j, "module_dim", where);
  const Json& actions = field(j, "actions", where);
  if (!actions.is_object()) fail(where, "field 'actions' must be an object");
  const Index n = r.base.dim, m = r.module_dim;
  for (const auto& [name, pattern] : action_slots()) {
    auto it = actions.find(name);
    if (it == actions.end()) fail(where, "missing action '" + name + "'");
    std::vector<Index> dims;
    for (char c : pattern) dims.push_back(c == 'a' ? n : m);
    r.actions[name] = op_from_json(*it, dims, m, where + ": action '" + name + "'");
  }
  for (const auto& [name, value] : actions.items())
    if (!r.actions.count(name)) fail(where, "unexpected action '" + name + "'");
  return r;
}

Json to_json(const CochainTriple& t) { return Json{{"mu", to_json(t.mu)}, {"F", to_json(t.F)}, {"G", to_json(t.G)}}; }

CochainTriple cochain_from_json(const Json& j, Index n, Index m, const std::string& where) {
  return CochainTriple{op_from_json(field(j, "mu", where), {n, n}, m, where + ": mu"),
                       op_from_json(field(j, "F", where), {n, n, n}, m, where + ": F"),
                       op_from_json(field(j, "G", where), {n, n, n}, m, where + ": G")};
}

Json to_json(const TruncatedDeformation& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(to_json(t));
  return Json{{"algebra", to_json(d.base)}, {"order", d.order()}, {"terms", terms}};
}

TruncatedDeformation deformation_from_json(const Json& j, const fs::path& base_dir) {
  const std::string where = "deformation";
  TruncatedDeformation d;
  d.base = algebra_from_json(resolve(field(j, "algebra", where), base_dir), where + ": algebra");
  const Index order = index_field(j, "order", where);
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array() || static_cast<Index>(terms.size()) != order)
    fail(where, "'terms' must list exactly 'order' = " + std::to_string(order) + " entries");
  for (std::size_t k = 0; k < terms.size(); ++k)
    d.terms.push_back(cochain_from_json(terms[k], d.base.dim, d.base.dim, where + ": term " + std::to_string(k + 1)));
  return d;
}

Json to_json(const ExtensionPresentation& e) {
  Json out{{"total", to_json(e.total)}, {"i", to_json(e.inclusion)}, {"p", to_json(e.projection)}};
  if (e.section) out["s"] = to_json(*e.section);
  return out;
}

ExtensionPresentation extension_from_json(const Json& j, const fs::path& base_dir) {
  const std::string where = "extension";
  ExtensionPresentation e;
  e.total = algebra_from_json(resolve(field(j, "total", where), base_dir), where + ": total");
  const Json& i = field(j, "i", where);
  const Json& p = field(j, "p", where);
  if (!i.is_array() || i.empty() || !i[0].is_array()) fail(where, "'i' must be a nonempty matrix");
  if (!p.is_array()) fail(where, "'p' must be a matrix");
  const Index total = e.total.dim, m = static_cast<Index>(i[0].size()), n = static_cast<Index>(p.size());
  e.inclusion = matrix_from_json(i, total, m, where + ": i");
  e.projection = matrix_from_json(p, n, total, where + ": p");
  if (j.contains("s") && !j["s"].is_null()) e.section = matrix_from_json(j["s"], total, n, where + ": s");
  return e;
}

Json to_json(OperadKind kind, Index dim, const YamagutiMultiplication& ym) {
  auto encode = [&](const Element& e, int arity) {
    if (kind == OperadKind::End) return to_json(component(e, dim));
    Json per = Json::array();
    for (int t = 1; t <= arity; ++t) per.push_back(to_json(component(e, dim, t)));
    return per;
  };
  return Json{{"kind", to_string(kind)},
              {"dim", dim},
              {"pi", encode(ym.pi, 2)},
              {"theta", encode(ym.theta, 3)},
              {"vartheta", encode(ym.vartheta, 3)}};
}

std::pair<Operad, YamagutiMultiplication> ym_from_json(const Json& j) {
  const std::string where = "Yamaguti multiplication";
  const Json& kind_json = field(j, "kind", where);
  if (!kind_json.is_string()) fail(where, "field 'kind' must be a string");
  OperadKind kind;
  try {
    kind = parse_operad_kind(kind_json.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  const Index dim = index_field(j, "dim", where);
  if (dim > ElementKey::kMaxIndex) fail(where, "dim too large");
  auto decode = [&](const char* key, int arity) {
    const Json& v = field(j, key, where);
    const std::vector<Index> dims(static_cast<std::size_t>(arity), dim);
    const std::string at = where + ": " + key;
    if (kind == OperadKind::End) return element_from_op(op_from_json(v, dims, dim, at));
    if (!v.is_array() || static_cast<int>(v.size()) != arity)
      fail(at, "expected one tensor per token, " + std::to_string(arity) + " in all");
    std::vector<Op> per;
    for (int t = 0; t < arity; ++t)
      per.push_back(op_from_json(v[static_cast<std::size_t>(t)], dims, dim, at + " token " + std::to_string(t + 1)));
    return element_from_components(per);
  };
  YamagutiMultiplication ym{decode("pi", 2), decode("theta", 3), decode("vartheta", 3)};
  return {kind == OperadKind::End ? end_operad(dim) : dend_operad(dim), std::move(ym)};
}

Json to_json(const RelativeRBO& r) {
  Json rep = to_json(r.rep);
  Json algebra = rep["algebra"];
  rep.erase("algebra");
  return Json{{"algebra", algebra}, {"rep", rep}, {"R", to_json(r.map)}};
}

RelativeRBO rbo_from_json(const Json& j, const fs::path& base_dir) {
  const std::string where = "relative Rota-Baxter operator";
  RelativeRBO r;
  const AlgebraPresentation algebra =
      algebra_from_json(resolve(field(j, "algebra", where), base_dir), where + ": algebra");
  fs::path rep_dir = base_dir;
  const Json rep = resolve(field(j, "rep", where), base_dir, &rep_dir);
  r.rep = representation_from_json(rep, rep_dir, &algebra);
  if (!(r.rep.base == algebra)) fail(where, "the representation is over a different algebra");
  r.map = matrix_from_json(field(j, "R", where), algebra.dim, r.rep.module_dim, where + ": R");
  return r;
}

Json to_json(const IdentityFailure& f) {
  return Json{{"identity", f.identity}, {"tuple", f.tuple}, {"residual", to_json(f.residual)}};
}

Json to_json(const AxiomReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  Json failed = Json::array();
  for (const auto& fam : r.families)
    for (const auto& [id, count] : r.failures_per_identity)
      if (r.family_of_identity.count(id) && r.family_of_identity.at(id) == fam) {
        failed.push_back(fam);
        break;
      }
  return Json{{"label", r.label},
              {"families", r.families},
              {"failed_families", failed},
              {"identities", r.identities},
              {"evaluations", r.evaluations},
              {"failures_per_identity", r.failures_per_identity},
              {"failures", failures},
              {"passed", r.passed()}};
}

namespace {

void pretty_into(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); })) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty_into(j[k], depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(2 * depth), ' ') + "]";
    return;
  }
  if (!j.is_object() || j.empty()) {
    out += j.dump();
    return;
  }
  out += "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad + Json(key).dump() + ": ";
    pretty_into(value, depth + 1, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(2 * depth), ' ') + "}";
}

}  // namespace

std::string pretty(const Json& j) {
  std::string out;
  pretty_into(j, 0, out);
  return out;
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Json resolve(const Json& j, const fs::path& base_dir, fs::path* dir_out) {
  if (!j.is_string()) {
    if (dir_out) *dir_out = base_dir;
    return j;
  }
  const fs::path p = base_dir / j.get<std::string>();
  if (dir_out) *dir_out = p.parent_path();
  return read_json_file(p);
}

}  // namespace yam
