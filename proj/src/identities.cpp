#include "yam/identities.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <variant>

namespace yam {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  std::vector<Expr> chain() {
    std::vector<Expr> parts{sum()};
    skip();
    while (peek() == '=') {
      ++p_;
      parts.push_back(sum());
      skip();
    }
    if (p_ != s_.size()) fail("unexpected character");
    return parts;
  }

 private:
  Expr sum() {
    Expr out;
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++p_;
    }
    append(out, product(), sign);
    while (true) {
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++p_;
        append(out, product(), sign);
      } else {
        return out;
      }
    }
  }

  Expr product() {
    skip();
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = p_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++p_;
      c = parse_rational(s_.substr(start, p_ - start));
      skip();
      if (peek() == '*') {
        ++p_;
      } else if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '(') {
        // a bare number; only 0 is meaningful in an identity
        if (c != 0) fail("constant term in a multilinear identity");
        return {};
      }
    }
    Expr f = factor();
    for (auto& m : f) m.coefficient *= c;
    return f;
  }

  Expr factor() {
    skip();
    if (peek() == '(') {
      ++p_;
      Expr inner = sum();
      expect(')');
      return inner;
    }
    std::string name = ident();
    skip();
    if (peek() != '(') {
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return {Monomial{Rational(1), Term{static_cast<int>(i), {}, {}}}};
      fail("unknown variable '" + name + "'");
    }
    ++p_;
    std::vector<Expr> args{sum()};
    skip();
    while (peek() == ',') {
      ++p_;
      args.push_back(sum());
      skip();
    }
    expect(')');
    // distribute the operation over sums in its arguments
    Expr out{Monomial{Rational(1), Term{-1, name, {}}}};
    for (const Expr& a : args) {
      Expr next;
      for (const auto& partial : out)
        for (const auto& m : a) {
          Monomial x = partial;
          x.coefficient *= m.coefficient;
          x.term.args.push_back(m.term);
          next.push_back(std::move(x));
        }
      out = std::move(next);
    }
    return out;
  }

  static void append(Expr& out, const Expr& e, int sign) {
    for (const auto& m : e) out.push_back(Monomial{m.coefficient * sign, m.term});
  }

  std::string ident() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    if (start == p_) fail("expected a name");
    return std::string(s_.substr(start, p_ - start));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++p_;
  }

  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("identity parse error at " + std::to_string(p_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t p_ = 0;
};

// Merges equal terms and drops zero coefficients.
Expr normalize(Expr e) {
  Expr out;
  for (auto& m : e) {
    bool merged = false;
    for (auto& o : out)
      if (o.term == m.term) {
        o.coefficient += m.coefficient;
        merged = true;
        break;
      }
    if (!merged) out.push_back(std::move(m));
  }
  std::erase_if(out, [](const Monomial& m) { return m.coefficient == 0; });
  return out;
}

std::vector<std::string> split_words(std::string_view vars) {
  std::vector<std::string> out;
  std::istringstream in{std::string(vars)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

std::vector<Identity> parse_identities(std::string_view family, std::string_view vars, std::string_view text) {
  auto variables = split_words(vars);
  Parser parser(text, variables);
  auto parts = parser.chain();
  std::vector<Identity> out;
  if (parts.size() == 1) {
    out.push_back(Identity{std::string(family), std::string(family), variables, normalize(parts[0])});
    return out;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    Expr e = parts[i];
    for (const auto& m : parts[i + 1]) e.push_back(Monomial{-m.coefficient, m.term});
    std::string name(family);
    if (parts.size() > 2) name += "." + std::to_string(i + 1);
    out.push_back(Identity{std::string(family), name, variables, normalize(std::move(e))});
  }
  return out;
}

Identity parse_identity(std::string_view family, std::string_view vars, std::string_view text) {
  auto ids = parse_identities(family, vars, text);
  if (ids.size() != 1) throw std::invalid_argument("expected a single equation: " + std::string(text));
  return ids.front();
}

std::string to_string(const Term& t, const std::vector<std::string>& variables) {
  if (t.is_variable()) return variables.at(static_cast<std::size_t>(t.variable));
  std::string s = t.op + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ",";
    s += to_string(t.args[i], variables);
  }
  return s + ")";
}

std::string to_string(const Identity& id) {
  std::string s;
  for (const auto& m : id.expr) {
    std::string c = to_string(m.coefficient);
    if (!s.empty()) s += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') s += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (c != "1") s += c + "*";
    s += to_string(m.term, id.variables);
  }
  return (s.empty() ? "0" : s) + " = 0";
}

const Op& OpTable::get(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::invalid_argument("unknown operation '" + name + "'");
  return it->second;
}

Vector evaluate(const Term& t, const OpTable& ops, std::span<const Vector> values) {
  if (t.is_variable()) return values[static_cast<std::size_t>(t.variable)];
  std::vector<Vector> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(evaluate(a, ops, values));
  return evaluate(ops.get(t.op), std::span<const Vector>(args));
}

Vector evaluate(const Expr& e, const OpTable& ops, std::span<const Vector> values) {
  if (e.empty()) throw std::invalid_argument("evaluate: empty expression has no known dimension");
  Vector out = evaluate(e.front().term, ops, values) * e.front().coefficient;
  for (std::size_t i = 1; i < e.size(); ++i) out += evaluate(e[i].term, ops, values) * e[i].coefficient;
  return out;
}

Index output_dim(const Term& t, const OpTable& ops, std::span<const Index> var_dims) {
  if (t.is_variable()) return var_dims[static_cast<std::size_t>(t.variable)];
  return ops.get(t.op).output_dim();
}

namespace {

// Evaluates an expression on basis tuples. Subterms are shared between the
// monomials and memoized on the basis indices of the variables they contain,
// so a nested term is computed once per relevant sub-tuple.
class TupleEvaluator {
 public:
  TupleEvaluator(const Expr& e, const OpTable& ops, std::span<const Index> var_dims)
      : ops_(ops), var_dims_(var_dims.begin(), var_dims.end()) {
    for (const auto& m : e) monomials_.emplace_back(m.coefficient, add(m.term));
    for (const auto& m : monomials_)
      if (node(m.second).out_dim != output_dim()) throw std::invalid_argument("evaluate: monomial dimension mismatch");
  }

  Index output_dim() const { return node(monomials_.front().second).out_dim; }

  Vector residual(std::span<const Index> tuple) {
    Vector out = Vector::Zero(output_dim());
    for (const auto& [c, id] : monomials_)
      for (const auto& [i, v] : value(id, tuple)) out(i) += c * v;
    return out;
  }

 private:
  using Sparse = std::vector<std::pair<Index, Rational>>;

  struct Node {
    const Op* op = nullptr;
    int variable = -1;
    std::vector<int> children;
    std::vector<int> vars;  // sorted, distinct
    Index out_dim = 0;
    bool memoized = false;
    std::vector<Sparse> memo;
    std::vector<char> known;
  };

  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  int add(const Term& t) {
    std::vector<int> children;
    std::string key;
    if (t.is_variable()) {
      key = "#" + std::to_string(t.variable);
    } else {
      key = t.op + "(";
      for (const auto& a : t.args) {
        children.push_back(add(a));
        key += std::to_string(children.back()) + ",";
      }
      key += ")";
    }
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    Node n;
    if (t.is_variable()) {
      if (t.variable < 0 || t.variable >= static_cast<int>(var_dims_.size()))
        throw std::invalid_argument("evaluate: unbound variable");
      n.variable = t.variable;
      n.vars = {t.variable};
      n.out_dim = var_dims_[static_cast<std::size_t>(t.variable)];
    } else {
      n.op = &ops_.get(t.op);
      if (n.op->arity() != static_cast<int>(children.size()))
        throw std::invalid_argument("evaluate: wrong number of arguments to '" + t.op + "'");
      for (std::size_t s = 0; s < children.size(); ++s) {
        const Node& c = node(children[s]);
        if (c.out_dim != n.op->input_dims()[s])
          throw std::invalid_argument("evaluate: argument dimension mismatch for '" + t.op + "'");
        n.vars.insert(n.vars.end(), c.vars.begin(), c.vars.end());
      }
      std::sort(n.vars.begin(), n.vars.end());
      n.vars.erase(std::unique(n.vars.begin(), n.vars.end()), n.vars.end());
      n.out_dim = n.op->output_dim();
      n.children = std::move(children);
      if (n.vars.size() < var_dims_.size()) {
        std::size_t cells = 1;
        for (int v : n.vars) cells *= static_cast<std::size_t>(var_dims_[static_cast<std::size_t>(v)]);
        n.memoized = true;
        n.memo.resize(cells);
        n.known.assign(cells, 0);
      }
    }
    nodes_.push_back(std::move(n));
    const int id = static_cast<int>(nodes_.size()) - 1;
    index_.emplace(std::move(key), id);
    return id;
  }

  Sparse value(int id, std::span<const Index> tuple) {
    const Node& n = node(id);
    if (n.variable >= 0) return Sparse{{tuple[static_cast<std::size_t>(n.variable)], Rational(1)}};
    std::size_t cell = 0;
    if (n.memoized) {
      for (int v : n.vars)
        cell = cell * static_cast<std::size_t>(var_dims_[static_cast<std::size_t>(v)]) +
               static_cast<std::size_t>(tuple[static_cast<std::size_t>(v)]);
      if (n.known[cell]) return n.memo[cell];
    }
    std::vector<Sparse> args;
    args.reserve(n.children.size());
    for (int c : n.children) args.push_back(value(c, tuple));
    Node& m = nodes_[static_cast<std::size_t>(id)];
    Sparse out = apply(*m.op, args);
    if (m.memoized) {
      m.memo[cell] = out;
      m.known[cell] = 1;
    }
    return out;
  }

  static Sparse apply(const Op& op, const std::vector<Sparse>& args) {
    for (const auto& a : args)
      if (a.empty()) return {};
    const Index od = op.output_dim();
    const auto& dims = op.input_dims();
    const auto& ten = op.tensor();
    Vector acc = Vector::Zero(od);
    const std::size_t k = args.size();
    std::vector<std::size_t> pos(k, 0);
    Rational c;
    while (true) {
      c = 1;
      Index flat = 0;
      for (std::size_t s = 0; s < k; ++s) {
        const auto& [i, v] = args[s][pos[s]];
        if (v != 1) c *= v;
        flat = flat * dims[s] + i;
      }
      const bool unit = c == 1;
      for (Index j = 0; j < od; ++j) {
        const Rational& e = ten(flat * od + j);
        if (is_zero(e)) continue;
        if (unit) acc(j) += e;
        else acc(j) += c * e;
      }
      std::size_t s = k;
      while (s > 0 && ++pos[s - 1] == args[s - 1].size()) pos[--s] = 0;
      if (s == 0) break;
    }
    Sparse out;
    for (Index j = 0; j < od; ++j)
      if (!is_zero(acc(j))) out.emplace_back(j, acc(j));
    return out;
  }

  const OpTable& ops_;
  std::vector<Index> var_dims_;
  std::vector<Node> nodes_;
  std::map<std::string, int> index_;
  std::vector<std::pair<Rational, int>> monomials_;
};

}  // namespace

Op tabulate(const Expr& e, const OpTable& ops, std::vector<Index> var_dims, Index out_dim) {
  Op out(var_dims, out_dim);
  if (e.empty()) return out;
  TupleEvaluator eval(e, ops, var_dims);
  if (eval.output_dim() != out_dim) throw std::invalid_argument("tabulate: output dimension mismatch");
  for_each_tuple(var_dims, [&](std::span<const Index> t) { out.output_at(t) = eval.residual(t); });
  return out;
}

Op tabulate(std::string_view vars, std::string_view expr, const OpTable& ops, std::vector<Index> var_dims,
            Index out_dim) {
  return tabulate(parse_identity("expr", vars, expr).expr, ops, std::move(var_dims), out_dim);
}

Op linear_op(const Matrix& m) {
  Op op({m.cols()}, m.rows());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) op({j, i}) = m(i, j);
  return op;
}

Matrix matrix_of(const Op& unary) {
  if (unary.arity() != 1) throw std::invalid_argument("matrix_of: unary op required");
  Matrix m(unary.output_dim(), unary.input_dim(0));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) m(i, j) = unary({j, i});
  return m;
}

IdentityCheck check_identity(const Identity& id, const OpTable& ops, std::span<const Index> var_dims,
                             std::size_t max_failures) {
  if (var_dims.size() != id.variables.size()) throw std::invalid_argument("check_identity: variable count mismatch");
  IdentityCheck result;
  if (id.expr.empty()) {
    for_each_tuple(var_dims, [&](std::span<const Index>) { ++result.tuples; });
    return result;
  }
  TupleEvaluator eval(id.expr, ops, var_dims);
  for_each_tuple(var_dims, [&](std::span<const Index> t) {
    ++result.tuples;
    Vector r = eval.residual(t);
    if (is_zero_matrix(r)) return;
    ++result.failures_total;
    if (max_failures == 0 || result.failures.size() < max_failures)
      result.failures.push_back(IdentityFailure{id.name, std::vector<Index>(t.begin(), t.end()), r});
  });
  return result;
}

void UnknownLayout::add(const std::string& name, std::vector<Index> input_dims, Index output_dim) {
  if (find(name)) throw std::invalid_argument("duplicate unknown '" + name + "'");
  Index count = output_dim;
  for (Index d : input_dims) count *= d;
  slots_.push_back(Slot{name, std::move(input_dims), output_dim, size_});
  size_ += count;
}

const UnknownLayout::Slot* UnknownLayout::find(const std::string& name) const {
  for (const auto& s : slots_)
    if (s.name == name) return &s;
  return nullptr;
}

std::map<std::string, Op> UnknownLayout::unpack(const Vector& x) const {
  if (x.size() != size_) throw std::invalid_argument("unpack: length mismatch");
  std::map<std::string, Op> out;
  for (const auto& s : slots_) {
    Op op(s.input_dims, s.output_dim);
    op.tensor() = x.segment(s.offset, op.size());
    out.emplace(s.name, std::move(op));
  }
  return out;
}

Vector UnknownLayout::pack(const std::map<std::string, Op>& ops) const {
  Vector x = Vector::Zero(size_);
  for (const auto& s : slots_) {
    const Op& op = ops.at(s.name);
    if (op.input_dims() != s.input_dims || op.output_dim() != s.output_dim)
      throw std::invalid_argument("pack: shape mismatch for '" + s.name + "'");
    x.segment(s.offset, op.size()) = op.tensor();
  }
  return x;
}

namespace {

// A value that depends linearly on the unknowns: column index -> contribution.
struct Linear {
  Index dim = 0;
  std::map<Index, Vector> columns;
};

using Value = std::variant<Vector, Linear>;

int count_unknowns(const Term& t, const UnknownLayout& unknowns) {
  if (t.is_variable()) return 0;
  int c = unknowns.find(t.op) ? 1 : 0;
  for (const auto& a : t.args) c += count_unknowns(a, unknowns);
  return c;
}

Value eval_linear(const Term& t, const UnknownLayout& unknowns, const OpTable& known, std::span<const Vector> values) {
  if (t.is_variable()) return values[static_cast<std::size_t>(t.variable)];
  std::vector<Value> args;
  int linear_slot = -1;
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    args.push_back(eval_linear(t.args[i], unknowns, known, values));
    if (std::holds_alternative<Linear>(args.back())) linear_slot = static_cast<int>(i);
  }
  if (const auto* slot = unknowns.find(t.op)) {
    if (args.size() != slot->input_dims.size()) throw std::invalid_argument("wrong arity for unknown '" + t.op + "'");
    std::vector<Index> dims;
    for (std::size_t s = 0; s < args.size(); ++s) {
      const Vector& v = std::get<Vector>(args[s]);
      if (v.size() != slot->input_dims[s]) throw std::invalid_argument("dimension mismatch for '" + t.op + "'");
      dims.push_back(v.size());
    }
    Linear out{slot->output_dim, {}};
    for_each_tuple(dims, [&](std::span<const Index> idx) {
      Rational c(1);
      Index flat = 0;
      for (std::size_t s = 0; s < idx.size(); ++s) {
        const Rational& x = std::get<Vector>(args[s])(idx[s]);
        if (is_zero(x)) return;
        c *= x;
        flat = flat * dims[s] + idx[s];
      }
      for (Index j = 0; j < slot->output_dim; ++j) {
        const Index col = slot->offset + flat * slot->output_dim + j;
        auto [it, fresh] = out.columns.try_emplace(col, Vector::Zero(slot->output_dim));
        it->second(j) += c;
      }
    });
    return out;
  }
  const Op& op = known.get(t.op);
  if (linear_slot < 0) {
    std::vector<Vector> vs;
    for (auto& a : args) vs.push_back(std::get<Vector>(a));
    return evaluate(op, std::span<const Vector>(vs));
  }
  std::vector<Vector> vs(args.size());
  for (std::size_t s = 0; s < args.size(); ++s)
    if (static_cast<int>(s) != linear_slot) vs[s] = std::get<Vector>(args[s]);
  Linear out{op.output_dim(), {}};
  for (const auto& [col, v] : std::get<Linear>(args[static_cast<std::size_t>(linear_slot)]).columns) {
    vs[static_cast<std::size_t>(linear_slot)] = v;
    Vector r = evaluate(op, std::span<const Vector>(vs));
    if (!is_zero_matrix(r)) out.columns.emplace(col, std::move(r));
  }
  return out;
}

}  // namespace

void for_each_identity_row(const Identity& id, const UnknownLayout& unknowns, const OpTable& known,
                           std::span<const Index> var_dims, const std::function<void(const Vector&)>& row) {
  if (var_dims.size() != id.variables.size()) throw std::invalid_argument("variable count mismatch");
  for (const auto& m : id.expr)
    if (count_unknowns(m.term, unknowns) != 1)
      throw std::invalid_argument("identity " + id.name + " is not linear in the unknowns: " +
                                  to_string(m.term, id.variables));
  Index out_dim = -1;
  std::vector<Vector> values(var_dims.size());
  for_each_tuple(var_dims, [&](std::span<const Index> t) {
    for (std::size_t v = 0; v < t.size(); ++v) values[v] = unit_vector<Rational>(var_dims[v], t[v]);
    std::map<Index, Vector> block;
    for (const auto& m : id.expr) {
      Linear lin = std::get<Linear>(eval_linear(m.term, unknowns, known, values));
      if (out_dim < 0) out_dim = lin.dim;
      if (lin.dim != out_dim) throw std::invalid_argument("identity " + id.name + " mixes output dimensions");
      for (auto& [col, v] : lin.columns) {
        auto [it, fresh] = block.try_emplace(col, Vector::Zero(out_dim));
        it->second += m.coefficient * v;
      }
    }
    if (out_dim < 0) return;
    for (Index j = 0; j < out_dim; ++j) {
      Vector r = Vector::Zero(unknowns.size());
      for (const auto& [col, v] : block) r(col) = v(j);
      row(r);
    }
  });
}

Matrix identity_matrix_of(const Identity& id, const UnknownLayout& unknowns, const OpTable& known,
                          std::span<const Index> var_dims) {
  std::vector<Vector> rows;
  for_each_identity_row(id, unknowns, known, var_dims, [&](const Vector& r) { rows.push_back(r); });
  Matrix m(static_cast<Index>(rows.size()), unknowns.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

}  // namespace yam
