#include "yam/operads.hpp"

#include <algorithm>
#include <sstream>

namespace yam {

std::uint64_t ElementKey::pack() const {
  if (inputs.size() > static_cast<std::size_t>(kMaxArity)) throw std::invalid_argument("element key: arity too large");
  auto field = [](Index v) {
    if (v < 0 || v > kMaxIndex) throw std::out_of_range("element key: field out of range");
    return static_cast<std::uint64_t>(v);
  };
  std::uint64_t w = field(token);
  for (Index v : inputs) w = (w << kBits) | field(v);
  return (w << kBits) | field(output);
}

ElementKey ElementKey::unpack(std::uint64_t word, int arity) {
  const std::uint64_t mask = (std::uint64_t{1} << kBits) - 1;
  ElementKey k;
  k.inputs.resize(static_cast<std::size_t>(arity));
  k.output = static_cast<Index>(word & mask);
  word >>= kBits;
  for (int s = arity - 1; s >= 0; --s) {
    k.inputs[static_cast<std::size_t>(s)] = static_cast<Index>(word & mask);
    word >>= kBits;
  }
  k.token = static_cast<int>(word);
  return k;
}

std::string to_string(OperadKind k) { return k == OperadKind::End ? "end" : "dend"; }

OperadKind parse_operad_kind(std::string_view tag) {
  if (tag == "end") return OperadKind::End;
  if (tag == "dend") return OperadKind::Dend;
  throw std::invalid_argument("unknown operad kind '" + std::string(tag) + "' (expected end or dend)");
}

std::vector<int> Operad::tokens(int arity) const {
  if (kind == OperadKind::End) return {0};
  std::vector<int> out;
  for (int t = 1; t <= arity; ++t) out.push_back(t);
  return out;
}

Element Operad::unit() const {
  Element e(1);
  const int token = kind == OperadKind::End ? 0 : 1;
  for (Index a = 0; a < dim; ++a) e.add(ElementKey{token, {a}, a}, Rational(1));
  return e;
}

Operad end_operad(Index dim) {
  return Operad{OperadKind::End, dim, [](int, int, int, int, int) { return 0; }};
}

// A term of f at token t meets g summed over its tokens unless t = i, where
// g keeps its own token shifted into the window [i, i + n - 1].
Operad dend_operad(Index dim) {
  return Operad{OperadKind::Dend, dim, [](int t, int s, int i, int, int n) {
                  if (t < i) return t;
                  if (t == i) return i + s - 1;
                  return t + n - 1;
                }};
}

std::vector<Element> basis_elements(const Operad& p, int arity) {
  std::vector<Element> out;
  const std::vector<Index> dims(static_cast<std::size_t>(arity), p.dim);
  for (int token : p.tokens(arity))
    for_each_tuple(dims, [&](std::span<const Index> in) {
      for (Index o = 0; o < p.dim; ++o) {
        Element e(arity);
        e.add(ElementKey{token, std::vector<Index>(in.begin(), in.end()), o}, Rational(1));
        out.push_back(std::move(e));
      }
    });
  return out;
}

std::string describe(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const ElementKey k = ElementKey::unpack(w, e.arity());
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << " ";
    os << "[";
    if (k.token != 0) os << k.token << "; ";
    for (std::size_t s = 0; s < k.inputs.size(); ++s) os << (s ? "," : "") << k.inputs[s];
    os << " -> " << k.output << "]";
  }
  return os.str();
}

namespace {

void validate_element(const Operad& p, const Element& e, const std::string& what) {
  const std::vector<int> tokens = p.tokens(e.arity());
  for (const auto& [w, c] : e.terms()) {
    const ElementKey k = ElementKey::unpack(w, e.arity());
    bool ok = std::find(tokens.begin(), tokens.end(), k.token) != tokens.end() && k.output < p.dim;
    for (Index v : k.inputs) ok = ok && v < p.dim;
    if (!ok) throw std::invalid_argument(what + ": term outside the " + to_string(p.kind) + " operad of dim " +
                                         std::to_string(p.dim));
  }
}

Vector coefficients(const Element& e) {
  Vector v(static_cast<Index>(e.terms().size()));
  Index k = 0;
  for (const auto& [w, c] : e.terms()) v(k++) = c;
  return v;
}

struct AxiomTally {
  AxiomReport& report;
  const CheckOptions& opts;

  void count() { ++report.evaluations; }

  void fail(const std::string& name, std::vector<Index> tuple, const Element& diff) {
    Index& n = report.failures_per_identity[name];
    ++n;
    if (opts.max_failures_per_identity == 0 || static_cast<std::size_t>(n) <= opts.max_failures_per_identity)
      report.failures.push_back(IdentityFailure{name, std::move(tuple), coefficients(diff)});
  }
};

}  // namespace

AxiomReport check_operad_axioms(const Operad& p, int max_arity, const CheckOptions& opts) {
  if (max_arity < 2) throw std::invalid_argument("check_operad_axioms: max_arity must be at least 2");
  if (3 * max_arity - 2 > ElementKey::kMaxArity)
    throw std::invalid_argument("check_operad_axioms: max_arity " + std::to_string(max_arity) +
                                " composes past arity " + std::to_string(ElementKey::kMaxArity));
  AxiomReport r;
  r.label = to_string(p.kind) + " operad";
  for (const char* name : {"sequential", "parallel", "unit"}) {
    r.families.push_back(name);
    r.family_of_identity[name] = name;
  }
  r.identities = 3;
  AxiomTally tally{r, opts};

  std::vector<std::vector<Element>> basis(static_cast<std::size_t>(max_arity) + 1);
  for (int a = 1; a <= max_arity; ++a) basis[static_cast<std::size_t>(a)] = basis_elements(p, a);
  auto at = [&](int a) -> const std::vector<Element>& { return basis[static_cast<std::size_t>(a)]; };
  const Element one = p.unit();

  for (int m = 1; m <= max_arity; ++m)
    for (std::size_t fi = 0; fi < at(m).size(); ++fi) {
      const Element& f = at(m)[fi];
      const Element lhs_unit = compose(p, one, f, 1);
      for (int i = 1; i <= m; ++i) {
        tally.count();
        const Element fu = compose(p, f, one, i);
        if (fu != f || lhs_unit != f)
          tally.fail("unit", {m, i, static_cast<Index>(fi)}, fu != f ? fu - f : lhs_unit - f);
      }
      for (int n = 1; n <= max_arity; ++n)
        for (std::size_t gi = 0; gi < at(n).size(); ++gi) {
          const Element& g = at(n)[gi];
          std::vector<Element> fg(static_cast<std::size_t>(m) + 1);
          for (int i = 1; i <= m; ++i) fg[static_cast<std::size_t>(i)] = compose(p, f, g, i);
          for (int k = 1; k <= max_arity; ++k)
            for (std::size_t hi = 0; hi < at(k).size(); ++hi) {
              const Element& h = at(k)[hi];
              const std::vector<Index> ids = {static_cast<Index>(fi), static_cast<Index>(gi), static_cast<Index>(hi)};
              for (int j = 1; j <= n; ++j) {
                const Element gh = compose(p, g, h, j);
                for (int i = 1; i <= m; ++i) {
                  tally.count();
                  const Element lhs = compose(p, f, gh, i);
                  const Element rhs = compose(p, fg[static_cast<std::size_t>(i)], h, i + j - 1);
                  if (lhs != rhs) tally.fail("sequential", {m, i, n, j, k, ids[0], ids[1], ids[2]}, lhs - rhs);
                }
              }
              for (int j = 2; j <= m; ++j) {
                const Element fh = compose(p, f, h, j);
                for (int i = 1; i < j; ++i) {
                  tally.count();
                  const Element lhs = compose(p, fg[static_cast<std::size_t>(i)], h, j + n - 1);
                  const Element rhs = compose(p, fh, g, i);
                  if (lhs != rhs) tally.fail("parallel", {m, i, n, j, k, ids[0], ids[1], ids[2]}, lhs - rhs);
                }
              }
            }
        }
    }
  return r;
}

namespace {

struct Condition {
  std::string name;
  // Each entry is a sum of signed compositions; consecutive entries must agree.
  std::vector<std::vector<std::tuple<int, char, int, char>>> sides;  // (sign, outer, i, inner)
};

const std::vector<Condition>& ym_conditions() {
  // 'p' = pi, 't' = theta, 'v' = vartheta; sign 0 marks a bare element.
  static const std::vector<Condition> conds = {
      {"YM1", {{{1, 'p', 1, 'p'}, {-1, 'p', 2, 'p'}, {1, 't', 0, 0}, {-1, 'v', 0, 0}}, {}}},
      {"YM2.1", {{{1, 't', 1, 'p'}}, {{1, 't', 2, 'p'}}}},
      {"YM2.2", {{{1, 't', 3, 'p'}}, {{1, 'p', 1, 't'}}}},
      {"YM2.3", {{{1, 'v', 1, 'p'}}, {{1, 'p', 2, 'v'}}}},
      {"YM2.4", {{{1, 'v', 2, 'p'}}, {{1, 'v', 3, 'p'}}}},
      {"YM2.5", {{{1, 'p', 2, 't'}}, {{1, 'p', 1, 'v'}}}},
      {"YM3.1", {{{1, 't', 1, 't'}}, {{1, 't', 2, 'v'}}, {{1, 't', 3, 't'}}}},
      {"YM3.2", {{{1, 't', 2, 't'}}, {{1, 't', 1, 'v'}}}},
      {"YM3.3", {{{1, 'v', 1, 'v'}}, {{1, 'v', 2, 't'}}, {{1, 'v', 3, 'v'}}}},
      {"YM3.4", {{{1, 'v', 2, 'v'}}, {{1, 'v', 3, 't'}}}},
      {"YM3.5", {{{1, 't', 3, 'v'}}, {{1, 'v', 1, 't'}}}},
  };
  return conds;
}

}  // namespace

AxiomReport check_yamaguti_multiplication(const Operad& p, const YamagutiMultiplication& ym,
                                          const CheckOptions& opts) {
  if (ym.pi.arity() != 2 || ym.theta.arity() != 3 || ym.vartheta.arity() != 3)
    throw std::invalid_argument("Yamaguti multiplication needs arities (2, 3, 3)");
  validate_element(p, ym.pi, "pi");
  validate_element(p, ym.theta, "theta");
  validate_element(p, ym.vartheta, "vartheta");
  auto elem = [&](char c) -> const Element& { return c == 'p' ? ym.pi : c == 't' ? ym.theta : ym.vartheta; };

  AxiomReport r;
  r.label = to_string(p.kind) + " Yamaguti multiplication";
  for (const Condition& c : ym_conditions()) {
    const std::string family = c.name.substr(0, 3);
    if (r.families.empty() || r.families.back() != family) r.families.push_back(family);
    r.family_of_identity[c.name] = family;
    ++r.identities;

    std::vector<Element> values;
    for (const auto& side : c.sides) {
      Element v;
      for (const auto& [sign, outer, i, inner] : side) {
        Element term = inner == 0 ? elem(outer) : compose(p, elem(outer), elem(inner), i);
        if (sign < 0) term = Element(term.arity()) - term;
        v = v.arity() == 0 ? std::move(term) : v + term;
      }
      values.push_back(v.arity() == 0 ? Element(values.front().arity()) : std::move(v));
    }
    const int arity = values.front().arity();
    Index tuples = static_cast<Index>(p.tokens(arity).size());
    for (int s = 0; s < arity; ++s) tuples *= p.dim;
    r.evaluations += tuples;

    Index count = 0;
    for (std::size_t link = 0; link + 1 < values.size(); ++link) {
      std::map<std::pair<int, std::vector<Index>>, Vector> residuals;
      const Element diff = values[link] - values[link + 1];
      for (const auto& [w, coeff] : diff.terms()) {
        const ElementKey k = ElementKey::unpack(w, arity);
        auto it = residuals.try_emplace({k.token, k.inputs}, Vector::Zero(p.dim)).first;
        it->second(k.output) = coeff;
      }
      for (const auto& [where, res] : residuals) {
        ++count;
        if (opts.max_failures_per_identity != 0 && static_cast<std::size_t>(count) > opts.max_failures_per_identity)
          continue;
        std::vector<Index> tuple;
        if (p.kind == OperadKind::Dend) tuple.push_back(where.first);
        tuple.insert(tuple.end(), where.second.begin(), where.second.end());
        r.failures.push_back(IdentityFailure{c.name, std::move(tuple), res});
      }
    }
    if (count > 0) r.failures_per_identity[c.name] = count;
  }
  return r;
}

std::string matching_identity(OperadKind kind, const IdentityFailure& f) {
  static const std::map<std::string, int> number = {{"YM1", 1},   {"YM2.1", 2}, {"YM2.2", 3}, {"YM2.3", 4},
                                                    {"YM2.4", 5}, {"YM2.5", 6}, {"YM3.1", 7}, {"YM3.2", 8},
                                                    {"YM3.3", 9}, {"YM3.4", 10}, {"YM3.5", 11}};
  auto it = number.find(f.identity);
  if (it == number.end()) throw std::invalid_argument("not a Yamaguti multiplication condition: " + f.identity);
  if (kind == OperadKind::End) return "AY" + std::to_string(it->second);
  if (f.tuple.empty()) throw std::invalid_argument("dend condition failure without a token");
  return "DY" + std::to_string(it->second) + static_cast<char>('A' + f.tuple.front() - 1);
}

bool is_multiplication(const Operad& p, const Element& pi) {
  if (pi.arity() != 2) throw std::invalid_argument("a multiplication has arity 2");
  return compose(p, pi, pi, 1) == compose(p, pi, pi, 2);
}

YamagutiMultiplication ym_from_multiplication(const Operad& p, const Element& pi) {
  Element pp = compose(p, pi, pi, 1);
  return YamagutiMultiplication{pi, pp, pp};
}

Element element_from_op(const Op& op, int token) {
  Element e(op.arity());
  for_each_tuple(op.input_dims(), [&](std::span<const Index> in) {
    auto out = op.output_at(in);
    for (Index o = 0; o < out.size(); ++o)
      if (!is_zero(out(o))) e.add(ElementKey{token, std::vector<Index>(in.begin(), in.end()), o}, out(o));
  });
  return e;
}

Element element_from_components(const std::vector<Op>& per_token) {
  if (per_token.empty()) throw std::invalid_argument("element_from_components: no components");
  Element e(per_token.front().arity());
  for (std::size_t t = 0; t < per_token.size(); ++t) e += element_from_op(per_token[t], static_cast<int>(t) + 1);
  return e;
}

Op component(const Element& e, Index dim, int token) {
  Op op = Op::on_space(e.arity(), dim);
  for (const auto& [w, c] : e.terms()) {
    const ElementKey k = ElementKey::unpack(w, e.arity());
    if (k.token == token) op.at(k.inputs, k.output) = c;
  }
  return op;
}

namespace {

void require_tokens(const Operad& p, const YamagutiMultiplication& ym) {
  validate_element(p, ym.pi, "pi");
  validate_element(p, ym.theta, "theta");
  validate_element(p, ym.vartheta, "vartheta");
  if (ym.pi.arity() != 2 || ym.theta.arity() != 3 || ym.vartheta.arity() != 3)
    throw std::invalid_argument("Yamaguti multiplication needs arities (2, 3, 3)");
}

}  // namespace

YamagutiMultiplication end_ym_from_assy(const AlgebraPresentation& a) {
  if (a.kind != AlgebraClass::AssY) throw std::invalid_argument("end_ym_from_assy: expected an assy algebra");
  a.validate();
  return YamagutiMultiplication{element_from_op(a.op("dot")), element_from_op(a.op("curly")),
                                element_from_op(a.op("dcurly"))};
}

AlgebraPresentation assy_from_end_ym(const YamagutiMultiplication& ym, Index dim) {
  require_tokens(end_operad(dim), ym);
  AlgebraPresentation a{AlgebraClass::AssY, dim, {}};
  a.ops["dot"] = component(ym.pi, dim);
  a.ops["curly"] = component(ym.theta, dim);
  a.ops["dcurly"] = component(ym.vartheta, dim);
  return a;
}

YamagutiMultiplication dend_ym_from_dendy(const AlgebraPresentation& d) {
  if (d.kind != AlgebraClass::DendY) throw std::invalid_argument("dend_ym_from_dendy: expected a dendy algebra");
  d.validate();
  return YamagutiMultiplication{
      element_from_components({d.op("prec"), d.op("succ")}),
      element_from_components({d.op("curly1"), d.op("curly2"), d.op("curly3")}),
      element_from_components({d.op("dcurly1"), d.op("dcurly2"), d.op("dcurly3")})};
}

AlgebraPresentation dendy_from_dend_ym(const YamagutiMultiplication& ym, Index dim) {
  require_tokens(dend_operad(dim), ym);
  AlgebraPresentation d{AlgebraClass::DendY, dim, {}};
  d.ops["prec"] = component(ym.pi, dim, 1);
  d.ops["succ"] = component(ym.pi, dim, 2);
  for (int t = 1; t <= 3; ++t) {
    d.ops["curly" + std::to_string(t)] = component(ym.theta, dim, t);
    d.ops["dcurly" + std::to_string(t)] = component(ym.vartheta, dim, t);
  }
  return d;
}

CheckerAgreement compare_checkers(const AlgebraPresentation& a) {
  CheckOptions all;
  all.max_failures_per_identity = 0;
  const bool end = a.kind == AlgebraClass::AssY;
  if (!end && a.kind != AlgebraClass::DendY)
    throw std::invalid_argument("compare_checkers: expected an assy or dendy algebra");
  const AxiomReport algebra = check_axioms(a, all);
  const AxiomReport operad = end ? check_yamaguti_multiplication(end_operad(a.dim), end_ym_from_assy(a), all)
                                 : check_yamaguti_multiplication(dend_operad(a.dim), dend_ym_from_dendy(a), all);
  CheckerAgreement out;
  for (const auto& f : algebra.failures) {
    const std::string& name = end ? algebra.family_of_identity.at(f.identity) : f.identity;
    out.algebra_failures.insert(name.substr(0, name.find('.')));
  }
  for (const auto& f : operad.failures) out.operad_failures.insert(matching_identity(end ? OperadKind::End : OperadKind::Dend, f));
  return out;
}

}  // namespace yam
