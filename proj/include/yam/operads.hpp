#pragma once

#include "yam/algebras.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace yam {

// Structure constants of an operad element packed into one word: the token,
// then the inputs, then the output, 7 bits each from the top.
struct ElementKey {
  static constexpr int kBits = 7;
  static constexpr int kMaxArity = 7;
  static constexpr Index kMaxIndex = (Index{1} << kBits) - 1;

  int token = 0;
  std::vector<Index> inputs;
  Index output = 0;

  std::uint64_t pack() const;
  static ElementKey unpack(std::uint64_t word, int arity);
};

// An element of arity k: sum of coeff * [token; e_{i1}, ..., e_{ik}] -> e_out.
// Tokenless operads use token 0 throughout.
template <typename Scalar>
class OperadElement {
 public:
  OperadElement() = default;
  explicit OperadElement(int arity) : arity_(arity) {
    if (arity < 1 || arity > ElementKey::kMaxArity)
      throw std::invalid_argument("operad element arity out of range: " + std::to_string(arity));
  }

  int arity() const { return arity_; }
  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const ElementKey& key, const Scalar& c) { add(key.pack(), c); }
  void add(std::uint64_t word, const Scalar& c) {
    if (yam::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(word, c);
    if (fresh) return;
    it->second += c;
    if (yam::is_zero(it->second)) terms_.erase(it);
  }

  Scalar coefficient(const ElementKey& key) const {
    auto it = terms_.find(key.pack());
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  OperadElement& operator+=(const OperadElement& o) {
    require_arity(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  OperadElement& operator-=(const OperadElement& o) {
    require_arity(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
  friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }

  friend bool operator==(const OperadElement& a, const OperadElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void require_arity(const OperadElement& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("operad element arity mismatch");
  }

  int arity_ = 0;
  std::map<std::uint64_t, Scalar> terms_;
};

using Element = OperadElement<Rational>;

enum class OperadKind { End, Dend };

std::string to_string(OperadKind k);
OperadKind parse_operad_kind(std::string_view tag);

// Token of a term of f o_i g built from a term of f with token f_token and a
// term of g with token g_token; f has arity m, g arity n; -1 drops the term.
using TokenRule = std::function<int(int f_token, int g_token, int i, int m, int n)>;

struct Operad {
  OperadKind kind = OperadKind::End;
  Index dim = 0;
  TokenRule token_rule;

  // Tokens carried by elements of the given arity.
  std::vector<int> tokens(int arity) const;
  Element unit() const;
};

Operad end_operad(Index dim);
Operad dend_operad(Index dim);

// Partial composition f o_i g, 1 <= i <= arity(f).
template <typename Scalar>
OperadElement<Scalar> compose(const Operad& p, const OperadElement<Scalar>& f, const OperadElement<Scalar>& g,
                              int i) {
  const int m = f.arity(), n = g.arity();
  if (i < 1 || i > m)
    throw std::out_of_range("compose: index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  OperadElement<Scalar> out(m + n - 1);
  std::vector<ElementKey> gs;
  std::vector<Scalar> gc;
  for (const auto& [w, c] : g.terms()) {
    gs.push_back(ElementKey::unpack(w, n));
    gc.push_back(c);
  }
  ElementKey k;
  k.inputs.resize(static_cast<std::size_t>(m + n - 1));
  for (const auto& [fw, fc] : f.terms()) {
    const ElementKey fk = ElementKey::unpack(fw, m);
    const Index slot_value = fk.inputs[static_cast<std::size_t>(i - 1)];
    for (std::size_t t = 0; t < gs.size(); ++t) {
      if (gs[t].output != slot_value) continue;
      const int token = p.token_rule(fk.token, gs[t].token, i, m, n);
      if (token < 0) continue;
      std::size_t pos = 0;
      for (int s = 0; s < i - 1; ++s) k.inputs[pos++] = fk.inputs[static_cast<std::size_t>(s)];
      for (Index v : gs[t].inputs) k.inputs[pos++] = v;
      for (int s = i; s < m; ++s) k.inputs[pos++] = fk.inputs[static_cast<std::size_t>(s)];
      k.token = token;
      k.output = fk.output;
      out.add(k, fc * gc[t]);
    }
  }
  return out;
}

// Every basis element [token; e_I] -> e_out of the given arity.
std::vector<Element> basis_elements(const Operad& p, int arity);

// "2 [1; 0,1 -> 0] - 1/2 [2; 1,1 -> 1]"; tokenless elements omit the token.
std::string describe(const Element& e);

// Sequential, parallel and unit axioms on basis elements of arity <= max_arity.
// A failure's tuple is (m, i, n, j, k, f, g, h) for sequential and parallel
// and (m, i, f) for unit, where m, n, k are arities and f, g, h positions in
// basis_elements; its residual lists the nonzero coefficients of lhs - rhs.
AxiomReport check_operad_axioms(const Operad& p, int max_arity = 3, const CheckOptions& opts = {});

struct YamagutiMultiplication {
  Element pi;
  Element theta;
  Element vartheta;

  friend bool operator==(const YamagutiMultiplication&, const YamagutiMultiplication&) = default;
};

// The 11 conditions, YM1, YM2.1..YM2.5, YM3.1..YM3.5; chained equalities are
// checked link by link under one name. A failure's tuple is the token (Dend
// only) followed by the input basis indices; its residual is the output
// vector of lhs - rhs there.
AxiomReport check_yamaguti_multiplication(const Operad& p, const YamagutiMultiplication& ym,
                                          const CheckOptions& opts = {});

// The algebra identity a condition failure corresponds to: "AY3" on End,
// "DY3C" on Dend (the token picks the letter). Chained identities are named
// without their link suffix.
std::string matching_identity(OperadKind kind, const IdentityFailure& f);

// pi o_1 pi = pi o_2 pi.
bool is_multiplication(const Operad& p, const Element& pi);

// The triple (pi, pi o_1 pi, pi o_1 pi).
YamagutiMultiplication ym_from_multiplication(const Operad& p, const Element& pi);

// Dense conversions: the component of an element at one token.
Element element_from_op(const Op& op, int token = 0);
Element element_from_components(const std::vector<Op>& per_token);  // token t + 1 from per_token[t]
Op component(const Element& e, Index dim, int token = 0);

YamagutiMultiplication end_ym_from_assy(const AlgebraPresentation& a);
AlgebraPresentation assy_from_end_ym(const YamagutiMultiplication& ym, Index dim);

YamagutiMultiplication dend_ym_from_dendy(const AlgebraPresentation& d);
AlgebraPresentation dendy_from_dend_ym(const YamagutiMultiplication& ym, Index dim);

// Failure sets of the algebra checker and the Yamaguti multiplication checker
// on the same structure, in the algebra's identity names: families on End,
// identities without link suffix on Dend.
struct CheckerAgreement {
  std::set<std::string> algebra_failures;
  std::set<std::string> operad_failures;

  bool agree() const { return algebra_failures == operad_failures; }
};

// assy algebras go through End, dendy algebras through Dend.
CheckerAgreement compare_checkers(const AlgebraPresentation& a);

}  // namespace yam
