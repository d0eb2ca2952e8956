#pragma once

#include "yam/multilinear.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace yam {

// A term is a variable leaf or a named operation applied to subterms.
struct Term {
  int variable = -1;
  std::string op;
  std::vector<Term> args;

  bool is_variable() const { return variable >= 0; }
  friend bool operator==(const Term&, const Term&) = default;
};

struct Monomial {
  Rational coefficient;
  Term term;
};

// A formal linear combination of terms; an identity asserts it vanishes.
using Expr = std::vector<Monomial>;

struct Identity {
  std::string family;
  std::string name;
  std::vector<std::string> variables;
  Expr expr;
};

// Parses "lhs = rhs" or a chain "x = y = z" (giving x - y and y - z) or a bare
// expression (asserted to be 0). Operations are written name(arg, ...);
// arguments may be sums; integer coefficients may prefix a factor. Variables
// are the space separated names in vars, in enumeration order. Chained
// identities are named family.1, family.2.
std::vector<Identity> parse_identities(std::string_view family, std::string_view vars, std::string_view text);

// Convenience for identities known to be a single equation.
Identity parse_identity(std::string_view family, std::string_view vars, std::string_view text);

std::string to_string(const Term& t, const std::vector<std::string>& variables);
std::string to_string(const Identity& id);

// Named operations visible to the evaluator.
class OpTable {
 public:
  void set(const std::string& name, Op op) { ops_[name] = std::move(op); }
  bool contains(const std::string& name) const { return ops_.count(name) != 0; }
  const Op& get(const std::string& name) const;
  const std::map<std::string, Op>& all() const { return ops_; }

 private:
  std::map<std::string, Op> ops_;
};

Vector evaluate(const Term& t, const OpTable& ops, std::span<const Vector> values);
Vector evaluate(const Expr& e, const OpTable& ops, std::span<const Vector> values);

// Output dimension of a term once variables have the given dimensions.
Index output_dim(const Term& t, const OpTable& ops, std::span<const Index> var_dims);

// The multilinear op x -> expr(x) with variables ranging over spaces of the
// given dimensions; out_dim fixes the shape when expr cancels to zero.
Op tabulate(const Expr& e, const OpTable& ops, std::vector<Index> var_dims, Index out_dim);
Op tabulate(std::string_view vars, std::string_view expr, const OpTable& ops, std::vector<Index> var_dims,
            Index out_dim);

// A linear map as an arity-1 op, and back.
Op linear_op(const Matrix& m);
Matrix matrix_of(const Op& unary);

struct IdentityFailure {
  std::string identity;
  std::vector<Index> tuple;
  Vector residual;
};

struct IdentityCheck {
  Index tuples = 0;
  Index failures_total = 0;
  std::vector<IdentityFailure> failures;
};

// Evaluates the identity on every basis tuple (lexicographic) and records
// nonzero residuals, at most max_failures of them (0 keeps all).
IdentityCheck check_identity(const Identity& id, const OpTable& ops, std::span<const Index> var_dims,
                             std::size_t max_failures);

// Unknown operations of a linear system, laid out one after another.
class UnknownLayout {
 public:
  struct Slot {
    std::string name;
    std::vector<Index> input_dims;
    Index output_dim;
    Index offset;
  };

  void add(const std::string& name, std::vector<Index> input_dims, Index output_dim);
  const Slot* find(const std::string& name) const;
  const std::vector<Slot>& slots() const { return slots_; }
  Index size() const { return size_; }

  // The flat unknown vector split back into operations, and the reverse.
  std::map<std::string, Op> unpack(const Vector& x) const;
  Vector pack(const std::map<std::string, Op>& ops) const;

 private:
  std::vector<Slot> slots_;
  Index size_ = 0;
};

// Rows of the linear system "id vanishes on every basis tuple" in the flat
// unknown coordinates; every monomial must contain exactly one unknown.
// Rows come out tuple by tuple, output coordinate innermost.
void for_each_identity_row(const Identity& id, const UnknownLayout& unknowns, const OpTable& known,
                           std::span<const Index> var_dims, const std::function<void(const Vector&)>& row);

Matrix identity_matrix_of(const Identity& id, const UnknownLayout& unknowns, const OpTable& known,
                          std::span<const Index> var_dims);

}  // namespace yam
