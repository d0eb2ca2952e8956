#pragma once

#include "yam/identities.hpp"

#include <map>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yam {

enum class AlgebraClass { Ass, LieY, Lts, Ats, Wats, Leibniz, Diass, AssY, Dend, DendY, Lie };

std::string to_string(AlgebraClass c);
AlgebraClass parse_class(std::string_view tag);

// Operation names and arities a class must provide, in canonical order.
const std::vector<std::pair<std::string, int>>& required_ops(AlgebraClass c);

struct AlgebraPresentation {
  AlgebraClass kind = AlgebraClass::AssY;
  Index dim = 0;
  std::map<std::string, Op> ops;

  const Op& op(const std::string& name) const;
  OpTable table() const;

  // Throws std::invalid_argument naming the offending operation when a
  // required op is missing, an extra op is present, or a shape is wrong.
  void validate() const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;
};

// All ops of the class present and zero.
AlgebraPresentation zero_algebra(AlgebraClass c, Index dim);

struct CheckOptions {
  std::size_t max_failures_per_identity = 20;  // 0 keeps every failure
};

struct AxiomReport {
  std::string label;
  std::vector<std::string> families;  // in table order
  Index identities = 0;               // scalar equations (chains expanded)
  Index evaluations = 0;              // identities times basis tuples
  std::vector<IdentityFailure> failures;
  std::map<std::string, Index> failures_per_identity;
  std::map<std::string, std::string> family_of_identity;

  bool passed() const { return failures.empty(); }
  std::set<std::string> failed_families() const;
  std::set<std::string> failed_identities() const;
  Index families_passed() const;
  std::string summary() const;  // "assy: 11/11 families pass"
};

// The identity table of a class, as term trees over the class's op names.
const std::vector<Identity>& axioms(AlgebraClass c);

// Family name of an identity ("AY7.2" -> "AY7").
std::string family_of(const IdentityFailure& f, const std::vector<Identity>& table);

// Runs identities with each variable ranging over a basis of the space of the
// given dimension.
AxiomReport run_identities(const std::string& label, const std::vector<Identity>& ids, const OpTable& ops,
                           const std::function<std::vector<Index>(const Identity&)>& var_dims,
                           const CheckOptions& opts = {});

AxiomReport check_axioms(const AlgebraPresentation& a, const CheckOptions& opts = {});

// Thrown when an input must satisfy its class axioms and does not.
class AxiomViolation : public std::invalid_argument {
 public:
  explicit AxiomViolation(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

// Validates shape and class, then throws AxiomViolation if any axiom fails.
void require_axioms(const AlgebraPresentation& a, AlgebraClass expected);

bool check_homomorphism(const Matrix& phi, const AlgebraPresentation& src, const AlgebraPresentation& dst);

// sigma_{x,y} = {x,y,-} and tau_{x,y} = {{-,x,y}} as matrices on A.
std::pair<Matrix, Matrix> sigma_tau_of(const AlgebraPresentation& a, const Vector& x, const Vector& y);

// The assy axioms restated through the operator families sigma and tau, as
// equalities of matrices; an independent route to check_axioms for assy.
AxiomReport check_sigma_tau(const AlgebraPresentation& a);

// Canonical fixtures.
AlgebraPresentation fixture_zero(Index n);      // Zn, class assy
AlgebraPresentation fixture_k1_ass();           // e.e = e
AlgebraPresentation fixture_k1();               // K1 assy
AlgebraPresentation fixture_n2_ass();           // x.x = y
AlgebraPresentation fixture_n2();               // N2 with its induced assy structure
AlgebraPresentation fixture_d1();               // K1 as a diassociative algebra
AlgebraPresentation fixture_t2_ass();           // e.e = e, e.x = x: not commutative

}  // namespace yam
