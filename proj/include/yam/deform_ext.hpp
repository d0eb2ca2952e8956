#pragma once

#include "yam/cohomology.hpp"

#include <optional>

namespace yam {

// mu_t = dot + t mu_1 + ... + t^N mu_N and likewise F_t, G_t, all valued in A.
struct TruncatedDeformation {
  AlgebraPresentation base;
  std::vector<CochainTriple> terms;  // terms[i - 1] is the coefficient of t^i

  Index order() const { return static_cast<Index>(terms.size()); }
  // Order 0 is the base structure.
  CochainTriple term(Index i) const;
  void validate() const;
};

inline constexpr Index kDefaultDeformationOrder = 2;

TruncatedDeformation zero_deformation(const AlgebraPresentation& a, Index order = kDefaultDeformationOrder);

// The assy identities expanded order by order in t. Identity names carry the
// order after a slash ("AY7.2/1"); families stay "AY1".."AY11".
AxiomReport check_deformation(const TruncatedDeformation& d, const CheckOptions& opts = {});
Index order_of(const IdentityFailure& f);

struct Infinitesimal {
  Index order = 0;
  CochainTriple triple;
  bool is_cocycle = false;  // for the adjoint representation
};

// The first nonzero term; nullopt when every term vanishes. Throws
// AxiomViolation when d is not a deformation mod t^{N+1}.
std::optional<Infinitesimal> infinitesimal(const TruncatedDeformation& d);

// phi_t = Id + t phi_1 + ... ; the deformation transported along it, mod t^{N+1}.
TruncatedDeformation transport(const TruncatedDeformation& d, const std::vector<Matrix>& phis);

struct EquivalenceReport {
  // first mismatch: op name with order ("dot/1"), input tuple, residual
  std::vector<IdentityFailure> failures;
  bool infinitesimals_checked = false;  // both at order 1 and their difference compared

  bool equivalent() const { return failures.empty(); }
};

// Checks that phi_t is a homomorphism from d1 to d2 mod t^{N+1}. When it is
// and both infinitesimals sit at order 1, asserts that their difference is
// the coboundary of phi_1 (std::logic_error otherwise).
EquivalenceReport check_equivalence(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                                    const std::vector<Matrix>& phis);

// 0 -> M -> E -> A -> 0 with i: M -> E and p: E -> A.
struct ExtensionPresentation {
  AlgebraPresentation total;
  Matrix inclusion;   // (n + m) x m
  Matrix projection;  // n x (n + m)
  std::optional<Matrix> section;

  Index base_dim() const { return projection.rows(); }
  Index module_dim() const { return inclusion.cols(); }
};

// Throws std::invalid_argument naming the broken condition: shapes, p i = 0,
// i injective, p surjective, total an assy algebra, i(M) an abelian ideal,
// p s = Id.
void validate(const ExtensionPresentation& e);

ExtensionPresentation extension_from_cocycle(const AssYRepresentation& r, const CochainTriple& t);

// The section stored in e, or one solved column by column from p s = Id.
Matrix section_of(const ExtensionPresentation& e);

struct ExtractedCocycle {
  CochainTriple triple;
  AssYRepresentation induced;  // its base is the quotient algebra E / i(M)
};

ExtractedCocycle cocycle_from_extension(const ExtensionPresentation& e);

// Phi = s2 p1 + i2 (r1 + f p1), where r1 is the M-coordinate on E1 fixed by
// s1; true iff Phi is an assy isomorphism with Phi i1 = i2 and p2 Phi = p1.
// Throws std::invalid_argument when the induced representations differ.
bool extensions_isomorphic_via(const ExtensionPresentation& e1, const ExtensionPresentation& e2, const Matrix& f);

// Solves triple1 - triple2 = coboundary_of(f) and confirms the witness;
// nullopt means no map of that form exists.
std::optional<Matrix> find_isomorphism_witness(const ExtensionPresentation& e1, const ExtensionPresentation& e2);

}  // namespace yam
