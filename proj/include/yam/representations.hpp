#pragma once

#include "yam/functors.hpp"

namespace yam {

// Actions of an assy algebra A (dim n) on a space M (dim m). Names give the
// slot pattern, e.g. curly_ama: A x M x A -> M.
struct AssYRepresentation {
  AlgebraPresentation base;
  Index module_dim = 0;
  std::map<std::string, Op> actions;

  const Op& action(const std::string& name) const;
  // base and actions as one table for the term engine
  OpTable table() const;
  // Throws std::invalid_argument on a missing action or a wrong slot pattern.
  void validate() const;

  friend bool operator==(const AssYRepresentation&, const AssYRepresentation&) = default;
};

// The eight action names in canonical order with their slot patterns
// ("am", "ma", "aam", ...).
const std::vector<std::pair<std::string, std::string>>& action_slots();

AssYRepresentation zero_representation(const AlgebraPresentation& a, Index module_dim);
AssYRepresentation adjoint_representation(const AlgebraPresentation& a);

// Twist terms of the semidirect product: mu: A x A -> M, F, G: A x A x A -> M.
struct CochainTriple {
  Op mu;
  Op F;
  Op G;
  friend bool operator==(const CochainTriple&, const CochainTriple&) = default;
};

// assy on A + M, A coordinates first; with a twist, mu, F, G are added on the
// pure-A inputs in the M output block.
AlgebraPresentation semidirect(const AssYRepresentation& r);
AlgebraPresentation semidirect(const AssYRepresentation& r, const CochainTriple& twist);

AxiomReport check_representation(const AssYRepresentation& r, const CheckOptions& opts = {});

// The assy identities with exactly one variable in M, ops renamed by the slot
// types of their arguments: 58 equations over the base and action names.
const std::vector<Identity>& polarized_identities();
Index polarized_variable(const Identity& id);  // which variable lies in M
AxiomReport check_polarized(const AssYRepresentation& r, const CheckOptions& opts = {});

// Representations built from other structures.
AssYRepresentation bimodule_representation(const AlgebraPresentation& ass, const Bimodule& m);

struct ReductiveBimodule {
  Bimodule module;
  Matrix projector0;  // on M
  Matrix projector1;
};
// A representation of from_reductive(r) on the image of the module projector1.
AssYRepresentation reductive_bimodule_representation(const ReductiveDecomposition& r, const ReductiveBimodule& m);

// The representation of src on the module of rep (a representation of dst)
// through the homomorphism phi: src -> dst.
AssYRepresentation pullback_representation(const Matrix& phi, const AlgebraPresentation& src,
                                           const AssYRepresentation& rep);

struct DiassRepresentation {
  Index dim = 0;
  Op left_dm, left_md;    // -| : D x M -> M, M x D -> M
  Op right_dm, right_md;  // |- : D x M -> M, M x D -> M
};
DiassRepresentation adjoint_diass_representation(const AlgebraPresentation& d);
// The diass on D + M; a representation iff this passes the diass axioms.
AlgebraPresentation diass_semidirect(const AlgebraPresentation& d, const DiassRepresentation& m);
AssYRepresentation diass_representation(const AlgebraPresentation& d, const DiassRepresentation& m);

// A representation of an ats (one ternary map on the three mixed slot
// patterns) as a representation of ats_to_assy(t).
AssYRepresentation ats_representation(const AlgebraPresentation& t, Index module_dim, const Op& aam, const Op& ama,
                                      const Op& maa);

struct LieYRepresentation {
  AlgebraPresentation base;  // liey
  Index module_dim = 0;
  Op rho;  // (x, u) -> rho(x) u
  Op nu;   // (x, y, u) -> nu(x, y) u

  friend bool operator==(const LieYRepresentation&, const LieYRepresentation&) = default;
};

// D(x, y) u = [rho(x), rho(y)] u - rho([x, y]) u - nu(x, y) u + nu(y, x) u
Op lie_yamaguti_d(const LieYRepresentation& rep);
AlgebraPresentation liey_semidirect(const LieYRepresentation& rep);
AxiomReport check_liey_representation(const LieYRepresentation& rep);

// rho(a) u = a.u - u.a, nu(a, b) u = {u,a,b} - {a,u,b} - {{b,u,a}} + {{b,a,u}}
LieYRepresentation induced_liey_rep(const AssYRepresentation& r);

// Thrown when a representation, or the source data it is built from, fails
// its check.
class RepresentationError : public AxiomViolation {
 public:
  using AxiomViolation::AxiomViolation;
};

}  // namespace yam
