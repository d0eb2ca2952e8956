#pragma once

#include "yam/representations.hpp"

namespace yam {

// R : M -> A for a representation M of an assy algebra A.
struct RelativeRBO {
  AssYRepresentation rep;
  Matrix map;  // n x m

  void validate() const;
  friend bool operator==(const RelativeRBO&, const RelativeRBO&) = default;
};

// RB1: R(u).R(v) = R(R(u).v + u.R(v)) and RB2, RB3 the curly and dcurly
// analogues, on basis tuples of M. Throws RepresentationError when the
// representation is invalid.
AxiomReport check_rbo(const RelativeRBO& r, const CheckOptions& opts = {});

// Whether {(R u, u)} is closed under the semidirect operations, each image
// tested by an exact solve against the graph basis.
bool check_graph(const RelativeRBO& r);

class RotaBaxterError : public AxiomViolation {
  using AxiomViolation::AxiomViolation;
};

// The dendy algebra on M: u < v = u.R(v), u > v = R(u).v, and the token t
// ternary op puts M in slot 4 - t with R applied to the other two slots.
// Throws RotaBaxterError when R fails check_rbo.
AlgebraPresentation induced_dendy(const RelativeRBO& r);

// D as a module over its total algebra: succ acts from the left, prec from the
// right, and the token t ternary ops give the action with D in slot 4 - t.
// No axioms are checked.
AssYRepresentation total_representation(const AlgebraPresentation& d);

// Id : D -> D_Tot over total_representation(d). Throws AxiomViolation when d
// fails the dendy axioms.
RelativeRBO identity_rbo_of(const AlgebraPresentation& d);

// The dendy identity an identity of the polarized table lines up with under
// total_representation: the slot of the module variable gives the letter,
// "AY7.2[e]" -> "DY7E.2".
std::string dendy_identity_for(const std::string& polarized_name);

}  // namespace yam
