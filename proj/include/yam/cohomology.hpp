#pragma once

#include "yam/representations.hpp"

namespace yam {

// Unknown layout of a cochain triple: mu (n,n)->m, then F and G (n,n,n)->m.
UnknownLayout cochain_layout(Index n, Index m);
Vector pack(const CochainTriple& t);
CochainTriple unpack_cochain(const Vector& x, Index n, Index m);
CochainTriple zero_cochain(Index n, Index m);

// The cocycle conditions: the pure-A, M-valued part of the assy identities on
// the twisted semidirect product. Each monomial contains exactly one of mu,
// F, G; the ops above it are actions. 16 equations in table order.
const std::vector<Identity>& cocycle_identities();

// Rows: identities in table order, then basis tuples, then M coordinates.
// m * (n^3 + 5 n^4 + 7 n^5) rows, m n^2 + 2 m n^3 columns.
Matrix cocycle_matrix(const AssYRepresentation& r);

// Hom(A, M) as m x n matrices; coordinate i * n + j is entry (i, j).
CochainTriple coboundary_of(const Matrix& f, const AssYRepresentation& r);
// Columns: packed coboundaries of the unit maps, in coordinate order.
Matrix coboundary_matrix(const AssYRepresentation& r);

std::vector<CochainTriple> cocycle_space(const AssYRepresentation& r);
std::vector<CochainTriple> coboundary_space(const AssYRepresentation& r);
std::vector<Matrix> derivation_space(const AssYRepresentation& r);
bool is_cocycle(const CochainTriple& t, const AssYRepresentation& r);

struct CohomologyResult {
  Index dim_Z = 0;
  Index dim_B = 0;
  Index dim_H = 0;
  std::vector<CochainTriple> z_basis;
  std::vector<CochainTriple> b_basis;
  std::vector<CochainTriple> h_representatives;
};

// Representatives are the cocycle basis vectors that stay independent when
// added, in order, to a basis of B.
CohomologyResult cohomology(const AssYRepresentation& r);

// Same as semidirect(r, t); passes the assy axioms iff t is a cocycle.
AlgebraPresentation twisted_semidirect(const AssYRepresentation& r, const CochainTriple& t);

}  // namespace yam
