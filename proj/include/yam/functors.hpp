#pragma once

#include "yam/algebras.hpp"

namespace yam {

// Passages between classes. Each checks its input against the source class
// axioms first and throws AxiomViolation when they fail.
AlgebraPresentation ass_to_assy(const AlgebraPresentation& a);  // {a,b,c} = {{a,b,c}} = abc
AlgebraPresentation ass_to_lie(const AlgebraPresentation& a);   // commutator
AlgebraPresentation ats_to_assy(const AlgebraPresentation& t);  // dot = 0, dcurly = curly
AlgebraPresentation ats_to_lts(const AlgebraPresentation& t);
AlgebraPresentation lie_to_liey(const AlgebraPresentation& g);      // [[x,y],z]
AlgebraPresentation lts_to_liey(const AlgebraPresentation& t);      // zero bracket
AlgebraPresentation leibniz_to_liey(const AlgebraPresentation& l);  // -<<x,y>,z>
AlgebraPresentation diass_to_leibniz(const AlgebraPresentation& d); // a|-b - b-|a
AlgebraPresentation diass_to_assy(const AlgebraPresentation& d);
AlgebraPresentation diass_to_wats(const AlgebraPresentation& d);    // ternary part of diass_to_assy
AlgebraPresentation assy_to_liey(const AlgebraPresentation& a);
AlgebraPresentation assy_to_wats(const AlgebraPresentation& a);     // forgets dot
AlgebraPresentation assy_to_dendy(const AlgebraPresentation& a);    // prec = dot, curly1, dcurly1
AlgebraPresentation dend_to_dendy(const AlgebraPresentation& d);
AlgebraPresentation total_of_dendy(const AlgebraPresentation& d);
AlgebraPresentation wats_to_diass(const AlgebraPresentation& w);    // on A (x) A

// A dendriform triple system (three ternary ops) as a dendy algebra with
// zero binary ops and dcurly_i = curly_i. Throws AxiomViolation if the result
// fails the dendy axioms.
AlgebraPresentation dendy_from_triple_system(Index dim, const Op& curly1, const Op& curly2, const Op& curly3);

// a -| b = a.P(b), a |- b = P(a).b for an averaging operator P.
bool is_averaging_operator(const AlgebraPresentation& a, const Matrix& p);
AlgebraPresentation averaging_diass(const AlgebraPresentation& a, const Matrix& p);

// The assy structure on A (x) A of an associative algebra; basis e_i (x) e_j
// has index i*n + j.
AlgebraPresentation tensor_square_assy(const AlgebraPresentation& a);

struct Bimodule {
  Index dim = 0;
  Op left;   // A x M -> M
  Op right;  // M x A -> M
};

Bimodule regular_bimodule(const AlgebraPresentation& a);
Bimodule zero_bimodule(const AlgebraPresentation& a, Index dim);
AxiomReport check_bimodule(const AlgebraPresentation& a, const Bimodule& m);

// assy on A + M, with A coordinates first.
AlgebraPresentation bimodule_sum_assy(const AlgebraPresentation& a, const Bimodule& m);

struct ReductiveDecomposition {
  AlgebraPresentation algebra;  // ass
  Matrix projector0;
  Matrix projector1;
};

// Throws std::invalid_argument naming the broken condition.
void validate(const ReductiveDecomposition& r);

// The assy structure induced on the image of projector1, in the coordinates
// given by the pivot columns of projector1.
AlgebraPresentation from_reductive(const ReductiveDecomposition& r);

struct EnvelopePresentation {
  AlgebraPresentation base;
  std::vector<std::pair<Index, Index>> generator_pairs;  // (i, j) with Delta(e_i, e_j) in the basis
  Matrix mA_basis;   // columns: vectorized (sigma, tau) pairs, each 2n^2 long
  Op star;           // on M(A)
  Op act_left;       // M(A) x A -> A
  Op act_right;      // A x M(A) -> A
  Op delta;          // A x A -> M(A)
  AlgebraPresentation total;  // ass on M(A) + A, M(A) coordinates first
  ReductiveDecomposition split;

  Index m_dim() const { return mA_basis.cols(); }
};

// Vectorized (sigma_{x,y}, tau_{x,y}): sigma row-major, then tau row-major.
Vector sigma_tau_vector(const AlgebraPresentation& a, const Vector& x, const Vector& y);

// Thrown when the generator-defined product does not respect a relation
// among generators.
class WellDefinednessError : public std::runtime_error {
 public:
  WellDefinednessError(const std::string& what, Vector relation)
      : std::runtime_error(what), relation_(std::move(relation)) {}
  const Vector& relation() const { return relation_; }

 private:
  Vector relation_;
};

// Builds the canonical enveloping algebra and verifies, in order: the basis
// spans the generators, the star product is well defined on relations, the
// total algebra is associative and reductive, and from_reductive on the
// canonical split gives back a. Throws on the first violation.
EnvelopePresentation envelope(const AlgebraPresentation& a);

enum class Diagram { Ass, Diass };

// Both composite paths to liey; true iff their tensors are identical.
bool check_diagram(Diagram which, const AlgebraPresentation& input);

// Dispatches to the passage from input.kind to target (possibly composite).
AlgebraPresentation construct(const AlgebraPresentation& input, AlgebraClass target);
std::vector<AlgebraClass> construct_targets(AlgebraClass source);

}  // namespace yam
