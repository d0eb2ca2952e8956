#pragma once

#include "yam/algebras.hpp"

#include <optional>
#include <random>

namespace yam {

using Rng = std::mt19937_64;

Rational random_small_rational(Rng& rng, int bound = 3);

// Integer matrix with nonzero determinant, entries in [-2, 2].
Matrix random_invertible(Index n, Rng& rng);

// The structure transported along the basis change t: op'(x, ...) = t^-1 op(t x, ...).
AlgebraPresentation transport(const AlgebraPresentation& a, const Matrix& t);

// Associative algebras of dimension 2 by structure constants: zero, x.x = y,
// e.e = e, the two one-sided unit ones, the dual numbers, and Q + Q.
const std::vector<AlgebraPresentation>& known_associative_dim2();

AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b);

// A random associative algebra of dimension 1, 2 or 3: a known one, summed
// for dimension 3, moved by a random basis change.
AlgebraPresentation random_ass(Index n, Rng& rng);

// The two-sided unit, if any.
std::optional<Vector> unit_of(const AlgebraPresentation& a);

// lambda Id, or a -> f(a) 1 for a random functional f on unital algebras.
Matrix random_averaging_operator(const AlgebraPresentation& a, Rng& rng);

// Even draws: -| = |- = a random associative product; odd draws: the
// averaging construction on a random associative algebra.
AlgebraPresentation random_diass(Index n, Rng& rng, bool averaging);

// All ops of class c with each structure constant drawn nonzero with
// probability 1 / sparsity. No axioms are imposed.
AlgebraPresentation random_candidate(AlgebraClass c, Index dim, Rng& rng, int sparsity = 2);

}  // namespace yam
