#pragma once

// Slow, independent reference computations used only by the tests. None of
// them calls into the library's algorithms.

#include <cstddef>
#include <vector>

#include "homfib/lattice.hpp"
#include "homfib/polynomial.hpp"

namespace oracle {

using homfib::Integer;
using homfib::Rational;

using Dense = std::vector<std::vector<long>>;

/// Laplace expansion.
Integer cofactor_determinant(const std::vector<std::vector<Integer>>& m);

/// Nonzero invariant factors d_k / d_{k-1}, d_k the gcd of all k x k minors.
std::vector<Integer> invariant_factors_by_minors(const homfib::lattice::IntMatrix& a);

/// Components of ker(v) on a torus of rank v.size(), from counting N-torsion:
/// |ker(v) n T[N]| = N^{r-1} gcd(N, #components).
long torsion_count_components(const std::vector<long>& v);

/// Simple reflections of a single classical factor as dense matrices.
/// type is one of 'A', 'B', 'C', 'D'; A_n acts on n+1 coordinates.
std::vector<Dense> simple_reflections(char type, int rank);
/// Degrees of the basic invariants of the whole polynomial ring on the
/// representation of simple_reflections(type, rank).
std::vector<int> ring_invariant_degrees(char type, int rank);

Dense multiply(const Dense& a, const Dense& b);
/// Breadth-first closure under multiplication by the generators.
std::vector<Dense> closure(const std::vector<Dense>& generators, std::size_t dimension);

/// Number of elements of each Coxeter length, by BFS on the Cayley graph.
std::vector<long> length_distribution(char type, int rank);

/// Coefficients in s of prod(1 - s^e) * (1/|H|) sum_h 1/det(1 - s h), from
/// characteristic polynomials (Faddeev-LeVerrier) and truncated power series.
/// Throws if the series does not terminate by degree `top`.
std::vector<Rational> molien_power_series(const std::vector<Dense>& elements,
                                          const std::vector<int>& ring_degrees, std::size_t top);

/// Graded dimensions (in s) of the H-invariants of the coinvariant algebra,
/// by linear algebra on polynomials modulo the ideal of basic invariants.
/// Elements must be signed permutation matrices.
std::vector<long> coinvariant_invariant_dims(char type, int rank, const std::vector<Dense>& h);

struct BezoutResult {
  long min_positive;  // smallest positive <v, lambda> over the box, 0 if none
  std::vector<long> lambda;
};

/// Exhaustive search over |lambda_i| <= bound.
BezoutResult bezout_box(const std::vector<long>& v, long bound);

}  // namespace oracle
