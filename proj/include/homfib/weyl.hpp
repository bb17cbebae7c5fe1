#pragma once

// Weyl groups of classical type as signed-permutation groups, their invariant
// degrees, and graded invariants of subgroups on the coinvariant algebra.
//
// Type A_n acts on C^{n+1} by permuting coordinates (the reflection
// representation plus a trivial line); types B_n, C_n and D_n act on C^n by
// signed permutations. Products act block-diagonally.

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "homfib/groups.hpp"
#include "homfib/poincare.hpp"

namespace homfib::weyl {

using groups::RootType;
using groups::SimpleFactor;
using lattice::IntMatrix;

inline constexpr std::size_t kDefaultMaxOrder = 10000;

/// Sends e_i to sign_i * e_{p(i)}; stored as images[i] = sign_i * (p(i) + 1).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws InputError unless `images` encodes a signed permutation.
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(std::size_t n);
  /// Accepts exactly the orthogonal matrices with entries in {-1, 0, 1}.
  static SignedPermutation from_matrix(const IntMatrix& m);

  std::size_t dimension() const { return images_.size(); }
  const std::vector<int>& images() const { return images_; }
  IntMatrix to_matrix() const;
  bool is_identity() const;
  SignedPermutation inverse() const;

  /// (length, sign product) for each cycle of the underlying permutation,
  /// sorted. det(1 - s w) is the product of (1 - sign * s^length).
  std::vector<std::pair<int, int>> signed_cycle_type() const;

  /// Matrix product: (a * b)(v) = a(b(v)).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// A finite group of signed permutations, closed under products.
class WeylSubgroup {
 public:
  const std::vector<SignedPermutation>& generators() const { return generators_; }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool contains(const SignedPermutation& w) const { return lookup_.contains(w); }
  bool contains(const WeylSubgroup& other) const;

 private:
  friend WeylSubgroup generate_closure(const std::vector<SignedPermutation>&, std::size_t,
                                       std::size_t);
  std::vector<SignedPermutation> generators_;
  std::vector<SignedPermutation> elements_;
  std::set<SignedPermutation> lookup_;
  std::size_t dimension_ = 0;
};

/// Smallest multiplicatively closed set containing the generators and the
/// identity. Throws InputError on a dimension mismatch or when the closure
/// exceeds max_order elements.
WeylSubgroup generate_closure(const std::vector<SignedPermutation>& generators,
                              std::size_t dimension, std::size_t max_order = kDefaultMaxOrder);
WeylSubgroup generate_closure(const std::vector<IntMatrix>& generators, std::size_t dimension,
                              std::size_t max_order = kDefaultMaxOrder);

/// A_{n-1}: 2..n; B_n, C_n: 2, 4, ..., 2n; D_n: 2, 4, ..., 2n-2, n.
std::vector<int> invariant_degrees(RootType type, int rank);
std::vector<int> invariant_degrees(const std::vector<SimpleFactor>& factors);

/// |W| from the closed-form order formulas.
Integer standard_order(const std::vector<SimpleFactor>& factors);

/// Dimension of the space each factor's Weyl group acts on.
std::size_t representation_dimension(const SimpleFactor& f);

class WeylGroup {
 public:
  /// Enumerates W; throws InputError if |W| exceeds max_order.
  static WeylGroup make(const std::vector<SimpleFactor>& factors,
                        std::size_t max_order = kDefaultMaxOrder);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  std::size_t reflection_rank() const { return group_.dimension(); }
  const std::vector<SignedPermutation>& simple_reflections() const { return simple_; }
  const std::vector<SignedPermutation>& elements() const { return group_.elements(); }
  const WeylSubgroup& as_subgroup() const { return group_; }
  std::size_t order() const { return group_.order(); }
  bool contains(const SignedPermutation& w) const { return group_.contains(w); }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Degrees of the basic invariants of the whole polynomial ring on the
  /// representation: the invariant degrees plus a 1 for every type-A factor.
  std::vector<int> representation_degrees() const;
  /// Number of positive roots; the coinvariant algebra tops out in degree
  /// twice this in the t-grading.
  long positive_roots() const;

 private:
  std::vector<SimpleFactor> factors_;
  std::vector<SignedPermutation> simple_;
  WeylSubgroup group_;
  std::vector<int> degrees_;
};

/// Simple reflections of the given factors in the block-diagonal representation.
std::vector<SignedPermutation> simple_reflections(const std::vector<SimpleFactor>& factors);

/// Subgroup of W generated by matrices, each of which must lie in W.
WeylSubgroup subgroup_from_generators(const WeylGroup& w, const std::vector<IntMatrix>& generators,
                                      std::size_t max_order = kDefaultMaxOrder);

/// Graded dimensions of the W_H-invariants of the coinvariant algebra of W, in
/// the grading where the coinvariant generators sit in degree 2:
///   prod_i (1 - t^{2 e_i}) * (1/|W_H|) * sum_{w in W_H} 1 / det(1 - t^2 w)
/// evaluated with exact rational-function arithmetic.
PoincarePolynomial molien_coinvariants(const WeylGroup& w, const WeylSubgroup& w_h);

}  // namespace homfib::weyl
