#pragma once

// Descriptor-level reductive groups, their characters, and the subgroup
// families the analyzer understands.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homfib/lattice.hpp"

namespace homfib::groups {

using lattice::ComponentGroup;
using lattice::IntMatrix;

/// Classical root types. Exceptional types are not representable.
enum class RootType { A, B, C, D };

RootType parse_root_type(const std::string& s);
char root_type_letter(RootType t);

struct SimpleFactor {
  RootType type;
  int rank;

  /// Dimension of the simple group of this type.
  long dimension() const;
  std::string to_string() const;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// A connected reductive group (plus an optional unipotent radical, carried only
/// by its dimension) described by the data its character theory depends on.
///
/// central_restriction is the c x c matrix of the restriction map
/// X(G/D(G)) -> X(Z(G)^0) and must be nonsingular.
class ReductiveDescriptor {
 public:
  /// Validates and throws InputError on any violated invariant.
  static ReductiveDescriptor make(std::vector<SimpleFactor> simple_factors,
                                  std::size_t central_rank, IntMatrix central_restriction,
                                  long unipotent_dim = 0);

  static ReductiveDescriptor gl(int n);
  static ReductiveDescriptor sl(int n);
  static ReductiveDescriptor torus(std::size_t rank);
  /// Direct product; the central restriction is block diagonal.
  static ReductiveDescriptor product(const ReductiveDescriptor& a, const ReductiveDescriptor& b);

  const std::vector<SimpleFactor>& simple_factors() const { return simple_factors_; }
  std::size_t central_rank() const { return central_rank_; }
  const IntMatrix& central_restriction() const { return central_restriction_; }
  long unipotent_dim() const { return unipotent_dim_; }

  bool is_torus() const { return simple_factors_.empty(); }
  long dimension() const;
  /// Dimension of the derived group D(G).
  long derived_dimension() const;
  /// Same group with the unipotent radical removed.
  ReductiveDescriptor without_unipotent() const;
  ReductiveDescriptor with_unipotent_dim(long dim) const;

  /// GL_n (n >= 1) or SL_n (n >= 1) recognised structurally.
  std::optional<int> as_gl() const;
  std::optional<int> as_sl() const;

  std::string to_string() const;
  friend bool operator==(const ReductiveDescriptor&, const ReductiveDescriptor&) = default;

 private:
  ReductiveDescriptor() = default;
  std::vector<SimpleFactor> simple_factors_;
  std::size_t central_rank_ = 0;
  IntMatrix central_restriction_;
  long unipotent_dim_ = 0;
};

/// Coordinates in a fixed basis of X(G/D(G)). Any non-constant map G -> C^*
/// sending the identity to 1 is a character, so inputs are taken to be
/// characters directly.
struct Character {
  IntVector coords;

  bool is_zero() const;
  Integer content() const;
  std::string to_string() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Throws unless chi has the descriptor's central rank and is nonzero.
void require_fibration_character(const ReductiveDescriptor& g, const Character& chi);

enum class PairTag { O_in_GL, SO_in_GL, SO_in_SL };

PairTag parse_pair_tag(const std::string& s);
std::string pair_tag_name(PairTag t);

struct SubgroupDescriptor;

struct TrivialSubgroup {
  friend bool operator==(const TrivialSubgroup&, const TrivialSubgroup&) = default;
};

/// ker(chi) for a character of the ambient group.
struct KernelOfCharacter {
  Character chi;
  friend bool operator==(const KernelOfCharacter&, const KernelOfCharacter&) = default;
};

/// T <= H <= N(T), given by generators of the image W_H of H in the Weyl group,
/// as signed-permutation matrices in the ambient reflection representation.
struct WeylSandwich {
  std::vector<IntMatrix> generators;
  friend bool operator==(const WeylSandwich&, const WeylSandwich&) = default;
};

/// GL_n/O_n, GL_n/SO_n or SL_n/SO_n.
struct NamedPair {
  PairTag tag;
  int n;
  friend bool operator==(const NamedPair&, const NamedPair&) = default;
};

/// S^0 intersected with the base subgroup, where S = ker(chi).
struct KernelIntersection {
  std::shared_ptr<const SubgroupDescriptor> base;
  Character chi;
  friend bool operator==(const KernelIntersection& a, const KernelIntersection& b);
};

/// The graph embedding h -> (h, eta(h H')) of a Weyl sandwich H of S into
/// G = S x C^*, the last central coordinate of G being the C^* factor.
/// H' is generated over T by `generators`, H by those together with `twist`,
/// H/H' is cyclic of order `order` and eta sends the coset of `twist` to
/// exp(2 pi i eta_exponent / order). order == 1 means no twist: H' x {1}.
struct TwistedSandwich {
  std::vector<IntMatrix> generators;
  std::optional<IntMatrix> twist;
  Integer order = 1;
  Integer eta_exponent = 1;
  friend bool operator==(const TwistedSandwich&, const TwistedSandwich&) = default;
};

struct SubgroupDescriptor {
  using Variant = std::variant<TrivialSubgroup, KernelOfCharacter, WeylSandwich, NamedPair,
                               KernelIntersection, TwistedSandwich>;
  Variant value;

  static SubgroupDescriptor trivial() { return {TrivialSubgroup{}}; }
  static SubgroupDescriptor kernel_of(Character chi) { return {KernelOfCharacter{std::move(chi)}}; }
  static SubgroupDescriptor weyl_sandwich(std::vector<IntMatrix> gens) {
    return {WeylSandwich{std::move(gens)}};
  }
  static SubgroupDescriptor named(PairTag tag, int n) { return {NamedPair{tag, n}}; }
  static SubgroupDescriptor kernel_intersection(SubgroupDescriptor base, Character chi);

  std::string family() const;
  std::string to_string() const;
  friend bool operator==(const SubgroupDescriptor&, const SubgroupDescriptor&) = default;
};

/// Throws InputError when a NamedPair tag does not fit the ambient group.
void require_compatible(const ReductiveDescriptor& g, const SubgroupDescriptor& h);

/// Rewrites S^0 n H, S = ker(chi), as a subgroup from one of the non-derived
/// families. Throws InputError when H is not contained in ker(chi) in a way the
/// families can express (a Weyl sandwich, or a twist on a non-C^* coordinate).
SubgroupDescriptor resolve_kernel_intersection(const ReductiveDescriptor& g,
                                               const SubgroupDescriptor& base,
                                               const Character& chi);

/// Whether a and b span a sublattice of rank at most one.
bool parallel(const IntVector& a, const IntVector& b);

/// The restriction R * chi of chi to Z(G)^0.
IntVector restrict_to_central_torus(const ReductiveDescriptor& g, const Character& chi);

/// Component group of ker(chi): cyclic of order content(chi).
ComponentGroup kernel_component_group(const ReductiveDescriptor& g, const Character& chi);

enum class Splitting { split, quasi_split };

std::string splitting_name(Splitting s);

struct SplitReport {
  Splitting classification;
  Integer cover_degree;
  ComponentGroup kernel_components;
};

/// Split iff chi restricted to Z(G)^0 is primitive. Requires a connected kernel.
SplitReport split_classification(const ReductiveDescriptor& g, const Character& chi);

}  // namespace homfib::groups
