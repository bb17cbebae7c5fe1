#pragma once

// Character fibrations S/H -> G/H -> C^*, S = ker(chi), and the decision
// procedure for their rational cohomological triviality.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homfib/cohomology.hpp"
#include "homfib/groups.hpp"
#include "homfib/verdict.hpp"

namespace homfib::fibration {

using cohomology::Options;
using groups::Character;
using groups::ReductiveDescriptor;
using groups::SubgroupDescriptor;
using lattice::ComponentGroup;
using lattice::IntMatrix;

class CharacterFibration {
 public:
  /// Throws InputError when chi is zero, the pair is incompatible, or chi is
  /// not of finite order on H (then G/H does not map to C^* through chi).
  /// A twisted sandwich is checked against an enumeration of W capped at
  /// max_order elements.
  static CharacterFibration make(ReductiveDescriptor group, SubgroupDescriptor subgroup,
                                 Character chi, std::size_t max_order = weyl::kDefaultMaxOrder);

  const ReductiveDescriptor& group() const { return group_; }
  const SubgroupDescriptor& subgroup() const { return subgroup_; }
  const Character& chi() const { return chi_; }

  /// Order m of chi(H). G/H -> C^* is induced by effective_chi() = m * chi.
  const Integer& descent_order() const { return descent_order_; }
  const Character& effective_chi() const { return effective_chi_; }
  /// The subgroup with any kernel intersection resolved.
  const SubgroupDescriptor& resolved_subgroup() const { return resolved_subgroup_; }
  /// Component group of S = ker(effective_chi).
  const ComponentGroup& kernel_components() const { return kernel_components_; }
  /// S^0 n H as a descriptor of one of the non-derived families.
  const SubgroupDescriptor& identity_component_intersection() const { return s0_h_; }
  /// Number of connected components of the fibre S/H.
  const Integer& fiber_components() const { return fiber_components_; }

  friend bool operator==(const CharacterFibration& a, const CharacterFibration& b) {
    return a.group_ == b.group_ && a.subgroup_ == b.subgroup_ && a.chi_ == b.chi_;
  }

 private:
  CharacterFibration() = default;
  ReductiveDescriptor group_ = ReductiveDescriptor::torus(0);
  SubgroupDescriptor subgroup_;
  Character chi_;
  Integer descent_order_ = 1;
  Character effective_chi_;
  SubgroupDescriptor resolved_subgroup_;
  ComponentGroup kernel_components_;
  SubgroupDescriptor s0_h_;
  Integer fiber_components_ = 1;
};

/// Runs the decision procedure. Never throws TableMiss; a missing table entry
/// yields undecidable_with_table.
Verdict analyze(const CharacterFibration& fib, const Options& options = {});

/// Poincare polynomial of the fibre S/H. Throws TableMiss outside the table.
PoincarePolynomial fiber_poincare(const CharacterFibration& fib, const Options& options = {});

/// Pullback along z -> z^n, n the number of fibre components, restricted to
/// the component with connected fibre: (G, H, effective_chi / n).
std::pair<CharacterFibration, Integer> connected_fiber_cover(
    const CharacterFibration& fib, std::size_t max_order = weyl::kDefaultMaxOrder);

/// Weyl data of a sandwich H' <= H inside W, with H = <H', twist>.
struct WeylData {
  std::vector<groups::SimpleFactor> factors;
  std::vector<IntMatrix> base_generators;
  IntMatrix twist;
  friend bool operator==(const WeylData&, const WeylData&) = default;
};

/// The cyclic deck group Gamma = H/H' acting on S/H' x C^*: translation by the
/// twist on S/H' and multiplication by exp(2 pi i eta_exponent / order).
struct DeckAction {
  Integer order = 1;
  std::optional<WeylData> weyl;
  Integer eta_exponent = 1;
  friend bool operator==(const DeckAction&, const DeckAction&) = default;
};

/// Deck action of a twisted-sandwich fibration; order 1 for every other family.
DeckAction deck_action(const CharacterFibration& fib);

/// Gamma-invariant part of the cohomology of the fibre cover S/H'. For order 1
/// returns the input; otherwise the input must equal P(S/H') and the result is
/// the W_H-invariant part of the coinvariant algebra.
PoincarePolynomial monodromy_invariants(const PoincarePolynomial& fiber_cover,
                                        const DeckAction& action,
                                        std::size_t max_order = weyl::kDefaultMaxOrder);

/// G = S x C^*, H = graph of h -> exp(2 pi i u k / d) on W_H, k the index of
/// h's coset in the cyclic quotient W_H / W_H' of order d, and chi the
/// projection to C^* raised to d.
CharacterFibration build_converse_example(const ReductiveDescriptor& s,
                                          const std::vector<IntMatrix>& h_prime_generators,
                                          const std::vector<IntMatrix>& h_generators,
                                          const Integer& eta_exponent,
                                          std::size_t max_order = weyl::kDefaultMaxOrder);

}  // namespace homfib::fibration
