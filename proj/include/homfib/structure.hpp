#pragma once

// Quasi-reductive groups G, extensions of an abelian variety by a reductive
// affine part G_aff, described by discrete invariants only.

#include <cstddef>
#include <string>
#include <vector>

#include "homfib/groups.hpp"
#include "homfib/verdict.hpp"

namespace homfib::structure {

using groups::Character;
using groups::ReductiveDescriptor;
using groups::SimpleFactor;
using lattice::IntMatrix;

class QuasiReductiveDescriptor {
 public:
  /// embedding is s x c, its rows the cocharacters of the torus of G_ant in
  /// Z(G_aff)^0. Throws InputError unless s <= c, the embedding has full row
  /// rank s, 0 <= a <= g, s = 0 when g = 0, and g - a >= 1 when s > 0 (an
  /// anti-affine group with a toral part is a nonsplit extension of a
  /// positive-dimensional abelian variety).
  static QuasiReductiveDescriptor make(ReductiveDescriptor affine_part, long abelian_dim,
                                       std::size_t antiaffine_toral_rank, IntMatrix embedding,
                                       long split_abelian_dim);
  /// G = G_aff.
  static QuasiReductiveDescriptor affine(ReductiveDescriptor affine_part);

  const ReductiveDescriptor& affine_part() const { return affine_part_; }
  long abelian_dim() const { return abelian_dim_; }
  std::size_t antiaffine_toral_rank() const { return antiaffine_toral_rank_; }
  const IntMatrix& embedding() const { return embedding_; }
  long split_abelian_dim() const { return split_abelian_dim_; }

  bool is_affine() const { return abelian_dim_ == 0; }
  /// dim G_aff + g, the unipotent radical excluded.
  long dimension() const;
  std::string to_string() const;
  friend bool operator==(const QuasiReductiveDescriptor&,
                         const QuasiReductiveDescriptor&) = default;

 private:
  QuasiReductiveDescriptor() = default;
  ReductiveDescriptor affine_part_ = ReductiveDescriptor::torus(0);
  long abelian_dim_ = 0;
  std::size_t antiaffine_toral_rank_ = 0;
  IntMatrix embedding_;
  long split_abelian_dim_ = 0;
};

struct CentralTorusReport {
  std::size_t rank;
  JustificationStep witness;
};

CentralTorusReport central_torus(const QuasiReductiveDescriptor& g);

struct SurjectivityReport {
  /// chi restricted to Z(G_aff)^0.
  IntVector restriction;
  /// content of the restriction, the degree of the fibre-product cover.
  Integer degree;
  std::vector<JustificationStep> justification;
};

/// Throws InputError when G has no characters, chi is zero or has the wrong
/// length, or chi is nontrivial on G_ant.
SurjectivityReport character_surjectivity(const QuasiReductiveDescriptor& g,
                                          const Character& chi);

/// Checks that G_ant Z(G_aff)^0 maps onto G_sab with finite kernel and returns
/// trivial, with |det R| as the cover degree.
Verdict semiabelianization_verdict(const QuasiReductiveDescriptor& g);

struct AntiaffinePart {
  long abelian_dim;
  std::size_t toral_rank;
  friend bool operator==(const AntiaffinePart&, const AntiaffinePart&) = default;
};

/// G isogenous to G_ss x T x A x G_S.
struct Decomposition {
  std::vector<SimpleFactor> semisimple_factors;
  std::size_t torus_rank;
  long abelian_dim;
  AntiaffinePart antiaffine_part;

  long dimension() const;
  std::string to_string() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition isogeny_decomposition(const QuasiReductiveDescriptor& g);

}  // namespace homfib::structure
