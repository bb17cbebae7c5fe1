#include "homfib/structure.hpp"

#include "homfib/error.hpp"

namespace homfib::structure {

QuasiReductiveDescriptor QuasiReductiveDescriptor::make(ReductiveDescriptor affine_part,
                                                        long abelian_dim,
                                                        std::size_t antiaffine_toral_rank,
                                                        IntMatrix embedding,
                                                        long split_abelian_dim) {
  const std::size_t c = affine_part.central_rank();
  const std::size_t s = antiaffine_toral_rank;
  if (abelian_dim < 0) throw InputError("abelian_dim must be >= 0");
  if (s > c) {
    throw InputError("antiaffine_toral_rank " + std::to_string(s) +
                     " exceeds the central rank " + std::to_string(c) + " of the affine part");
  }
  if (embedding.rows() != s || embedding.cols() != c) {
    throw InputError("embedding must be " + std::to_string(s) + " x " + std::to_string(c));
  }
  if (embedding.rank() != s) throw InputError("embedding must have full row rank");
  if (split_abelian_dim < 0 || split_abelian_dim > abelian_dim)
    throw InputError("split_abelian_dim must lie in [0, abelian_dim]");
  if (abelian_dim == 0 && s > 0)
    throw InputError("an anti-affine toral part needs abelian_dim > 0");
  if (s > 0 && abelian_dim - split_abelian_dim < 1) {
    throw InputError("an anti-affine toral part needs a nonsplit abelian part: "
                     "abelian_dim - split_abelian_dim must be >= 1");
  }
  QuasiReductiveDescriptor q;
  q.affine_part_ = std::move(affine_part);
  q.abelian_dim_ = abelian_dim;
  q.antiaffine_toral_rank_ = s;
  q.embedding_ = std::move(embedding);
  q.split_abelian_dim_ = split_abelian_dim;
  return q;
}

QuasiReductiveDescriptor QuasiReductiveDescriptor::affine(ReductiveDescriptor affine_part) {
  const std::size_t c = affine_part.central_rank();
  return make(std::move(affine_part), 0, 0, IntMatrix(0, c), 0);
}

long QuasiReductiveDescriptor::dimension() const {
  return affine_part_.without_unipotent().dimension() + abelian_dim_;
}

std::string QuasiReductiveDescriptor::to_string() const {
  std::string out = "G_aff = " + affine_part_.to_string();
  if (abelian_dim_ > 0) {
    out += ", abelian dim " + std::to_string(abelian_dim_) + " (split " +
           std::to_string(split_abelian_dim_) + "), anti-affine toral rank " +
           std::to_string(antiaffine_toral_rank_);
  }
  return out;
}

CentralTorusReport central_torus(const QuasiReductiveDescriptor& g) {
  const std::size_t c = g.affine_part().central_rank();
  return {c, step(Rule::THM_CENTRAL_TORUS, "Z(G_aff)^0 has rank " + std::to_string(c))};
}

SurjectivityReport character_surjectivity(const QuasiReductiveDescriptor& g,
                                          const Character& chi) {
  const ReductiveDescriptor aff = g.affine_part().without_unipotent();
  if (aff.central_rank() == 0) throw InputError("no nontrivial characters: Z(G_aff)^0 is trivial");
  groups::require_fibration_character(aff, chi);

  SurjectivityReport r;
  r.restriction = groups::restrict_to_central_torus(aff, chi);
  const IntVector on_ant = g.embedding().apply(r.restriction);
  for (const auto& x : on_ant) {
    if (x != 0) {
      throw InputError("character " + chi.to_string() +
                       " is nontrivial on the anti-affine part; characters of G vanish there");
    }
  }
  r.degree = lattice::content(r.restriction);
  if (r.degree == 0) {
    throw InputError("descriptor inconsistent with surjectivity of characters on Z(G_aff)^0");
  }
  if (g.antiaffine_toral_rank() > 0) {
    r.justification.push_back(
        step(Rule::LEM_ROSENLICHT, "chi vanishes on the anti-affine toral rank " +
                                       std::to_string(g.antiaffine_toral_rank())));
  }
  r.justification.push_back(central_torus(g).witness);
  r.justification.push_back(step(Rule::THM_CHARACTER_SURJECTIVE,
                                 "chi|Z(G_aff)^0 = " + Character{r.restriction}.to_string() + ", d_Z = " + r.degree.get_str()));
  return r;
}

Verdict semiabelianization_verdict(const QuasiReductiveDescriptor& g) {
  Verdict v;
  const ReductiveDescriptor aff = g.affine_part().without_unipotent();
  if (g.affine_part().unipotent_dim() > 0) {
    v.justification.push_back(step(Rule::LEM_UNIPOTENT_HOMOTOPY,
                                   "stripped a unipotent radical of dimension " +
                                       std::to_string(g.affine_part().unipotent_dim())));
  }
  const long c = static_cast<long>(aff.central_rank());
  const long s = static_cast<long>(g.antiaffine_toral_rank());
  const long dim_g_prime = g.abelian_dim() + s + c - static_cast<long>(g.embedding().rank());
  const long dim_sab = g.dimension() - aff.derived_dimension();
  if (dim_g_prime != dim_sab) {
    throw InputError("descriptor violates generation property: dim G_ant Z(G_aff)^0 = " +
                     std::to_string(dim_g_prime) + " but dim G_sab = " + std::to_string(dim_sab));
  }
  Integer degree = 1;
  if (c > 0) {
    degree = aff.central_restriction().determinant();
    if (degree < 0) degree = -degree;
  }
  v.justification.push_back(central_torus(g).witness);
  v.justification.push_back(step(Rule::THM_SEMIABELIAN,
                                 "dim G_ant Z(G_aff)^0 = dim G_sab = " + std::to_string(dim_sab) +
                                     "; isogeny degree |Z(G_aff)^0 n D(G_aff)| = " +
                                     degree.get_str()));
  v.result = Result::trivial;
  v.cover_degree = degree;
  return v;
}

long Decomposition::dimension() const {
  long d = static_cast<long>(torus_rank) + abelian_dim + antiaffine_part.abelian_dim +
           static_cast<long>(antiaffine_part.toral_rank);
  for (const auto& f : semisimple_factors) d += f.dimension();
  return d;
}

std::string Decomposition::to_string() const {
  std::string ss;
  for (const auto& f : semisimple_factors) ss += (ss.empty() ? "" : " x ") + f.to_string();
  if (ss.empty()) ss = "1";
  return "G_ss = " + ss + ", T = rank " + std::to_string(torus_rank) + ", A = dim " +
         std::to_string(abelian_dim) + ", G_S = (abelian dim " +
         std::to_string(antiaffine_part.abelian_dim) + ", toral rank " +
         std::to_string(antiaffine_part.toral_rank) + ")";
}

Decomposition isogeny_decomposition(const QuasiReductiveDescriptor& g) {
  const ReductiveDescriptor aff = g.affine_part().without_unipotent();
  const std::size_t s = g.antiaffine_toral_rank();
  Decomposition d{aff.simple_factors(), aff.central_rank() - s, g.split_abelian_dim(),
                  {g.abelian_dim() - g.split_abelian_dim(), s}};
  if (d.dimension() != g.dimension()) {
    throw InternalError("decomposition has dimension " + std::to_string(d.dimension()) +
                        " but G has dimension " + std::to_string(g.dimension()));
  }
  return d;
}

}  // namespace homfib::structure
