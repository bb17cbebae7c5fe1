#include "homfib/groups.hpp"

#include "homfib/error.hpp"

namespace homfib::groups {

RootType parse_root_type(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "E" || s == "F" || s == "G") {
    throw InputError("exceptional root type " + s + " is not supported (classical types A-D only)");
  }
  throw InputError("unknown root type '" + s + "'");
}

char root_type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

long SimpleFactor::dimension() const {
  const long n = rank;
  switch (type) {
    case RootType::A: return n * (n + 2);
    case RootType::B:
    case RootType::C: return n * (2 * n + 1);
    case RootType::D: return n * (2 * n - 1);
  }
  return 0;
}

std::string SimpleFactor::to_string() const {
  return std::string(1, root_type_letter(type)) + "_" + std::to_string(rank);
}

ReductiveDescriptor ReductiveDescriptor::make(std::vector<SimpleFactor> simple_factors,
                                              std::size_t central_rank,
                                              IntMatrix central_restriction, long unipotent_dim) {
  for (const auto& f : simple_factors) {
    const int min_rank = f.type == RootType::D ? 2 : 1;
    if (f.rank < min_rank) {
      throw InputError("simple factor " + f.to_string() + " has rank below " +
                       std::to_string(min_rank));
    }
  }
  if (central_restriction.rows() != central_rank || central_restriction.cols() != central_rank) {
    throw InputError("central_restriction must be " + std::to_string(central_rank) + "x" +
                     std::to_string(central_rank) + ", got " +
                     std::to_string(central_restriction.rows()) + "x" +
                     std::to_string(central_restriction.cols()));
  }
  if (central_rank > 0 && central_restriction.determinant() == 0) {
    throw InputError("central_restriction is singular");
  }
  if (unipotent_dim < 0) throw InputError("unipotent_dim must be nonnegative");
  ReductiveDescriptor g;
  g.simple_factors_ = std::move(simple_factors);
  g.central_rank_ = central_rank;
  g.central_restriction_ = std::move(central_restriction);
  g.unipotent_dim_ = unipotent_dim;
  return g;
}

ReductiveDescriptor ReductiveDescriptor::gl(int n) {
  if (n < 1) throw InputError("GL_n needs n >= 1");
  std::vector<SimpleFactor> f;
  if (n > 1) f.push_back({RootType::A, n - 1});
  // det(z * id) = z^n
  return make(std::move(f), 1, IntMatrix(1, 1, {Integer(n)}));
}

ReductiveDescriptor ReductiveDescriptor::sl(int n) {
  if (n < 1) throw InputError("SL_n needs n >= 1");
  std::vector<SimpleFactor> f;
  if (n > 1) f.push_back({RootType::A, n - 1});
  return make(std::move(f), 0, IntMatrix());
}

ReductiveDescriptor ReductiveDescriptor::torus(std::size_t rank) {
  return make({}, rank, IntMatrix::identity(rank));
}

ReductiveDescriptor ReductiveDescriptor::product(const ReductiveDescriptor& a,
                                                 const ReductiveDescriptor& b) {
  std::vector<SimpleFactor> f = a.simple_factors_;
  f.insert(f.end(), b.simple_factors_.begin(), b.simple_factors_.end());
  return make(std::move(f), a.central_rank_ + b.central_rank_,
              lattice::direct_sum(a.central_restriction_, b.central_restriction_),
              a.unipotent_dim_ + b.unipotent_dim_);
}

long ReductiveDescriptor::derived_dimension() const {
  long d = 0;
  for (const auto& f : simple_factors_) d += f.dimension();
  return d;
}

long ReductiveDescriptor::dimension() const {
  return derived_dimension() + static_cast<long>(central_rank_) + unipotent_dim_;
}

ReductiveDescriptor ReductiveDescriptor::without_unipotent() const { return with_unipotent_dim(0); }

ReductiveDescriptor ReductiveDescriptor::with_unipotent_dim(long dim) const {
  if (dim < 0) throw InputError("unipotent_dim must be nonnegative");
  ReductiveDescriptor g = *this;
  g.unipotent_dim_ = dim;
  return g;
}

namespace {

bool is_single_a(const std::vector<SimpleFactor>& f, int n) {
  if (n == 1) return f.empty();
  return f.size() == 1 && f[0].type == RootType::A && f[0].rank == n - 1;
}

int a_size(const std::vector<SimpleFactor>& f) {
  if (f.empty()) return 1;
  if (f.size() == 1 && f[0].type == RootType::A) return f[0].rank + 1;
  return 0;
}

}  // namespace

std::optional<int> ReductiveDescriptor::as_gl() const {
  const int n = a_size(simple_factors_);
  if (n == 0 || central_rank_ != 1 || central_restriction_(0, 0) != n) return std::nullopt;
  return n;
}

std::optional<int> ReductiveDescriptor::as_sl() const {
  const int n = a_size(simple_factors_);
  if (n == 0 || central_rank_ != 0 || !is_single_a(simple_factors_, n)) return std::nullopt;
  return n;
}

std::string ReductiveDescriptor::to_string() const {
  if (auto n = as_gl()) return "GL_" + std::to_string(*n) + (unipotent_dim_ ? " x U" : "");
  if (!simple_factors_.empty() && central_rank_ == 0) {
    if (auto n = as_sl()) return "SL_" + std::to_string(*n) + (unipotent_dim_ ? " x U" : "");
  }
  std::string out;
  for (const auto& f : simple_factors_) {
    if (!out.empty()) out += " . ";
    out += f.to_string();
  }
  if (central_rank_ > 0) {
    if (!out.empty()) out += " . ";
    out += "T^" + std::to_string(central_rank_);
  }
  if (out.empty()) out = "1";
  if (unipotent_dim_ > 0) out += " (unipotent radical of dim " + std::to_string(unipotent_dim_) + ")";
  return out;
}

bool Character::is_zero() const { return lattice::content(coords) == 0; }

Integer Character::content() const { return lattice::content(coords); }

std::string Character::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ",";
    out += coords[i].get_str();
  }
  return out + ")";
}

void require_fibration_character(const ReductiveDescriptor& g, const Character& chi) {
  if (g.central_rank() == 0) throw InputError("group has no nontrivial characters");
  if (chi.coords.size() != g.central_rank()) {
    throw InputError("character has " + std::to_string(chi.coords.size()) +
                     " coordinates but X(G/D(G)) has rank " + std::to_string(g.central_rank()));
  }
  if (chi.is_zero()) throw InputError("trivial character: the map to C^* must be non-constant");
}

PairTag parse_pair_tag(const std::string& s) {
  if (s == "O_in_GL") return PairTag::O_in_GL;
  if (s == "SO_in_GL") return PairTag::SO_in_GL;
  if (s == "SO_in_SL") return PairTag::SO_in_SL;
  throw InputError("unknown named pair '" + s + "'");
}

std::string pair_tag_name(PairTag t) {
  switch (t) {
    case PairTag::O_in_GL: return "O_in_GL";
    case PairTag::SO_in_GL: return "SO_in_GL";
    case PairTag::SO_in_SL: return "SO_in_SL";
  }
  return "?";
}

bool operator==(const KernelIntersection& a, const KernelIntersection& b) {
  if (!(a.chi == b.chi)) return false;
  if (!a.base || !b.base) return a.base == b.base;
  return *a.base == *b.base;
}

SubgroupDescriptor SubgroupDescriptor::kernel_intersection(SubgroupDescriptor base, Character chi) {
  return {KernelIntersection{std::make_shared<const SubgroupDescriptor>(std::move(base)),
                             std::move(chi)}};
}

std::string SubgroupDescriptor::family() const {
  struct Visitor {
    std::string operator()(const TrivialSubgroup&) const { return "trivial"; }
    std::string operator()(const KernelOfCharacter&) const { return "kernel_of_character"; }
    std::string operator()(const WeylSandwich&) const { return "weyl_sandwich"; }
    std::string operator()(const NamedPair&) const { return "named_pair"; }
    std::string operator()(const KernelIntersection&) const { return "kernel_intersection"; }
    std::string operator()(const TwistedSandwich&) const { return "twisted_sandwich"; }
  };
  return std::visit(Visitor{}, value);
}

std::string SubgroupDescriptor::to_string() const {
  struct Visitor {
    std::string operator()(const TrivialSubgroup&) const { return "1"; }
    std::string operator()(const KernelOfCharacter& k) const {
      return "ker" + k.chi.to_string();
    }
    std::string operator()(const WeylSandwich& w) const {
      return "T.W_H (" + std::to_string(w.generators.size()) + " generators)";
    }
    std::string operator()(const NamedPair& p) const {
      switch (p.tag) {
        case PairTag::O_in_GL: return "O_" + std::to_string(p.n);
        case PairTag::SO_in_GL:
        case PairTag::SO_in_SL: return "SO_" + std::to_string(p.n);
      }
      return "?";
    }
    std::string operator()(const KernelIntersection& k) const {
      return "ker" + k.chi.to_string() + "^0 n " + (k.base ? k.base->to_string() : "?");
    }
    std::string operator()(const TwistedSandwich& t) const {
      return "graph of eta on T.W_H (cyclic quotient of order " + t.order.get_str() + ")";
    }
  };
  return std::visit(Visitor{}, value);
}

namespace {

bool last_coordinate_is_free_factor(const ReductiveDescriptor& g) {
  const std::size_t c = g.central_rank();
  if (c == 0) return false;
  const IntMatrix& r = g.central_restriction();
  for (std::size_t i = 0; i + 1 < c; ++i)
    if (r(i, c - 1) != 0 || r(c - 1, i) != 0) return false;
  return r(c - 1, c - 1) == 1;
}

}  // namespace

void require_compatible(const ReductiveDescriptor& g, const SubgroupDescriptor& h) {
  struct Visitor {
    const ReductiveDescriptor& g;
    void operator()(const TrivialSubgroup&) const {}
    void operator()(const KernelOfCharacter& k) const { require_fibration_character(g, k.chi); }
    void operator()(const WeylSandwich&) const {}
    void operator()(const NamedPair& p) const {
      if (p.n < 1) throw InputError("named pair needs n >= 1");
      const auto n = p.tag == PairTag::SO_in_SL ? g.as_sl() : g.as_gl();
      const std::string ambient = p.tag == PairTag::SO_in_SL ? "SL_" : "GL_";
      if (!n || *n != p.n) {
        throw InputError("named pair " + pair_tag_name(p.tag) + " needs ambient group " + ambient +
                         std::to_string(p.n) + ", got " + g.to_string());
      }
    }
    void operator()(const KernelIntersection& k) const {
      if (!k.base) throw InputError("kernel_intersection without a base subgroup");
      require_fibration_character(g, k.chi);
      require_compatible(g, *k.base);
    }
    void operator()(const TwistedSandwich& t) const {
      if (!last_coordinate_is_free_factor(g)) {
        throw InputError("twisted_sandwich needs an ambient group S x C^* whose last central "
                         "coordinate is the C^* factor");
      }
      if (t.order < 1) throw InputError("twist order must be positive");
      if (t.order > 1 && !t.twist) throw InputError("twist order > 1 without a twist element");
    }
  };
  std::visit(Visitor{g.without_unipotent()}, h.value);
}

IntVector restrict_to_central_torus(const ReductiveDescriptor& g, const Character& chi) {
  require_fibration_character(g, chi);
  return g.central_restriction().apply(chi.coords);
}

ComponentGroup kernel_component_group(const ReductiveDescriptor& g, const Character& chi) {
  require_fibration_character(g, chi);
  return lattice::cokernel_component_group(chi.coords, g.central_rank());
}

std::string splitting_name(Splitting s) {
  return s == Splitting::split ? "split" : "quasi_split";
}

SplitReport split_classification(const ReductiveDescriptor& g, const Character& chi) {
  ComponentGroup components = kernel_component_group(g, chi);
  if (!components.is_trivial()) {
    throw InputError("kernel of " + chi.to_string() + " is disconnected (" +
                     components.to_string() +
                     "); pass the fibration through connected_fiber_cover first");
  }
  const IntVector v = restrict_to_central_torus(g, chi);
  Integer d = lattice::content(v);
  if (d == 0) throw InternalError("nonsingular central restriction killed a nonzero character");
  return {d == 1 ? Splitting::split : Splitting::quasi_split, std::move(d), std::move(components)};
}

}  // namespace homfib::groups

namespace homfib::groups {

bool parallel(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

SubgroupDescriptor resolve_kernel_intersection(const ReductiveDescriptor& g,
                                               const SubgroupDescriptor& base,
                                               const Character& chi) {
  require_fibration_character(g, chi);
  require_compatible(g, base);
  struct Visitor {
    const ReductiveDescriptor& g;
    const Character& chi;
    SubgroupDescriptor operator()(const TrivialSubgroup&) const {
      return SubgroupDescriptor::trivial();
    }
    SubgroupDescriptor operator()(const KernelOfCharacter& k) const {
      if (!parallel(k.chi.coords, chi.coords)) {
        throw InputError("ker" + k.chi.to_string() + " is not contained in ker" + chi.to_string());
      }
      // S^0 = ker(chi / content(chi)), which lies inside ker(k.chi).
      Character primitive = chi;
      const Integer c = chi.content();
      for (auto& x : primitive.coords) x /= c;
      return SubgroupDescriptor::kernel_of(std::move(primitive));
    }
    SubgroupDescriptor operator()(const WeylSandwich&) const {
      throw InputError("a Weyl sandwich contains a maximal torus, so it never lies in the "
                       "kernel of a nontrivial character");
    }
    SubgroupDescriptor operator()(const NamedPair& p) const {
      switch (p.tag) {
        case PairTag::O_in_GL:
          // ker(det^k)^0 = SL_n and O_n n SL_n = SO_n.
          return SubgroupDescriptor::named(PairTag::SO_in_GL, p.n);
        case PairTag::SO_in_GL:
          return SubgroupDescriptor::named(PairTag::SO_in_GL, p.n);
        case PairTag::SO_in_SL:
          break;
      }
      throw InputError("SL_n has no nontrivial characters");
    }
    SubgroupDescriptor operator()(const KernelIntersection& k) const {
      return resolve_kernel_intersection(g, resolve_kernel_intersection(g, *k.base, k.chi), chi);
    }
    SubgroupDescriptor operator()(const TwistedSandwich& t) const {
      const std::size_t c = chi.coords.size();
      for (std::size_t i = 0; i + 1 < c; ++i) {
        if (chi.coords[i] != 0) {
          throw InputError("character " + chi.to_string() +
                           " is nontrivial on the maximal torus of the twisted sandwich");
        }
      }
      if (!mpz_divisible_p(chi.coords[c - 1].get_mpz_t(), t.order.get_mpz_t())) {
        throw InputError("character " + chi.to_string() + " is nontrivial on the twist of order " +
                         t.order.get_str());
      }
      // S^0 = S x {1}, which meets the graph of eta in H' x {1}.
      return {TwistedSandwich{t.generators, std::nullopt, 1, 1}};
    }
  };
  return std::visit(Visitor{g, chi}, base.value);
}

}  // namespace homfib::groups
