#include "homfib/cohomology.hpp"

#include "homfib/error.hpp"

namespace homfib::cohomology {

namespace {

PoincarePolynomial circle() { return PoincarePolynomial::exterior_generator(1); }

// prod_{i=from..to} (1 + t^{4i+1})
PoincarePolynomial exterior_4i_plus_1(int from, int to) {
  PoincarePolynomial p = PoincarePolynomial::one();
  for (int i = from; i <= to; ++i)
    p = p * PoincarePolynomial::exterior_generator(static_cast<std::size_t>(4 * i + 1));
  return p;
}

// SU(n)/SO(n): exterior algebra on classes of degree 5, 9, ..., 4m+1 when
// n = 2m+1; for n = 2m the top class 4m+1 is replaced by the Euler class of
// degree 2m (Toda-Mimura, Cohomology of Lie groups, table of AI spaces).
PoincarePolynomial sl_mod_so(int n) {
  const int m = n / 2;
  if (n % 2 == 1) return exterior_4i_plus_1(1, m);
  return PoincarePolynomial::exterior_generator(static_cast<std::size_t>(2 * m)) *
         exterior_4i_plus_1(1, m - 1);
}

// U(n)/O(n), the Lagrangian Grassmannian: exterior algebra on classes of
// degree 1, 5, 9, ..., 4k+1 <= 2n-1. This is the Z/2-invariant part of
// U(n)/SO(n); for even n the Euler class is anti-invariant.
PoincarePolynomial gl_mod_o(int n) { return circle() * exterior_4i_plus_1(1, (n - 1) / 2); }

SymmetricSpaceTable make_builtin() {
  SymmetricSpaceTable t;
  for (int n = 2; n <= SymmetricSpaceTable::kBuiltinMaxN; ++n) {
    t.set(PairTag::SO_in_SL, n, sl_mod_so(n));
    // GL_n/SO_n fibres over C^* by det with fibre SL_n/SO_n and connected
    // kernel SL_n, so its cohomology is the product.
    t.set(PairTag::SO_in_GL, n, circle() * sl_mod_so(n));
    t.set(PairTag::O_in_GL, n, gl_mod_o(n));
  }
  return t;
}

}  // namespace

const SymmetricSpaceTable& SymmetricSpaceTable::builtin() {
  static const SymmetricSpaceTable table = make_builtin();
  return table;
}

std::optional<PoincarePolynomial> SymmetricSpaceTable::find(PairTag tag, int n) const {
  auto it = entries_.find({tag, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void SymmetricSpaceTable::set(PairTag tag, int n, PoincarePolynomial p) {
  if (p.betti(0) != 1) {
    throw InputError("table entry for " + groups::pair_tag_name(tag) + " n=" + std::to_string(n) +
                     " must have constant term 1");
  }
  entries_[{tag, n}] = std::move(p);
}

std::vector<SymmetricSpaceTable::Entry> SymmetricSpaceTable::entries() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [key, p] : entries_) out.push_back({key.first, key.second, p});
  return out;
}

long compact_model_dimension(PairTag tag, int n) {
  const long m = n;
  switch (tag) {
    case PairTag::O_in_GL:
    case PairTag::SO_in_GL: return m * (m + 1) / 2;
    case PairTag::SO_in_SL: return (m * m + m - 2) / 2;
  }
  return 0;
}

bool compact_model_orientable(PairTag tag, int n) { return tag != PairTag::O_in_GL || n % 2 == 1; }

PoincarePolynomial group_poincare(const ReductiveDescriptor& g) {
  PoincarePolynomial p = PoincarePolynomial::one();
  for (std::size_t i = 0; i < g.central_rank(); ++i) p = p * circle();
  for (int d : weyl::invariant_degrees(g.simple_factors()))
    p = p * PoincarePolynomial::exterior_generator(static_cast<std::size_t>(2 * d - 1));
  return p;
}

PoincarePolynomial symmetric_space_table(PairTag tag, int n, const SymmetricSpaceTable& table) {
  if (n < 2) throw InputError("symmetric space table needs n >= 2");
  auto p = table.find(tag, n);
  if (!p) {
    throw TableMiss("no table entry for " + groups::pair_tag_name(tag) + " with n = " +
                    std::to_string(n));
  }
  return *p;
}

PoincarePolynomial space_poincare(const ReductiveDescriptor& g_in, const SubgroupDescriptor& h,
                                  const Options& options) {
  const ReductiveDescriptor g = g_in.without_unipotent();
  groups::require_compatible(g, h);

  struct Visitor {
    const ReductiveDescriptor& g;
    const Options& options;

    PoincarePolynomial operator()(const groups::TrivialSubgroup&) const {
      return group_poincare(g);
    }
    PoincarePolynomial operator()(const groups::KernelOfCharacter&) const {
      // G/ker(chi) is the image of chi, which is C^*.
      return circle();
    }
    PoincarePolynomial operator()(const groups::WeylSandwich& w) const {
      const auto weyl = weyl::WeylGroup::make(g.simple_factors(), options.max_order);
      const auto sub = weyl::subgroup_from_generators(weyl, w.generators, options.max_order);
      return weyl::molien_coinvariants(weyl, sub);
    }
    PoincarePolynomial operator()(const groups::NamedPair& p) const {
      return symmetric_space_table(p.tag, p.n, options.symmetric_spaces());
    }
    PoincarePolynomial operator()(const groups::KernelIntersection& k) const {
      return space_poincare(g, groups::resolve_kernel_intersection(g, *k.base, k.chi), options);
    }
    PoincarePolynomial operator()(const groups::TwistedSandwich& t) const {
      // G/H fibres over S/H_S with fibre C^*, and the cyclic monodromy acts
      // trivially on H^1(C^*; Q).
      const auto weyl = weyl::WeylGroup::make(g.simple_factors(), options.max_order);
      std::vector<IntMatrix> gens = t.generators;
      if (t.twist) gens.push_back(*t.twist);
      const auto sub = weyl::subgroup_from_generators(weyl, gens, options.max_order);
      return circle() * weyl::molien_coinvariants(weyl, sub);
    }
  };
  return std::visit(Visitor{g, options}, h.value);
}

KunnethResult kunneth_check(const PoincarePolynomial& total, const PoincarePolynomial& fiber,
                            const PoincarePolynomial& base) {
  auto diff = first_difference(total, fiber * base);
  return {!diff.has_value(), diff};
}

}  // namespace homfib::cohomology
