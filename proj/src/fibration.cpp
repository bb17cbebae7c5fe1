#include "homfib/fibration.hpp"

#include <numeric>

#include "homfib/error.hpp"
#include "homfib/weyl.hpp"

namespace homfib::fibration {

using groups::KernelIntersection;
using groups::KernelOfCharacter;
using groups::NamedPair;
using groups::PairTag;
using groups::TrivialSubgroup;
using groups::TwistedSandwich;
using groups::WeylSandwich;
using weyl::SignedPermutation;

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Character scaled(const Character& chi, const Integer& m) {
  Character out = chi;
  for (auto& x : out.coords) x *= m;
  return out;
}

Character divided(const Character& chi, const Integer& n) {
  Character out = chi;
  for (auto& x : out.coords) {
    if (!mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()))
      throw InternalError("character " + chi.to_string() + " not divisible by " + n.get_str());
    x /= n;
  }
  return out;
}

// chi = a * p with p = k / content(k); requires chi parallel to k.
Integer ratio_to_primitive(const Character& chi, const Character& k) {
  const Integer b = k.content();
  for (std::size_t i = 0; i < k.coords.size(); ++i) {
    if (k.coords[i] != 0) return chi.coords[i] * b / k.coords[i];
  }
  throw InternalError("zero character");
}

const Integer& twist_coordinate(const Character& chi) { return chi.coords.back(); }

void require_only_last_coordinate(const Character& chi) {
  for (std::size_t i = 0; i + 1 < chi.coords.size(); ++i) {
    if (chi.coords[i] != 0) {
      throw InputError("character " + chi.to_string() +
                       " is nontrivial on the maximal torus of the twisted sandwich, so chi(H) is "
                       "infinite");
    }
  }
}

// Order of chi(H), or InputError when it is infinite.
Integer image_order(const SubgroupDescriptor& h, const Character& chi) {
  struct Visitor {
    const Character& chi;
    Integer operator()(const TrivialSubgroup&) const { return 1; }
    Integer operator()(const KernelOfCharacter& k) const {
      if (!groups::parallel(k.chi.coords, chi.coords)) {
        throw InputError("chi" + chi.to_string() + " has infinite image on ker" +
                         k.chi.to_string());
      }
      const Integer b = k.chi.content();
      return b / gcd(ratio_to_primitive(chi, k.chi), b);
    }
    Integer operator()(const WeylSandwich&) const {
      throw InputError("a Weyl sandwich contains a maximal torus, on which chi" + chi.to_string() +
                       " has infinite image");
    }
    Integer operator()(const NamedPair& p) const {
      if (p.tag == PairTag::O_in_GL) return 2 / gcd(chi.coords[0], 2);
      return 1;
    }
    Integer operator()(const KernelIntersection&) const {
      throw InternalError("unresolved kernel intersection");
    }
    Integer operator()(const TwistedSandwich& t) const {
      require_only_last_coordinate(chi);
      return t.order / gcd(twist_coordinate(chi), t.order);
    }
  };
  return std::visit(Visitor{chi}, h.value);
}

// Components of S/H for S = ker(chi), chi trivial on H.
Integer fiber_component_count(const SubgroupDescriptor& h, const Character& chi) {
  struct Visitor {
    const Character& chi;
    Integer operator()(const TrivialSubgroup&) const { return chi.content(); }
    Integer operator()(const KernelOfCharacter& k) const {
      return abs(ratio_to_primitive(chi, k.chi)) / k.chi.content();
    }
    Integer operator()(const WeylSandwich&) const { throw InternalError("unreachable"); }
    Integer operator()(const NamedPair& p) const {
      // det(O_n) = {+-1}, so O_n meets exactly two of the |k| components.
      const Integer k = abs(chi.coords[0]);
      return p.tag == PairTag::O_in_GL ? Integer(k / 2) : k;
    }
    Integer operator()(const KernelIntersection&) const { throw InternalError("unreachable"); }
    Integer operator()(const TwistedSandwich& t) const {
      return abs(twist_coordinate(chi)) / t.order;
    }
  };
  return std::visit(Visitor{chi}, h.value);
}

SignedPermutation conjugate(const SignedPermutation& g, const SignedPermutation& x) {
  return g * x * g.inverse();
}

void require_normal(const weyl::WeylSubgroup& base, const std::vector<IntMatrix>& generators) {
  for (const auto& m : generators) {
    const auto g = SignedPermutation::from_matrix(m);
    for (const auto& b : base.generators()) {
      if (!base.contains(conjugate(g, b))) throw InputError("W_H' is not normal in W_H");
    }
  }
}

void check_twisted_sandwich(const ReductiveDescriptor& g, const TwistedSandwich& t,
                            std::size_t max_order) {
  const auto w = weyl::WeylGroup::make(g.simple_factors(), max_order);
  const auto base = weyl::subgroup_from_generators(w, t.generators, max_order);
  if (!t.twist) return;
  std::vector<IntMatrix> all = t.generators;
  all.push_back(*t.twist);
  const auto full = weyl::subgroup_from_generators(w, all, max_order);
  require_normal(base, all);
  const Integer index = Integer(static_cast<unsigned long>(full.order())) /
                        Integer(static_cast<unsigned long>(base.order()));
  if (index != t.order) {
    throw InputError("twist order " + t.order.get_str() + " does not match |W_H / W_H'| = " +
                     index.get_str());
  }
  if (t.order > 1 && gcd(t.eta_exponent, t.order) != 1) {
    throw InputError("eta not injective: gcd(" + t.eta_exponent.get_str() + ", " +
                     t.order.get_str() + ") != 1");
  }
}

std::string poly_pair(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  return "P(G/H) = " + a.to_string() + ", P(G/(S^0 n H)) = " + b.to_string();
}

bool uses_weyl_invariants(const SubgroupDescriptor& h) {
  return std::holds_alternative<WeylSandwich>(h.value) ||
         std::holds_alternative<TwistedSandwich>(h.value);
}

}  // namespace

CharacterFibration CharacterFibration::make(ReductiveDescriptor group, SubgroupDescriptor subgroup,
                                            Character chi, std::size_t max_order) {
  const ReductiveDescriptor g = group.without_unipotent();
  groups::require_fibration_character(g, chi);
  groups::require_compatible(g, subgroup);

  CharacterFibration f;
  f.resolved_subgroup_ = subgroup;
  if (const auto* k = std::get_if<KernelIntersection>(&subgroup.value))
    f.resolved_subgroup_ = groups::resolve_kernel_intersection(g, *k->base, k->chi);
  if (const auto* t = std::get_if<TwistedSandwich>(&f.resolved_subgroup_.value))
    check_twisted_sandwich(g, *t, max_order);

  f.descent_order_ = image_order(f.resolved_subgroup_, chi);
  f.effective_chi_ = scaled(chi, f.descent_order_);
  f.kernel_components_ = groups::kernel_component_group(g, f.effective_chi_);
  f.s0_h_ = groups::resolve_kernel_intersection(g, f.resolved_subgroup_, f.effective_chi_);
  f.fiber_components_ = fiber_component_count(f.resolved_subgroup_, f.effective_chi_);
  if (f.fiber_components_ < 1) throw InternalError("fibre with no components");

  f.group_ = std::move(group);
  f.subgroup_ = std::move(subgroup);
  f.chi_ = std::move(chi);
  return f;
}

Verdict analyze(const CharacterFibration& fib, const Options& options) {
  Verdict v;
  auto& chain = v.justification;

  // (1) unipotent radical
  const ReductiveDescriptor g = fib.group().without_unipotent();
  if (fib.group().unipotent_dim() > 0) {
    chain.push_back(step(Rule::LEM_UNIPOTENT_HOMOTOPY,
                         "stripped a unipotent radical of dimension " +
                             std::to_string(fib.group().unipotent_dim())));
  }
  if (fib.descent_order() > 1) {
    chain.push_back(step(Rule::NORMALIZE_CHARACTER_DESCENT,
                         "chi(H) has order " + fib.descent_order().get_str() + "; using chi = " +
                             fib.effective_chi().to_string()));
  }

  // (2) disconnected fibre
  const Integer& comps = fib.fiber_components();
  if (comps > 1) {
    chain.push_back(step(Rule::OBS_DISCONNECTED_FIBER,
                         "S/H has " + comps.get_str() + " components: b_0(F) b_0(B) = " +
                             comps.get_str() + " but b_0(E) = 1"));
    v.result = Result::not_trivial;
    v.failing_degree = 0;
    return v;
  }

  // (3) tori
  if (g.is_torus()) {
    chain.push_back(step(Rule::RED_SOLVABLE_TORI, "G is a torus of rank " +
                                                      std::to_string(g.central_rank()) +
                                                      " and the fibre is connected"));
    v.result = Result::trivial;
    return v;
  }

  // (4) connected kernel
  if (fib.kernel_components().is_trivial()) {
    const auto split = groups::split_classification(g, fib.effective_chi());
    const auto cover = lattice::pushout_cover(g.central_restriction(), fib.effective_chi().coords,
                                              split.cover_degree);
    chain.push_back(step(Rule::PROP_CONNECTED_KERNEL_GROUP,
                         "d_Z = content(R chi) = " + cover.degree.get_str() + ", deck group " +
                             cover.deck_group.to_string()));
    chain.push_back(step(Rule::COR_SPLIT_PRIMITIVE, groups::splitting_name(split.classification)));
    chain.push_back(step(Rule::THM_CONNECTED_KERNEL,
                         "ker" + fib.effective_chi().to_string() + " is connected"));
    v.result = Result::trivial;
    v.cover_degree = cover.degree;
    return v;
  }

  // (5) compare with S^0 n H, (6) table miss
  PoincarePolynomial p_h, p_s0;
  try {
    p_h = cohomology::space_poincare(g, fib.resolved_subgroup(), options);
    p_s0 = cohomology::space_poincare(g, fib.identity_component_intersection(), options);
  } catch (const TableMiss& e) {
    chain.push_back(step(Rule::TABLE_MISS, e.what()));
    v.result = Result::undecidable_with_table;
    return v;
  }
  const std::string kernel = "ker" + fib.effective_chi().to_string() + " has component group " +
                             fib.kernel_components().to_string();
  if (std::holds_alternative<NamedPair>(fib.resolved_subgroup().value))
    chain.push_back(step(Rule::TABLE_SYMMETRIC_SPACE, poly_pair(p_h, p_s0)));
  if (uses_weyl_invariants(fib.resolved_subgroup()))
    chain.push_back(step(Rule::FACT_WEYL_INVARIANTS, poly_pair(p_h, p_s0)));

  const auto diff = first_difference(p_h, p_s0);
  if (!diff) {
    chain.push_back(step(Rule::COR_S0_CRITERION, kernel + "; " + poly_pair(p_h, p_s0) +
                                                     " agree"));
    v.result = Result::trivial;
    return v;
  }
  if (const auto* t = std::get_if<TwistedSandwich>(&fib.resolved_subgroup().value);
      t && t->order > 1) {
    chain.push_back(step(Rule::THM_CONVERSE, "H/H' cyclic of order " + t->order.get_str() +
                                                 "; b_j(S/H) != b_j(S/H') at j = " +
                                                 std::to_string(*diff)));
  }
  chain.push_back(step(Rule::COR_S0_CRITERION, kernel + "; " + poly_pair(p_h, p_s0) +
                                                   " differ first in degree " +
                                                   std::to_string(*diff)));
  v.result = Result::not_trivial;
  v.failing_degree = *diff;
  return v;
}

PoincarePolynomial fiber_poincare(const CharacterFibration& fib, const Options& options) {
  const ReductiveDescriptor g = fib.group().without_unipotent();
  struct Visitor {
    const ReductiveDescriptor& g;
    const Options& options;
    PoincarePolynomial operator()(const TrivialSubgroup&) const {
      // S^0 has the same derived group and a central torus of rank c - 1.
      const std::size_t c = g.central_rank() - 1;
      return cohomology::group_poincare(ReductiveDescriptor::make(
          g.simple_factors(), c, IntMatrix::identity(c)));
    }
    PoincarePolynomial operator()(const KernelOfCharacter&) const {
      return PoincarePolynomial::one();
    }
    PoincarePolynomial operator()(const WeylSandwich&) const {
      throw InternalError("unreachable");
    }
    PoincarePolynomial operator()(const NamedPair& p) const {
      // Each component of S/H is SL_n/SO_n.
      return cohomology::symmetric_space_table(PairTag::SO_in_SL, p.n,
                                               options.symmetric_spaces());
    }
    PoincarePolynomial operator()(const KernelIntersection&) const {
      throw InternalError("unreachable");
    }
    PoincarePolynomial operator()(const TwistedSandwich& t) const {
      // Each component of S/H is S/H'.
      const auto w = weyl::WeylGroup::make(g.simple_factors(), options.max_order);
      return weyl::molien_coinvariants(
          w, weyl::subgroup_from_generators(w, t.generators, options.max_order));
    }
  };
  const auto component = std::visit(Visitor{g, options}, fib.resolved_subgroup().value);
  return PoincarePolynomial({fib.fiber_components()}) * component;
}

std::pair<CharacterFibration, Integer> connected_fiber_cover(const CharacterFibration& fib,
                                                             std::size_t max_order) {
  const Integer n = fib.fiber_components();
  if (n == 1 && fib.descent_order() == 1) return {fib, 1};
  auto cover = CharacterFibration::make(fib.group(), fib.subgroup(),
                                        divided(fib.effective_chi(), n), max_order);
  if (cover.fiber_components() != 1) throw InternalError("cover fibre still disconnected");
  return {std::move(cover), n};
}

DeckAction deck_action(const CharacterFibration& fib) {
  const auto* t = std::get_if<TwistedSandwich>(&fib.resolved_subgroup().value);
  if (!t || t->order == 1) return {};
  return {t->order, WeylData{fib.group().simple_factors(), t->generators, *t->twist},
          t->eta_exponent};
}

PoincarePolynomial monodromy_invariants(const PoincarePolynomial& fiber_cover,
                                        const DeckAction& action, std::size_t max_order) {
  if (action.order < 1) throw InputError("deck group order must be positive");
  if (action.order == 1) return fiber_cover;
  if (!action.weyl) {
    throw InputError("monodromy invariants are only available for a Weyl-sandwich deck action");
  }
  const auto w = weyl::WeylGroup::make(action.weyl->factors, max_order);
  const auto base = weyl::subgroup_from_generators(w, action.weyl->base_generators, max_order);
  if (weyl::molien_coinvariants(w, base) != fiber_cover) {
    throw InputError("fibre cover polynomial " + fiber_cover.to_string() +
                     " is not the cohomology of S/H'");
  }
  std::vector<IntMatrix> all = action.weyl->base_generators;
  all.push_back(action.weyl->twist);
  const auto full = weyl::subgroup_from_generators(w, all, max_order);
  const Integer index = Integer(static_cast<unsigned long>(full.order())) /
                        Integer(static_cast<unsigned long>(base.order()));
  if (index != action.order) {
    throw InputError("deck group order " + action.order.get_str() + " does not match " +
                     index.get_str());
  }
  return weyl::molien_coinvariants(w, full);
}

CharacterFibration build_converse_example(const ReductiveDescriptor& s,
                                          const std::vector<IntMatrix>& h_prime_generators,
                                          const std::vector<IntMatrix>& h_generators,
                                          const Integer& eta_exponent, std::size_t max_order) {
  const auto w = weyl::WeylGroup::make(s.simple_factors(), max_order);
  const auto base = weyl::subgroup_from_generators(w, h_prime_generators, max_order);
  const auto full = weyl::subgroup_from_generators(w, h_generators, max_order);
  if (!full.contains(base)) throw InputError("W_H' is not contained in W_H");

  const Integer d = Integer(static_cast<unsigned long>(full.order())) /
                    Integer(static_cast<unsigned long>(base.order()));
  if (d == 1) throw InputError("no cyclic quotient: W_H = W_H'");
  Integer u = eta_exponent % d;
  if (u < 0) u += d;
  if (gcd(u, d) != 1) {
    throw InputError("eta not injective: gcd(" + eta_exponent.get_str() + ", " + d.get_str() +
                     ") != 1");
  }
  require_normal(base, h_generators);

  // A coset of order d generates W_H / W_H'.
  std::optional<SignedPermutation> twist;
  for (const auto& x : full.elements()) {
    Integer k = 1;
    for (SignedPermutation p = x; !base.contains(p); p = p * x) ++k;
    if (k == d) {
      twist = x;
      break;
    }
  }
  if (!twist) throw InputError("W_H / W_H' is not cyclic");

  const ReductiveDescriptor g = ReductiveDescriptor::product(s, ReductiveDescriptor::torus(1));
  Character chi{IntVector(g.central_rank(), 0)};
  chi.coords.back() = d;
  TwistedSandwich h{h_prime_generators, twist->to_matrix(), d, u};
  return CharacterFibration::make(g, {std::move(h)}, std::move(chi), max_order);
}

}  // namespace homfib::fibration
