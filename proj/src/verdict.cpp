#include "homfib/verdict.hpp"

#include "homfib/error.hpp"

namespace homfib {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
  const char* citation;
  bool terminal;
};

constexpr RuleInfo kRules[] = {
    {Rule::DEF_KUNNETH, "DEF_KUNNETH",
     "cohomologically trivial means b_k(E) = sum_{p+q=k} b_p(F) b_q(B) for all k", false},
    {Rule::OBS_DISCONNECTED_FIBER, "OBS_DISCONNECTED_FIBER",
     "over a connected base a disconnected fibre breaks the Kunneth identity at b_0", true},
    {Rule::LEM_CONNECTED_FIBER_COVER, "LEM_CONNECTED_FIBER_COVER",
     "pulling back along z -> z^n gives a fibration with connected fibre F_0", false},
    {Rule::LEM_UNIPOTENT_HOMOTOPY, "LEM_UNIPOTENT_HOMOTOPY",
     "the unipotent radical is contractible, so G/H -> C^* is homotopic to the fibration of the "
     "reductive quotient",
     false},
    {Rule::LEM_ROSENLICHT, "LEM_ROSENLICHT",
     "a regular map G -> C^* sending the identity to 1 is a character", false},
    {Rule::PROP_CONNECTED_KERNEL_GROUP, "PROP_CONNECTED_KERNEL_GROUP",
     "a character with connected kernel S splits as S x C^* after the fibre-product cover of "
     "degree d_Z",
     false},
    {Rule::THM_CONNECTED_KERNEL, "THM_CONNECTED_KERNEL",
     "if the kernel S of the character is connected, S/H -> G/H -> C^* is cohomologically trivial",
     true},
    {Rule::COR_SPLIT_PRIMITIVE, "COR_SPLIT_PRIMITIVE",
     "chi is split exactly when its restriction to Z(G)^0 is primitive", false},
    {Rule::COR_S0_CRITERION, "COR_S0_CRITERION",
     "the fibration is cohomologically trivial iff H^*(G/H) = H^*(G/(S^0 n H))", true},
    {Rule::RED_SOLVABLE_TORI, "RED_SOLVABLE_TORI",
     "for a torus the fibration is a fibration of tori, trivial once the fibre is connected", true},
    {Rule::THM_CONVERSE, "THM_CONVERSE",
     "embedding H into S x C^* through an injective eta: H/H' -> C^* gives a nontrivial "
     "fibration with fibre S/H' whenever b_j(S/H) != b_j(S/H') for some j",
     false},
    {Rule::FACT_WEYL_INVARIANTS, "FACT_WEYL_INVARIANTS",
     "for T <= H <= N(T), H^*(G/H) is the W_H-invariant part of H^*(G/T), the coinvariant "
     "algebra",
     false},
    {Rule::THM_CENTRAL_TORUS, "THM_CENTRAL_TORUS", "Z(G_aff)^0 is the central torus of G", false},
    {Rule::THM_CHARACTER_SURJECTIVE, "THM_CHARACTER_SURJECTIVE",
     "a nontrivial character of G restricts surjectively to Z(G_aff)^0", false},
    {Rule::THM_SEMIABELIAN, "THM_SEMIABELIAN",
     "D(G_aff) -> G -> G_sab is cohomologically trivial", true},
    {Rule::REM_ISOGENY_DECOMPOSITION, "REM_ISOGENY_DECOMPOSITION",
     "G is isogenous to G_ss x T x A x G_S", true},
    {Rule::TABLE_SYMMETRIC_SPACE, "TABLE_SYMMETRIC_SPACE",
     "rational cohomology of GL_n/O_n, GL_n/SO_n and SL_n/SO_n", false},
    {Rule::NORMALIZE_CHARACTER_DESCENT, "NORMALIZE_CHARACTER_DESCENT",
     "if chi(H) is finite of order m, the map G/H -> C^* is induced by chi^m", false},
    {Rule::TABLE_MISS, "TABLE_MISS", "a space in the comparison has no cohomology table entry",
     true},
};

const RuleInfo& info(Rule r) {
  for (const auto& i : kRules)
    if (i.rule == r) return i;
  throw InternalError("unregistered rule");
}

}  // namespace

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (const auto& i : kRules) out.push_back(i.rule);
    return out;
  }();
  return rules;
}

std::string rule_name(Rule r) { return info(r).name; }
std::string rule_citation(Rule r) { return info(r).citation; }
bool is_terminal(Rule r) { return info(r).terminal; }

Rule parse_rule(const std::string& name) {
  for (const auto& i : kRules)
    if (name == i.name) return i.rule;
  throw InputError("unknown rule tag '" + name + "'");
}

std::string result_name(Result r) {
  switch (r) {
    case Result::trivial: return "trivial";
    case Result::not_trivial: return "not_trivial";
    case Result::undecidable_with_table: return "undecidable_with_table";
  }
  throw InternalError("bad result");
}

Result parse_result(const std::string& name) {
  if (name == "trivial") return Result::trivial;
  if (name == "not_trivial") return Result::not_trivial;
  if (name == "undecidable_with_table") return Result::undecidable_with_table;
  throw InputError("unknown result '" + name + "'");
}

}  // namespace homfib
