#pragma once

// Rational Poincare polynomials of reductive groups and of the homogeneous
// spaces in the supported subgroup families, plus the Kunneth test.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homfib/groups.hpp"
#include "homfib/poincare.hpp"
#include "homfib/weyl.hpp"

namespace homfib::cohomology {

using groups::PairTag;
using groups::ReductiveDescriptor;
using groups::SubgroupDescriptor;
using lattice::IntMatrix;

/// Rational Poincare polynomials of GL_n/O_n, GL_n/SO_n and SL_n/SO_n.
class SymmetricSpaceTable {
 public:
  struct Entry {
    PairTag tag;
    int n;
    PoincarePolynomial polynomial;
  };

  /// Entries for 2 <= n <= kBuiltinMaxN of every tag.
  static const SymmetricSpaceTable& builtin();
  static constexpr int kBuiltinMaxN = 12;

  std::optional<PoincarePolynomial> find(PairTag tag, int n) const;
  /// Adds or replaces an entry.
  void set(PairTag tag, int n, PoincarePolynomial p);
  std::vector<Entry> entries() const;

 private:
  std::map<std::pair<PairTag, int>, PoincarePolynomial> entries_;
};

/// Dimension of the compact model U(n)/O(n), U(n)/SO(n) or SU(n)/SO(n).
long compact_model_dimension(PairTag tag, int n);
/// U(n)/O(n) is orientable only for odd n; the other two always are.
bool compact_model_orientable(PairTag tag, int n);

struct Options {
  std::size_t max_order = weyl::kDefaultMaxOrder;
  /// nullptr selects the built-in table.
  const SymmetricSpaceTable* table = nullptr;

  const SymmetricSpaceTable& symmetric_spaces() const {
    return table ? *table : SymmetricSpaceTable::builtin();
  }
};

/// (1+t)^c * prod over factors and invariant degrees d of (1 + t^{2d-1}).
/// The unipotent radical is contractible and ignored.
PoincarePolynomial group_poincare(const ReductiveDescriptor& g);

/// Throws TableMiss when the table has no entry for (tag, n).
PoincarePolynomial symmetric_space_table(PairTag tag, int n,
                                         const SymmetricSpaceTable& table =
                                             SymmetricSpaceTable::builtin());

/// Poincare polynomial of G/H for every supported subgroup family.
/// Throws InputError for an incompatible pair and TableMiss outside the table.
PoincarePolynomial space_poincare(const ReductiveDescriptor& g, const SubgroupDescriptor& h,
                                  const Options& options = {});

struct KunnethResult {
  bool pass;
  /// Smallest k with b_k(E) != sum_{p+q=k} b_p(F) b_q(B); empty on pass.
  std::optional<std::size_t> first_failing_degree;
};

KunnethResult kunneth_check(const PoincarePolynomial& total, const PoincarePolynomial& fiber,
                            const PoincarePolynomial& base);

}  // namespace homfib::cohomology
