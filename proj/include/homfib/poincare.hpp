#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homfib/lattice.hpp"
#include "homfib/polynomial.hpp"

namespace homfib {

/// Graded Betti numbers b_k, indexed by degree. Coefficients are nonnegative
/// and the last one is nonzero. The zero polynomial (empty space) is allowed
/// only as an intermediate.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  /// Throws InputError on a negative coefficient; trailing zeros are trimmed.
  explicit PoincarePolynomial(std::vector<Integer> coeffs);

  static PoincarePolynomial one() { return PoincarePolynomial({1}); }
  /// 1 + t^k
  static PoincarePolynomial exterior_generator(std::size_t k);
  /// Rejects non-integral or negative coefficients.
  static PoincarePolynomial from_rational(const QPolynomial& p);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer betti(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Sum of all Betti numbers.
  Integer value_at_one() const;
  /// b_k == b_{degree - k} for all k.
  bool is_palindromic() const;
  /// Coefficient-wise a <= b.
  bool dominated_by(const PoincarePolynomial& other) const;

  QPolynomial to_rational() const;
  /// Human form, e.g. "1 + 2t^2 + t^6".
  std::string to_string() const;

  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
  friend PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b);
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Smallest degree at which the two polynomials differ, if any.
std::optional<std::size_t> first_difference(const PoincarePolynomial& a,
                                            const PoincarePolynomial& b);

}  // namespace homfib
