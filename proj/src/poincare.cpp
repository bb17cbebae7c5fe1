#include "homfib/poincare.hpp"

#include <algorithm>

#include "homfib/error.hpp"

namespace homfib {

PoincarePolynomial::PoincarePolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) throw InputError("Betti numbers must be nonnegative, got " + c.get_str());
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePolynomial PoincarePolynomial::exterior_generator(std::size_t k) {
  std::vector<Integer> c(k + 1);
  c[0] += 1;
  c[k] += 1;
  return PoincarePolynomial(std::move(c));
}

PoincarePolynomial PoincarePolynomial::from_rational(const QPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    if (q.get_den() != 1) {
      throw InternalError("non-integral Betti number " + q.get_str());
    }
    if (q < 0) throw InternalError("negative Betti number " + q.get_str());
    c.push_back(q.get_num());
  }
  return PoincarePolynomial(std::move(c));
}

Integer PoincarePolynomial::value_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool PoincarePolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool PoincarePolynomial::dominated_by(const PoincarePolynomial& other) const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] > other.betti(k)) return false;
  return true;
}

QPolynomial PoincarePolynomial::to_rational() const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(c));
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str();
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PoincarePolynomial(std::move(out));
}

PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.betti(k) + b.betti(k);
  return PoincarePolynomial(std::move(out));
}

std::optional<std::size_t> first_difference(const PoincarePolynomial& a,
                                            const PoincarePolynomial& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.betti(k) != b.betti(k)) return k;
  return std::nullopt;
}

}  // namespace homfib
