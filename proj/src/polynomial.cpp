#include "homfib/polynomial.hpp"

#include <algorithm>

#include "homfib/error.hpp"

namespace homfib {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPolynomial::QPolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPolynomial QPolynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return *this;
  QPolynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

QPolynomial QPolynomial::substitute_power(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  if (k == 0) return QPolynomial(evaluate(1));
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].get_str() + ")";
    if (k > 0) out += "t^" + std::to_string(k);
  }
  return out;
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPolynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    const Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InternalError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  const QPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= QPolynomial(Rational(1) / lead);
    den_ = den_.monic();
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

}  // namespace homfib
