#include "homfib/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "homfib/error.hpp"

namespace homfib::weyl {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    const int j = std::abs(x) - 1;
    if (x == 0 || j >= n || hit[static_cast<std::size_t>(j)]) {
      throw InputError("malformed signed permutation");
    }
    hit[static_cast<std::size_t>(j)] = true;
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::from_matrix(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("generator matrix must be square");
  const std::size_t n = m.rows();
  std::vector<int> images(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) {
      const Integer& x = m(row, col);
      if (x == 0) continue;
      if ((x != 1 && x != -1) || images[col] != 0) {
        throw InputError("generator is not a signed-permutation matrix");
      }
      images[col] = (x > 0 ? 1 : -1) * static_cast<int>(row + 1);
    }
    if (images[col] == 0) throw InputError("generator matrix is not invertible");
  }
  return SignedPermutation(std::move(images));
}

IntMatrix SignedPermutation::to_matrix() const {
  const std::size_t n = images_.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int x = images_[i];
    m(static_cast<std::size_t>(std::abs(x) - 1), i) = x > 0 ? 1 : -1;
  }
  return m;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int x = images_[i];
    inv[static_cast<std::size_t>(std::abs(x) - 1)] = (x > 0 ? 1 : -1) * static_cast<int>(i + 1);
  }
  return SignedPermutation(std::move(inv));
}

std::vector<std::pair<int, int>> SignedPermutation::signed_cycle_type() const {
  std::vector<std::pair<int, int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    int sign = 1;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      ++length;
      const int x = images_[i];
      if (x < 0) sign = -sign;
      i = static_cast<std::size_t>(std::abs(x) - 1);
    }
    out.emplace_back(length, sign);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.dimension() != b.dimension()) throw InputError("signed permutations of different rank");
  std::vector<int> out(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) {
    const int x = b.images_[i];
    const int y = a.images_[static_cast<std::size_t>(std::abs(x) - 1)];
    out[i] = x > 0 ? y : -y;
  }
  SignedPermutation r;
  r.images_ = std::move(out);
  return r;
}

bool WeylSubgroup::contains(const WeylSubgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [this](const SignedPermutation& w) { return contains(w); });
}

WeylSubgroup generate_closure(const std::vector<SignedPermutation>& generators,
                              std::size_t dimension, std::size_t max_order) {
  WeylSubgroup g;
  g.dimension_ = dimension;
  for (const auto& s : generators) {
    if (s.dimension() != dimension) {
      throw InputError("generator of rank " + std::to_string(s.dimension()) +
                       " in a group acting on rank " + std::to_string(dimension));
    }
    if (std::find(g.generators_.begin(), g.generators_.end(), s) == g.generators_.end()) {
      g.generators_.push_back(s);
    }
  }
  const SignedPermutation e = SignedPermutation::identity(dimension);
  g.elements_.push_back(e);
  g.lookup_.insert(e);
  // Breadth-first over right multiplication; a finite monoid generated by
  // invertible elements is a group.
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : g.generators_) {
      SignedPermutation next = g.elements_[head] * s;
      if (g.lookup_.insert(next).second) {
        if (g.elements_.size() >= max_order) {
          throw InputError("group order exceeds the enumeration limit of " +
                           std::to_string(max_order));
        }
        g.elements_.push_back(std::move(next));
      }
    }
  }
  return g;
}

WeylSubgroup generate_closure(const std::vector<IntMatrix>& generators, std::size_t dimension,
                              std::size_t max_order) {
  std::vector<SignedPermutation> gens;
  gens.reserve(generators.size());
  for (const auto& m : generators) gens.push_back(SignedPermutation::from_matrix(m));
  return generate_closure(gens, dimension, max_order);
}

std::vector<int> invariant_degrees(RootType type, int rank) {
  std::vector<int> d;
  switch (type) {
    case RootType::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case RootType::B:
    case RootType::C:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case RootType::D:
      if (rank < 2) throw InputError("type D needs rank >= 2");
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
  }
  return d;
}

std::vector<int> invariant_degrees(const std::vector<SimpleFactor>& factors) {
  std::vector<int> d;
  for (const auto& f : factors) {
    auto part = invariant_degrees(f.type, f.rank);
    d.insert(d.end(), part.begin(), part.end());
  }
  return d;
}

Integer standard_order(const std::vector<SimpleFactor>& factors) {
  Integer order = 1;
  for (const auto& f : factors) {
    Integer fact;
    switch (f.type) {
      case RootType::A:
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(f.rank + 1));
        order *= fact;
        break;
      case RootType::B:
      case RootType::C:
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(f.rank));
        order *= fact * (Integer(1) << f.rank);
        break;
      case RootType::D:
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(f.rank));
        order *= fact * (Integer(1) << (f.rank - 1));
        break;
    }
  }
  return order;
}

std::size_t representation_dimension(const SimpleFactor& f) {
  return static_cast<std::size_t>(f.type == RootType::A ? f.rank + 1 : f.rank);
}

std::vector<SignedPermutation> simple_reflections(const std::vector<SimpleFactor>& factors) {
  std::size_t total = 0;
  for (const auto& f : factors) total += representation_dimension(f);

  std::vector<SignedPermutation> out;
  std::size_t offset = 0;
  auto base = [&] {
    std::vector<int> v(total);
    for (std::size_t i = 0; i < total; ++i) v[i] = static_cast<int>(i) + 1;
    return v;
  };
  for (const auto& f : factors) {
    const std::size_t n = representation_dimension(f);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto v = base();
      std::swap(v[offset + i], v[offset + i + 1]);
      out.emplace_back(std::move(v));
    }
    const std::size_t last = offset + n - 1;
    if (f.type == RootType::B || f.type == RootType::C) {
      auto v = base();
      v[last] = -v[last];
      out.emplace_back(std::move(v));
    } else if (f.type == RootType::D) {
      // e_{n-1} -> -e_n, e_n -> -e_{n-1}
      auto v = base();
      v[last - 1] = -static_cast<int>(last + 1);
      v[last] = -static_cast<int>(last);
      out.emplace_back(std::move(v));
    }
    offset += n;
  }
  return out;
}

WeylGroup WeylGroup::make(const std::vector<SimpleFactor>& factors, std::size_t max_order) {
  for (const auto& f : factors) (void)invariant_degrees(f.type, f.rank);
  const Integer expected = standard_order(factors);
  if (expected > static_cast<unsigned long>(max_order)) {
    throw InputError("Weyl group of order " + expected.get_str() +
                     " exceeds the enumeration limit of " + std::to_string(max_order));
  }
  std::size_t dim = 0;
  for (const auto& f : factors) dim += representation_dimension(f);

  WeylGroup w;
  w.factors_ = factors;
  w.simple_ = weyl::simple_reflections(factors);
  w.group_ = generate_closure(w.simple_, dim, max_order);
  w.degrees_ = invariant_degrees(factors);
  if (expected != static_cast<unsigned long>(w.group_.order())) {
    throw InternalError("enumerated Weyl group order " + std::to_string(w.group_.order()) +
                        " differs from " + expected.get_str());
  }
  return w;
}

std::vector<int> WeylGroup::representation_degrees() const {
  std::vector<int> d = degrees_;
  for (const auto& f : factors_)
    if (f.type == RootType::A) d.push_back(1);
  std::sort(d.begin(), d.end());
  return d;
}

long WeylGroup::positive_roots() const {
  long n = 0;
  for (int d : degrees_) n += d - 1;
  return n;
}

WeylSubgroup subgroup_from_generators(const WeylGroup& w, const std::vector<IntMatrix>& generators,
                                      std::size_t max_order) {
  std::vector<SignedPermutation> gens;
  for (const auto& m : generators) {
    SignedPermutation s = SignedPermutation::from_matrix(m);
    if (s.dimension() != w.reflection_rank() || !w.contains(s)) {
      throw InputError("generator is not an element of the ambient Weyl group");
    }
    gens.push_back(std::move(s));
  }
  return generate_closure(gens, w.reflection_rank(), max_order);
}

PoincarePolynomial molien_coinvariants(const WeylGroup& w, const WeylSubgroup& w_h) {
  if (w_h.dimension() != w.reflection_rank()) {
    throw InputError("subgroup acts on a space of the wrong rank");
  }
  for (const auto& h : w_h.elements()) {
    if (!w.contains(h)) throw InputError("element of W_H is not in W");
  }

  // Work in s = t^2. Elements with equal signed cycle type share det(1 - s w).
  std::map<std::vector<std::pair<int, int>>, long> classes;
  for (const auto& h : w_h.elements()) ++classes[h.signed_cycle_type()];

  RationalFunction sum;
  for (const auto& [type, count] : classes) {
    QPolynomial den(Rational(1));
    for (const auto& [length, sign] : type) {
      den *= QPolynomial(Rational(1)) -
             QPolynomial::monomial(static_cast<std::size_t>(length), Rational(sign));
    }
    sum += RationalFunction(QPolynomial(Rational(count)), std::move(den));
  }

  QPolynomial numerator(Rational(1));
  for (int e : w.representation_degrees()) {
    numerator *= QPolynomial(Rational(1)) - QPolynomial::monomial(static_cast<std::size_t>(e));
  }
  const QPolynomial total = numerator * sum.numerator();
  const QPolynomial scaled_den =
      sum.denominator() * QPolynomial(Rational(static_cast<long>(w_h.order())));
  auto [quotient, remainder] = divmod(total, scaled_den);
  if (!remainder.is_zero()) {
    throw InternalError("Molien sum is not a polynomial for a subgroup of order " +
                        std::to_string(w_h.order()));
  }

  PoincarePolynomial result = PoincarePolynomial::from_rational(quotient.substitute_power(2));
  if (result.degree() > 2 * w.positive_roots()) {
    throw InternalError("Molien polynomial exceeds the top degree of the coinvariant algebra");
  }
  if (result.value_at_one() * static_cast<unsigned long>(w_h.order()) !=
      static_cast<unsigned long>(w.order())) {
    throw InternalError("Molien polynomial does not evaluate to |W|/|W_H| at t = 1");
  }
  return result;
}

}  // namespace homfib::weyl
