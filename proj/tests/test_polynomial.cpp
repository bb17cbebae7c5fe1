#include <doctest.h>

#include "generators.hpp"
#include "homfib/error.hpp"
#include "homfib/poincare.hpp"
#include "homfib/polynomial.hpp"

using namespace homfib;

namespace {

QPolynomial q(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return QPolynomial(v);
}

PoincarePolynomial p(std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return PoincarePolynomial(v);
}

QPolynomial random_q(gen::Rng& rng, long max_degree) {
  std::vector<Rational> v;
  const long n = gen::uniform(rng, 0, max_degree + 1);
  for (long i = 0; i < n; ++i) v.emplace_back(gen::uniform(rng, -5, 5), gen::uniform(rng, 1, 3));
  return QPolynomial(v);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK((q({1, 1}) * q({1, -1})) == q({1, 0, -1}));
  CHECK(q({0, 0, 0}).is_zero());
  CHECK(q({1, 2, 0}).degree() == 1);
  CHECK(q({1, 1}).substitute_power(3) == q({1, 0, 0, 1}));
  CHECK(q({1, 2, 3}).evaluate(2) == 17);

  const auto [quot, rem] = divmod(q({-1, 0, 0, 1}), q({-1, 1}));
  CHECK(quot == q({1, 1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(q({-1, 0, 1}), q({1, 2, 1})) == q({1, 1}));
  CHECK(gcd(QPolynomial(), QPolynomial()).is_zero());
}

TEST_CASE("division identity on random polynomials") {
  gen::Rng rng(0x5eed0101);
  for (int trial = 0; trial < 200; ++trial) {
    const QPolynomial a = random_q(rng, 6);
    QPolynomial b = random_q(rng, 4);
    if (b.is_zero()) b = q({1});
    const auto [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
    const QPolynomial g = gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
  }
}

TEST_CASE("rational functions reduce to lowest terms") {
  // (1 - t^2) / (1 - t) == 1 + t
  RationalFunction f(q({1, 0, -1}), q({1, -1}));
  CHECK(f.is_polynomial());
  CHECK(f.numerator() == q({1, 1}));
  RationalFunction g(q({1}), q({1, -1}));
  g += RationalFunction(q({-1}), q({1, -1}));
  CHECK(g.numerator().is_zero());
}

TEST_CASE("poincare polynomials") {
  CHECK(PoincarePolynomial::exterior_generator(3) == p({1, 0, 0, 1}));
  CHECK(p({1, 1}) * p({1, 0, 0, 1}) == p({1, 1, 0, 1, 1}));
  CHECK(p({1, 0, 0, 1}).to_string() == "1 + t^3");
  CHECK(p({1, 2, 0, 0, 0, 0, 1}).to_string() == "1 + 2t + t^6");
  CHECK(PoincarePolynomial::one().to_string() == "1");
  CHECK(p({1, 1, 0, 1, 1}).is_palindromic());
  // Trailing zeros are trimmed, so this is 1 + t.
  CHECK(p({1, 1, 0, 0}).is_palindromic());
  CHECK_FALSE(p({1, 2}).is_palindromic());
  CHECK(p({1, 0, 1}).dominated_by(p({1, 1, 1})));
  CHECK_FALSE(p({1, 1, 1}).dominated_by(p({1, 0, 1})));
  CHECK(p({1, 0, 0, 1}).value_at_one() == 2);
  CHECK(first_difference(p({1, 1}), p({1, 1, 1})) == 2u);
  CHECK_FALSE(first_difference(p({1, 1}), p({1, 1})).has_value());
  CHECK_THROWS_AS(p({1, -1}), InputError);
  CHECK_THROWS_AS(PoincarePolynomial::from_rational(q({1}) * QPolynomial(Rational(1, 2))),
                  InternalError);
}

TEST_CASE("products of exterior generators are palindromic") {
  gen::Rng rng(0x5eed0102);
  for (int trial = 0; trial < 100; ++trial) {
    PoincarePolynomial acc = PoincarePolynomial::one();
    const long n = gen::uniform(rng, 0, 5);
    long top = 0;
    for (long i = 0; i < n; ++i) {
      const long k = 2 * gen::uniform(rng, 0, 4) + 1;
      acc = acc * PoincarePolynomial::exterior_generator(static_cast<std::size_t>(k));
      top += k;
    }
    CHECK(acc.is_palindromic());
    CHECK(acc.degree() == top);
    CHECK(acc.value_at_one() == Integer(1) << static_cast<unsigned long>(n));
  }
}
