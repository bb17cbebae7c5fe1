#include <doctest.h>

#include "generators.hpp"
#include "homfib/error.hpp"
#include "homfib/lattice.hpp"
#include "oracles.hpp"

using namespace homfib;
using lattice::IntMatrix;

namespace {

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix rows(std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<IntVector> out;
  for (auto r : rs) out.push_back(ints(r));
  return IntMatrix::from_rows(out);
}

void check_smith(const IntMatrix& a) {
  const auto s = lattice::smith_normal_form(a);
  REQUIRE(s.left.is_unimodular());
  REQUIRE(s.right.is_unimodular());
  CHECK(s.left * a * s.right == s.diagonal_matrix(a.rows(), a.cols()));
  for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
    CHECK(s.diag[i] >= 0);
    if (s.diag[i] != 0) {
      CHECK(mpz_divisible_p(s.diag[i + 1].get_mpz_t(), s.diag[i].get_mpz_t()) != 0);
    } else {
      CHECK(s.diag[i + 1] == 0);
    }
  }
  IntVector nonzero;
  for (const auto& d : s.diag)
    if (d != 0) nonzero.push_back(d);
  CHECK(nonzero == oracle::invariant_factors_by_minors(a));
}

}  // namespace

TEST_CASE("smith normal form of fixed matrices") {
  const auto id = lattice::smith_normal_form(IntMatrix::identity(2));
  CHECK(id.diag == ints({1, 1}));
  CHECK(id.left == IntMatrix::identity(2));
  CHECK(id.right == IntMatrix::identity(2));

  CHECK(lattice::smith_normal_form(rows({{2, 0}, {0, 3}})).diag == ints({1, 6}));
  const auto s = lattice::smith_normal_form(rows({{2, 4}, {6, 8}}));
  CHECK(s.diag == ints({2, 4}));
  CHECK(s.diag[0] * s.diag[1] == 8);

  check_smith(rows({{2, 4}, {6, 8}}));
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(2, 3));
  check_smith(rows({{0, 0, 5}}));
}

TEST_CASE("smith normal form on random matrices up to 6x6") {
  gen::Rng rng(0x5eed0001);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    // Small sizes get wide entries; larger ones stay cheap for the minors oracle.
    const long bound = r * c <= 16 ? 20 : 5;
    CAPTURE(trial);
    check_smith(gen::matrix(rng, r, c, -bound, bound));
  }
}

TEST_CASE("determinant and rank") {
  CHECK(rows({{1, 2}, {3, 4}}).determinant() == -2);
  CHECK(rows({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(IntMatrix::identity(0).determinant() == 1);
  gen::Rng rng(0x5eed0002);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const IntMatrix m = gen::matrix(rng, n, n, -9, 9);
    std::vector<std::vector<Integer>> dense;
    for (const auto& row : m.to_rows()) dense.push_back(row);
    CHECK(m.determinant() == oracle::cofactor_determinant(dense));
  }
}

TEST_CASE("content") {
  CHECK(lattice::content(ints({6, 10, 15})) == 1);
  CHECK(lattice::content(ints({0, 0})) == 0);
  CHECK(lattice::content(ints({-4, 6})) == 2);
  for (long n = 1; n <= 8; ++n) CHECK(lattice::content(ints({n})) == n);

  gen::Rng rng(0x5eed0003);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v = gen::vector(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), -30, 30);
    const long k = gen::uniform(rng, -7, 7);
    IntVector kv = v;
    for (auto& x : kv) x *= k;
    CHECK(lattice::content(kv) == std::labs(k) * lattice::content(v));
  }
}

TEST_CASE("cokernel component group") {
  CHECK(lattice::cokernel_component_group(ints({2, 0}), 2).to_string() == "Z/2");
  for (long k = -5; k <= 5; ++k)
    CHECK(lattice::cokernel_component_group(ints({1, k}), 2).is_trivial());
  CHECK_THROWS_WITH_AS(lattice::cokernel_component_group(ints({0, 0}), 2),
                       doctest::Contains("not a surjective character"), InputError);

  gen::Rng rng(0x5eed0004);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const IntVector v = gen::nonzero_vector(rng, r, -6, 6);
    std::vector<long> small;
    for (const auto& x : v) small.push_back(x.get_si());
    const auto g = lattice::cokernel_component_group(v, r);
    CHECK(g.order() == lattice::content(v));
    CHECK(g.order() == oracle::torsion_count_components(small));
    CHECK(g.order() == lattice::torsion_component_group(IntMatrix::row_vector(v)).order());
  }
}

TEST_CASE("torsion component group of several characters") {
  // ker(2a) n ker(2b) on a rank-2 torus is the 2-torsion Z/2 x Z/2.
  const auto g = lattice::torsion_component_group(rows({{2, 0}, {0, 2}}));
  CHECK(g.invariant_factors == ints({2, 2}));
  CHECK(g.order() == 4);
}

TEST_CASE("pushout cover") {
  SUBCASE("degree 1 is the identity") {
    const auto cover = lattice::pushout_cover(IntMatrix::identity(2), ints({2, 1}), 1);
    CHECK(cover.is_identity());
    CHECK(cover.deck_group.is_trivial());
    const IntMatrix basis = cover.change_of_basis();
    CHECK(basis.is_unimodular());
    // The section pairs to 1 with chi, the kernel basis to 0.
    CHECK(basis.transpose().apply(ints({2, 1})) == ints({1, 0}));
  }
  SUBCASE("GL_n with det") {
    for (long n = 1; n <= 6; ++n) {
      const auto cover = lattice::pushout_cover(rows({{n}}), ints({1}), n);
      CHECK(cover.degree == n);
      CHECK(cover.deck_group.order() == n);
      CHECK(cover.relation == rows({{n, -n}}));
      // The cover torus {(z,t): z^n = t^n} has cocharacters spanned by the
      // diagonal (1,1): one C^* factor, matching SL_n x C^*.
      CHECK(cover.product_basis.is_unimodular() == (cover.product_basis.rows() ==
                                                    cover.product_basis.cols()));
      CHECK(cover.relation.apply(cover.product_basis.column(0)) == ints({0}));
    }
  }
  SUBCASE("mismatched degree and disconnected kernel") {
    CHECK_THROWS_AS(lattice::pushout_cover(rows({{3}}), ints({1}), 2), InputError);
    CHECK_THROWS_AS(lattice::pushout_cover(IntMatrix::identity(2), ints({2, 0}), 2), InputError);
  }
  SUBCASE("random covers") {
    gen::Rng rng(0x5eed0005);
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
      const IntMatrix r = gen::nonsingular(rng, c, -3, 3);
      const IntVector chi = gen::primitive_vector(rng, c, -4, 4);
      const IntVector v = r.apply(chi);
      const Integer d = lattice::content(v);
      const auto cover = lattice::pushout_cover(r, chi, d);
      CAPTURE(trial);
      CHECK(cover.change_of_basis().is_unimodular());
      IntVector pairing = cover.change_of_basis().transpose().apply(v);
      CHECK(pairing[0] == d);
      for (std::size_t i = 1; i < pairing.size(); ++i) CHECK(pairing[i] == 0);
      for (std::size_t j = 0; j < cover.product_basis.cols(); ++j)
        CHECK(cover.relation.apply(cover.product_basis.column(j)) == ints({0}));
      CHECK(cover.deck_group.order() == d);
    }
  }
}
