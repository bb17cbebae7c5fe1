#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Integer cofactor_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][j] * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const homfib::lattice::IntMatrix& a) {
  std::vector<Integer> out;
  Integer previous = 1;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer d = 0;
    for (const auto& rows : subsets(a.rows(), k)) {
      for (const auto& cols : subsets(a.cols(), k)) {
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rows[i], cols[j]);
        d = gcd(d, cofactor_determinant(m));
      }
    }
    if (d == 0) break;
    out.push_back(d / previous);
    previous = d;
  }
  return out;
}

long torsion_count_components(const std::vector<long>& v) {
  const std::size_t r = v.size();
  long bound = 1;
  for (long x : v) bound = std::max(bound, std::labs(x));
  long best = 0;
  for (long n = 1; n <= bound; ++n) {
    // Count a in (Z/n)^r with v.a = 0 mod n.
    std::vector<long> a(r, 0);
    long count = 0;
    while (true) {
      long dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += v[i] * a[i];
      if (((dot % n) + n) % n == 0) ++count;
      std::size_t i = 0;
      while (i < r && ++a[i] == n) a[i++] = 0;
      if (i == r) break;
    }
    long power = 1;
    for (std::size_t i = 0; i + 1 < r; ++i) power *= n;
    if (count % power != 0) throw std::logic_error("torsion count not divisible");
    best = std::max(best, count / power);
  }
  return best;
}

std::vector<Dense> simple_reflections(char type, int rank) {
  const std::size_t n = type == 'A' ? static_cast<std::size_t>(rank + 1)
                                    : static_cast<std::size_t>(rank);
  auto identity = [&] {
    Dense m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  std::vector<Dense> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Dense m = identity();
    m[i][i] = m[i + 1][i + 1] = 0;
    m[i][i + 1] = m[i + 1][i] = 1;
    out.push_back(m);
  }
  if (type == 'B' || type == 'C') {
    Dense m = identity();
    m[n - 1][n - 1] = -1;
    out.push_back(m);
  } else if (type == 'D') {
    Dense m = identity();
    m[n - 2][n - 2] = m[n - 1][n - 1] = 0;
    m[n - 2][n - 1] = m[n - 1][n - 2] = -1;
    out.push_back(m);
  }
  return out;
}

std::vector<int> ring_invariant_degrees(char type, int rank) {
  std::vector<int> out;
  switch (type) {
    case 'A':
      for (int i = 1; i <= rank + 1; ++i) out.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= rank; ++i) out.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < rank; ++i) out.push_back(2 * i);
      out.push_back(rank);
      break;
  }
  return out;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<Dense> closure(const std::vector<Dense>& generators, std::size_t dimension) {
  Dense id(dimension, std::vector<long>(dimension, 0));
  for (std::size_t i = 0; i < dimension; ++i) id[i][i] = 1;
  std::set<Dense> seen{id};
  std::deque<Dense> queue{id};
  std::vector<Dense> out{id};
  while (!queue.empty()) {
    Dense x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Dense y = multiply(g, x);
      if (seen.insert(y).second) {
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

std::vector<long> length_distribution(char type, int rank) {
  const auto gens = simple_reflections(type, rank);
  const std::size_t n = gens.front().size();
  Dense id(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::map<Dense, long> length{{id, 0}};
  std::deque<Dense> queue{id};
  std::vector<long> counts{1};
  while (!queue.empty()) {
    Dense x = queue.front();
    queue.pop_front();
    const long l = length[x];
    for (const auto& g : gens) {
      Dense y = multiply(x, g);
      if (length.emplace(y, l + 1).second) {
        if (counts.size() <= static_cast<std::size_t>(l + 1)) counts.push_back(0);
        ++counts[l + 1];
        queue.push_back(std::move(y));
      }
    }
  }
  return counts;
}

namespace {

// det(1 - s M) via the characteristic polynomial det(x - M) = sum c_k x^{n-k}.
std::vector<Rational> det_one_minus_s(const Dense& m) {
  const std::size_t n = m.size();
  using QM = std::vector<std::vector<Rational>>;
  QM a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  auto mul = [&](const QM& x, const QM& y) {
    QM z(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  std::vector<Rational> c{1};
  QM mk(n, std::vector<Rational>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    QM next = mul(a, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[k - 1];
    mk = next;
    const QM am = mul(a, mk);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c.push_back(-trace / static_cast<long>(k));
  }
  return c;
}

}  // namespace

std::vector<Rational> molien_power_series(const std::vector<Dense>& elements,
                                          const std::vector<int>& ring_degrees, std::size_t top) {
  const std::size_t terms = top + 8;
  std::vector<Rational> sum(terms, 0);
  for (const auto& h : elements) {
    const auto q = det_one_minus_s(h);
    std::vector<Rational> inv(terms, 0);
    inv[0] = 1 / q[0];
    for (std::size_t k = 1; k < terms; ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j < q.size() && j <= k; ++j) acc += q[j] * inv[k - j];
      inv[k] = -acc / q[0];
    }
    for (std::size_t k = 0; k < terms; ++k) sum[k] += inv[k];
  }
  for (auto& x : sum) x /= static_cast<long>(elements.size());
  for (int e : ring_degrees) {
    std::vector<Rational> next = sum;
    for (std::size_t k = static_cast<std::size_t>(e); k < terms; ++k)
      next[k] -= sum[k - static_cast<std::size_t>(e)];
    sum = std::move(next);
  }
  for (std::size_t k = top + 1; k < terms; ++k)
    if (sum[k] != 0) throw std::logic_error("Molien series does not terminate");
  sum.resize(top + 1);
  return sum;
}

namespace {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, Rational>;

void monomials(std::size_t vars, int degree, std::size_t i, Exponent& cur,
               std::vector<Exponent>& out) {
  if (i + 1 == vars) {
    cur[i] = degree;
    out.push_back(cur);
    return;
  }
  for (int d = degree; d >= 0; --d) {
    cur[i] = d;
    monomials(vars, degree - d, i + 1, cur, out);
  }
}

std::vector<Exponent> monomials(std::size_t vars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent cur(vars, 0);
  monomials(vars, degree, 0, cur, out);
  return out;
}

Poly power_sum(std::size_t vars, int k) {
  Poly p;
  for (std::size_t i = 0; i < vars; ++i) {
    Exponent e(vars, 0);
    e[i] = k;
    p[e] += 1;
  }
  return p;
}

struct Invariant {
  int degree;
  Poly poly;
};

std::vector<Invariant> basic_invariants(char type, int rank) {
  std::vector<Invariant> out;
  if (type == 'A') {
    const std::size_t vars = static_cast<std::size_t>(rank + 1);
    for (int k = 1; k <= rank + 1; ++k) out.push_back({k, power_sum(vars, k)});
  } else {
    const std::size_t vars = static_cast<std::size_t>(rank);
    const int last = type == 'D' ? rank - 1 : rank;
    for (int k = 1; k <= last; ++k) out.push_back({2 * k, power_sum(vars, 2 * k)});
    if (type == 'D') out.push_back({rank, Poly{{Exponent(vars, 1), 1}}});
  }
  return out;
}

// Applies the signed permutation h to a monomial: x_i -> sum_j h[j][i] x_j.
std::pair<Exponent, int> act(const Dense& h, const Exponent& e) {
  Exponent out(e.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (h[j][i] != 0) {
        out[j] += e[i];
        if (h[j][i] < 0 && e[i] % 2 == 1) sign = -sign;
      }
    }
  }
  return {out, sign};
}

}  // namespace

std::vector<long> coinvariant_invariant_dims(char type, int rank, const std::vector<Dense>& h) {
  const std::size_t vars =
      type == 'A' ? static_cast<std::size_t>(rank + 1) : static_cast<std::size_t>(rank);
  const auto invariants = basic_invariants(type, rank);
  int top = 0;
  for (const auto& f : invariants) top += f.degree - 1;

  std::vector<long> dims;
  for (int k = 0; k <= top + 1; ++k) {
    const auto basis = monomials(vars, k);
    std::map<Exponent, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;

    // Rows spanning the degree-k part of the ideal.
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : invariants) {
      for (const auto& u : monomials(vars, k - f.degree)) {
        std::vector<Rational> row(basis.size(), 0);
        for (const auto& [e, c] : f.poly) {
          Exponent sum = e;
          for (std::size_t i = 0; i < vars; ++i) sum[i] += u[i];
          row[column.at(sum)] += c;
        }
        rows.push_back(std::move(row));
      }
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < basis.size() && r < rows.size(); ++col) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][col] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      const Rational lead = rows[r][col];
      for (auto& x : rows[r]) x /= lead;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][col] == 0) continue;
        const Rational f = rows[i][col];
        for (std::size_t j = 0; j < basis.size(); ++j) rows[i][j] -= f * rows[r][j];
      }
      pivots.push_back(col);
      ++r;
    }
    rows.resize(r);
    std::vector<bool> is_pivot(basis.size(), false);
    for (auto c : pivots) is_pivot[c] = true;

    // Normal form of each monomial in the quotient basis (non-pivot monomials).
    std::vector<std::vector<Rational>> normal(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
      std::vector<Rational> v(basis.size(), 0);
      v[m] = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational f = v[pivots[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) v[j] -= f * rows[i][j];
      }
      normal[m] = std::move(v);
    }

    Rational total = 0;
    for (const auto& g : h) {
      for (std::size_t m = 0; m < basis.size(); ++m) {
        if (is_pivot[m]) continue;
        const auto [image, sign] = act(g, basis[m]);
        total += sign * normal[column.at(image)][m];
      }
    }
    total /= static_cast<long>(h.size());
    if (total.get_den() != 1) throw std::logic_error("non-integral invariant dimension");
    dims.push_back(total.get_num().get_si());
  }
  if (dims.back() != 0) throw std::logic_error("coinvariant algebra above the top degree");
  dims.pop_back();
  return dims;
}

BezoutResult bezout_box(const std::vector<long>& v, long bound) {
  const std::size_t r = v.size();
  std::vector<long> lambda(r, -bound);
  BezoutResult best{0, {}};
  while (true) {
    long dot = 0;
    for (std::size_t i = 0; i < r; ++i) dot += v[i] * lambda[i];
    if (dot > 0 && (best.min_positive == 0 || dot < best.min_positive)) best = {dot, lambda};
    std::size_t i = 0;
    while (i < r && ++lambda[i] > bound) lambda[i++] = -bound;
    if (i == r) break;
  }
  return best;
}

}  // namespace oracle
