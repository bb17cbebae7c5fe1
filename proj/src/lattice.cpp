#include "homfib/lattice.hpp"

#include <algorithm>
#include <utility>

#include "homfib/error.hpp"

namespace homfib {

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace homfib

namespace homfib::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix entry count " + std::to_string(entries_.size()) +
                     " does not match " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<Integer> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

IntMatrix IntMatrix::row_vector(std::span<const Integer> v) {
  return IntMatrix(1, v.size(), std::vector<Integer>(v.begin(), v.end()));
}

IntMatrix IntMatrix::column_vector(std::span<const Integer> v) {
  return IntMatrix(v.size(), 1, std::vector<Integer>(v.begin(), v.end()));
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) {
    throw InputError("vector length " + std::to_string(v.size()) +
                     " does not match matrix with " + std::to_string(cols_) + " columns");
  }
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  const SmithForm s = smith_normal_form(*this);
  return static_cast<std::size_t>(
      std::count_if(s.diag.begin(), s.diag.end(), [](const Integer& x) { return x != 0; }));
}

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  const Integer det = determinant();
  return det == 1 || det == -1;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw InputError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

namespace {

// Position of the smallest nonzero |entry| in the block [t.., t..].
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t;
    std::size_t pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    left.swap_rows(t, pi);
    d.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = truncated_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) {
          d.swap_rows(t, i);
          left.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = truncated_quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) {
          d.swap_cols(t, j);
          right.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // The pivot must divide the remaining block; otherwise fold in a row.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out{std::move(left), IntVector(steps), std::move(right)};
  for (std::size_t i = 0; i < steps; ++i) out.diag[i] = d(i, i);
  return out;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer ComponentGroup::order() const {
  Integer n = 1;
  for (const auto& f : invariant_factors) n *= f;
  return n;
}

std::string ComponentGroup::to_string() const {
  if (invariant_factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i > 0) out += " x ";
    out += "Z/" + invariant_factors[i].get_str();
  }
  return out;
}

ComponentGroup torsion_component_group(const IntMatrix& characters) {
  ComponentGroup g;
  for (const auto& f : smith_normal_form(characters).diag)
    if (f > 1) g.invariant_factors.push_back(f);
  return g;
}

ComponentGroup cokernel_component_group(std::span<const Integer> v, std::size_t rank) {
  if (v.size() != rank) {
    throw InputError("character has " + std::to_string(v.size()) +
                     " coordinates but the torus has rank " + std::to_string(rank));
  }
  if (content(v) == 0) throw InputError("not a surjective character");
  return torsion_component_group(IntMatrix::row_vector(v));
}

IntMatrix PushoutCover::change_of_basis() const {
  const std::size_t c = section.size();
  IntMatrix m(c, c);
  for (std::size_t i = 0; i < c; ++i) {
    m(i, 0) = section[i];
    for (std::size_t j = 0; j < kernel_basis.cols(); ++j) m(i, j + 1) = kernel_basis(i, j);
  }
  return m;
}

PushoutCover pushout_cover(const IntMatrix& central_restriction,
                           std::span<const Integer> chi, const Integer& d) {
  const std::size_t c = central_restriction.rows();
  if (!central_restriction.is_square() || c == 0) {
    throw InputError("central restriction must be a nonempty square matrix");
  }
  if (chi.size() != c) throw InputError("character length does not match central rank");
  const Integer chi_content = content(chi);
  if (chi_content == 0) throw InputError("not a surjective character");
  if (chi_content != 1) {
    throw InputError("kernel of the character has " + chi_content.get_str() +
                     " components; the fibre-product cover requires a connected kernel");
  }
  IntVector v = central_restriction.apply(chi);
  const Integer computed = content(v);
  if (computed != d) {
    throw InputError("cover degree " + d.get_str() + " does not match the content " +
                     computed.get_str() + " of the central restriction");
  }

  const SmithForm s = smith_normal_form(IntMatrix::row_vector(v));
  // v^T * right = left^{-1} * (d, 0, ...) and left = [+-1].
  const Integer& sign = s.left(0, 0);

  PushoutCover out;
  out.degree = d;
  out.restriction = v;
  out.relation = IntMatrix(1, c + 1);
  for (std::size_t j = 0; j < c; ++j) out.relation(0, j) = v[j];
  out.relation(0, c) = -d;
  out.section = s.right.column(0);
  for (auto& x : out.section) x *= sign;
  out.kernel_basis = IntMatrix(c, c - 1);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 1; j < c; ++j) out.kernel_basis(i, j - 1) = s.right(i, j);
  out.product_basis = IntMatrix(c + 1, c);
  for (std::size_t i = 0; i < c; ++i) {
    out.product_basis(i, 0) = out.section[i];
    for (std::size_t j = 1; j < c; ++j) out.product_basis(i, j) = out.kernel_basis(i, j - 1);
  }
  out.product_basis(c, 0) = 1;
  if (d > 1) out.deck_group.invariant_factors.push_back(d);
  return out;
}

}  // namespace homfib::lattice
