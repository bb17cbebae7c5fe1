#pragma once

// Exact integer linear algebra over character and cocharacter lattices.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace homfib {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

std::string to_string(const Integer& value);

}  // namespace homfib

namespace homfib::lattice {

/// Dense row-major integer matrix. Either dimension may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  /// Every row must have the same length; an empty list gives a 0x0 matrix.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix row_vector(std::span<const Integer> v);
  static IntMatrix column_vector(std::span<const Integer> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Integer>& entries() const { return entries_; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> to_rows() const;

  IntMatrix transpose() const;
  /// Matrix-vector product M * v.
  IntVector apply(std::span<const Integer> v) const;

  /// Fraction-free (Bareiss) determinant; square matrices only.
  Integer determinant() const;
  std::size_t rank() const;
  bool is_unimodular() const;

  // Elementary operations, used by the Smith reduction and by tests.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Block-diagonal sum of two matrices.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// left * A * right == diagonal(diag), with left and right unimodular and
/// diag[i] | diag[i+1]. diag has min(rows, cols) entries, zeros last.
struct SmithForm {
  IntMatrix left;
  IntVector diag;
  IntMatrix right;

  /// The rows x cols matrix carrying diag on its main diagonal.
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// gcd of the entries; 0 for the zero (or empty) vector.
Integer content(std::span<const Integer> v);

/// A finite abelian group by invariant factors, all > 1. Empty = trivial.
struct ComponentGroup {
  IntVector invariant_factors;

  Integer order() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  std::string to_string() const;
  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

/// Torsion of the cokernel of the map Z^rows -> Z^cols given by the transpose of
/// `characters` (one character per row). This is the component group of the
/// common kernel of those characters on a torus of rank `cols`.
ComponentGroup torsion_component_group(const IntMatrix& characters);

/// Component group of the kernel of the character v on a rank-r torus:
/// cyclic of order content(v). Throws InputError for the zero vector.
ComponentGroup cokernel_component_group(std::span<const Integer> v, std::size_t rank);

/// Lattice data of the fibre-product cover built from a central cocharacter.
///
/// With v = R * chi the restriction of chi to the central torus Z, the cover
/// torus is {(z, t) : chi(z) = t^d}, whose character lattice is Z^{c+1} modulo
/// the single `relation` row (v | -d). `section` is a cocharacter lambda of Z
/// with <v, lambda> = d, the columns of `kernel_basis` span the cocharacters of
/// ker(chi|Z)^0, and [section | kernel_basis] is unimodular. The columns of
/// `product_basis` form a basis of the cocharacters of the cover torus made of
/// (lambda, 1) followed by (k_i, 0): the decomposition S_Z x C^*. The covering
/// S x C^* -> G, (s, t) -> s * lambda(t), has kernel `deck_group` of order d.
struct PushoutCover {
  Integer degree;
  IntVector restriction;
  IntMatrix relation;
  IntVector section;
  IntMatrix kernel_basis;
  IntMatrix product_basis;
  ComponentGroup deck_group;

  bool is_identity() const { return degree == 1; }
  /// [section | kernel_basis], the change of cocharacter basis of Z.
  IntMatrix change_of_basis() const;
};

/// Builds the cover for a character chi of X(G/D(G)) with connected kernel.
/// `d` must equal content(R * chi).
PushoutCover pushout_cover(const IntMatrix& central_restriction,
                           std::span<const Integer> chi, const Integer& d);

}  // namespace homfib::lattice
