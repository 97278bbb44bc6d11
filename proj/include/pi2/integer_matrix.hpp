#pragma once

// Dense matrices over arbitrary-precision integers, Smith normal form, and
// the finitely generated abelian groups and lattices built on it.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pi2 {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  // Columns [first, first + count).
  IntMatrix column_block(int first, int count) const;
  // Side by side; row counts must agree.
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
  std::vector<Integer> column(int c) const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[target] += factor * row[source]
  void add_row(int target, int source, const Integer& factor);
  void add_col(int target, int source, const Integer& factor);
  void negate_row(int r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free elimination; square matrices only.
Integer determinant(const IntMatrix& m);

// U * m * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
// all d_i > 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  int rank = 0;
  std::vector<Integer> diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Columns form a basis of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
// d_1 | ... | d_k, each d_i >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup free_abelian(int rank);
// Invariant factor form of Z^free + sum of Z/orders (orders may be any
// positive integers, 1s dropped).
AbelianGroup abelian_from_orders(int free_rank, std::vector<Integer> orders);
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
// Z^cols modulo the row space of `relations`.
AbelianGroup cokernel_of_rows(const IntMatrix& relations, int generator_count);
// ker(boundary_k) / im(boundary_k_plus_1) where boundary matrices map
// columns (k-cells) to rows ((k-1)-cells).
AbelianGroup homology(const IntMatrix& boundary_k, const IntMatrix& boundary_k_plus_1);

// A subgroup of Z^n spanned by the columns of `generators`.
class Lattice {
 public:
  explicit Lattice(IntMatrix generators);
  static Lattice zero(int n);
  static Lattice whole(int n);

  int ambient() const { return generators_.rows(); }
  const IntMatrix& generators() const { return generators_; }
  bool contains(const std::vector<Integer>& v) const;
  bool contains(const Lattice& other) const;
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.contains(b) && b.contains(a);
  }
  Lattice operator+(const Lattice& other) const;
  // f(L) for an ambient() -> f.rows() matrix.
  Lattice image(const IntMatrix& f) const;
  // {x in this : f x in target}
  Lattice preimage_within(const IntMatrix& f, const Lattice& target) const;
  int rank() const;

 private:
  IntMatrix generators_;
  SmithForm snf_;
};

}  // namespace pi2
