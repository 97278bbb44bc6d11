#include "pi2/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pi2 {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix");
    for (long long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::column_block(int first, int count) const {
  IntMatrix out(rows_, count);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row counts differ");
  IntMatrix out(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
  }
  return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vconcat: column counts differ");
  IntMatrix out(a.rows_ + b.rows_, a.cols_);
  for (int c = 0; c < a.cols_; ++c) {
    for (int r = 0; r < a.rows_; ++r) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows_; ++r) out.at(a.rows_ + r, c) = b.at(r, c);
  }
  return out;
}

std::vector<Integer> IntMatrix::column(int c) const {
  std::vector<Integer> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int c = 0; c < cols_; ++c)
    if (at(source, c) != 0) at(target, c) += factor * at(source, c);
}

void IntMatrix::add_col(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int r = 0; r < rows_; ++r)
    if (at(r, source) != 0) at(r, target) += factor * at(r, source);
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Integer& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (m.at(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / previous;
    previous = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (int i = 0; i < rank; ++i) out.push_back(D.at(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& a = s.D;
  const int rows = m.rows();
  const int cols = m.cols();
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the remaining block, first in row-major order.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a.at(i, j) != 0 && (pr < 0 || abs(a.at(i, j)) < abs(a.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    a.swap_rows(t, pr);
    s.U.swap_rows(t, pr);
    a.swap_cols(t, pc);
    s.V.swap_cols(t, pc);
    while (true) {
      // Bring the smallest nonzero entry of row t / column t to (t, t).
      int best_r = t, best_c = t;
      for (int i = t + 1; i < rows; ++i)
        if (a.at(i, t) != 0 && abs(a.at(i, t)) < abs(a.at(best_r, best_c))) {
          best_r = i;
          best_c = t;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a.at(t, j) != 0 && abs(a.at(t, j)) < abs(a.at(best_r, best_c))) {
          best_r = t;
          best_c = j;
        }
      if (best_r != t) {
        a.swap_rows(t, best_r);
        s.U.swap_rows(t, best_r);
      }
      if (best_c != t) {
        a.swap_cols(t, best_c);
        s.V.swap_cols(t, best_c);
      }
      const Integer pivot = a.at(t, t);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = a.at(i, t) / pivot;
        a.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (a.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = a.at(t, j) / pivot;
        a.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a.at(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      a.add_row(t, bad_row, 1);
      s.U.add_row(t, bad_row, 1);
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      s.U.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return s.V.column_block(s.rank, m.cols() - s.rank);
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

AbelianGroup free_abelian(int rank) { return AbelianGroup{rank, {}}; }

AbelianGroup abelian_from_orders(int free_rank, std::vector<Integer> orders) {
  std::vector<Integer> kept;
  for (auto& d : orders) {
    if (d <= 0) throw std::invalid_argument("torsion orders must be positive");
    if (d > 1) kept.push_back(d);
  }
  const int k = static_cast<int>(kept.size());
  IntMatrix diag(k, k);
  for (int i = 0; i < k; ++i) diag.at(i, i) = kept[i];
  AbelianGroup g{free_rank, {}};
  for (const auto& d : smith_normal_form(diag).diagonal())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return abelian_from_orders(a.free_rank + b.free_rank, std::move(orders));
}

AbelianGroup cokernel_of_rows(const IntMatrix& relations, int generator_count) {
  if (relations.rows() > 0 && relations.cols() != generator_count)
    throw std::invalid_argument("relation matrix width differs from generator count");
  SmithForm s = smith_normal_form(relations);
  AbelianGroup g{generator_count - s.rank, {}};
  for (const auto& d : s.diagonal())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup homology(const IntMatrix& boundary_k, const IntMatrix& boundary_k_plus_1) {
  const int cells = boundary_k.cols();
  if (boundary_k_plus_1.rows() != cells)
    throw std::invalid_argument("boundary matrices are not composable");
  SmithForm low = smith_normal_form(boundary_k);
  SmithForm high = smith_normal_form(boundary_k_plus_1);
  AbelianGroup g{cells - low.rank - high.rank, {}};
  for (const auto& d : high.diagonal())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

// ---- Lattice -----------------------------------------------------------------

Lattice::Lattice(IntMatrix generators)
    : generators_(std::move(generators)), snf_(smith_normal_form(generators_)) {}

Lattice Lattice::zero(int n) { return Lattice(IntMatrix(n, 0)); }
Lattice Lattice::whole(int n) { return Lattice(IntMatrix::identity(n)); }

bool Lattice::contains(const std::vector<Integer>& v) const {
  if (static_cast<int>(v.size()) != ambient()) throw std::invalid_argument("lattice: wrong ambient");
  const int n = ambient();
  for (int i = 0; i < n; ++i) {
    Integer y = 0;
    for (int k = 0; k < n; ++k)
      if (snf_.U.at(i, k) != 0 && v[k] != 0) y += snf_.U.at(i, k) * v[k];
    if (i < snf_.rank) {
      if (y % snf_.D.at(i, i) != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  for (int c = 0; c < other.generators_.cols(); ++c)
    if (!contains(other.generators_.column(c))) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& other) const {
  return Lattice(IntMatrix::hconcat(generators_, other.generators_));
}

Lattice Lattice::image(const IntMatrix& f) const { return Lattice(f * generators_); }

Lattice Lattice::preimage_within(const IntMatrix& f, const Lattice& target) const {
  IntMatrix fk = f * generators_;
  IntMatrix neg = target.generators_;
  for (int r = 0; r < neg.rows(); ++r)
    for (int c = 0; c < neg.cols(); ++c) neg.at(r, c) = -neg.at(r, c);
  IntMatrix kernel = kernel_basis(IntMatrix::hconcat(fk, neg));
  IntMatrix y(generators_.cols(), kernel.cols());
  for (int r = 0; r < y.rows(); ++r)
    for (int c = 0; c < y.cols(); ++c) y.at(r, c) = kernel.at(r, c);
  return Lattice(generators_ * y);
}

int Lattice::rank() const { return snf_.rank; }

}  // namespace pi2
