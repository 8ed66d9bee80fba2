#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tamehall/field.hpp"

namespace tamehall {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& field, int rows, int cols);
  Mat(const Field& field, int rows, int cols, std::vector<Elem> entries);

  static Mat identity(const Field& field, int n);
  /// Matrix whose rows are the given vectors (all of length cols).
  static Mat from_rows(const Field& field, int cols, const std::vector<Vec>& rows);
  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  const Field& field() const noexcept { return *field_; }
  const Field* field_ptr() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Elem operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Elem> row(int r) const noexcept { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<Elem> row(int r) noexcept { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  Vec column(int c) const;
  const std::vector<Elem>& entries() const noexcept { return data_; }

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Vec apply(std::span<const Elem> v) const;
  Mat scaled(Elem s) const;
  Mat transpose() const;
  Mat block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const Mat& b);
  bool is_zero() const noexcept;

  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const Field* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

/// In-place reduction of a raw row-major buffer to reduced row echelon form.
/// Returns the pivot column of each nonzero row, in order.
std::vector<int> row_reduce(const Field& field, std::span<Elem> data, int rows, int cols);

/// Rank of a raw row-major buffer, destroying it. Forward elimination only.
int rank_in_place(const Field& field, std::span<Elem> data, int rows, int cols);

struct Echelon {
  Mat reduced;              // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row of `reduced`
};

Echelon rref(const Mat& m);
int rank(const Mat& m);
inline int corank(const Mat& m) { return m.cols() - rank(m); }

/// Basis of the right kernel, one vector per row, in reduced echelon form.
Mat kernel_basis(const Mat& m);

/// Some x with m x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Elem> b);

/// Rows spanning the row space of m, in reduced echelon form.
inline Mat row_space(const Mat& m) { return rref(m).reduced; }

/// True iff the square matrix m is invertible.
bool invertible(const Mat& m);
Mat inverse(const Mat& m);

/// Number of d-dimensional subspaces of GF(q)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int n, int d, int q);

/// Visit every d-dimensional subspace of field^n exactly once, as its unique
/// reduced-row-echelon basis (d x n). Visiting order: pivot sets in
/// lexicographic order, then free entries in odometer order.
///
/// Throws InfeasibleEnumeration when the Gaussian binomial exceeds `budget`.
/// The callback returns false to stop early; the function then returns false.
bool for_each_subspace(const Field& field, int n, int d, const std::function<bool(const Mat&)>& visit,
                       std::uint64_t budget = 0);

/// Pull-style counterpart of for_each_subspace.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const Field& field, int n, int d, std::uint64_t budget = 0);
  /// Advances to the next subspace; false when exhausted.
  bool next();
  const Mat& current() const noexcept { return current_; }

 private:
  bool next_pivots();
  void load_free();

  const Field* field_;
  int n_, d_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, col) positions of free entries
  std::vector<Elem> values_;
  Mat current_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace tamehall
