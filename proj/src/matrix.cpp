#include "tamehall/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "tamehall/error.hpp"

namespace tamehall {

Mat::Mat(const Field& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

Mat::Mat(const Field& field, int rows, int cols, std::vector<Elem> entries)
    : field_(&field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) throw InvalidInput("matrix entry count does not match shape");
  for (Elem e : data_)
    if (e >= field.q()) throw InvalidInput("matrix entry is not a field label");
}

Mat Mat::identity(const Field& field, int n) {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Field& field, int cols, const std::vector<Vec>& rows) {
  Mat m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  return m;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  Mat m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  assert(a.cols() == b.cols());
  Mat m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Vec Mat::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::operator*(const Mat& rhs) const {
  assert(cols_ == rhs.rows_);
  const Field& f = *field_;
  Mat out(f, rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    auto dst = out.row(r);
    for (int k = 0; k < cols_; ++k) {
      const Elem a = (*this)(r, k);
      if (a == 0) continue;
      const Elem* ma = f.mul_row(a);
      auto src = rhs.row(k);
      for (int c = 0; c < rhs.cols_; ++c) dst[c] = f.add(dst[c], ma[src[c]]);
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
  return out;
}

Vec Mat::apply(std::span<const Elem> v) const {
  assert(static_cast<int>(v.size()) == cols_);
  const Field& f = *field_;
  Vec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    Elem acc = 0;
    auto src = row(r);
    for (int c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(src[c], v[c]));
    out[r] = acc;
  }
  return out;
}

Mat Mat::scaled(Elem s) const {
  Mat out = *this;
  const Elem* ms = field_->mul_row(s);
  for (auto& e : out.data_) e = ms[e];
  return out;
}

Mat Mat::transpose() const {
  Mat out(*field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Mat Mat::block(int r0, int c0, int rows, int cols) const {
  Mat out(*field_, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool Mat::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::vector<int> row_reduce(const Field& f, std::span<Elem> a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[static_cast<std::size_t>(p) * cols + c] == 0) ++p;
    if (p == rows) continue;
    Elem* pr = a.data() + static_cast<std::size_t>(p) * cols;
    Elem* rr = a.data() + static_cast<std::size_t>(r) * cols;
    if (p != r) std::swap_ranges(pr + c, pr + cols, rr + c);
    const Elem* scale = f.mul_row(f.inv(rr[c]));
    for (int k = c; k < cols; ++k) rr[k] = scale[rr[k]];
    for (int j = 0; j < rows; ++j) {
      if (j == r) continue;
      Elem* jr = a.data() + static_cast<std::size_t>(j) * cols;
      const Elem factor = jr[c];
      if (factor == 0) continue;
      const Elem* m = f.mul_row(f.neg(factor));
      for (int k = c; k < cols; ++k) jr[k] = f.add(jr[k], m[rr[k]]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank_in_place(const Field& f, std::span<Elem> a, int rows, int cols) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[static_cast<std::size_t>(p) * cols + c] == 0) ++p;
    if (p == rows) continue;
    Elem* pr = a.data() + static_cast<std::size_t>(p) * cols;
    Elem* rr = a.data() + static_cast<std::size_t>(r) * cols;
    if (p != r) std::swap_ranges(pr + c, pr + cols, rr + c);
    const Elem pivot_inv = f.inv(rr[c]);
    for (int j = r + 1; j < rows; ++j) {
      Elem* jr = a.data() + static_cast<std::size_t>(j) * cols;
      const Elem v = jr[c];
      if (v == 0) continue;
      const Elem* m = f.mul_row(f.neg(f.mul(v, pivot_inv)));
      for (int k = c; k < cols; ++k) jr[k] = f.add(jr[k], m[rr[k]]);
    }
    ++r;
  }
  return r;
}

Echelon rref(const Mat& m) {
  std::vector<Elem> buf = m.entries();
  auto pivots = row_reduce(m.field(), buf, m.rows(), m.cols());
  buf.resize(pivots.size() * static_cast<std::size_t>(m.cols()));
  return {Mat(m.field(), static_cast<int>(pivots.size()), m.cols(), std::move(buf)), std::move(pivots)};
}

int rank(const Mat& m) {
  std::vector<Elem> buf = m.entries();
  return rank_in_place(m.field(), buf, m.rows(), m.cols());
}

Mat kernel_basis(const Mat& m) {
  const Field& f = m.field();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (int r = 0; r < e.reduced.rows(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return rref(Mat::from_rows(f, m.cols(), basis)).reduced;
}

std::optional<Vec> solve(const Mat& m, std::span<const Elem> b) {
  const Field& f = m.field();
  Mat aug(f, m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
  const Echelon e = rref(aug);
  Vec x(m.cols(), 0);
  for (int r = 0; r < e.reduced.rows(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

bool invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (!invertible(m)) throw InvalidInput("matrix is not invertible");
  const int n = m.rows();
  const Echelon e = rref(Mat::hstack(m, Mat::identity(m.field(), n)));
  return e.reduced.block(0, n, n, n);
}

std::uint64_t gaussian_binomial(int n, int d, int q) {
  if (d < 0 || d > n) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    return a > kMax / b ? kMax : a * b;
  };
  // [m choose j]_q = [m-1 choose j-1]_q + q^j [m-1 choose j]_q
  std::vector<std::uint64_t> prev(d + 1, 0), cur(d + 1, 0);
  prev[0] = 1;
  for (int m = 1; m <= n; ++m) {
    cur[0] = 1;
    std::uint64_t qj = 1;
    for (int j = 1; j <= d; ++j) {
      qj = sat_mul(qj, static_cast<std::uint64_t>(q));
      cur[j] = j > m ? 0 : sat_add(prev[j - 1], sat_mul(qj, prev[j]));
    }
    std::swap(prev, cur);
  }
  return prev[d];
}

SubspaceEnumerator::SubspaceEnumerator(const Field& field, int n, int d, std::uint64_t budget)
    : field_(&field), n_(n), d_(d) {
  if (d < 0 || d > n) throw InvalidInput("subspace dimension out of range");
  if (budget > 0 && gaussian_binomial(n, d, field.q()) > budget)
    throw InfeasibleEnumeration("subspace enumeration of Gr(" + std::to_string(d) + ", " + std::to_string(n) +
                                ") over GF(" + std::to_string(field.q()) + ") exceeds budget");
}

void SubspaceEnumerator::load_free() {
  free_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (int p : pivots_) is_pivot[p] = true;
  for (int r = 0; r < d_; ++r)
    for (int c = pivots_[r] + 1; c < n_; ++c)
      if (!is_pivot[c]) free_.emplace_back(r, c);
  values_.assign(free_.size(), 0);
  current_ = Mat(*field_, d_, n_);
  for (int r = 0; r < d_; ++r) current_(r, pivots_[r]) = 1;
}

bool SubspaceEnumerator::next_pivots() {
  int i = d_ - 1;
  while (i >= 0 && pivots_[i] == n_ - d_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  return true;
}

bool SubspaceEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    pivots_.resize(d_);
    for (int i = 0; i < d_; ++i) pivots_[i] = i;
    load_free();
    return true;
  }
  const Elem q = static_cast<Elem>(field_->q() - 1);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    auto [r, c] = free_[k];
    if (values_[k] < q) {
      ++values_[k];
      current_(r, c) = values_[k];
      return true;
    }
    values_[k] = 0;
    current_(r, c) = 0;
  }
  if (!next_pivots()) {
    done_ = true;
    return false;
  }
  load_free();
  return true;
}

bool for_each_subspace(const Field& field, int n, int d, const std::function<bool(const Mat&)>& visit,
                       std::uint64_t budget) {
  SubspaceEnumerator it(field, n, d, budget);
  while (it.next())
    if (!visit(it.current())) return false;
  return true;
}

}  // namespace tamehall
