#pragma once
// Brute-force reference computations used to cross-check the library.

#include <cstdint>
#include <functional>
#include <vector>

#include "tamehall/rep.hpp"

namespace oracle {

using namespace tamehall;

// Every matrix of the given shape.
inline void for_each_matrix(const Field& f, int rows, int cols, const std::function<void(const Mat&)>& visit) {
  const int n = rows * cols;
  std::vector<Elem> e(n, 0);
  while (true) {
    visit(Mat(f, rows, cols, e));
    int k = 0;
    while (k < n && e[k] == f.q() - 1) e[k++] = 0;
    if (k == n) return;
    ++e[k];
  }
}

// |Hom(M,N)| by testing every tuple of vertex matrices.
inline std::uint64_t count_morphisms(const Rep& m, const Rep& n) {
  const int nv = m.quiver().vertex_count();
  std::uint64_t count = 0;
  Morphism x(nv, Mat(m.field(), 0, 0));
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      if (is_morphism(m, n, x)) ++count;
      return;
    }
    for_each_matrix(m.field(), n.dim(v), m.dim(v), [&](const Mat& a) {
      x[v] = a;
      rec(v + 1);
    });
  };
  rec(0);
  return count;
}

// Subrepresentations of dimension d, by testing every tuple of subspaces.
inline std::uint64_t count_subreps_naive(const Rep& m, const DimVector& d) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  std::vector<Mat> u(nv, Mat(m.field(), 0, 0));
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      for (int a = 0; a < q.arrow_count(); ++a) {
        const auto [s, t] = q.arrows()[a];
        for (int r = 0; r < u[s].rows(); ++r) {
          std::vector<Vec> rows;
          for (int k = 0; k < u[t].rows(); ++k) rows.emplace_back(u[t].row(k).begin(), u[t].row(k).end());
          rows.push_back(m.map(a).apply(u[s].row(r)));
          if (rank(Mat::from_rows(m.field(), m.dim(t), rows)) != u[t].rows()) return;
        }
      }
      ++count;
      return;
    }
    for_each_subspace(m.field(), m.dim(v), d[v], [&](const Mat& b) {
      u[v] = b;
      rec(v + 1);
      return true;
    });
  };
  rec(0);
  return count;
}

// Random representation with uniformly random matrices.
template <class Rng>
Rep random_rep(QuiverPtr q, const Field& f, const DimVector& d, Rng& rng) {
  std::vector<Mat> maps;
  for (const auto& a : q->arrows()) {
    Mat m(f, d[a.target], d[a.source]);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = static_cast<Elem>(rng() % f.q());
    maps.push_back(std::move(m));
  }
  return Rep(std::move(q), f, d, std::move(maps));
}

}  // namespace oracle
