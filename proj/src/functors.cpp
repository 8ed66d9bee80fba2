#include "tamehall/functors.hpp"

#include <algorithm>

namespace tamehall {

namespace {

QuiverPtr same_or_new(const QuiverPtr& original, Quiver q) {
  if (q == *original) return original;
  return std::make_shared<const Quiver>(std::move(q));
}

// Iteration cap for Coxeter orbits.
long orbit_bound(const Quiver& q) {
  const GraphClass c = classify_graph(q);
  const int n = q.vertex_count();
  return 4L * n * (c.affine() ? radical_delta(q).total() : 30);
}

}  // namespace

Rep reflect_plus(const Rep& m, int sink) {
  const Quiver& q = m.quiver();
  if (sink < 0 || sink >= q.vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  if (!q.is_sink(sink)) throw QuiverError(QuiverError::Code::NotSink, "vertex " + std::to_string(sink + 1) + " is not a sink");
  const Field& f = m.field();
  const auto& in = q.in_arrows(sink);
  Mat h(f, m.dim(sink), 0);
  for (int a : in) h = Mat::hstack(h, m.map(a));
  const Mat ker = kernel_basis(h);  // rows: vectors in the sum of sources
  const int k = ker.rows();
  std::vector<Mat> maps = m.maps();
  int offset = 0;
  for (int a : in) {
    const int s = q.arrows()[a].source;
    // new arrow sink -> s: coordinates of the kernel basis in block a
    maps[a] = ker.block(0, offset, k, m.dim(s)).transpose();
    offset += m.dim(s);
  }
  DimVector dims = m.dims();
  dims[sink] = k;
  return Rep(same_or_new(m.quiver_ptr(), sigma_reverse(q, sink)), f, std::move(dims), std::move(maps));
}

Rep reflect_minus(const Rep& m, int source) {
  const Quiver& q = m.quiver();
  if (source < 0 || source >= q.vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  if (!q.is_source(source))
    throw QuiverError(QuiverError::Code::NotSink, "vertex " + std::to_string(source + 1) + " is not a source");
  const Field& f = m.field();
  const auto& out = q.out_arrows(source);
  Mat b(f, 0, m.dim(source));
  for (int a : out) b = Mat::vstack(b, m.map(a));
  // Functionals vanishing on the image identify the cokernel.
  const Mat proj = kernel_basis(b.transpose());
  const int c = proj.rows();
  std::vector<Mat> maps = m.maps();
  int offset = 0;
  for (int a : out) {
    const int t = q.arrows()[a].target;
    maps[a] = proj.block(0, offset, c, m.dim(t));
    offset += m.dim(t);
  }
  DimVector dims = m.dims();
  dims[source] = c;
  return Rep(same_or_new(m.quiver_ptr(), sigma_reverse(q, source)), f, std::move(dims), std::move(maps));
}

Rep reflect_plus_word(const Rep& m, const std::vector<int>& word) {
  Rep r = m;
  for (int v : word) r = reflect_plus(r, v);
  return r;
}

Rep tau(const Rep& m) {
  Rep r = reflect_plus_word(m, admissible_sink_order(m.quiver()));
  return Rep(m.quiver_ptr(), m.field(), r.dims(), r.maps());
}

Rep tau_inv(const Rep& m) {
  auto order = admissible_sink_order(m.quiver());
  std::reverse(order.begin(), order.end());
  Rep r = m;
  for (int v : order) r = reflect_minus(r, v);
  return Rep(m.quiver_ptr(), m.field(), r.dims(), r.maps());
}

Rep build_preprojective(QuiverPtr q, const Field& f, const DimVector& x) {
  if (tits_form(*q, x) != 1 || !x.nonnegative() || x.is_zero())
    throw InvalidInput(x.str() + " is not a positive real root");
  const IntMatrix phi = coxeter_matrix(*q);
  const IntMatrix cartan = cartan_matrix(*q);
  const int n = q->vertex_count();
  const long bound = orbit_bound(*q);
  DimVector y = x;
  for (long k = 0; k <= bound; ++k) {
    for (int j = 0; j < n; ++j) {
      bool match = true;
      for (int i = 0; i < n && match; ++i) match = cartan(i, j) == y[i];
      if (!match) continue;
      Rep r = projective(q, f, j);
      for (long s = 0; s < k; ++s) r = tau_inv(r);
      if (r.dims() != x) throw VerificationFailure("preprojective construction produced " + r.dims().str());
      return r;
    }
    y = phi.apply(y);
    if (!y.nonnegative()) break;
  }
  throw InvalidInput(x.str() + " is not the dimension vector of a preprojective module");
}

Rep build_preinjective(QuiverPtr q, const Field& f, const DimVector& x) {
  if (tits_form(*q, x) != 1 || !x.nonnegative() || x.is_zero())
    throw InvalidInput(x.str() + " is not a positive real root");
  const IntMatrix phi_inv = coxeter_matrix_inverse(*q);
  const IntMatrix cartan = cartan_matrix(*q);
  const int n = q->vertex_count();
  const long bound = orbit_bound(*q);
  DimVector y = x;
  for (long k = 0; k <= bound; ++k) {
    for (int j = 0; j < n; ++j) {
      bool match = true;
      for (int i = 0; i < n && match; ++i) match = cartan(j, i) == y[i];
      if (!match) continue;
      Rep r = injective(q, f, j);
      for (long s = 0; s < k; ++s) r = tau(r);
      if (r.dims() != x) throw VerificationFailure("preinjective construction produced " + r.dims().str());
      return r;
    }
    y = phi_inv.apply(y);
    if (!y.nonnegative()) break;
  }
  throw InvalidInput(x.str() + " is not the dimension vector of a preinjective module");
}

Rep build_indecomposable(QuiverPtr q, const Field& f, const DimVector& x) {
  const GraphClass c = classify_graph(*q);
  if (c.dynkin()) return build_preprojective(std::move(q), f, x);
  if (!c.affine()) throw QuiverError(QuiverError::Code::NotAffine, "quiver is neither Dynkin nor affine");
  const int d = defect(*q, x);
  if (d < 0) return build_preprojective(std::move(q), f, x);
  if (d > 0) return build_preinjective(std::move(q), f, x);
  throw InvalidInput(x.str() + " has defect 0; regular modules are not built from projectives");
}

}  // namespace tamehall
