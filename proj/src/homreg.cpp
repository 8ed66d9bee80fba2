#include "tamehall/homreg.hpp"

#include "tamehall/functors.hpp"

namespace tamehall {

ExtSpace ext_space(const Rep& n, const Rep& m) {
  const Quiver& q = n.quiver();
  if (!(q == m.quiver()) || &n.field() != &m.field()) throw InvalidInput("ext_space: representations do not match");
  const Field& f = n.field();
  const int nv = q.vertex_count();
  // 0-cochains phi_j : N_j -> M_j, entries row-major; 1-cochains f_a : N_s -> M_t.
  std::vector<int> off0(nv + 1, 0), off1(q.arrow_count() + 1, 0);
  for (int v = 0; v < nv; ++v) off0[v + 1] = off0[v] + m.dim(v) * n.dim(v);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto [s, t] = q.arrows()[k];
    off1[k + 1] = off1[k] + m.dim(t) * n.dim(s);
  }
  // Row r of `images` is the coboundary of the r-th basis 0-cochain.
  Mat images(f, off0[nv], off1[q.arrow_count()]);
  for (int v = 0; v < nv; ++v)
    for (int a = 0; a < m.dim(v); ++a)
      for (int b = 0; b < n.dim(v); ++b) {
        const int row = off0[v] + a * n.dim(v) + b;  // phi_v = E_ab
        for (int k = 0; k < q.arrow_count(); ++k) {
          const auto [s, t] = q.arrows()[k];
          const Mat& ma = m.map(k);
          const Mat& na = n.map(k);
          // M_a phi_s: column b of M_a ... entry (x, b) += M_a(x, a)
          if (s == v)
            for (int x = 0; x < m.dim(t); ++x) {
              Elem& e = images(row, off1[k] + x * n.dim(s) + b);
              e = f.add(e, ma(x, a));
            }
          // - phi_t N_a: entry (a, y) -= N_a(b, y)
          if (t == v)
            for (int y = 0; y < n.dim(s); ++y) {
              Elem& e = images(row, off1[k] + a * n.dim(s) + y);
              e = f.sub(e, na(b, y));
            }
        }
      }
  const Echelon ech = rref(images);
  ExtSpace out;
  out.cochain_dim = off1[q.arrow_count()];
  out.boundary_rank = static_cast<int>(ech.pivots.size());
  std::vector<bool> pivot(out.cochain_dim, false);
  for (int p : ech.pivots) pivot[p] = true;
  for (int c = 0; c < out.cochain_dim; ++c) {
    if (pivot[c]) continue;
    std::vector<Mat> cocycle;
    for (int k = 0; k < q.arrow_count(); ++k) {
      const auto [s, t] = q.arrows()[k];
      Mat fa(f, m.dim(t), n.dim(s));
      if (c >= off1[k] && c < off1[k + 1]) fa((c - off1[k]) / n.dim(s), (c - off1[k]) % n.dim(s)) = 1;
      cocycle.push_back(std::move(fa));
    }
    out.basis.push_back(std::move(cocycle));
  }
  if (out.dim() != ext1_dim(n, m))
    throw VerificationFailure("Ext^1 cochain dimension " + std::to_string(out.dim()) + " disagrees with the Euler form");
  return out;
}

std::vector<Mat> combine_cocycle(const ExtSpace& e, const std::vector<Elem>& coeffs, const Field& f) {
  std::vector<Mat> out;
  for (const Mat& m : e.basis.at(0)) out.emplace_back(f, m.rows(), m.cols());
  for (int k = 0; k < e.dim(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = out[a] + e.basis[k][a].scaled(coeffs[k]);
  }
  return out;
}

Rep middle_term(const Rep& n, const Rep& m, const std::vector<Mat>& cocycle) {
  const Quiver& q = n.quiver();
  if (static_cast<int>(cocycle.size()) != q.arrow_count()) throw InvalidInput("middle_term: one matrix per arrow expected");
  std::vector<Mat> maps;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto [s, t] = q.arrows()[k];
    const Mat& fa = cocycle[k];
    if (fa.rows() != m.dim(t) || fa.cols() != n.dim(s)) throw InvalidInput("middle_term: cocycle has the wrong shape");
    Mat e(n.field(), m.dim(t) + n.dim(t), m.dim(s) + n.dim(s));
    e.set_block(0, 0, m.map(k));
    e.set_block(0, m.dim(s), fa);
    e.set_block(m.dim(t), m.dim(s), n.map(k));
    maps.push_back(std::move(e));
  }
  return Rep(n.quiver_ptr(), n.field(), m.dims() + n.dims(), std::move(maps));
}

bool is_simple_homogeneous(const Rep& r) {
  if (r.dims() != radical_delta(r.quiver())) return false;
  if (!is_brick(r)) return false;
  return iso(tau(r), r);
}

DimVector kronecker_pair_root(const Quiver& q) {
  const DimVector delta = radical_delta(q);
  const IntMatrix cartan = cartan_matrix(q);
  const int n = q.vertex_count();
  for (int j = 0; j < n; ++j) {
    if (delta[j] != 1) continue;
    DimVector p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<int>(cartan(i, j));
    if (p.leq(delta)) return p;
  }
  for (const auto& r : positive_real_roots(q, delta))
    if (r.defect && *r.defect == -1) return r.root;
  throw VerificationFailure("no defect -1 root below delta");
}

HomogeneousSimples build_homogeneous_simples(QuiverPtr q, const Field& f) {
  const GraphClass cls = classify_graph(*q);
  if (!cls.affine()) throw QuiverError(QuiverError::Code::NotAffine, "homogeneous modules need an affine quiver");
  if (cls.kind != GraphKind::AffineA && f.q() < 3)
    throw InvalidInput("types D~ and E~ have no simple homogeneous modules of dimension delta over GF(2)");
  const DimVector delta = radical_delta(*q);
  const DimVector x = kronecker_pair_root(*q);
  Rep p = build_preprojective(q, f, x);
  Rep i = build_preinjective(q, f, delta - x);
  const ExtSpace ext = ext_space(i, p);
  if (ext.dim() != 2) throw VerificationFailure("Ext^1(I,P) has dimension " + std::to_string(ext.dim()) + ", expected 2");

  HomogeneousSimples out{p, i, {}, {}, {}};
  auto consider = [&](std::vector<Elem> coeffs, std::string label) {
    Rep e = middle_term(i, p, combine_cocycle(ext, coeffs, f));
    if (!is_simple_homogeneous(e)) {
      out.rejected.push_back(std::move(label));
      return;
    }
    for (const auto& prev : out.modules)
      if (iso(prev.module, e)) {
        out.duplicates.push_back(std::move(label));
        return;
      }
    out.modules.push_back({std::move(label), std::move(e)});
  };
  for (int lambda = 0; lambda < f.q(); ++lambda) consider({1, static_cast<Elem>(lambda)}, std::to_string(lambda));
  consider({0, 1}, "inf");
  return out;
}

}  // namespace tamehall
