#include "tamehall/rep.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "json.hpp"

namespace tamehall {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

void require_compatible(const Rep& m, const Rep& n) {
  if (!(m.quiver() == n.quiver())) throw InvalidInput("representations live on different quivers");
  if (&m.field() != &n.field()) throw InvalidInput("representations live over different fields");
}

// Residual of v after clearing the pivot coordinates of an RREF basis.
Vec reduce_against(const Mat& basis, const std::vector<int>& pivots, Vec v) {
  const Field& f = basis.field();
  for (int k = 0; k < basis.rows(); ++k) {
    const Elem c = v[pivots[k]];
    if (c == 0) continue;
    const Elem* m = f.mul_row(f.neg(c));
    auto row = basis.row(k);
    for (int j = 0; j < basis.cols(); ++j) v[j] = f.add(v[j], m[row[j]]);
  }
  return v;
}

std::vector<int> pivots_of(const Mat& rref_basis) {
  std::vector<int> p;
  for (int r = 0; r < rref_basis.rows(); ++r) {
    int c = 0;
    while (c < rref_basis.cols() && rref_basis(r, c) == 0) ++c;
    p.push_back(c);
  }
  return p;
}

std::vector<int> non_pivots(int n, const std::vector<int>& pivots) {
  std::vector<bool> is_p(n, false);
  for (int p : pivots) is_p[p] = true;
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (!is_p[c]) out.push_back(c);
  return out;
}

// Matrix of the quotient map k^n -> k^n / span(basis), coordinates at non-pivot columns.
Mat quotient_projection(const Mat& basis, const std::vector<int>& pivots) {
  const Field& f = basis.field();
  const int n = basis.cols();
  const auto np = non_pivots(n, pivots);
  Mat p(f, static_cast<int>(np.size()), n);
  for (int c = 0; c < n; ++c) {
    Vec e(n, 0);
    e[c] = 1;
    const Vec r = reduce_against(basis, pivots, std::move(e));
    for (int k = 0; k < static_cast<int>(np.size()); ++k) p(k, c) = r[np[k]];
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

Rep::Rep(QuiverPtr quiver, const Field& field, DimVector dims, std::vector<Mat> maps)
    : quiver_(std::move(quiver)), field_(&field), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = *quiver_;
  if (dims_.size() != q.vertex_count()) throw InvalidInput("dimension vector length does not match the quiver");
  if (!dims_.nonnegative()) throw InvalidInput("negative dimension in representation");
  if (static_cast<int>(maps_.size()) != q.arrow_count()) throw InvalidInput("one matrix per arrow expected");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrows()[a];
    const Mat& m = maps_[a];
    if (m.rows() != dims_[arr.target] || m.cols() != dims_[arr.source])
      throw InvalidInput("matrix of arrow " + std::to_string(a + 1) + " has the wrong shape");
    if (m.field_ptr() != field_) throw InvalidInput("matrix over a different field");
  }
}

Rep Rep::zero_maps(QuiverPtr quiver, const Field& field, DimVector dims) {
  std::vector<Mat> maps;
  for (const auto& a : quiver->arrows()) maps.emplace_back(field, dims[a.target], dims[a.source]);
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

bool operator==(const Rep& a, const Rep& b) noexcept {
  return a.quiver() == b.quiver() && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

Rep simple(QuiverPtr q, const Field& f, int vertex) {
  if (vertex < 0 || vertex >= q->vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  const int n = q->vertex_count();
  return Rep::zero_maps(std::move(q), f, DimVector::unit(n, vertex));
}

namespace {

// paths[v] = list of paths from `from` ending at v, each a sequence of arrow indices.
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int from) {
  std::vector<std::vector<std::vector<int>>> paths(q.vertex_count());
  paths[from].push_back({});
  auto order = admissible_sink_order(q);
  std::reverse(order.begin(), order.end());
  for (int v : order)
    for (int a : q.out_arrows(v))
      for (const auto& p : paths[v]) {
        auto ext = p;
        ext.push_back(a);
        paths[q.arrows()[a].target].push_back(std::move(ext));
      }
  return paths;
}

}  // namespace

Rep projective(QuiverPtr q, const Field& f, int vertex) {
  if (vertex < 0 || vertex >= q->vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  const auto paths = paths_from(*q, vertex);
  DimVector dims(q->vertex_count());
  for (int v = 0; v < q->vertex_count(); ++v) dims[v] = static_cast<int>(paths[v].size());
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) {
    const auto [s, t] = q->arrows()[a];
    Mat m(f, dims[t], dims[s]);
    for (int j = 0; j < dims[s]; ++j) {
      auto ext = paths[s][j];
      ext.push_back(a);
      const auto it = std::find(paths[t].begin(), paths[t].end(), ext);
      m(static_cast<int>(it - paths[t].begin()), j) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(std::move(q), f, std::move(dims), std::move(maps));
}

Rep injective(QuiverPtr q, const Field& f, int vertex) {
  if (vertex < 0 || vertex >= q->vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  const int n = q->vertex_count();
  // to[v] = paths from v to `vertex`.
  std::vector<std::vector<std::vector<int>>> to(n);
  for (int v = 0; v < n; ++v) to[v] = paths_from(*q, v)[vertex];
  DimVector dims(n);
  for (int v = 0; v < n; ++v) dims[v] = static_cast<int>(to[v].size());
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) {
    const auto [s, t] = q->arrows()[a];
    // p* (p : s ~> vertex) goes to p'* when p = a followed by p'.
    Mat m(f, dims[t], dims[s]);
    for (int j = 0; j < dims[s]; ++j) {
      const auto& p = to[s][j];
      if (p.empty() || p.front() != a) continue;
      std::vector<int> rest(p.begin() + 1, p.end());
      const auto it = std::find(to[t].begin(), to[t].end(), rest);
      m(static_cast<int>(it - to[t].begin()), j) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(std::move(q), f, std::move(dims), std::move(maps));
}

Rep direct_sum(const Rep& a, const Rep& b) {
  require_compatible(a, b);
  const Quiver& q = a.quiver();
  std::vector<Mat> maps;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto [s, t] = q.arrows()[k];
    Mat m(a.field(), a.dim(t) + b.dim(t), a.dim(s) + b.dim(s));
    m.set_block(0, 0, a.map(k));
    m.set_block(a.dim(t), a.dim(s), b.map(k));
    maps.push_back(std::move(m));
  }
  return Rep(a.quiver_ptr(), a.field(), a.dims() + b.dims(), std::move(maps));
}

// ---------------------------------------------------------------------------
// Hom

Mat hom_system(const Rep& m, const Rep& n) {
  require_compatible(m, n);
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  const int nv = q.vertex_count();
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  int rows = 0;
  for (const auto& a : q.arrows()) rows += n.dim(a.target) * m.dim(a.source);
  Mat sys(f, rows, offset[nv]);
  int row = 0;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto [s, t] = q.arrows()[k];
    const Mat& na = n.map(k);
    const Mat& ma = m.map(k);
    // (N_a X_s - X_t M_a)[a][b]
    for (int i = 0; i < n.dim(t); ++i)
      for (int b = 0; b < m.dim(s); ++b, ++row) {
        for (int j = 0; j < n.dim(s); ++j) {
          const Elem c = na(i, j);
          if (c) sys(row, offset[s] + j * m.dim(s) + b) = f.add(sys(row, offset[s] + j * m.dim(s) + b), c);
        }
        for (int j = 0; j < m.dim(t); ++j) {
          const Elem c = ma(j, b);
          if (c) sys(row, offset[t] + i * m.dim(t) + j) = f.sub(sys(row, offset[t] + i * m.dim(t) + j), c);
        }
      }
  }
  return sys;
}

HomBasis hom_basis(const Rep& m, const Rep& n) {
  const Mat ker = kernel_basis(hom_system(m, n));
  const Quiver& q = m.quiver();
  HomBasis h;
  for (int r = 0; r < ker.rows(); ++r) {
    Morphism x;
    int pos = 0;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Mat xv(m.field(), n.dim(v), m.dim(v));
      for (int i = 0; i < n.dim(v); ++i)
        for (int j = 0; j < m.dim(v); ++j) xv(i, j) = ker(r, pos++);
      x.push_back(std::move(xv));
    }
    h.basis.push_back(std::move(x));
  }
  return h;
}

int hom_dim(const Rep& m, const Rep& n) { return corank(hom_system(m, n)); }
int end_dim(const Rep& m) { return hom_dim(m, m); }
bool is_brick(const Rep& m) { return end_dim(m) == 1; }

int ext1_dim(const Rep& m, const Rep& n) {
  const int e = hom_dim(m, n) - euler_form(m.quiver(), m.dims(), n.dims());
  if (e < 0) throw VerificationFailure("negative Ext^1 dimension: Hom/Euler form inconsistency");
  return e;
}

Morphism combine(const HomBasis& h, const std::vector<Elem>& coeffs, const Field& f) {
  assert(!h.basis.empty());
  Morphism x;
  for (const Mat& m : h.basis[0]) x.emplace_back(f, m.rows(), m.cols());
  for (int k = 0; k < h.dim(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < x.size(); ++v) x[v] = x[v] + h.basis[k][v].scaled(coeffs[k]);
  }
  return x;
}

bool is_morphism(const Rep& m, const Rep& n, const Morphism& x) {
  const Quiver& q = m.quiver();
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto [s, t] = q.arrows()[k];
    if (!(n.map(k) * x[s] == x[t] * m.map(k))) return false;
  }
  return true;
}

bool is_injective(const Morphism& x) {
  for (const Mat& m : x)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_invertible(const Morphism& x) {
  for (const Mat& m : x)
    if (!invertible(m)) return false;
  return true;
}

bool for_each_hom_direction(const Rep& m, const Rep& n, const HomBasis& h,
                            const std::function<bool(const Morphism&)>& visit) {
  const Field& f = m.field();
  const int dim = h.dim();
  if (dim == 0) return true;
  const std::uint64_t total = (checked_pow(f.q(), dim) - 1) / (f.q() - 1);
  if (total > limits().hom_elements)
    throw InfeasibleEnumeration("Hom space of dimension " + std::to_string(dim) + " over GF(" + std::to_string(f.q()) +
                                ") exceeds the enumeration budget");
  (void)n;
  std::vector<Elem> c(dim, 0);
  for (int lead = 0; lead < dim; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      if (!visit(combine(h, c, f))) return false;
      int k = dim - 1;
      while (k > lead && c[k] == f.q() - 1) c[k--] = 0;
      if (k == lead) break;
      ++c[k];
    }
  }
  return true;
}

bool iso(const Rep& m, const Rep& n) {
  require_compatible(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const int e = end_dim(m);
  if (end_dim(n) != e) return false;
  if (hom_dim(n, m) != e) return false;
  const HomBasis h = hom_basis(m, n);
  if (h.dim() != e) return false;
  bool found = false;
  for_each_hom_direction(m, n, h, [&](const Morphism& x) {
    found = is_invertible(x);
    return !found;
  });
  return found;
}

bool has_monomorphism(const Rep& x, const Rep& m) {
  require_compatible(x, m);
  if (!x.dims().leq(m.dims())) return false;
  if (x.is_zero()) return true;
  const HomBasis h = hom_basis(x, m);
  bool found = false;
  for_each_hom_direction(x, m, h, [&](const Morphism& f) {
    found = is_injective(f);
    return !found;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Subrepresentations

SubrepWitness subrep(const Rep& m, std::vector<Mat> bases) { return subrep(std::make_shared<const Rep>(m), std::move(bases)); }

SubrepWitness subrep(std::shared_ptr<const Rep> amb, std::vector<Mat> bases) {
  const Rep& m = *amb;
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  const int nv = q.vertex_count();
  if (static_cast<int>(bases.size()) != nv) throw InvalidInput("one subspace basis per vertex expected");
  std::vector<std::vector<int>> piv(nv), np(nv);
  DimVector sub_dims(nv), quo_dims(nv);
  for (int v = 0; v < nv; ++v) {
    if (bases[v].cols() != m.dim(v)) throw InvalidInput("subspace basis has the wrong width");
    const Echelon e = rref(bases[v]);
    if (!(e.reduced == bases[v])) throw InvalidInput("subspace basis is not in reduced row echelon form");
    piv[v] = e.pivots;
    np[v] = non_pivots(m.dim(v), piv[v]);
    sub_dims[v] = bases[v].rows();
    quo_dims[v] = m.dim(v) - sub_dims[v];
  }
  std::vector<Mat> sub_maps, quo_maps;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto [s, t] = q.arrows()[k];
    const Mat& a = m.map(k);
    Mat sm(f, sub_dims[t], sub_dims[s]);
    for (int j = 0; j < sub_dims[s]; ++j) {
      const Vec img = a.apply(bases[s].row(j));
      for (int r = 0; r < sub_dims[t]; ++r) sm(r, j) = img[piv[t][r]];
      const Vec res = reduce_against(bases[t], piv[t], img);
      if (std::any_of(res.begin(), res.end(), [](Elem e) { return e != 0; }))
        throw InvalidInput("subspaces are not compatible with arrow " + std::to_string(k + 1));
    }
    Mat qm(f, quo_dims[t], quo_dims[s]);
    for (int j = 0; j < quo_dims[s]; ++j) {
      const Vec res = reduce_against(bases[t], piv[t], a.column(np[s][j]));
      for (int r = 0; r < quo_dims[t]; ++r) qm(r, j) = res[np[t][r]];
    }
    sub_maps.push_back(std::move(sm));
    quo_maps.push_back(std::move(qm));
  }
  Morphism inc, proj;
  for (int v = 0; v < nv; ++v) {
    inc.push_back(bases[v].transpose());
    proj.push_back(quotient_projection(bases[v], piv[v]));
  }
  Rep sub(m.quiver_ptr(), f, sub_dims, std::move(sub_maps));
  Rep quo(m.quiver_ptr(), f, quo_dims, std::move(quo_maps));
  return SubrepWitness{std::move(amb), std::move(bases), std::move(sub), std::move(quo), std::move(inc), std::move(proj)};
}

RadicalTop radical_and_top(const Rep& m) {
  const Quiver& q = m.quiver();
  std::vector<Mat> bases;
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<Vec> gens;
    for (int a : q.in_arrows(v)) {
      const Mat& ma = m.map(a);
      for (int c = 0; c < ma.cols(); ++c) gens.push_back(ma.column(c));
    }
    bases.push_back(row_space(Mat::from_rows(m.field(), m.dim(v), gens)));
  }
  SubrepWitness w = subrep(m, std::move(bases));
  DimVector top = m.dims() - w.sub.dims();
  return {std::move(w.sub), std::move(top)};
}

namespace {

struct SubrepSearch {
  const Rep& m;
  const DimVector& d;
  const std::vector<int>& order;
  const std::function<bool(const std::vector<Mat>&)>& visit;
  std::vector<Mat> bases;
  std::vector<std::vector<int>> pivots;
  std::vector<Mat> projections;  // quotient maps for fixed vertices
  std::vector<bool> fixed;

  bool run(std::size_t step) {
    if (step == order.size()) return visit(bases);
    const Quiver& q = m.quiver();
    const Field& f = m.field();
    const int v = order[step];
    const int dim_v = m.dim(v);

    // Lower bound: images of processed in-neighbours' subspaces.
    std::vector<Vec> forced;
    for (int a : q.in_arrows(v)) {
      const int s = q.arrows()[a].source;
      if (!fixed[s]) continue;
      for (int r = 0; r < bases[s].rows(); ++r) forced.push_back(m.map(a).apply(bases[s].row(r)));
    }
    const Echelon low = rref(Mat::from_rows(f, dim_v, forced));
    if (low.reduced.rows() > d[v]) return true;

    // Upper bound: vectors whose images land in processed out-neighbours' subspaces.
    Mat constraint(f, 0, dim_v);
    for (int a : q.out_arrows(v)) {
      const int t = q.arrows()[a].target;
      if (!fixed[t]) continue;
      constraint = Mat::vstack(constraint, projections[t] * m.map(a));
    }
    const Mat upper = constraint.rows() == 0 ? Mat::identity(f, dim_v) : kernel_basis(constraint);
    if (upper.rows() < d[v]) return true;
    if (constraint.rows() > 0 && low.reduced.rows() > 0 && !(constraint * low.reduced.transpose()).is_zero()) return true;

    // Complement of `low` inside `upper`.
    std::vector<Vec> span_rows;
    for (int r = 0; r < low.reduced.rows(); ++r) span_rows.emplace_back(low.reduced.row(r).begin(), low.reduced.row(r).end());
    std::vector<Vec> complement;
    int current_rank = static_cast<int>(span_rows.size());
    for (int r = 0; r < upper.rows() && current_rank < upper.rows(); ++r) {
      span_rows.emplace_back(upper.row(r).begin(), upper.row(r).end());
      const int rk = rank(Mat::from_rows(f, dim_v, span_rows));
      if (rk > current_rank) {
        complement.push_back(span_rows.back());
        current_rank = rk;
      } else {
        span_rows.pop_back();
      }
    }
    const Mat comp = Mat::from_rows(f, dim_v, complement);
    const int extra = d[v] - low.reduced.rows();

    fixed[v] = true;
    SubspaceEnumerator it(f, comp.rows(), extra);
    bool keep_going = true;
    while (keep_going && it.next()) {
      Mat gens = Mat::vstack(low.reduced, it.current() * comp);
      Echelon e = rref(gens);
      bases[v] = std::move(e.reduced);
      pivots[v] = std::move(e.pivots);
      projections[v] = quotient_projection(bases[v], pivots[v]);
      keep_going = run(step + 1);
    }
    fixed[v] = false;
    return keep_going;
  }
};

}  // namespace

bool for_each_subrep_bases(const Rep& m, const DimVector& d, const std::function<bool(const std::vector<Mat>&)>& visit,
                           std::optional<std::vector<int>> order) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  if (d.size() != nv || !d.nonnegative() || !d.leq(m.dims()))
    throw InvalidInput("subrepresentation dimension " + d.str() + " does not fit in " + m.dims().str());
  std::uint64_t naive = 1;
  for (int v = 0; v < nv; ++v) {
    const std::uint64_t g = gaussian_binomial(m.dim(v), d[v], m.field().q());
    naive = (g != 0 && naive > std::numeric_limits<std::uint64_t>::max() / g) ? std::numeric_limits<std::uint64_t>::max()
                                                                               : naive * g;
  }
  if (naive > limits().subreps)
    throw InfeasibleEnumeration("subrepresentation search of dimension " + d.str() + " in " + m.dims().str() +
                                " exceeds the enumeration budget");
  const std::vector<int> ord = order ? *order : admissible_sink_order(q);
  if (static_cast<int>(ord.size()) != nv) throw InvalidInput("vertex order must be a permutation");
  SubrepSearch search{m, d, ord, visit, std::vector<Mat>(nv), std::vector<std::vector<int>>(nv), std::vector<Mat>(nv),
                      std::vector<bool>(nv, false)};
  return search.run(0);
}

bool for_each_subrep(const Rep& m, const DimVector& d, const std::function<bool(const SubrepWitness&)>& visit,
                     std::optional<std::vector<int>> order) {
  auto amb = std::make_shared<const Rep>(m);
  return for_each_subrep_bases(
      m, d, [&](const std::vector<Mat>& bases) { return visit(subrep(amb, bases)); }, std::move(order));
}

std::uint64_t count_subreps(const Rep& m, const DimVector& d, std::optional<std::vector<int>> order) {
  std::uint64_t count = 0;
  for_each_subrep_bases(
      m, d,
      [&](const std::vector<Mat>&) {
        ++count;
        return true;
      },
      std::move(order));
  return count;
}

std::string to_string(IndecClass c) {
  switch (c) {
    case IndecClass::Preprojective: return "preprojective";
    case IndecClass::Regular: return "regular";
    case IndecClass::Preinjective: return "preinjective";
  }
  return "?";
}

IndecClass classify_indec(const Rep& m) {
  const int d = defect(m.quiver(), m.dims());
  if (d < 0) return IndecClass::Preprojective;
  if (d > 0) return IndecClass::Preinjective;
  return IndecClass::Regular;
}

// ---------------------------------------------------------------------------
// JSON

std::string rep_to_json(const Rep& m) {
  using nlohmann::json;
  json j;
  j["q"] = m.field().q();
  j["dims"] = m.dims().values();
  json arrows = json::array();
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto [s, t] = m.quiver().arrows()[k];
    json rows = json::array();
    const Mat& a = m.map(k);
    for (int r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < a.cols(); ++c) row.push_back(static_cast<int>(a(r, c)));
      rows.push_back(std::move(row));
    }
    arrows.push_back({{"s", s + 1}, {"t", t + 1}, {"matrix", std::move(rows)}});
  }
  j["arrows"] = std::move(arrows);
  return j.dump();
}

Rep rep_from_json(const std::string& text, QuiverPtr quiver) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("representation JSON: ") + e.what());
  }
  try {
    const Field& f = Field::get(j.at("q").get<int>());
    DimVector dims(j.at("dims").get<std::vector<int>>());
    const auto& arrows = j.at("arrows");
    if (static_cast<int>(arrows.size()) != quiver->arrow_count()) throw InvalidInput("arrow count mismatch");
    std::vector<Mat> maps;
    for (int k = 0; k < quiver->arrow_count(); ++k) {
      const auto& a = arrows[k];
      const auto [s, t] = quiver->arrows()[k];
      if (a.at("s").get<int>() != s + 1 || a.at("t").get<int>() != t + 1) throw InvalidInput("arrow endpoints mismatch");
      const auto rows = a.at("matrix").get<std::vector<std::vector<int>>>();
      const int nr = dims[t], nc = dims[s];
      if (static_cast<int>(rows.size()) != nr) throw InvalidInput("matrix row count mismatch");
      std::vector<Elem> entries;
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc) throw InvalidInput("matrix column count mismatch");
        for (int e : row) {
          if (e < 0 || e >= f.q()) throw InvalidInput("matrix entry is not a field label");
          entries.push_back(static_cast<Elem>(e));
        }
      }
      maps.emplace_back(f, nr, nc, std::move(entries));
    }
    return Rep(std::move(quiver), f, std::move(dims), std::move(maps));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("representation JSON: ") + e.what());
  }
}

}  // namespace tamehall
