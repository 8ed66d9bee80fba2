#include "tamehall/gr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "json.hpp"
#include "tamehall/functors.hpp"
#include "tamehall/homreg.hpp"

namespace tamehall {

std::string GRMeasure::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(elements[k]);
  }
  return s + "}";
}

std::strong_ordering compare_measures(const GRMeasure& i, const GRMeasure& j) {
  std::size_t a = 0, b = 0;
  const auto& x = i.elements;
  const auto& y = j.elements;
  while (a < x.size() && b < y.size()) {
    if (x[a] == y[b]) {
      ++a;
      ++b;
      continue;
    }
    // smallest element of the symmetric difference
    return x[a] < y[b] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a < x.size()) return std::strong_ordering::greater;
  if (b < y.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool starts_with(const GRMeasure& i, const GRMeasure& j) {
  if (i.elements.size() > j.elements.size()) return false;
  if (!std::equal(i.elements.begin(), i.elements.end(), j.elements.begin())) return false;
  // J \ I is then the tail of J, all above the prefix since J is increasing.
  return true;
}

namespace {

std::mutex cache_mutex;
std::map<std::string, GRMeasure> built_cache;  // (quiver, q, dims) -> measure of the unique indecomposable

std::string cache_key(const Quiver& q, int field, const DimVector& d) {
  return format_quiver(q) + "|" + std::to_string(field) + "|" + d.str();
}

void check_budget(const Rep& m) {
  if (m.total_dim() > limits().gr_max_length)
    throw InfeasibleEnumeration("GR search limited to modules of length " + std::to_string(limits().gr_max_length));
  if (m.field().q() > limits().gr_max_q)
    throw InfeasibleEnumeration("GR search limited to fields with at most " + std::to_string(limits().gr_max_q) + " elements");
}

GRMeasure with_length(GRMeasure m, int length) {
  m.elements.push_back(length);
  return m;
}

struct Candidate {
  DimVector dims;
  GRMeasure measure;
  std::optional<Rep> module;  // built candidates
};

class Search {
 public:
  explicit Search(bool exhaustive) : exhaustive_(exhaustive) {}

  GRMeasure measure(const Rep& m) {
    if (m.is_zero()) return {};
    if (auto* hit = lookup(m)) return *hit;
    const std::optional<GRMeasure> best = exhaustive_ ? best_exhaustive(m) : best_by_roots(m, nullptr);
    GRMeasure out = best.value_or(GRMeasure{});
    if (is_brick(m)) out = with_length(out, m.total_dim());
    store(m, out);
    return out;
  }

  /// Best proper indecomposable submodule measure; collects every
  /// dimension vector attaining it when `winners` is given.
  std::optional<GRMeasure> best_by_roots(const Rep& m, std::vector<DimVector>* winners) {
    const Quiver& q = m.quiver();
    const GraphClass cls = classify_graph(q);
    std::vector<DimVector> build, enumerate;
    for (const auto& r : positive_real_roots(q, m.dims())) {
      if (r.root == m.dims()) continue;
      if (cls.dynkin() || (r.defect && *r.defect != 0)) build.push_back(r.root);
      else enumerate.push_back(r.root);
    }
    if (cls.affine()) {
      const DimVector delta = radical_delta(q);
      if (delta.leq(m.dims()) && delta != m.dims()) enumerate.push_back(delta);
    }
    if (!cls.dynkin() && !cls.affine()) throw QuiverError(QuiverError::Code::NotAffine, "GR search needs a Dynkin or affine quiver");

    std::vector<Candidate> built;
    for (const auto& y : build) {
      Rep x = build_indecomposable(m.quiver_ptr(), m.field(), y);
      GRMeasure mu = built_measure(x);
      built.push_back({y, std::move(mu), std::move(x)});
    }
    std::stable_sort(built.begin(), built.end(),
                     [](const Candidate& a, const Candidate& b) { return compare_measures(a.measure, b.measure) > 0; });

    std::optional<GRMeasure> best;
    auto offer = [&](const DimVector& y, const GRMeasure& mu) {
      if (!best || compare_measures(mu, *best) > 0) {
        best = mu;
        if (winners) winners->clear();
      }
      if (winners && compare_measures(mu, *best) == 0 &&
          std::find(winners->begin(), winners->end(), y) == winners->end())
        winners->push_back(y);
    };
    for (const auto& y : enumerate)
      for_each_subrep(m, y, [&](const SubrepWitness& w) {
        if (is_brick(w.sub)) offer(y, measure(w.sub));
        return true;
      });
    for (const auto& c : built) {
      if (best) {
        const auto cmp = compare_measures(c.measure, *best);
        if (cmp < 0 || (cmp == 0 && !winners)) break;
      }
      if (has_monomorphism(*c.module, m)) offer(c.dims, c.measure);
    }
    return best;
  }

 private:
  GRMeasure built_measure(const Rep& x) {
    const std::string key = cache_key(x.quiver(), x.field().q(), x.dims());
    if (!exhaustive_) {
      std::lock_guard lock(cache_mutex);
      if (auto it = built_cache.find(key); it != built_cache.end()) return it->second;
    }
    GRMeasure mu = measure(x);
    if (!exhaustive_) {
      std::lock_guard lock(cache_mutex);
      built_cache.emplace(key, mu);
    }
    return mu;
  }

  std::optional<GRMeasure> best_exhaustive(const Rep& m) {
    std::optional<GRMeasure> best;
    const int n = m.quiver().vertex_count();
    DimVector d(n);
    std::function<void(int)> each = [&](int v) {
      if (v == n) {
        if (d.is_zero() || d == m.dims()) return;
        for_each_subrep(m, d, [&](const SubrepWitness& w) {
          if (!is_brick(w.sub)) return true;
          const GRMeasure mu = measure(w.sub);
          if (!best || compare_measures(mu, *best) > 0) best = mu;
          return true;
        });
        return;
      }
      for (int x = 0; x <= m.dim(v); ++x) {
        d[v] = x;
        each(v + 1);
      }
      d[v] = 0;
    };
    each(0);
    return best;
  }

  const GRMeasure* lookup(const Rep& m) {
    auto it = memo_.find(m.dims());
    if (it == memo_.end()) return nullptr;
    for (const auto& [rep, mu] : it->second)
      if (iso(rep, m)) return &mu;
    return nullptr;
  }

  void store(const Rep& m, const GRMeasure& mu) { memo_[m.dims()].emplace_back(m, mu); }

  bool exhaustive_;
  std::map<DimVector, std::vector<std::pair<Rep, GRMeasure>>> memo_;
};

}  // namespace

void clear_gr_cache() {
  std::lock_guard lock(cache_mutex);
  built_cache.clear();
}

GRMeasure gr_measure(const Rep& m) {
  check_budget(m);
  Search s(false);
  return s.measure(m);
}

GRMeasure gr_measure_exhaustive(const Rep& m) {
  check_budget(m);
  Search s(true);
  return s.measure(m);
}

std::vector<DimVector> gr_submodule_dims(const Rep& m) {
  check_budget(m);
  if (!is_brick(m)) throw InvalidInput("GR submodules are computed for bricks only");
  Search s(false);
  std::vector<DimVector> winners;
  s.best_by_roots(m, &winners);
  std::sort(winners.begin(), winners.end());
  return winners;
}

std::vector<SubrepWitness> gr_submodules(const Rep& m) {
  const std::vector<DimVector> dims = gr_submodule_dims(m);
  std::vector<SubrepWitness> out;
  if (dims.empty()) return out;
  const GRMeasure target = gr_measure(m);
  GRMeasure sub_target = target;
  sub_target.elements.pop_back();
  for (const auto& y : dims)
    for_each_subrep(m, y, [&](const SubrepWitness& w) {
      if (is_brick(w.sub) && gr_measure(w.sub) == sub_target) out.push_back(w);
      return true;
    });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<int> log_q(std::uint64_t n, int q) {
  int e = 0;
  while (n > 1) {
    if (n % q) return std::nullopt;
    n /= q;
    ++e;
  }
  return n == 1 ? std::optional<int>(e) : std::nullopt;
}

std::uint64_t ipow(int q, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}

}  // namespace

SubmoduleCountReport count_submodules_report(const Rep& x, const Rep& y) {
  const int q = x.field().q();
  SubmoduleCountReport rep;
  const HomBasis h = hom_basis(x, y);
  rep.h = h.dim();
  std::uint64_t singular_dirs = 0;
  for_each_hom_direction(x, y, h, [&](const Morphism& f) {
    if (!is_injective(f)) ++singular_dirs;
    return true;
  });
  const auto s = log_q(1 + (q - 1) * singular_dirs, q);
  rep.singular_is_subspace = s.has_value();
  rep.s = s.value_or(-1);

  const HomBasis e = hom_basis(x, x);
  rep.e = e.dim();
  std::uint64_t radical_dirs = 0;
  for_each_hom_direction(x, x, e, [&](const Morphism& f) {
    if (!is_invertible(f)) ++radical_dirs;
    return true;
  });
  const auto r = log_q(1 + (q - 1) * radical_dirs, q);
  rep.radical_is_subspace = r.has_value();
  rep.r = r.value_or(-1);

  if (rep.singular_is_subspace && rep.radical_is_subspace && rep.h > rep.s && rep.e > rep.r && rep.s >= rep.r) {
    const std::uint64_t num = ipow(q, rep.s - rep.r) * (ipow(q, rep.h - rep.s) - 1);
    const std::uint64_t den = ipow(q, rep.e - rep.r) - 1;
    if (num % den == 0) rep.formula = num / den;
  }
  for_each_subrep(y, x.dims(), [&](const SubrepWitness& w) {
    if (iso(w.sub, x)) ++rep.u;
    return true;
  });
  return rep;
}

GRReport verify_main_theorem(QuiverPtr q, const Field& f) {
  const GraphClass cls = classify_graph(*q);
  if (!cls.affine()) throw QuiverError(QuiverError::Code::NotAffine, "the check needs an affine quiver");
  GRReport report;
  report.quiver = q->label().empty() ? cls.name() : q->label();
  report.q = f.q();
  const HomogeneousSimples hs = build_homogeneous_simples(q, f);
  if (hs.modules.empty()) throw InvalidInput("no simple homogeneous modules over GF(" + std::to_string(f.q()) + ")");
  bool all_ok = true;
  std::optional<GRMeasure> first;
  report.measure_constant = true;
  for (const auto& r : hs.modules) {
    const GRMeasure mu = gr_measure(r.module);
    if (!first) first = mu;
    else if (!(mu == *first)) report.measure_constant = false;
    const std::vector<SubrepWitness> subs = gr_submodules(r.module);
    if (subs.empty()) all_ok = false;
    std::set<DimVector> seen;
    for (const auto& w : subs) {
      if (!seen.insert(w.sub.dims()).second) continue;
      GRCheck c;
      c.label = r.label;
      c.measure = mu;
      c.sub_dims = w.sub.dims();
      c.sub_defect = defect(*q, c.sub_dims);
      c.quotient_dims = w.quotient.dims();
      c.quotient_defect = defect(*q, c.quotient_dims);
      c.quotient_brick = is_brick(w.quotient);
      c.pair.hom_qp = hom_dim(w.quotient, w.sub);
      c.pair.hom_pq = hom_dim(w.sub, w.quotient);
      c.pair.ext_pq = ext1_dim(w.sub, w.quotient);
      c.pair.ext_qp = ext1_dim(w.quotient, w.sub);
      c.count = count_submodules_report(w.sub, r.module);
      c.ok = c.sub_defect == -1 && c.quotient_brick && c.quotient_defect == 1 && c.pair.hom_qp == 0 &&
             c.pair.hom_pq == 0 && c.pair.ext_pq == 0 && c.pair.ext_qp == 2 && c.count.agrees();
      all_ok = all_ok && c.ok;
      report.checks.push_back(std::move(c));
    }
  }
  report.ok = all_ok && report.measure_constant;
  return report;
}

std::string gr_report_json(const GRReport& r) {
  using nlohmann::json;
  json j;
  j["schema"] = 1;
  j["quiver"] = r.quiver;
  j["q"] = r.q;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json x;
    x["label"] = c.label;
    x["measure"] = c.measure.elements;
    x["gr_submodule"] = {{"dims", c.sub_dims.values()}, {"defect", c.sub_defect}};
    x["quotient"] = {{"dims", c.quotient_dims.values()}, {"defect", c.quotient_defect}, {"brick", c.quotient_brick}};
    x["kronecker_pair"] = {{"hom_qp", c.pair.hom_qp}, {"hom_pq", c.pair.hom_pq}, {"ext_pq", c.pair.ext_pq}, {"ext_qp", c.pair.ext_qp}};
    x["submodule_count"] = {{"u", c.count.u}, {"formula", c.count.formula}, {"h", c.count.h},
                            {"s", c.count.s}, {"e", c.count.e},       {"r", c.count.r}};
    x["ok"] = c.ok;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  j["measure_constant"] = r.measure_constant;
  j["ok"] = r.ok;
  return j.dump(2);
}

}  // namespace tamehall
