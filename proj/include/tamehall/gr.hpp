#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamehall/rep.hpp"

namespace tamehall {

/// Finite set of positive integers, strictly increasing.
struct GRMeasure {
  std::vector<int> elements;
  std::string str() const;  // "{1,3,6}"
  friend bool operator==(const GRMeasure&, const GRMeasure&) = default;
};

/// I < J iff the smallest element of the symmetric difference lies in J.
std::strong_ordering compare_measures(const GRMeasure& i, const GRMeasure& j);
inline bool operator<(const GRMeasure& a, const GRMeasure& b) { return compare_measures(a, b) < 0; }
/// J starts with I: I = J, or I is a proper subset of J lying below J \ I.
bool starts_with(const GRMeasure& i, const GRMeasure& j);

/// Gabriel-Roiter measure. Indecomposability is detected as End = k, so M
/// and its indecomposable submodules are expected to be bricks (true for
/// preprojective modules and simple homogeneous ones). Candidate submodules
/// are indexed by dimension vector: real roots of nonzero defect (and every
/// root on Dynkin quivers) carry a unique indecomposable, built directly and
/// tested for a monomorphism; other dimension vectors are enumerated.
GRMeasure gr_measure(const Rep& m);
/// Reference implementation: every subrepresentation of every dimension.
GRMeasure gr_measure_exhaustive(const Rep& m);

/// Dimension vectors of the GR submodules of a brick M.
std::vector<DimVector> gr_submodule_dims(const Rep& m);
/// All GR submodules of a brick M, explicitly.
std::vector<SubrepWitness> gr_submodules(const Rep& m);

/// Submodule count for X -> Y compared with q^{s-r}(q^{h-s}-1)/(q^{e-r}-1).
struct SubmoduleCountReport {
  std::uint64_t u = 0;          // brute-force count of submodules of Y isomorphic to X
  std::uint64_t formula = 0;    // value of the closed formula (0 when not applicable)
  int h = 0, s = 0, e = 0, r = 0;
  bool singular_is_subspace = false;  // non-monomorphisms number q^s
  bool radical_is_subspace = false;   // non-invertible endomorphisms number q^r
  bool agrees() const noexcept { return singular_is_subspace && radical_is_subspace && u == formula; }
};
SubmoduleCountReport count_submodules_report(const Rep& x, const Rep& y);

struct KroneckerPair {
  int hom_qp = 0, hom_pq = 0, ext_pq = 0, ext_qp = 0;  // q = R/P, p = P
};

struct GRCheck {
  std::string label;
  GRMeasure measure;
  DimVector sub_dims;
  int sub_defect = 0;
  DimVector quotient_dims;
  int quotient_defect = 0;
  bool quotient_brick = false;
  KroneckerPair pair;
  SubmoduleCountReport count;
  bool ok = false;
};

struct GRReport {
  std::string quiver;
  int q = 0;
  std::vector<GRCheck> checks;  // one per (homogeneous module, GR submodule)
  bool measure_constant = false;
  bool ok = false;
};

/// For every simple homogeneous R of dimension delta: GR submodules P have
/// defect -1, R/P is a preinjective brick of defect 1, and (R/P, P) is a
/// Kronecker pair.
GRReport verify_main_theorem(QuiverPtr q, const Field& f);

/// {measure, gr_submodule: {dims, defect}, quotient: {dims, defect}, kronecker_pair: {...}} per check.
std::string gr_report_json(const GRReport& r);

/// Drops all memoized measures.
void clear_gr_cache();

}  // namespace tamehall
