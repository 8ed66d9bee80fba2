#pragma once

#include <string>
#include <vector>

#include "tamehall/rep.hpp"

namespace tamehall {

/// Ext^1(N, M) as the cokernel of the two-term cochain complex
/// sum_j Hom(N_j, M_j) -> sum_a Hom(N_s(a), M_t(a)).
struct ExtSpace {
  int cochain_dim = 0;   // dimension of the 1-cochain space
  int boundary_rank = 0;
  /// Representative cocycles of a basis of Ext^1, one matrix per arrow.
  std::vector<std::vector<Mat>> basis;
  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

ExtSpace ext_space(const Rep& n, const Rep& m);
/// sum_k c_k basis[k], one matrix per arrow.
std::vector<Mat> combine_cocycle(const ExtSpace& e, const std::vector<Elem>& coeffs, const Field& f);
/// Middle term of the extension 0 -> M -> E -> N -> 0 given by a cocycle:
/// E_j = M_j + N_j, E_a = [[M_a, f_a], [0, N_a]].
Rep middle_term(const Rep& n, const Rep& m, const std::vector<Mat>& cocycle);

/// dims = delta, End = k and tau R isomorphic to R.
bool is_simple_homogeneous(const Rep& r);

struct LabelledModule {
  std::string label;  // field label of lambda, or "inf"
  Rep module;
};

struct HomogeneousSimples {
  Rep p;                                 // preprojective, defect -1
  Rep i;                                 // preinjective of dimension delta - dim P
  std::vector<LabelledModule> modules;   // accepted, pairwise non-isomorphic, label order
  std::vector<std::string> rejected;     // lines whose middle term is not homogeneous
  std::vector<std::string> duplicates;   // accepted lines isomorphic to an earlier one
};

/// Simple homogeneous regular modules of dimension delta from the q+1 lines
/// of the two-dimensional Ext^1(I, P). Throws InvalidInput on D~/E~ types over GF(2).
HomogeneousSimples build_homogeneous_simples(QuiverPtr q, const Field& f);

/// The defect -1 preprojective root used by build_homogeneous_simples:
/// dim P(j) for the smallest j with delta_j = 1 and dim P(j) <= delta, else the
/// lexicographically first defect -1 root below delta.
DimVector kronecker_pair_root(const Quiver& q);

}  // namespace tamehall
