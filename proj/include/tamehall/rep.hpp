#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tamehall/matrix.hpp"
#include "tamehall/quiver.hpp"

namespace tamehall {

/// Finite-dimensional representation of a quiver over GF(q): one vector
/// space k^{dims[v]} per vertex and one matrix per arrow, of shape
/// dims[target] x dims[source].
class Rep {
 public:
  Rep(QuiverPtr quiver, const Field& field, DimVector dims, std::vector<Mat> maps);

  /// All maps zero.
  static Rep zero_maps(QuiverPtr quiver, const Field& field, DimVector dims);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const Field& field() const noexcept { return *field_; }
  const DimVector& dims() const noexcept { return dims_; }
  int dim(int v) const noexcept { return dims_[v]; }
  int total_dim() const noexcept { return dims_.total(); }
  bool is_zero() const noexcept { return dims_.is_zero(); }
  const Mat& map(int arrow) const noexcept { return maps_[arrow]; }
  const std::vector<Mat>& maps() const noexcept { return maps_; }

  /// Bitwise equality of quiver, field, dimensions and matrices.
  friend bool operator==(const Rep& a, const Rep& b) noexcept;

 private:
  QuiverPtr quiver_;
  const Field* field_;
  DimVector dims_;
  std::vector<Mat> maps_;
};

/// A morphism: one matrix per vertex, X_v of shape target.dims[v] x source.dims[v].
using Morphism = std::vector<Mat>;

Rep simple(QuiverPtr q, const Field& f, int vertex);
/// Basis of P(i) at j: paths i -> j. Arrow maps are 0/1 path-extension matrices.
Rep projective(QuiverPtr q, const Field& f, int vertex);
/// Basis of I(i) at j: duals of paths j -> i.
Rep injective(QuiverPtr q, const Field& f, int vertex);
Rep direct_sum(const Rep& a, const Rep& b);

struct HomBasis {
  std::vector<Morphism> basis;
  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// Matrix of the linear system whose kernel is Hom(M,N). Unknowns are the
/// entries of X_v, vertex by vertex, row-major.
Mat hom_system(const Rep& m, const Rep& n);
HomBasis hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);
int end_dim(const Rep& m);
/// dim Ext^1(M,N) = dim Hom(M,N) - <dim M, dim N>.
int ext1_dim(const Rep& m, const Rep& n);
bool is_brick(const Rep& m);

/// Linear combination sum c_k basis[k].
Morphism combine(const HomBasis& h, const std::vector<Elem>& coeffs, const Field& f);
bool is_morphism(const Rep& m, const Rep& n, const Morphism& x);
bool is_injective(const Morphism& x);
bool is_invertible(const Morphism& x);

/// Visits the points of the projective space of Hom(M,N) (nonzero
/// combinations, first nonzero coefficient 1). Budget applies to the count.
/// Returns false if the visitor stopped early.
bool for_each_hom_direction(const Rep& m, const Rep& n, const HomBasis& h,
                            const std::function<bool(const Morphism&)>& visit);

/// M and N are isomorphic. Exhaustive over Hom(M,N) after cheap dimension filters.
bool iso(const Rep& m, const Rep& n);
/// Some monomorphism X -> M exists.
bool has_monomorphism(const Rep& x, const Rep& m);

/// Subrepresentation given by a subspace per vertex (rows of an RREF basis).
struct SubrepWitness {
  std::shared_ptr<const Rep> ambient;
  std::vector<Mat> bases;   // per vertex: d_v x dims_v, reduced row echelon
  Rep sub;                  // in the coordinates of `bases`
  Rep quotient;             // in the coordinates of the non-pivot unit vectors
  Morphism inclusion;       // sub -> ambient
  Morphism projection;      // ambient -> quotient
  DimVector sub_dims() const { return sub.dims(); }
};

/// Throws InvalidInput when the subspaces are not compatible with the arrow maps.
SubrepWitness subrep(const Rep& m, std::vector<Mat> bases);
SubrepWitness subrep(std::shared_ptr<const Rep> m, std::vector<Mat> bases);

struct RadicalTop {
  Rep radical;
  DimVector top;
};
RadicalTop radical_and_top(const Rep& m);

/// Visits every subrepresentation of dimension d exactly once, as
/// vertexwise RREF bases. Vertices are fixed in `order` (default:
/// admissible sink order); each vertex's subspace is drawn from the
/// interval between what processed in-neighbours force and what processed
/// out-neighbours allow. The visitor returns false to stop.
bool for_each_subrep_bases(const Rep& m, const DimVector& d, const std::function<bool(const std::vector<Mat>&)>& visit,
                           std::optional<std::vector<int>> order = std::nullopt);
/// Same, materializing sub and quotient for each.
bool for_each_subrep(const Rep& m, const DimVector& d, const std::function<bool(const SubrepWitness&)>& visit,
                     std::optional<std::vector<int>> order = std::nullopt);
std::uint64_t count_subreps(const Rep& m, const DimVector& d, std::optional<std::vector<int>> order = std::nullopt);

enum class IndecClass { Preprojective, Regular, Preinjective };
std::string to_string(IndecClass c);
/// Sign of the defect of dim M; affine quivers only.
IndecClass classify_indec(const Rep& m);

/// {"q", "dims", "arrows": [{"s","t","matrix"}]}, 1-based vertices, row-major rows of labels.
std::string rep_to_json(const Rep& m);
Rep rep_from_json(const std::string& text, QuiverPtr quiver);

}  // namespace tamehall
