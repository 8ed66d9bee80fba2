#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tamehall/error.hpp"

namespace tamehall {

/// Integer vector indexed by vertices (0-based internally).
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(int n, int value = 0) : v_(n, value) {}
  DimVector(std::initializer_list<int> init) : v_(init) {}
  explicit DimVector(std::vector<int> v) : v_(std::move(v)) {}

  static DimVector unit(int n, int i) {
    DimVector e(n);
    e[i] = 1;
    return e;
  }

  int size() const noexcept { return static_cast<int>(v_.size()); }
  int operator[](int i) const noexcept { return v_[i]; }
  int& operator[](int i) noexcept { return v_[i]; }
  const std::vector<int>& values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  /// |x|: sum of coordinates.
  int total() const noexcept;
  int max() const noexcept;
  bool is_zero() const noexcept;
  bool nonnegative() const noexcept;
  /// Componentwise x <= y.
  bool leq(const DimVector& other) const noexcept;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector operator*(int s) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector& a, const DimVector& b) { return a.v_ <=> b.v_; }

  /// "(1,2,0)"
  std::string str() const;

 private:
  std::vector<int> v_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& x);

struct Arrow {
  int source;
  int target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Error raised for malformed or excluded quivers.
class QuiverError : public InvalidInput {
 public:
  enum class Code { Syntax, VertexRange, Loop, Cycle, Disconnected, NotTree, NotAffine, NotSink };
  QuiverError(Code code, const std::string& what, int line = 0)
      : InvalidInput(line > 0 ? "line " + std::to_string(line) + ": " + what : what), code_(code), line_(line) {}
  Code code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  Code code_;
  int line_;
};

/// Finite connected acyclic quiver without loops. Vertices are 0-based.
class Quiver {
 public:
  /// Validates; throws QuiverError on loops, directed cycles or a disconnected graph.
  Quiver(int vertex_count, std::vector<Arrow> arrows, std::string label = {});

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool is_sink(int v) const;
  bool is_source(int v) const;
  std::vector<int> sinks() const;
  /// Indices of arrows ending (resp. starting) at v.
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  /// Number of edges between a and b in the underlying graph.
  int edge_multiplicity(int a, int b) const;
  std::vector<int> neighbours(int v) const;
  bool is_tree() const noexcept { return arrow_count() == n_ - 1; }

  friend bool operator==(const Quiver& a, const Quiver& b) noexcept {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::string label_;
  std::vector<std::vector<int>> in_, out_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// Parses the line-oriented format: `# comment`, `vertices <n>`, `arrow <s> <t>` (1-based).
Quiver parse_quiver(std::string_view text);
/// Inverse of parse_quiver.
std::string format_quiver(const Quiver& q);

/// Preset quivers: kronecker, dtilde:<n>, e6tilde, e7tilde, e8tilde, a:<n>, d:<n>, e:<6|7|8>.
/// Every preset has all arrows pointing toward its designated sink.
Quiver preset_quiver(std::string_view name);
/// Designated sink of a preset (0-based).
int preset_sink(std::string_view name);

/// Same underlying tree with every edge pointing toward `sink`.
Quiver orient_toward(const Quiver& tree, int sink);

enum class GraphKind { AffineA, AffineD, AffineE6, AffineE7, AffineE8, A, D, E6, E7, E8, Other };

struct GraphClass {
  GraphKind kind = GraphKind::Other;
  int rank = 0;  // n for A_n / D_n / A~n / D~n
  bool affine() const noexcept;
  bool dynkin() const noexcept;
  /// "A~1", "D~4", "E~8", "A_3", "E_6", "other"
  std::string name() const;
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify_graph(const Quiver& q);

/// <a,b> = sum_i a_i b_i - sum_arrows a_s b_t.
int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
/// q(a) = <a,a>.
int tits_form(const Quiver& q, const DimVector& a);
/// Minimal positive radical vector; throws QuiverError(NotAffine) unless the graph is affine.
DimVector radical_delta(const Quiver& q);
/// <delta, x>.
int defect(const Quiver& q, const DimVector& x);

struct RealRoot {
  DimVector root;
  std::optional<int> defect;  // present on affine quivers
};

/// All nonzero x <= bound with q(x) = 1, lexicographically sorted.
std::vector<RealRoot> positive_real_roots(const Quiver& q, const DimVector& bound);

/// Reverses every arrow incident to v.
Quiver sigma_reverse(const Quiver& q, int v);
/// Permutation i_1..i_n with each i_s a sink after reversing at i_1..i_{s-1};
/// smallest-index sink first.
std::vector<int> admissible_sink_order(const Quiver& q);
/// For a tree with sink i: a sink-reflection sequence avoiding i and its
/// neighbours that turns q into orient_toward(q, i).
std::vector<int> sink_sequence_to(const Quiver& q, int sink);
/// Applies sigma_reverse along `word`; throws QuiverError(NotSink) when a letter is not a sink.
Quiver apply_sink_word(const Quiver& q, const std::vector<int>& word);

/// Simple reflection s_v for the symmetrized Euler form.
DimVector reflect_dimvec(const Quiver& q, int v, const DimVector& x);

struct SimpleReduction {
  int vertex;              // x is carried to e_vertex
  std::vector<int> word;   // sink reflections, first letter applied first
  Quiver final_quiver;     // orientation after the word; `vertex` is a sink there
};

/// Carries a preprojective real root to a simple projective by sink
/// reflections (Coxeter sweeps). Throws InvalidInput when x is not a
/// preprojective root or the step bound n*(|x|+|delta|) is exhausted.
SimpleReduction reflect_to_simple(const Quiver& q, const DimVector& x);

/// Dense integer matrix acting on column vectors.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major n x n
  std::int64_t& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  std::int64_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  static IntMatrix identity(int n);
  IntMatrix operator*(const IntMatrix& o) const;
  DimVector apply(const DimVector& x) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Column j is dim P(j): entry (i, j) counts paths j -> i.
IntMatrix cartan_matrix(const Quiver& q);
/// Matrix of the simple reflection at v.
IntMatrix reflection_matrix(const Quiver& q, int v);
/// s_{i_n} ... s_{i_1} along admissible_sink_order; dim tau M = Phi dim M.
IntMatrix coxeter_matrix(const Quiver& q);
IntMatrix coxeter_matrix_inverse(const Quiver& q);

}  // namespace tamehall
