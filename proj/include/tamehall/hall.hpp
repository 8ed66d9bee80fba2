#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamehall/rep.hpp"

namespace tamehall {

/// The two decomposition symbols used here: the indecomposable of a real
/// root, or a simple homogeneous module of dimension delta.
struct HallSymbol {
  enum class Kind { RealRoot, HomogeneousDelta };
  Kind kind = Kind::RealRoot;
  DimVector root;  // RealRoot only
  std::string str() const;
};

using Sample = std::pair<int, std::uint64_t>;  // (q, count)

struct HallPolynomial {
  std::vector<std::int64_t> coeffs;  // ascending degree, no trailing zeros
  std::vector<Sample> samples;
  std::vector<Sample> verified;

  int degree() const noexcept { return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1; }
  bool monic() const noexcept { return !coeffs.empty() && coeffs.back() == 1; }
  std::int64_t eval(std::int64_t q) const;
  /// "q^2 - 5q + 7"
  std::string str() const;
};

/// Observer for long computations; receives human-readable status lines.
using Progress = std::function<void(const std::string&)>;

/// #{U <= M : U ~ N2, M/U ~ N1}.
std::uint64_t hall_number(const Rep& m, const Rep& n1, const Rep& n2);

/// Same number through Riedtmann's formula
/// |Ext(N1,N2)_M| |Aut M| / (|Aut N1| |Aut N2| |Hom(N1,N2)|), counting
/// extension classes with middle term M and automorphisms by enumeration.
std::uint64_t hall_number_riedtmann(const Rep& m, const Rep& n1, const Rep& n2);

/// Number of invertible endomorphisms.
std::uint64_t automorphism_count(const Rep& m);

/// Lines L in R_i with End(R/L) = k, for R of dimension delta on a quiver
/// whose only sink is i. `i_expected` fixes the quotient's dimension.
std::uint64_t hall_number_sink_fast(const Rep& r, int sink, const Rep& i_expected);

/// Fields sampled for f_m: the first min(m+1, 6) of 3,4,5,7,8,9.
std::vector<int> sampling_fields(int m);
/// 11, and 13 when m <= 4.
std::vector<int> verification_fields(int m);

/// Fast-path counts on the one-sink quiver, one homogeneous module per field.
std::vector<Sample> sample_counts(QuiverPtr qi, int sink, const std::vector<int>& fields, const Progress& progress = {});

/// Exact interpolation through all points; throws VerificationFailure for
/// non-integer coefficients or degree above the cap.
HallPolynomial interpolate(const std::vector<Sample>& points, int degree_cap);

/// f_m for m = delta_sink on a quiver whose only sink is `sink`.
HallPolynomial hall_poly_f(QuiverPtr qi, int sink, const Progress& progress = {});

/// Polynomial counting homogeneous R over (delta - x, x) for a preprojective
/// root x; reduces to hall_poly_f on the quiver oriented toward the vertex
/// reached by reflect_to_simple.
HallPolynomial hall_poly_for_root(QuiverPtr q, const DimVector& x, const Progress& progress = {});

/// The s in [0, m) with f = (X^m - X^s)/(X - 1), if any.
std::optional<int> gr_form_check(const std::vector<std::int64_t>& coeffs, int m);

/// Monic irreducible polynomials of degree l over GF(q): (1/l) sum_{d|l} mu(l/d) q^d.
std::uint64_t necklace_count(int q, int l);

/// Reference coefficients of f_1..f_6, ascending degree.
const std::vector<std::vector<std::int64_t>>& golden_f_table();

/// {"symbol": {"defect": m}, "coeffs", "samples", "verified_at"}.
std::string polynomial_json(const HallPolynomial& f, int m);

}  // namespace tamehall
