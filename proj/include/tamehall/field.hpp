#pragma once

#include <cstdint>
#include <vector>

namespace tamehall {

/// A field element, identified by its label 0..q-1.
///
/// For q = p the label is the residue. For q = p^k the label of
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} (mod the field's modulus) is
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
using Elem = std::uint8_t;

/// Finite field GF(q), q <= 256, backed by full addition and multiplication
/// tables plus discrete log / antilog tables for a primitive element.
///
/// The modulus for q = p^k (k > 1) is the monic irreducible polynomial of
/// degree k with the smallest label, which gives x^2+x+1 for GF(4),
/// x^3+x+1 for GF(8) and x^2+1 for GF(9).
class Field {
 public:
  /// Shared instance for q; throws InvalidInput unless q is a prime power in [2, 256].
  static const Field& get(int q);

  int q() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }

  /// Coefficients of the modulus, ascending, leading 1 included. Empty for prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  /// Inverse of a nonzero element.
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem div(Elem a, Elem b) const noexcept { return mul(a, inv_[b]); }

  /// Row a of the multiplication table: mul_row(a)[b] == a*b.
  const Elem* mul_row(Elem a) const noexcept { return &mul_[a * q_]; }
  const Elem* add_row(Elem a) const noexcept { return &add_[a * q_]; }

  Elem primitive() const noexcept { return primitive_; }
  /// Discrete log base primitive() of a nonzero element, in [0, q-1).
  int log(Elem a) const noexcept { return log_[a]; }
  Elem exp(int k) const noexcept;

  /// Exhaustive check of the field axioms on the tables (O(q^3)).
  bool check_axioms() const;

 private:
  explicit Field(int q);

  int q_;
  int p_;
  int degree_;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<int> log_;
  std::vector<Elem> exp_;
  Elem primitive_ = 1;
};

/// True iff q = p^k with p prime and k >= 1.
bool is_prime_power(int q, int* p = nullptr, int* k = nullptr) noexcept;

}  // namespace tamehall
