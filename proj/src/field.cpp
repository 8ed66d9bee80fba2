#include "tamehall/field.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "tamehall/error.hpp"

namespace tamehall {

namespace {

using Poly = std::vector<int>;  // ascending coefficients mod p

Poly digits(int label, int p, int k) {
  Poly out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = label % p;
    label /= p;
  }
  return out;
}

int label_of(const Poly& c, int p) {
  int label = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) label = label * p + c[i];
  return label;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
    const int c = a[d] % p;
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) a[d - dm + i] = ((a[d - dm + i] - c * m[i]) % p + p) % p;
  }
  a.resize(std::min<std::size_t>(a.size(), dm));
  for (auto& x : a) x = ((x % p) + p) % p;
  return a;
}

bool poly_is_zero(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Monic m of degree k is irreducible iff no monic polynomial of degree 1..k/2 divides it.
bool irreducible(const Poly& m, int p) {
  const int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly f = digits(low, p, d);
      f.push_back(1);
      if (poly_is_zero(poly_mod(m, f, p))) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    Poly m = digits(low, p, k);
    m.push_back(1);
    if (irreducible(m, p)) return m;
  }
  throw InvalidInput("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

bool is_prime_power(int q, int* p, int* k) noexcept {
  if (q < 2) return false;
  int base = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) base = q;
  int exponent = 0;
  int rest = q;
  while (rest % base == 0) {
    rest /= base;
    ++exponent;
  }
  if (rest != 1) return false;
  if (p) *p = base;
  if (k) *k = exponent;
  return true;
}

Field::Field(int q) : q_(q) {
  if (q > 256 || !is_prime_power(q, &p_, &degree_))
    throw InvalidInput("field size " + std::to_string(q) + " is not a prime power in [2, 256]");

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  if (degree_ == 1) {
    for (int a = 0; a < q; ++a) {
      neg_[a] = static_cast<Elem>((q - a) % q);
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<Elem>((a + b) % q);
        mul_[a * q + b] = static_cast<Elem>((a * b) % q);
      }
    }
  } else {
    modulus_ = smallest_irreducible(p_, degree_);
    std::vector<Poly> elems(q);
    for (int a = 0; a < q; ++a) elems[a] = digits(a, p_, degree_);
    for (int a = 0; a < q; ++a) {
      Poly n(degree_);
      for (int i = 0; i < degree_; ++i) n[i] = (p_ - elems[a][i]) % p_;
      neg_[a] = static_cast<Elem>(label_of(n, p_));
      for (int b = 0; b < q; ++b) {
        Poly s(degree_);
        for (int i = 0; i < degree_; ++i) s[i] = (elems[a][i] + elems[b][i]) % p_;
        add_[a * q + b] = static_cast<Elem>(label_of(s, p_));
        Poly prod(2 * degree_ - 1, 0);
        for (int i = 0; i < degree_; ++i)
          for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p_;
        Poly r = poly_mod(prod, modulus_, p_);
        r.resize(degree_, 0);
        mul_[a * q + b] = static_cast<Elem>(label_of(r, p_));
      }
    }
  }

  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);

  // Smallest-label generator of the multiplicative group.
  log_.assign(q, -1);
  exp_.assign(q - 1, 0);
  for (int g = 1; g < q; ++g) {
    int order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = mul(x, static_cast<Elem>(g));
      ++order;
    }
    if (order == q - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  Elem x = 1;
  for (int e = 0; e < q - 1; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = mul(x, primitive_);
  }
}

Elem Field::exp(int k) const noexcept {
  const int m = q_ - 1;
  return exp_[((k % m) + m) % m];
}

bool Field::check_axioms() const {
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
    if (add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv(a)) != 1) return false;
    if (a != 0 && exp(log(a)) != a) return false;
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

const Field& Field::get(int q) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<Field>, 257> cache;
  if (q < 2 || q > 256)
    throw InvalidInput("field size " + std::to_string(q) + " is not a prime power in [2, 256]");
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot.reset(new Field(q));
  return *slot;
}

}  // namespace tamehall
