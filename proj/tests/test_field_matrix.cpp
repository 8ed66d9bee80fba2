#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tamehall/field.hpp"
#include "tamehall/matrix.hpp"

using namespace tamehall;

TEST_CASE("field tables satisfy the axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    CAPTURE(q);
    const Field& f = Field::get(q);
    CHECK(f.q() == q);
    CHECK(f.check_axioms());
    // primitive element generates the multiplicative group
    std::set<int> powers;
    for (int k = 0; k < q - 1; ++k) powers.insert(f.exp(k));
    CHECK(powers.size() == static_cast<std::size_t>(q - 1));
  }
}

TEST_CASE("field moduli") {
  CHECK(Field::get(4).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::get(8).modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(Field::get(9).modulus() == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(Field::get(6), InvalidInput);
  CHECK_THROWS_AS(Field::get(1), InvalidInput);
}

TEST_CASE("gaussian binomials match subspace enumeration") {
  for (int q : {2, 3, 4}) {
    const Field& f = Field::get(q);
    for (int n = 0; n <= 4; ++n)
      for (int d = 0; d <= n; ++d) {
        INFO(q << " " << n << " " << d);
        std::set<std::vector<Elem>> seen;
        std::uint64_t visited = 0;
        for_each_subspace(f, n, d, [&](const Mat& b) {
          CHECK(rref(b).reduced == b);
          CHECK(b.rows() == d);
          seen.insert(b.entries());
          ++visited;
          return true;
        });
        CHECK(visited == seen.size());
        // oracle: distinct row spaces of all rank-d matrices
        std::set<std::vector<Elem>> spaces;
        if (n * d <= 12)
          oracle::for_each_matrix(f, d, n, [&](const Mat& m) {
            if (rank(m) == d) spaces.insert(rref(m).reduced.entries());
          });
        if (n * d <= 12) CHECK(spaces.size() == seen.size());
        CHECK(gaussian_binomial(n, d, q) == seen.size());
      }
  }
}

TEST_CASE("kernel, solve and inverse") {
  std::mt19937 rng(7);
  for (int q : {2, 3, 4, 5, 9}) {
    const Field& f = Field::get(q);
    for (int trial = 0; trial < 60; ++trial) {
      const int r = 1 + rng() % 5, c = 1 + rng() % 5;
      Mat m(f, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rng() % q;
      const Mat k = kernel_basis(m);
      CHECK(k.rows() == c - rank(m));
      if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
      CHECK(rank(m) == rank(m.transpose()));
      Vec x(c);
      for (auto& e : x) e = rng() % q;
      const Vec b = m.apply(x);
      const auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == b);
      if (r == c && invertible(m)) CHECK(m * inverse(m) == Mat::identity(f, r));
    }
  }
}
