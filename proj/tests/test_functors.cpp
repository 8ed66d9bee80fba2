#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tamehall/functors.hpp"

using namespace tamehall;

namespace {
QuiverPtr preset(const char* name) { return std::make_shared<const Quiver>(preset_quiver(name)); }
}  // namespace

TEST_CASE("sink then source reflection is the identity on modules without the simple summand") {
  std::mt19937 rng(21);
  const Field& f = Field::get(3);
  for (const char* name : {"kronecker", "dtilde:4", "e6tilde"}) {
    const auto q = preset(name);
    const int s = preset_sink(name);
    const DimVector delta = radical_delta(*q);
    for (int trial = 0; trial < 10; ++trial) {
      const Rep m = oracle::random_rep(q, f, delta, rng);
      const Rep r = reflect_plus(m, s);
      CHECK(r.quiver() == sigma_reverse(*q, s));
      CHECK(r.quiver().is_source(s));
      const Rep back = reflect_minus(r, s);
      // the simple at s splits off iff the incoming maps are not jointly onto
      Mat h(f, m.dim(s), 0);
      for (int a : q->in_arrows(s)) h = Mat::hstack(h, m.map(a));
      if (rank(h) == m.dim(s)) CHECK(iso(back, m));
      else CHECK(back.dim(s) == rank(h));
    }
  }
  CHECK_THROWS_AS(reflect_plus(simple(preset("kronecker"), f, 0), 0), QuiverError);
}

TEST_CASE("preprojective and preinjective modules") {
  for (int qq : {2, 3}) {
    const Field& f = Field::get(qq);
    for (const char* name : {"kronecker", "dtilde:4", "dtilde:5", "e6tilde"}) {
      const auto q = preset(name);
      const DimVector delta = radical_delta(*q);
      const IntMatrix phi = coxeter_matrix(*q);
      for (const auto& root : positive_real_roots(*q, delta * 2)) {
        if (*root.defect == 0) continue;
        INFO(name << " " << root.root.str() << " q=" << qq);
        const Rep m = build_indecomposable(q, f, root.root);
        CHECK(m.dims() == root.root);
        CHECK(is_brick(m));
        CHECK(ext1_dim(m, m) == 0);
        if (m.total_dim() <= 3) CHECK(oracle::count_morphisms(m, m) == static_cast<std::uint64_t>(qq));
        const Rep t = tau(m);
        if (!t.is_zero()) {
          CHECK(t.dims() == phi.apply(m.dims()));
          CHECK(iso(tau_inv(t), m));
          CHECK(classify_indec(t) == classify_indec(m));
        }
      }
    }
  }
}

TEST_CASE("dynkin indecomposables are bricks") {
  const Field& f = Field::get(2);
  for (const char* name : {"a:4", "d:5", "e:6"}) {
    const auto q = preset(name);
    int count = 0;
    for (const auto& root : positive_real_roots(*q, DimVector(std::vector<int>(q->vertex_count(), 3)))) {
      const Rep m = build_indecomposable(q, f, root.root);
      CHECK(m.dims() == root.root);
      CHECK(is_brick(m));
      ++count;
    }
    CHECK(count == (std::string(name) == "a:4" ? 10 : std::string(name) == "d:5" ? 20 : 36));
  }
}

TEST_CASE("regular roots are rejected") {
  const auto q = preset("dtilde:4");
  CHECK_THROWS_AS(build_indecomposable(q, Field::get(2), DimVector{1, 1, 0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(build_preprojective(q, Field::get(2), DimVector{0, 0, 0, 1, 2}), InvalidInput);
}
