#include <doctest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "parind/error.hpp"
#include "parind/root_datum.hpp"

using namespace parind;
using testing_util::cartan_of;
using testing_util::datum;

TEST_CASE("positive roots of small types") {
  CHECK(RootDatum::of_type("A1").positive_roots() == std::vector<Root>{{1}});
  auto a2 = RootDatum::of_type("A2");
  CHECK(std::set<Root>(a2.positive_roots().begin(), a2.positive_roots().end()) == std::set<Root>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(RootDatum::of_type("G2").positive_roots().size() == 6);
  CHECK(RootDatum::of_type("B2").positive_roots().size() == 4);
  CHECK(RootDatum::of_type("B3").positive_roots().size() == 9);
  CHECK(RootDatum::of_type("C3").positive_roots().size() == 9);
  CHECK(RootDatum::of_type("D4").positive_roots().size() == 12);
  CHECK(RootDatum::of_type("F4").positive_roots().size() == 24);
  CHECK(RootDatum::of_type("E6").positive_roots().size() == 36);
  CHECK(RootDatum::of_type("E8").positive_roots().size() == 120);
  CHECK(RootDatum::of_type("A1xG2").positive_roots().size() == 7);
}

TEST_CASE("positive roots are ordered by height with simple roots first") {
  auto b3 = RootDatum::of_type("B3");
  const auto& roots = b3.positive_roots();
  for (int i = 0; i < 3; ++i) CHECK(roots[i] == b3.simple_root(i));
  auto height = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0LL); };
  for (std::size_t k = 1; k < roots.size(); ++k) CHECK(height(roots[k - 1]) <= height(roots[k]));
}

TEST_CASE("reflection closure matches the independent oracle") {
  for (const std::string t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4", "A1xB2", "B4", "C4"}) {
    CAPTURE(t);
    auto rd = RootDatum::of_type(t);
    auto oracle_roots = oracle::root_closure(cartan_of(rd), {});
    std::set<Root> pos;
    for (const auto& [r, d] : oracle_roots) {
      CHECK(rd.is_root(r));
      if (oracle::positive(r)) pos.insert(r);
      // exactly one of r, -r is positive
      CHECK(RootDatum::is_positive(r) != RootDatum::is_positive(oracle::neg(r)));
    }
    CHECK(pos == std::set<Root>(rd.positive_roots().begin(), rd.positive_roots().end()));
  }
}

TEST_CASE("weights extend Weyl-invariantly") {
  auto b3 = datum("B3", {1, 1, 2});
  auto oracle_roots = oracle::root_closure(cartan_of(b3), b3.weights());
  for (const auto& [r, d] : oracle_roots) CHECK(b3.d(r) == d);
  auto g2 = datum("G2", {2, 1});
  for (const auto& [r, d] : oracle::root_closure(cartan_of(g2), g2.weights())) CHECK(g2.d(r) == d);
  CHECK_THROWS_AS(datum("A2", {1, 2}), InputError);
  CHECK_THROWS_AS(datum("B3", {1, 2, 2}), InputError);
  CHECK_NOTHROW(datum("A1xA1", {1, 2}));
}

TEST_CASE("reflections and pairings") {
  auto a1 = RootDatum::of_type("A1");
  CHECK(a1.reflect(0, {1}) == IntVec{-1});
  CHECK(a1.pairing({1}, 0) == 2);
  CHECK(a1.pairing({0}, 0) == 0);
  auto a2 = RootDatum::of_type("A2");
  CHECK(a2.reflect(0, {0, 1}) == IntVec{1, 1});
  CHECK(a2.reflect(0, {1, 1}) == IntVec{0, 1});
  CHECK(a2.pairing({1, 0}, 1) == -1);
  // involution and permutation of the other positive roots
  for (const std::string t : {"B2", "G2", "B3"}) {
    auto rd = RootDatum::of_type(t);
    for (int i = 0; i < rd.rank(); ++i)
      for (const auto& r : rd.positive_roots()) {
        CHECK(rd.reflect(i, rd.reflect(i, r)) == r);
        if (r != rd.simple_root(i)) CHECK(RootDatum::is_positive(rd.reflect(i, r)));
      }
  }
}

TEST_CASE("non-simply-laced conventions") {
  // B2: alpha_2 short, so s_2(alpha_1) = alpha_1 + 2 alpha_2
  CHECK(RootDatum::of_type("B2").reflect(1, {1, 0}) == IntVec{1, 2});
  // C2: alpha_2 long, so s_1(alpha_2) = 2 alpha_1 + alpha_2
  CHECK(RootDatum::of_type("C2").reflect(0, {0, 1}) == IntVec{2, 1});
  // G2: alpha_1 short, highest root 3 alpha_1 + 2 alpha_2
  CHECK(RootDatum::of_type("G2").is_root({3, 2}));
}

TEST_CASE("explicit Cartan matrix and validation") {
  DatumSpec spec;
  spec.cartan = IntMatrix{{2, -1}, {-1, 2}};
  spec.d = {1, 1};
  spec.z_dim = 2;
  spec.f = 1;
  spec.p = 5;
  auto rd = RootDatum::build(spec);
  CHECK(rd.positive_roots().size() == 3);
  CHECK(rd.p() == 5);

  DatumSpec affine;
  affine.cartan = IntMatrix{{2, -2}, {-2, 2}};
  CHECK_THROWS_AS(RootDatum::build(affine), InputError);
  DatumSpec bad_diag;
  bad_diag.cartan = IntMatrix{{1, 0}, {0, 2}};
  CHECK_THROWS_AS(RootDatum::build(bad_diag), InputError);
  DatumSpec asym;
  asym.cartan = IntMatrix{{2, -1}, {0, 2}};
  CHECK_THROWS_AS(RootDatum::build(asym), InputError);
  CHECK_THROWS_AS(datum("A2", {}, 0), InputError);
  CHECK_THROWS_AS(datum("A2", {}, 1, 4), InputError);
  CHECK_THROWS_AS(datum("A2", {}, 1, 2), InputError);
  CHECK_THROWS_AS(datum("A2", {1}), InputError);
  CHECK_THROWS_AS(datum("A2", {0, 0}), InputError);
  CHECK_THROWS_AS(RootDatum::of_type("Q3"), InputError);
  CHECK_THROWS_AS(RootDatum::of_type("G3"), InputError);
}

TEST_CASE("defaults") {
  auto rd = RootDatum::of_type("B3");
  CHECK(rd.z_dim() == 3);
  CHECK(rd.f() == 1);
  CHECK(!rd.p());
  CHECK(rd.weights() == std::vector<long long>{1, 1, 1});
  CHECK(rd.levi_roots(Subset::of({0, 1})).size() == 6);
  CHECK(rd.levi_positive_roots(Subset{}).empty());
}
