#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "parind/error.hpp"
#include "parind/jh_lattice.hpp"

using namespace parind;

namespace {

std::vector<MultFreeModule> upward_closed_families(Subset K) {
  auto subsets = subsets_of(K);
  std::vector<MultFreeModule> out;
  for (std::uint32_t mask = 0; mask < (1U << subsets.size()); ++mask) {
    std::vector<Subset> c;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if ((mask >> i) & 1U) c.push_back(subsets[i]);
    MultFreeModule m(K, c);
    if (m.upward_closed()) out.push_back(m);
  }
  return out;
}

std::size_t dims_at(const CoefficientComplex& cx, int n) { return cx.term(n).basis.size(); }

}  // namespace

TEST_CASE("JH sets of parabolic inductions") {
  const Subset K = Subset::full(2);
  CHECK(jh_of_pind(K, K).size() == 1);
  CHECK(jh_of_pind(Subset::full(1), {}).constituents() == std::vector<Subset>{Subset{}, Subset::full(1)});
  CHECK(jh_of_pind(K, {}).size() == 4);
  CHECK(jh_of_pind(Subset::full(3), Subset::of({1})).size() == 4);
  CHECK(jh_of_pind(K, {}).upward_closed());
  CHECK_THROWS_AS(jh_of_pind(Subset::of({0}), Subset::of({1})), InputError);
}

TEST_CASE("lattice operations") {
  const Subset K = Subset::full(2);
  auto p1 = jh_of_pind(K, Subset::of({0}));
  auto p2 = jh_of_pind(K, Subset::of({1}));
  CHECK(lattice_intersect(p1, p1) == p1);
  CHECK(lattice_intersect(p1, p2) == jh_of_pind(K, K));
  CHECK(lattice_sum(p1, p2).size() == 3);
  CHECK_THROWS_AS(lattice_sum(p1, jh_of_pind(Subset::full(3), {})), InputError);

  // distributivity over all upward-closed families on two roots
  auto fams = upward_closed_families(K);
  CHECK(fams.size() == 6);
  for (const auto& a : fams)
    for (const auto& b : fams) {
      CHECK(lattice_sum(a, b).upward_closed());
      CHECK(lattice_intersect(a, b).upward_closed());
      for (const auto& c : fams) {
        CHECK(lattice_intersect(a, lattice_sum(b, c)) == lattice_sum(lattice_intersect(a, b), lattice_intersect(a, c)));
        CHECK(lattice_sum(a, lattice_intersect(b, c)) == lattice_intersect(lattice_sum(a, b), lattice_sum(a, c)));
      }
    }
  // and on a random sample over three roots
  auto fams3 = upward_closed_families(Subset::full(3));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, fams3.size() - 1);
  for (int t = 0; t < 50; ++t) {
    const auto &a = fams3[pick(rng)], &b = fams3[pick(rng)], &c = fams3[pick(rng)];
    CHECK(lattice_intersect(a, lattice_sum(b, c)) == lattice_sum(lattice_intersect(a, b), lattice_intersect(a, c)));
  }
}

TEST_CASE("small coefficient complexes") {
  auto a1 = RootDatum::of_type("A1");
  const Subset D1 = a1.all();
  auto triv = build_complex(a1, {.I0 = D1, .I1 = D1, .I = {}, .K = D1, .order = {}});
  CHECK(triv.min_degree() == 0);

  auto cx1 = build_complex(a1, {.I0 = {}, .I1 = D1, .I = {}, .K = D1, .order = {}});
  CHECK(cx1.min_degree() == -1);
  CHECK(dims_at(cx1, -1) == 1);
  CHECK(dims_at(cx1, 0) == 2);
  auto h1 = cohomology(cx1);
  CHECK(h1[0].degree == 0);
  CHECK(h1[0].multiplicity == std::map<Subset, std::size_t>{{Subset{}, 1}});
  CHECK(h1[1].dimension == 0);
  CHECK(h0_label(cx1).constituents() == std::vector<Subset>{Subset{}});

  auto a2 = RootDatum::of_type("A2");
  const Subset D2 = a2.all();
  auto cx2 = build_complex(a2, {.I0 = {}, .I1 = D2, .I = {}, .K = D2, .order = {}});
  CHECK(dims_at(cx2, -2) == 1);
  CHECK(dims_at(cx2, -1) == 4);
  CHECK(dims_at(cx2, 0) == 4);
  CHECK(cx2.squares_to_zero());
  auto h2 = cohomology(cx2);
  CHECK(h2[0].multiplicity == std::map<Subset, std::size_t>{{Subset{}, 1}});
  CHECK(h2[1].dimension == 0);
  CHECK(h2[2].dimension == 0);

  // H^0(C_{D,D}(I,I)) is the Steinberg Sp_{P_I}
  for (Subset I : subsets_of(D2)) {
    auto cx = build_complex(a2, {.I0 = I, .I1 = D2, .I = I, .K = D2, .order = {}});
    CHECK(h0_label(cx).constituents() == std::vector<Subset>{I});
  }
}

TEST_CASE("complex parameter validation") {
  auto a2 = RootDatum::of_type("A2");
  CHECK_THROWS_AS(build_complex(a2, {.I0 = {}, .I1 = Subset::of({0}), .I = Subset::of({1}), .K = {}, .order = {}}),
                  InputError);
  CHECK_THROWS_AS(build_complex(a2, {.I0 = Subset::of({2}), .I1 = {}, .I = {}, .K = {}, .order = {}}), InputError);
  CHECK_THROWS_AS(build_complex(a2, {.I0 = {}, .I1 = a2.all(), .I = {}, .K = {}, .order = {0, 0}}), InputError);
}

TEST_CASE("complexes agree with the Koszul oracle") {
  for (const std::string t : {"A1", "A2", "B2", "A3", "B3"}) {
    CAPTURE(t);
    auto rd = RootDatum::of_type(t);
    for (Subset I1 : subsets_of(rd.all()))
      for (Subset I0 : subsets_of(rd.all()))
        for (Subset I : subsets_of(I1))
          for (Subset K : subsets_of(I1)) {
            auto cx = build_complex(rd, {.I0 = I0, .I1 = I1, .I = I, .K = K, .order = {}});
            auto shape = oracle::complex_shape(I0.bits(), I1.bits(), I.bits(), K.bits());
            CHECK(cx.squares_to_zero());
            for (int n = 0; n >= cx.min_degree(); --n) {
              CHECK(static_cast<long long>(dims_at(cx, n)) == shape.term_dim[n]);
              CHECK(cx.term(n).summands.size() == static_cast<std::size_t>(oracle::binom((I1 - I0).size(), -n)));
            }
            auto groups = cohomology(cx);
            std::set<std::uint32_t> h0;
            for (const auto& g : groups) {
              if (g.degree < 0) CHECK(g.dimension == 0);
              if (g.degree == 0)
                for (const auto& [T, m] : g.multiplicity) {
                  CHECK(m == 1);
                  h0.insert(T.bits());
                }
            }
            CHECK(h0 == shape.h0);
            std::set<std::uint32_t> label;
            const auto h0_module = h0_label(cx);
            for (Subset T : h0_module.constituents()) label.insert(T.bits());
            CHECK(label == shape.h0);
          }
  }
}

TEST_CASE("cohomology does not depend on the total order") {
  for (const std::string t : {"A2", "B2", "A3"}) {
    auto rd = RootDatum::of_type(t);
    std::vector<int> base(rd.rank());
    std::iota(base.begin(), base.end(), 0);
    for (Subset I1 : subsets_of(rd.all()))
      for (Subset I : subsets_of(I1))
        for (Subset K : subsets_of(I1)) {
          auto ref = cohomology(build_complex(rd, {.I0 = {}, .I1 = I1, .I = I, .K = K, .order = {}}));
          std::vector<int> order = base;
          do {
            auto cx = build_complex(rd, {.I0 = {}, .I1 = I1, .I = I, .K = K, .order = order});
            CHECK(cx.squares_to_zero());
            auto h = cohomology(cx);
            REQUIRE(h.size() == ref.size());
            for (std::size_t k = 0; k < h.size(); ++k) CHECK(h[k].multiplicity == ref[k].multiplicity);
          } while (std::next_permutation(order.begin(), order.end()));
        }
  }
}

TEST_CASE("sign convention") {
  ComplexParams p{.I0 = Subset::of({0}), .I1 = Subset::full(3), .I = {}, .K = {}, .order = {}};
  // j0 = a3 with I0 = {a1}, J\{j0} = {a2}: two predecessors
  CHECK(complex_sign(p, Subset::of({1}), 2) == 1);
  CHECK(complex_sign(p, Subset{}, 2) == -1);
  CHECK(complex_sign(p, Subset{}, 0) == 1);
  p.order = {2, 1, 0};
  CHECK(complex_sign(p, Subset{}, 2) == 1);
}
