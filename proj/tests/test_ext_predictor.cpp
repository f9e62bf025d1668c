#include <doctest.h>

#include "helpers.hpp"
#include "parind/error.hpp"
#include "parind/ext_predictor.hpp"

using namespace parind;
using testing_util::datum;

TEST_CASE("special sets") {
  auto a2 = RootDatum::of_type("A2");
  CHECK(special_sets(a2, {}).delta1 == a2.all());
  CHECK(special_sets(a2, Subset::of({0})).perp.empty());
  auto a11 = RootDatum::of_type("A1xA1");
  auto s = special_sets(a11, Subset::of({0}));
  CHECK(s.perp == Subset::of({1}));
  CHECK(s.perp1 == Subset::of({1}));
  auto w = datum("A1xA1", {1, 2});
  CHECK(special_sets(w, Subset::of({0})).perp1.empty());
  CHECK(special_sets(w, {}).delta1 == Subset::of({0}));
  CHECK_THROWS_AS(special_sets(a2, Subset::of({4})), InputError);
}

TEST_CASE("torus cohomology matches the Kunneth oracle") {
  CHECK(*torus_poincare(1, 1, {}) == std::vector<long long>{1, 2, 1});
  CHECK((*torus_poincare(2, 1, {}))[1] == 4);
  CHECK(*torus_poincare(0, 1, {}) == std::vector<long long>{1});
  for (long long z = 0; z <= 3; ++z)
    for (long long f = 1; f <= 3; ++f) {
      auto p = *torus_poincare(z, f, {});
      CHECK(p == oracle::torus_poincare(z, f));
      for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == oracle::binom(z * (f + 1), i));
    }
  TorusAssumptions nonsplit;
  nonsplit.split = false;
  CHECK(!torus_poincare(2, 1, nonsplit));
  TorusAssumptions roots;
  roots.no_pth_roots_of_unity = false;
  CHECK(!torus_poincare(2, 1, roots));
  CHECK(*torus_poincare(datum("A1", {}, 1, std::nullopt, 2), {}) == std::vector<long long>{1, 4, 6, 4, 1});
}

TEST_CASE("principal-series Ext, GL2-like datum") {
  WeylGroup W(datum("A1", {}, 1, std::nullopt, 2));
  const auto& s = W.simple(0);
  PsExtQuery q;
  q.chi = SmoothCharacter::make(W.datum(), CharMode::Formal, {0}, {{"chi", 1}});
  SymbolAction act;
  act.declare(0, "chi", {"chi_s", {0}});
  act.declare(0, "chi_s", {"chi", {0}});
  q.action = act;

  q.chi_prime = star(W, q.chi, s, act);
  q.degree = 1;
  auto p = predict_ps_ext(W, q);
  CHECK(p.verdict == Verdict::Dimension);
  CHECK(p.dimension == 1);
  REQUIRE(p.candidates.size() == 1);
  CHECK(p.candidates[0] == s);

  q.chi_prime = q.chi;
  p = predict_ps_ext(W, q);
  CHECK(p.verdict == Verdict::Dimension);
  CHECK(p.dimension == 4);

  q.chi_prime = SmoothCharacter::make(W.datum(), CharMode::Formal, {0}, {{"fresh", 1}});
  for (long long r = 0; r < 6; ++r) {
    q.degree = r;
    CHECK(predict_ps_ext(W, q).verdict == Verdict::Vanishes);
  }

  // rho is integral on A2 and chi = eps^rho is fixed by the star action, so chi is not generic
  WeylGroup a2(RootDatum::of_type("A2"));
  PsExtQuery nq;
  nq.chi = SmoothCharacter::make(a2.datum(), CharMode::Formal, {1, 1});
  nq.chi_prime = nq.chi;
  nq.degree = 3;
  auto np = predict_ps_ext(a2, nq);
  CHECK(np.verdict == Verdict::NecessaryCondition);
  CHECK(np.candidates.size() == 6);
  nq.degree = 1;
  CHECK(predict_ps_ext(a2, nq).candidates.size() == 3);

  // failed assumptions: isomorphism to H^*(Z,k) reported without evaluation
  q.chi_prime = q.chi;
  q.degree = 1;
  q.assumptions.split = false;
  p = predict_ps_ext(W, q);
  CHECK(p.verdict == Verdict::TransferredToLevi);
  CHECK(p.descriptor == "H^1(Z,k)");
  q.degree = -1;
  CHECK_THROWS_AS(predict_ps_ext(W, q), InputError);
}

namespace {

// The clause each combination must select, read off the theorem statement.
Verdict expected_clause(Subset I, Subset K, bool lc, bool rc, bool distinct, long long r, long long f, bool perp1_empty) {
  if (I == K) {
    if (r < f) return distinct ? Verdict::Vanishes : Verdict::TransferredToLevi;
    if (r == f) {
      if ((lc || rc) && distinct) return perp1_empty ? Verdict::Vanishes : Verdict::HomSum;
      return Verdict::ExactSequence;
    }
    return Verdict::Undetermined;
  }
  if (K.is_subset_of(I)) return lc && r <= f ? Verdict::TransferredToLevi : Verdict::Undetermined;
  if (I.is_subset_of(K)) return rc && r <= f ? Verdict::TransferredToLevi : Verdict::Undetermined;
  return lc && rc && r == 1 ? Verdict::Vanishes : Verdict::Undetermined;
}

}  // namespace

TEST_CASE("parabolic Ext decision table") {
  for (long long f : {1, 2, 3}) {
    WeylGroup W(datum("A1xA1", {}, f));
    const std::vector<std::pair<Subset, Subset>> relations{
        {Subset::of({0}), Subset::of({0})},  // equal
        {Subset::full(2), Subset::of({0})},  // P contains Q
        {Subset::of({0}), Subset::full(2)},  // P contained in Q
        {Subset::of({0}), Subset::of({1})},  // incomparable
        {Subset{}, Subset{}},                // equal, Borel
    };
    for (const auto& [I, K] : relations)
      for (int flags = 0; flags < 8; ++flags)
        for (long long r = 0; r <= f + 1; ++r) {
          ParabolicExtQuery q;
          q.I = I;
          q.K = K;
          q.degree = r;
          q.left_cuspidal = flags & 1;
          q.right_cuspidal = flags & 2;
          q.distinct_central = flags & 4;
          q.W = "W'";
          const bool perp1_empty = special_sets(W.datum(), I).perp1.empty();
          auto p = predict_parabolic_ext(W, q);
          CAPTURE(I.to_string());
          CAPTURE(K.to_string());
          CAPTURE(flags);
          CAPTURE(r);
          CHECK(p.verdict == expected_clause(I, K, q.left_cuspidal, q.right_cuspidal, q.distinct_central, r, f, perp1_empty));
          CHECK(!p.justification.empty());
        }
  }
}

TEST_CASE("Hom sum example on A1xA1") {
  WeylGroup W(RootDatum::of_type("A1xA1"));
  ParabolicExtQuery q;
  q.I = q.K = Subset::of({0});
  q.degree = 1;
  q.left_cuspidal = true;
  q.distinct_central = true;
  q.W = "W'";
  auto p = predict_parabolic_ext(W, q);
  REQUIRE(p.verdict == Verdict::HomSum);
  REQUIRE(p.hom_sum.size() == 1);
  CHECK(p.hom_sum[0].alpha == 1);
  CHECK(p.hom_sum[0].delta.cyclo() == IntVec{0, 1});

  ParabolicExtQuery r0;
  r0.I = r0.K = Subset::of({0});
  r0.degree = 0;
  auto t = predict_parabolic_ext(W, r0);
  CHECK(t.verdict == Verdict::TransferredToLevi);
  CHECK(t.descriptor == "Ext_M^0(V,W)");

  ParabolicExtQuery bad;
  bad.I = bad.K = Subset::of({0});
  bad.distinct_central = true;
  bad.W = bad.V;
  CHECK_THROWS_AS(predict_parabolic_ext(W, bad), InputError);
  bad.I = Subset::of({3});
  CHECK_THROWS_AS(predict_parabolic_ext(W, bad), InputError);
}

TEST_CASE("exact-sequence descriptor lists the roots outside I with d = 1") {
  WeylGroup W(datum("A2", {}, 1));
  ParabolicExtQuery q;
  q.I = q.K = Subset::of({0});
  q.degree = 1;
  auto p = predict_parabolic_ext(W, q);
  CHECK(p.verdict == Verdict::ExactSequence);
  CHECK(p.descriptor.find("delta_a2") != std::string::npos);
  CHECK(p.descriptor.find("delta_a1") == std::string::npos);
}

TEST_CASE("root-level claim") {
  for (const std::string t : {"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A1xB2"}) {
    CAPTURE(t);
    auto c = claim_check(WeylGroup(RootDatum::of_type(t)));
    CHECK(c.ok);
    const std::size_t n = RootDatum::of_type(t).rank();
    CHECK(c.checked == n * (1U << (2 * n)));
    CHECK(c.premises_held > 0);
  }
}

TEST_CASE("verdict names round-trip") {
  for (Verdict v : {Verdict::Vanishes, Verdict::Dimension, Verdict::TransferredToLevi, Verdict::HomSum,
                    Verdict::ExactSequence, Verdict::NecessaryCondition, Verdict::Undetermined})
    CHECK(verdict_from_string(to_string(v)) == v);
  CHECK_THROWS_AS(verdict_from_string("Maybe"), InputError);
}
