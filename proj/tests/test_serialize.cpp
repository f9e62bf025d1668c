#include <doctest.h>

#include "helpers.hpp"
#include "parind/error.hpp"
#include "parind/serialize.hpp"

using namespace parind;

TEST_CASE("datum specs in JSON and TOML") {
  auto j = parse_datum_spec(R"({"cartan": [[2,-1],[-1,2]], "d": [1,1], "z_dim": 2, "f": 1, "p": 5})");
  REQUIRE(j.cartan);
  CHECK(*j.cartan == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(j.z_dim == 2);
  CHECK(j.p == 5);
  auto t = parse_datum_spec("# weighted B2\ntype = \"B2\"\nd = [1, 2]\nf = 2\n");
  CHECK(t.type == "B2");
  CHECK(t.d == std::vector<long long>{1, 2});
  CHECK(t.f == 2);
  CHECK(RootDatum::build(t).label() == "B2");
  CHECK_THROWS_AS(parse_datum_spec(""), InputError);
  CHECK_THROWS_AS(parse_datum_spec("{\"type\": \"A2\""), InputError);
  CHECK_THROWS_AS(parse_datum_spec("{\"type\": \"A2\", \"colour\": 1}"), InputError);
  CHECK_THROWS_AS(parse_datum_spec("type \"A2\""), InputError);
  CHECK_THROWS_AS(parse_datum_spec("{\"type\": 3}"), InputError);
  CHECK_THROWS_AS(parse_datum_spec("{\"cartan\": [[2,-1],[-1]]}"), InputError);
}

TEST_CASE("datum report") {
  auto rd = RootDatum::of_type("G2");
  Json j = datum_to_json(rd);
  CHECK(j["rank"] == 2);
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["p"].is_null());
  // the report re-parses into an equivalent datum
  Json spec = {{"cartan", j["cartan"]}, {"d", j["d"]}, {"z_dim", j["z_dim"]}, {"f", j["f"]}};
  auto again = RootDatum::build(datum_spec_from_json(spec));
  CHECK(again.positive_roots() == rd.positive_roots());
}

TEST_CASE("subsets, Weyl elements and characters") {
  WeylGroup W(testing_util::datum("A2", {}, 1, 7));
  CHECK(to_json(Subset::of({0, 2})).dump() == "[1,3]");
  CHECK(subset_from_json(Json::parse("[2]"), 2) == Subset::of({1}));
  CHECK_THROWS_AS(subset_from_json(Json::parse("[3]"), 2), InputError);
  CHECK_THROWS_AS(subset_from_json(Json::parse("\"a1\""), 2), InputError);

  std::vector<int> s2s1{1, 0};
  const auto& w = W.from_word(s2s1);
  CHECK(to_json(w).dump() == "[2,1]");
  CHECK(&weyl_from_json(W, to_json(w)) == &w);
  CHECK_THROWS_AS(weyl_from_json(W, Json::parse("[4]")), InputError);

  auto chi = SmoothCharacter::make(W.datum(), CharMode::Concrete, {2, 9}, {{"psi", -1}});
  CHECK(to_json(chi).dump() == R"({"cyclo":[2,3],"sym":{"psi":-1},"mode":"concrete"})");
  CHECK(chars_equal(character_from_json(W.datum(), to_json(chi)), chi));
  CHECK(character_from_json(W.datum(), Json::parse("{}")).is_trivial());
  CHECK_THROWS_AS(character_from_json(W.datum(), Json::parse(R"({"mode":"odd"})")), InputError);
}

TEST_CASE("symbol actions") {
  WeylGroup W(RootDatum::of_type("A1"));
  auto a = symbol_action_from_json(W.datum(), Json::parse(R"({"a1": {"x": {"to": "y"}, "y": {"to": "x", "shift": [0]}}})"));
  CHECK_NOTHROW(a.validate(W));
  CHECK(a.table().at(0).at("x").to == "y");
  CHECK_THROWS_AS(symbol_action_from_json(W.datum(), Json::parse(R"({"b1": {}})")), InputError);
  CHECK_THROWS_AS(symbol_action_from_json(W.datum(), Json::parse(R"({"a2": {}})")), InputError);
}

TEST_CASE("filtration round trip") {
  WeylGroup W(testing_util::datum("B3", {1, 1, 2}, 2));
  for (Subset I : subsets_of(W.datum().all()))
    for (Subset K : subsets_of(W.datum().all())) {
      Filtration f = graded_pieces(W, I, K, CharMode::Formal);
      Json j = to_json(f);
      Filtration g = filtration_from_json(W, Json::parse(j.dump()));
      REQUIRE(g.groups.size() == f.groups.size());
      for (std::size_t h = 0; h < f.groups.size(); ++h) {
        REQUIRE(g.groups[h].size() == f.groups[h].size());
        for (std::size_t k = 0; k < f.groups[h].size(); ++k) {
          const auto &a = f.groups[h][k], &b = g.groups[h][k];
          CHECK(a.w == b.w);
          CHECK(a.shift == b.shift);
          CHECK(chars_equal(a.delta, b.delta));
          CHECK(a.coinv_levi == b.coinv_levi);
          CHECK(a.ind_levi == b.ind_levi);
          CHECK(a.height == b.height);
        }
      }
      CHECK(to_json(g) == j);
    }
}

TEST_CASE("coinvariant tables and predictions round trip") {
  WeylGroup W(RootDatum::of_type("A3"));
  for (Subset I : subsets_of(W.datum().all()))
    for (Subset K : subsets_of(W.datum().all())) {
      auto st = steinberg_coinvariants(W, I, K);
      CHECK(to_json(coinvariants_from_json(W, Json::parse(to_json(st).dump()))) == to_json(st));
      auto ps = ps_coinvariants(W, I, K, SmoothCharacter::make(W.datum(), CharMode::Formal, {1, 2, 3}, {{"x", 1}}));
      CHECK(to_json(coinvariants_from_json(W, Json::parse(to_json(ps).dump()))) == to_json(ps));
    }
  WeylGroup A(RootDatum::of_type("A1xA1"));
  ParabolicExtQuery q;
  q.I = q.K = Subset::of({0});
  q.degree = 1;
  q.right_cuspidal = true;
  q.distinct_central = true;
  q.W = "W'";
  auto p = predict_parabolic_ext(A, q);
  CHECK(to_json(prediction_from_json(A, to_json(p))) == to_json(p));
  PsExtQuery pq;
  pq.chi = pq.chi_prime = SmoothCharacter::make(A.datum(), CharMode::Formal, {1, 1});
  pq.degree = 2;
  auto pp = predict_ps_ext(A, pq);
  CHECK(to_json(prediction_from_json(A, to_json(pp))) == to_json(pp));
}

TEST_CASE("complex dump carries the differentials") {
  auto rd = RootDatum::of_type("A2");
  auto cx = build_complex(rd, {.I0 = {}, .I1 = rd.all(), .I = {}, .K = rd.all(), .order = {}});
  Json j = to_json(cx);
  CHECK(j["terms"].size() == 3);
  REQUIRE(j["differentials"].size() == 2);
  CHECK(j["differentials"][0]["from"] == -2);
  CHECK(j["differentials"][0]["matrix"].size() == 4);
  CHECK(j["differentials"][0]["matrix"][0].size() == 1);
}
