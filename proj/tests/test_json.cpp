#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scf/json_io.hpp"

using namespace scf;
using nlohmann::json;

TEST_CASE("group tags round-trip with their documented shape") {
  const json j = GroupTag::so_even(2);
  CHECK(j == json{{"family", "EvenOrthogonalD"}, {"rank", 2}});
  CHECK(j.get<GroupTag>() == GroupTag::so_even(2));

  const json o7 = GroupTag::orthogonal(7);
  CHECK(o7 == json{{"family", "FullOrthogonal"}, {"rank", 3}, {"size", 7}});
  CHECK(o7.get<GroupTag>() == GroupTag::orthogonal(7));

  const json bad_family = {{"family", "Sporadic"}, {"rank", 1}};
  CHECK_THROWS_AS(bad_family.get<GroupTag>(), invalid_input);
  const json no_rank = {{"family", "UnitaryA"}};
  CHECK_THROWS_AS(no_rank.get<GroupTag>(), invalid_input);
}

TEST_CASE("torus elements serialize as turn strings plus a tag") {
  const TorusElement x({Turn(1, 5), Turn()}, GroupTag::so_even(2));
  const json j = x;
  CHECK(j == json{{"turns", {"1/5", "0/1"}},
                  {"group", {{"family", "EvenOrthogonalD"}, {"rank", 2}}}});
  CHECK(torus_element_from_json(j) == x);

  // parses shorthand integers for whole turns
  const json loose = {{"turns", {"1/5", "0"}},
                      {"group", {{"family", "EvenOrthogonalD"}, {"rank", 2}}}};
  CHECK(torus_element_from_json(loose) == x);

  const json bad_turn = {{"turns", {"1/0"}}, {"group", {{"family", "UnitaryA"}, {"rank", 1}}}};
  CHECK_THROWS_AS(torus_element_from_json(bad_turn), invalid_input);
  const json bad_shape = {{"turns", "1/5"}};
  CHECK_THROWS_AS(torus_element_from_json(bad_shape), invalid_input);
}

TEST_CASE("canonical forms carry the chirality flag only when it exists") {
  const json with = canonical_form(TorusElement({Turn(2, 3), Turn(1, 4)}, GroupTag::so_even(2)));
  CHECK(with.at("chirality") == "odd");
  const json without = canonical_form(TorusElement({Turn(1, 3), Turn()}, GroupTag::so_even(2)));
  CHECK_FALSE(without.contains("chirality"));
}

TEST_CASE("verdict schemas") {
  CHECK(circle_verdict_json(CircleVerdict::holds_up_to(1000)) ==
        json{{"outcome", "holds"}, {"bound", 1000}});
  CHECK(circle_verdict_json(CircleVerdict::fails({5, 4, {3, 2, 1, 0}}, 5)) ==
        json{{"outcome", "fails"}, {"m", 5}, {"k", 4}, {"permutation", {3, 2, 1, 0}}});
  CHECK(so3_verdict_json(So3Verdict::holds_up_to(500)) ==
        json{{"outcome", "holds"}, {"bound", 500}});
  CHECK(so3_verdict_json(So3Verdict::fails({5, 1, 2}, 5)) ==
        json{{"outcome", "fails"}, {"q", 5}, {"p", 1}, {"p_prime", 2}});
}

TEST_CASE("witnesses round-trip") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 50; ++trial) {
    CongruenceWitness w{std::int64_t(3 + rng() % 50), std::int64_t(2 + rng() % 20), {}};
    for (int i = 0; i < 4; ++i) w.permutation.push_back(rng() % 4);
    const json j = w;
    CHECK(j.get<CongruenceWitness>() == w);

    const So3Witness s{std::int64_t(3 + rng() % 50), std::int64_t(1 + rng() % 10),
                       std::int64_t(1 + rng() % 10)};
    const json js = s;
    CHECK(js.get<So3Witness>() == s);
  }
}

TEST_CASE("random torus elements survive a serialize-parse cycle") {
  std::mt19937 rng(4242);
  const std::vector<GroupTag> tags{GroupTag::unitary(3), GroupTag::so_odd(2),
                                   GroupTag::symplectic(4), GroupTag::so_even(3),
                                   GroupTag::orthogonal(5)};
  for (const GroupTag& tag : tags)
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Turn> turns(static_cast<size_t>(tag.rank));
      for (auto& t : turns) {
        const std::int64_t q = 1 + rng() % 30;
        t = Turn(static_cast<std::int64_t>(rng() % static_cast<unsigned long>(q)), q);
      }
      const TorusElement x(turns, tag);
      const json j = x;
      CHECK(torus_element_from_json(json::parse(j.dump())) == x);
    }
}

TEST_CASE("search report schema") {
  const auto entries = search_open_question(2, 50);
  const json arr = search_report_json(entries);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 3);
  CHECK(arr[0] == json{{"spins", {1}}, {"outcome", {{"outcome", "holds"}, {"bound", 50}}}});
  CHECK(arr[2].at("spins") == json{2});
  CHECK(arr[2].at("outcome").at("outcome") == "fails");
}

TEST_CASE("sympair case serialization") {
  const json j = classify_pair(PairFamily::SoSumOdd, {.p = 1, .q = 2});
  CHECK(j.at("status") == "not-scf");
  CHECK(j.at("reason") == "odd-sum-witness");
  CHECK(j.at("params") == json{{"p", 1}, {"q", 2}});
  CHECK_FALSE(j.contains("connected_only"));

  const json je = classify_pair(PairFamily::SuSoEven, {.n = 2});
  CHECK(je.at("connected_only") == true);

  const json jw = build_witness_so_sum(1, 2, Turn(1, 5));
  CHECK(jw.at("x").at("turns") == json{"1/5", "1/5", "0/1", "0/1"});
  CHECK(jw.at("blocks").size() == 2);
}
