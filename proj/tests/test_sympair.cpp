#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "scf/sympair.hpp"

using namespace scf;

TEST_CASE("classification of the documented cases") {
  CHECK(classify_pair(PairFamily::SoSoOdd, {.n = 4}).status == ScfStatus::Realizable);
  const SymPairCase odd_sum = classify_pair(PairFamily::SoSumOdd, {.p = 1, .q = 2});
  CHECK(odd_sum.status == ScfStatus::NotScf);
  CHECK(odd_sum.reason == NotScfReason::OddSumWitness);
  CHECK(classify_pair(PairFamily::E6F4).status == ScfStatus::Realizable);
  const SymPairCase e6sp4 = classify_pair(PairFamily::E6Sp4);
  CHECK(e6sp4.status == ScfStatus::NotScf);
  CHECK(e6sp4.reason == NotScfReason::InvolutionCount);
}

TEST_CASE("the even su/so pair splits on connectedness") {
  const SymPairCase c = classify_pair(PairFamily::SuSoEven, {.n = 3});
  CHECK(c.status == ScfStatus::NotScf);
  CHECK(c.reason == NotScfReason::OuterAutomorphism);
  CHECK(c.connected_only);
  // with disconnected H the same algebra pair is realizable
  CHECK(classify_pair(PairFamily::SuO, {.n = 6}).status == ScfStatus::Realizable);
  CHECK_FALSE(classify_pair(PairFamily::SuO, {.n = 6}).connected_only);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(classify_pair(PairFamily::SoSumOdd, {.p = 0, .q = 3}), invalid_input);
  CHECK_THROWS_AS(classify_pair(PairFamily::SoSumOdd, {.p = 3, .q = 2}), invalid_input);
  CHECK_THROWS_AS(classify_pair(PairFamily::SoSumOdd, {.p = 1, .q = 1}), invalid_input);
  CHECK_THROWS_AS(classify_pair(PairFamily::SoSoOdd, {.n = 1}), invalid_input);
  CHECK_THROWS_AS(classify_pair(PairFamily::SuSp, {.n = 0}), invalid_input);
  CHECK_THROWS_AS(classify_pair(PairFamily::EqualRank, {.p = 0, .q = 2}), invalid_input);
}

TEST_CASE("catalog matches the hand-transcribed classification") {
  // positive families, every parameter value up to 8
  for (int n = 1; n <= 8; ++n) {
    CHECK(classify_pair(PairFamily::SuSoOdd, {.n = n}).status == ScfStatus::Realizable);
    CHECK(classify_pair(PairFamily::SuSp, {.n = n}).status == ScfStatus::Realizable);
    CHECK(classify_pair(PairFamily::SuO, {.n = n}).status == ScfStatus::Realizable);
    if (n >= 2)
      CHECK(classify_pair(PairFamily::SoSoOdd, {.n = n}).status == ScfStatus::Realizable);
  }
  CHECK(classify_pair(PairFamily::DiagonalKK).status == ScfStatus::Realizable);
  CHECK(classify_pair(PairFamily::E6F4).status == ScfStatus::Realizable);

  // negative families with their reason codes
  for (int n = 1; n <= 8; ++n) {
    const SymPairCase c = classify_pair(PairFamily::SuSoEven, {.n = n});
    CHECK(c.status == ScfStatus::NotScf);
    CHECK(c.reason == NotScfReason::OuterAutomorphism);
    CHECK(c.connected_only);
  }
  for (int p = 1; p <= 8; ++p)
    for (int q = p; q <= 8; ++q) {
      if (p + q >= 3) {
        const SymPairCase c = classify_pair(PairFamily::SoSumOdd, {.p = p, .q = q});
        CHECK(c.status == ScfStatus::NotScf);
        CHECK(c.reason == NotScfReason::OddSumWitness);
        CHECK_FALSE(c.connected_only);
      }
      for (EqualRankKind kind : {EqualRankKind::SoEvenProduct, EqualRankKind::SpProduct,
                                 EqualRankKind::UnitaryProduct}) {
        const SymPairCase c =
            classify_pair(PairFamily::EqualRank, {.p = p, .q = q, .kind = kind});
        CHECK(c.status == ScfStatus::NotScf);
        CHECK(c.reason == NotScfReason::EqualRank);
      }
    }
  CHECK(classify_pair(PairFamily::E6Sp4).reason == NotScfReason::InvolutionCount);

  // the dump covers every family exactly once per catalog row
  const auto rows = catalog();
  CHECK(rows.size() == 12);
  size_t realizable = 0;
  for (const auto& r : rows) realizable += r.status == ScfStatus::Realizable;
  CHECK(realizable == 6);
}

TEST_CASE("odd-sum witness construction") {
  const PairWitness w = build_witness_so_sum(1, 2, Turn(1, 5));
  CHECK(w.x.group == GroupTag::so_even(4));
  CHECK(w.x.turns == std::vector<Turn>{Turn(1, 5), Turn(1, 5), Turn(), Turn()});
  CHECK(w.y.turns == std::vector<Turn>{Turn(), Turn(1, 5), Turn(1, 5), Turn()});
  REQUIRE(w.blocks.size() == 2);
  CHECK(w.blocks[0].tag == GroupTag::so_odd(1));
  CHECK(w.blocks[1].tag == GroupTag::so_odd(2));
  CHECK(w.blocks[1].offset == 1);

  CHECK_THROWS_AS(build_witness_so_sum(1, 2, Turn()), invalid_input);
  CHECK_THROWS_AS(build_witness_so_sum(1, 2, Turn(1, 2)), invalid_input);
  CHECK_THROWS_AS(build_witness_so_sum(1, 2, Turn(3, 5)), invalid_input);
  CHECK_THROWS_AS(build_witness_so_sum(2, 1, Turn(1, 5)), invalid_input);
  CHECK_THROWS_AS(build_witness_so_sum(1, 1, Turn(1, 5)), invalid_input);

  const PairWitness w22 = build_witness_so_sum(2, 2, Turn(1, 7));
  CHECK(w22.x.turns == std::vector<Turn>{Turn(1, 7), Turn(), Turn(1, 7), Turn(), Turn()});
  CHECK(w22.y.turns == std::vector<Turn>{Turn(), Turn(), Turn(1, 7), Turn(1, 7), Turn()});
}

TEST_CASE("odd-sum witnesses verify as ambient-yes subgroup-no") {
  for (const auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    for (std::int64_t den = 3; den <= 12; ++den)
      for (std::int64_t num = 1; 2 * num < den; ++num) {
        const PairWitness w = build_witness_so_sum(p, q, Turn(num, den));
        const PairVerification v = verify_pair_witness(w);
        CHECK(v.ambient_conjugate);
        CHECK_FALSE(v.subgroup_conjugate);
      }
  }
}

TEST_CASE("witness verification edge cases") {
  PairWitness trivial = build_witness_so_sum(1, 2, Turn(1, 5));
  trivial.y = trivial.x;
  const PairVerification same = verify_pair_witness(trivial);
  CHECK(same.ambient_conjugate);
  CHECK(same.subgroup_conjugate);

  PairWitness broken = build_witness_so_sum(1, 2, Turn(1, 5));
  auto turns = broken.y.turns;
  turns[1] = Turn(1, 7);  // distinct ambient multisets now
  broken.y = TorusElement(turns, broken.y.group);
  const PairVerification off = verify_pair_witness(broken);
  CHECK_FALSE(off.ambient_conjugate);
  CHECK_FALSE(off.subgroup_conjugate);

  // a nonzero turn outside the declared blocks is not a subgroup element
  PairWitness outside = build_witness_so_sum(1, 2, Turn(1, 5));
  auto bad = outside.x.turns;
  bad[3] = Turn(1, 5);
  outside.x = TorusElement(bad, outside.x.group);
  CHECK_THROWS_AS(verify_pair_witness(outside), invalid_input);
}

TEST_CASE("equal-rank witnesses for the supported products") {
  SUBCASE("even orthogonal blocks in SO(8)") {
    const auto spec = SignedPermGroupSpec::so_even_product(2, 2);
    const PairWitness w = equal_rank_witness(GroupTag::so_even(4), spec);
    CHECK(w.x.turns == std::vector<Turn>{Turn(1, 9), Turn(2, 9), Turn(3, 9), Turn(4, 9)});
    CHECK(weyl_orbit(w.x).size() == weyl_order(w.x.group));  // regular base point
    const PairVerification v = verify_pair_witness(w);
    CHECK(v.ambient_conjugate);
    CHECK_FALSE(v.subgroup_conjugate);
  }
  SUBCASE("symplectic blocks in Sp(2)") {
    const auto spec = SignedPermGroupSpec::sp_product(1, 1);
    const PairWitness w = equal_rank_witness(GroupTag::symplectic(2), spec);
    CHECK(weyl_orbit(w.x).size() == weyl_order(w.x.group));
    const PairVerification v = verify_pair_witness(w);
    CHECK(v.ambient_conjugate);
    CHECK_FALSE(v.subgroup_conjugate);
  }
  SUBCASE("unitary blocks in U(3)") {
    const auto spec = SignedPermGroupSpec::unitary_product(1, 2);
    const PairWitness w = equal_rank_witness(GroupTag::unitary(3), spec);
    CHECK(weyl_orbit(w.x).size() == weyl_order(w.x.group));
    const PairVerification v = verify_pair_witness(w);
    CHECK(v.ambient_conjugate);
    CHECK_FALSE(v.subgroup_conjugate);
  }
  SUBCASE("the full Weyl group admits no witness") {
    SignedPermGroupSpec full;
    full.rank = 2;
    full.generators = {SignedPerm::transposition(2, 0, 1), SignedPerm::flip(2, 0)};
    full.blocks = {{GroupTag::symplectic(2), 0}};
    CHECK_THROWS_AS(equal_rank_witness(GroupTag::symplectic(2), full), refusal);
  }
  SUBCASE("rank mismatch is rejected") {
    const auto spec = SignedPermGroupSpec::sp_product(1, 1);
    CHECK_THROWS_AS(equal_rank_witness(GroupTag::symplectic(3), spec), invalid_input);
  }
}

TEST_CASE("documented witness pairs verify directly") {
  // cross-block swap in SO(8) over SO(4) x SO(4)
  const GroupTag d4 = GroupTag::so_even(4);
  const std::vector<SubBlock> so_blocks{{GroupTag::so_even(2), 0}, {GroupTag::so_even(2), 2}};
  const TorusElement x({Turn(1, 16), Turn(2, 16), Turn(3, 16), Turn(5, 16)}, d4);
  const TorusElement y({Turn(1, 16), Turn(3, 16), Turn(2, 16), Turn(5, 16)}, d4);
  const PairVerification v = verify_pair_witness({x, y, so_blocks});
  CHECK(v.ambient_conjugate);
  CHECK_FALSE(v.subgroup_conjugate);

  // coordinate swap in Sp(2) over Sp(1) x Sp(1)
  const GroupTag c2 = GroupTag::symplectic(2);
  const std::vector<SubBlock> sp_blocks{{GroupTag::symplectic(1), 0}, {GroupTag::symplectic(1), 1}};
  const TorusElement xs({Turn(1, 8), Turn(3, 8)}, c2);
  const TorusElement ys({Turn(3, 8), Turn(1, 8)}, c2);
  const PairVerification vs = verify_pair_witness({xs, ys, sp_blocks});
  CHECK(vs.ambient_conjugate);
  CHECK_FALSE(vs.subgroup_conjugate);
}

TEST_CASE("subgroup closure sizes") {
  CHECK(generate_subgroup(SignedPermGroupSpec::so_even_product(2, 2).generators).size() == 16);
  CHECK(generate_subgroup(SignedPermGroupSpec::sp_product(1, 1).generators).size() == 4);
  CHECK(generate_subgroup(SignedPermGroupSpec::unitary_product(2, 2).generators).size() == 4);
  CHECK(generate_subgroup({SignedPerm::identity(3)}).size() == 1);
}

TEST_CASE("block subgroup orbits preserve the block partition of folds") {
  // every subgroup Weyl image keeps each block's folded multiset
  const auto spec = SignedPermGroupSpec::so_even_product(2, 2);
  const TorusElement x({Turn(1, 16), Turn(2, 16), Turn(3, 16), Turn(5, 16)},
                       GroupTag::so_even(4));
  for (const SignedPerm& w : generate_subgroup(spec.generators)) {
    const TorusElement y(w.apply(x.turns), x.group);
    const PairVerification v = verify_pair_witness({x, y, spec.blocks});
    CHECK(v.ambient_conjugate);
    CHECK(v.subgroup_conjugate);
  }
}
