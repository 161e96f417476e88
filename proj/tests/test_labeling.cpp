#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "queenlab/enumeration.hpp"
#include "queenlab/labeling.hpp"
#include "worked_examples.hpp"

using namespace queenlab;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("sum and difference multisets") {
  const LabeledDigraph d = examples::example1_base();
  CHECK(sorted(sum_multiset(d)) == std::vector<int>{4, 5, 6, 7, 8});
  CHECK(sorted(diff_multiset(d)) == std::vector<int>{-3, -2, 0, 1, 4});
  CHECK(sum_multiset(from_arcs(1, {{1, 1}})) == std::vector<int>{2});
  CHECK(diff_multiset(from_arcs(1, {{1, 1}})) == std::vector<int>{0});
}

TEST_CASE("verify_queen") {
  CHECK(verify_queen(examples::example1_base()).is_valid());
  CHECK(verify_queen(from_arcs(1, {{1, 1}})).is_valid());

  const LabeledDigraph c5 = from_arcs(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  const VerificationReport r = verify_queen(c5);
  REQUIRE_FALSE(r.is_valid());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].condition == Condition::Diff);
  REQUIRE(r.failures[0].witness);
  CHECK(r.failures[0].witness->first == Arc{1, 2});
  CHECK(r.failures[0].witness->second == Arc{2, 3});
}

TEST_CASE("verify_queen reports one failure per colliding value, smallest pair first") {
  // Two loops share difference 0; (1,2) and (2,1) share sum 3.
  const LabeledDigraph d = from_arcs(3, {{1, 2}, {2, 1}, {3, 3}, {1, 1}});
  const VerificationReport r = verify_queen(d);
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].condition == Condition::Sum);
  CHECK(*r.failures[0].witness == std::make_pair(Arc{1, 2}, Arc{2, 1}));
  CHECK(r.failures[1].condition == Condition::Diff);
  CHECK(*r.failures[1].witness == std::make_pair(Arc{1, 1}, Arc{3, 3}));
}

TEST_CASE("verify_modular_queen") {
  CHECK(verify_modular_queen(examples::example1_base()).is_valid());
  CHECK(verify_modular_queen(reverse(examples::example1_base())).is_valid());

  const VerificationReport f1 = verify_modular_queen(examples::example2_f1());
  CHECK(verify_queen(examples::example2_f1()).is_valid());
  CHECK_FALSE(f1.is_valid());
  for (const Failure& f : f1.failures) {
    CHECK((f.condition == Condition::SumMod || f.condition == Condition::DiffMod));
  }
  // More arcs than vertices can never be modular.
  CHECK_FALSE(verify_modular_queen(from_arcs(2, {{1, 1}, {1, 2}, {2, 2}})).is_valid());
}

TEST_CASE("verify_solution adds the board conditions") {
  CHECK(verify_solution(examples::example1_base(), Board::Standard).is_valid());
  // A queen labeling that is not a full placement.
  const LabeledDigraph partial = from_arcs(3, {{1, 2}});
  CHECK(verify_queen(partial).is_valid());
  const VerificationReport r = verify_solution(partial, Board::Standard);
  CHECK_FALSE(r.is_valid());
  CHECK(std::any_of(r.failures.begin(), r.failures.end(),
                    [](const Failure& f) { return f.condition == Condition::Bijectivity; }));
  CHECK(std::any_of(r.failures.begin(), r.failures.end(),
                    [](const Failure& f) { return f.condition == Condition::Regularity; }));
}

TEST_CASE("placements") {
  const Placement p = to_placement(examples::example1_base());
  CHECK(p.size() == 5);
  CHECK(p.queens() == std::vector<Square>{{1, 5}, {2, 3}, {3, 1}, {4, 4}, {5, 2}});

  const Placement diagonal = to_placement(from_permutation({1, 2, 3}));
  CHECK(diagonal.queens() == std::vector<Square>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(from_placement(diagonal) == from_permutation({1, 2, 3}));

  const Placement four(4, {{1, 2}, {2, 4}, {3, 1}, {4, 3}});
  CHECK(from_placement(four) == from_permutation({2, 4, 1, 3}));
  CHECK(to_placement(from_placement(four)) == four);

  CHECK_THROWS_AS(from_placement(Placement(3, {{1, 1}, {1, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(from_placement(Placement(3, {{1, 1}, {3, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(Placement(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Placement(3, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("sigma identities") {
  CHECK(sigma_identity_check(examples::example1_base()));
  CHECK(sigma_identity_check(from_permutation({1, 2, 3, 4, 5, 6})));
  // C_4 with cyclic labels: sums 3+5+7+5 = 20 = 4*5, differences 1+1+1-3 = 0.
  CHECK(sigma_identity_check(from_arcs(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  CHECK_THROWS_AS(sigma_identity_check(from_arcs(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("verification agrees with the attack scanners on random permutations") {
  std::mt19937_64 rng(11);
  int queen_hits = 0;
  int modular_hits = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto p = oracle::random_permutation(n, rng);
    const LabeledDigraph d = from_permutation(p);
    const bool queen = verify_queen(d).is_valid();
    const bool modular = verify_modular_queen(d).is_valid();
    CHECK(queen == oracle::is_solution(p, false));
    CHECK(modular == oracle::is_solution(p, true));
    // modular implies standard
    if (modular) CHECK(queen);
    queen_hits += queen;
    modular_hits += modular;

    CHECK(sigma_identity_check(d));
    for (int s : sum_multiset(d)) CHECK((s >= 2 && s <= 2 * n));
    for (int v : diff_multiset(d)) CHECK((v >= -(n - 1) && v <= n - 1));
  }
  CHECK(queen_hits > 0);
  CHECK(modular_hits > 0);
}

TEST_CASE("queen-valid digraphs have at most one loop and no 2-cycle") {
  for (int n = 1; n <= 8; ++n) {
    for (const Placement& p : enumerate_standard(n)) {
      const LabeledDigraph d = from_placement(p);
      int loops = 0;
      for (const Arc& a : d.arcs()) {
        loops += a.tail == a.head;
        if (a.tail != a.head) CHECK_FALSE(d.contains({a.head, a.tail}));
      }
      CHECK(loops <= 1);
      CHECK(verify_queen(rotate_quarter(d)).is_valid());
    }
  }
}
