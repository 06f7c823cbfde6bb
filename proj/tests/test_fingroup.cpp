#include <numeric>
#include <set>

#include "doctest.h"
#include "ringunits/fingroup.hpp"
#include "test_helpers.hpp"

using namespace ringunits;
using namespace ringunits::testing;

TEST_CASE("from_generators basics") {
  auto g = s3();
  CHECK(g->order == 6);
  CHECK(g->num_classes() == 3);
  CHECK(g->inv[0] == 0);
  for (int x = 0; x < g->order; ++x) {
    CHECK(g->mul[0][x] == x);
    CHECK(g->mul[x][0] == x);
    CHECK(g->mul[x][g->inv[x]] == 0);
  }
}

TEST_CASE("trivial group") {
  auto g = from_generators(1, {});
  CHECK(g->order == 1);
  CHECK(g->num_classes() == 1);
}

TEST_CASE("invalid permutation rejected") {
  CHECK_THROWS_AS(from_generators(2, {{1, 1}}), InvalidPermutation);
  CHECK_THROWS_AS(from_generators(2, {{3, 1}}), InvalidPermutation);
}

TEST_CASE("closure bound") {
  std::vector<int> cycle(12);
  std::iota(cycle.begin(), cycle.end(), 0);
  for (auto& v : cycle) v = (v + 1) % 12 + 1;
  CHECK_THROWS_AS(from_generators(12, {cycle}, 5), ClosureTooLarge);
}

TEST_CASE("16_6 has order 16 and 10 classes") {
  auto g = g16_6();
  CHECK(g->order == 16);
  CHECK(g->num_classes() == 10);
  // a has order 8, b has order 2, bab = a^5
  int a = g->generators[0], b = g->generators[1];
  CHECK(g->element_order[a] == 8);
  CHECK(g->element_order[b] == 2);
  CHECK(g->mul[g->mul[b][a]][b] == g->power(a, 5));
}

TEST_CASE("associativity spot-check and class sums") {
  for (auto g : {s3(), q8(), g16_6()}) {
    for (int x = 0; x < g->order; ++x)
      for (int y = 0; y < g->order; ++y)
        for (int z = 0; z < g->order; ++z)
          CHECK(g->mul[g->mul[x][y]][z] == g->mul[x][g->mul[y][z]]);
    int total = 0;
    for (const auto& cls : g->conjugacy_classes) {
      total += (int)cls.size();
      CHECK(g->order % (int)cls.size() == 0);
    }
    CHECK(total == g->order);
    CHECK(g->conjugacy_classes[0] == std::vector<int>{0});
  }
}

TEST_CASE("all_subgroups on S3") {
  auto g = s3();
  auto subs = all_subgroups(g);
  CHECK(subs.size() == 6);
  int order2 = 0, normal = 0;
  for (const auto& h : subs) {
    if (h.order() == 2) ++order2;
    if (h.normal_in_parent) ++normal;
  }
  CHECK(order2 == 3);
  CHECK(normal == 3);  // 1, A3, S3
}

TEST_CASE("all_subgroups on C8 and Q8") {
  auto c8 = c_n(8);
  auto subs = all_subgroups(c8);
  CHECK(subs.size() == 4);
  for (const auto& h : subs) CHECK(h.normal_in_parent);

  auto q = q8();
  CHECK(q->order == 8);
  auto qsubs = all_subgroups(q);
  CHECK(qsubs.size() == 6);
  for (const auto& h : qsubs) CHECK(h.normal_in_parent);
}

TEST_CASE("cyclic group subgroup count equals divisor count") {
  for (int n : {2, 6, 12, 30}) {
    auto g = c_n(n);
    int divisors = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    CHECK((int)all_subgroups(g).size() == divisors);
  }
}

TEST_CASE("all_subgroups closed under conjugation") {
  auto g = s3();
  auto subs = all_subgroups(g);
  std::set<std::vector<int>> sets;
  for (const auto& h : subs) sets.insert(h.members);
  for (const auto& h : subs)
    for (int t = 0; t < g->order; ++t) {
      std::vector<int> conj;
      for (int m : h.members) conj.push_back(g->conj(m, t));
      std::sort(conj.begin(), conj.end());
      CHECK(sets.count(conj) == 1);
    }
}

TEST_CASE("minimal normal subgroups") {
  auto c8 = c_n(8);
  auto mins = minimal_normal_subgroups(full_subgroup(c8), trivial_subgroup(c8));
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 2);

  auto v = v4();
  auto vm = minimal_normal_subgroups(full_subgroup(v), trivial_subgroup(v));
  CHECK(vm.size() == 3);
  for (const auto& m : vm) CHECK(m.order() == 2);

  auto g = s3();
  auto sm = minimal_normal_subgroups(full_subgroup(g), trivial_subgroup(g));
  REQUIRE(sm.size() == 1);
  CHECK(sm[0].order() == 3);  // A3
}

TEST_CASE("minimal_normal_subgroups rejects non-normal K") {
  auto g = s3();
  Subgroup k = cyclic_subgroup(g, g->generators[1]);  // a transposition
  CHECK_THROWS_AS(minimal_normal_subgroups(full_subgroup(g), k), NotNormal);
}

TEST_CASE("right transversal covers the group disjointly") {
  auto g = s3();
  SUBCASE("stabilizer G") {
    auto t = right_transversal(g, full_subgroup(g).members);
    CHECK(t == std::vector<int>{0});
  }
  SUBCASE("stabilizer 1") {
    auto t = right_transversal(g, {0});
    CHECK((int)t.size() == g->order);
  }
  SUBCASE("coset cover") {
    auto a3 = cyclic_subgroup(g, g->generators[0]);
    auto t = right_transversal(g, a3.members);
    CHECK((int)t.size() * a3.order() == g->order);
    CHECK(t[0] == 0);
    std::set<int> covered;
    for (int rep : t)
      for (int s : a3.members) covered.insert(g->mul[s][rep]);
    CHECK((int)covered.size() == g->order);
  }
}

TEST_CASE("right_transversal rejects non-subgroups") {
  auto g = s3();
  CHECK_THROWS_AS(right_transversal(g, {0, 1}), NotASubgroup);
}
