#include <algorithm>
#include <map>
#include <queue>

#include "doctest.h"
#include "hc/permutation.hpp"

using namespace hc;

TEST_CASE("compose applies left factor first") {
  // (1 2) then (1 3): 1->2->2, 2->1->3, 3->3->1
  Permutation p = transposition_perm(3, 1, 2);
  Permutation q = transposition_perm(3, 1, 3);
  Permutation r = compose(p, q);
  CHECK(r == Permutation(std::vector<int>{2, 3, 1}));
  CHECK(to_cycle_string(r) == "(1 2 3)");
}

TEST_CASE("compose and inverse basics") {
  Permutation a = parse_permutation("(1 4 2)", 5);
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(compose(inverse(a), a).is_identity());
  CHECK(compose(a, identity(5)) == a);
  CHECK_THROWS_AS(compose(a, identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
}

TEST_CASE("cycle type and word norm") {
  Permutation p = parse_permutation("(1 2)(3 4)", 4);
  CHECK(cycle_type(p) == Partition({2, 2}));
  CHECK(word_norm(p) == 2);
  CHECK(word_norm(identity(6)) == 0);
  // 4-cycle is at distance 3 from the identity
  CHECK(distance(identity(4), parse_permutation("(1 2 3 4)", 4)) == 3);
  CHECK(cycle_type(identity(3)) == Partition({1, 1, 1}));
}

static std::map<Permutation, int> bfs_distances(int d) {
  std::map<Permutation, int> dist;
  std::queue<Permutation> q;
  dist[identity(d)] = 0;
  q.push(identity(d));
  auto ts = all_transpositions(d);
  while (!q.empty()) {
    Permutation cur = q.front();
    q.pop();
    for (const auto& t : ts) {
      Permutation nxt = compose(cur, transposition_perm(d, t.i, t.j));
      if (!dist.count(nxt)) {
        dist[nxt] = dist[cur] + 1;
        q.push(nxt);
      }
    }
  }
  return dist;
}

TEST_CASE("word norm equals breadth-first distance from the identity") {
  for (int d = 0; d <= 6; ++d) {
    auto dist = bfs_distances(d);
    int checked = 0;
    for_each_permutation(d, [&](const Permutation& p) {
      REQUIRE(dist.at(p) == word_norm(p));
      ++checked;
    });
    Integer expect = factorial(d);
    CHECK(Integer(checked) == expect);
  }
}

TEST_CASE("distance is a bi-invariant metric") {
  // exhaustive triangle inequality + invariance at d = 4
  std::vector<Permutation> all;
  for_each_permutation(4, [&](const Permutation& p) { all.push_back(p); });
  for (const auto& a : all)
    for (const auto& b : all) {
      int dab = distance(a, b);
      CHECK(dab == distance(b, a));
      CHECK((dab == 0) == (a == b));
      Permutation g = all[7];
      CHECK(distance(compose(g, a), compose(g, b)) == dab);
      CHECK(distance(compose(a, g), compose(b, g)) == dab);
    }
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
}

TEST_CASE("lehmer rank round-trips in lexicographic order") {
  for (int d : {0, 1, 4, 6}) {
    std::uint64_t r = 0;
    for_each_permutation(d, [&](const Permutation& p) {
      CHECK(lehmer_rank(p) == r);
      CHECK(lehmer_unrank(d, r) == p);
      ++r;
    });
  }
}

TEST_CASE("class enumeration matches full-group filter") {
  CHECK(conjugacy_class(3, Partition({2, 1})).size() == 3);
  CHECK(conjugacy_class(3, Partition({3})).size() == 2);
  for (int d = 0; d <= 6; ++d) {
    for (const auto& alpha : partitions_of(d)) {
      std::vector<Permutation> by_filter;
      for_each_permutation(d, [&](const Permutation& p) {
        if (cycle_type(p) == alpha) by_filter.push_back(p);
      });
      auto by_stream = conjugacy_class(d, alpha);
      std::sort(by_stream.begin(), by_stream.end());
      CHECK(by_stream == by_filter);
      CHECK(Integer(by_stream.size()) == class_size(alpha));
      CHECK(cycle_type(class_representative(d, alpha)) == alpha);
    }
  }
}

TEST_CASE("levels refine into classes by cycle count") {
  // L_r = permutations with d - r cycles
  for (int d = 2; d <= 5; ++d)
    for_each_permutation(d, [&](const Permutation& p) {
      CHECK(word_norm(p) == d - cycle_count(p));
    });
}

TEST_CASE("parsing and printing") {
  CHECK(parse_permutation("id", 4).is_identity());
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("[2,3,1]", 3) == Permutation(std::vector<int>{2, 3, 1}));
  CHECK(parse_permutation("(1 2)(3 4)", 5) ==
        Permutation(std::vector<int>{2, 1, 4, 3, 5}));
  CHECK(to_one_line_string(parse_permutation("(2 3)", 3)) == "[1,3,2]");
  CHECK(to_cycle_string(identity(5)) == "()");
  Permutation p = parse_permutation("(1 5 2)(3 4)", 6);
  CHECK(parse_permutation(to_cycle_string(p), 6) == p);
  CHECK(parse_permutation(to_one_line_string(p), 6) == p);
  CHECK_THROWS_AS(parse_permutation("(1 9)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[2,3]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("bogus", 3), std::invalid_argument);
}

TEST_CASE("transposition helpers") {
  auto ts = all_transpositions(4);
  CHECK(ts.size() == 6);
  CHECK(ts[0].label() == 2);
  CHECK(ts.back().i == 3);
  CHECK(ts.back().j == 4);
  CHECK_THROWS_AS(Transposition(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(transposition_perm(3, 1, 4), std::invalid_argument);
}
