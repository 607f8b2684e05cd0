#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "linkagelab/matroid_intersection.hpp"

using namespace llab;

namespace {

// rank over subsets encoded as bitmasks, memoized
struct RankTable {
  const Gammoid& g;
  std::map<unsigned, int> memo;
  explicit RankTable(const Gammoid& g_) : g(g_) {}
  int operator()(unsigned mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<int> a;
    for (std::size_t i = 0; i < g.ground.size(); ++i)
      if (mask & (1u << i)) a.push_back(g.ground[i]);
    return memo[mask] = g.rank(a);
  }
};

}  // namespace

TEST_CASE("rank basics on a (4,3) cylinder") {
  auto host = testgen::cylinder_host(4, 3);
  Gammoid g{host.g, host.outer, host.inner};
  CHECK(g.rank({}) == 0);
  CHECK(g.rank({host.outer[0], host.outer[2]}) == 2);
  CHECK(g.rank(host.outer) == 4);
  CHECK_THROWS_AS(g.rank({host.inner[0]}), std::invalid_argument);
}

TEST_CASE("rank with a cut vertex is 1") {
  // three sources funneled through one articulation vertex to the target
  Graph g(6);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  Gammoid gm{g, {0, 1, 2}, {5}};
  CHECK(gm.rank({0, 1, 2}) == 1);
  auto w = gm.rank_witness({0, 1, 2});
  CHECK(w.separator.size() == 1);
  CHECK((w.separator[0] == 3 || w.separator[0] == 4 || w.separator[0] == 5));
}

TEST_CASE("matroid axioms on random cylinder hosts") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 4 + static_cast<int>(rng() % 4);
    int h = 2 + static_cast<int>(rng() % 3);
    auto host = testgen::cylinder_host(m, h, &rng, 0.25);
    std::vector<int> ground;
    for (int j = 0; j < std::min(m, 6); ++j) ground.push_back(host.outer[j]);
    Gammoid g{host.g, ground, host.inner};
    RankTable rank(g);
    unsigned full = (1u << ground.size()) - 1;
    REQUIRE(rank(0) == 0);
    for (unsigned mask = 0; mask <= full; ++mask) {
      for (std::size_t e = 0; e < ground.size(); ++e) {
        if (mask & (1u << e)) continue;
        int before = rank(mask), after = rank(mask | (1u << e));
        REQUIRE(after >= before);
        REQUIRE(after <= before + 1);
      }
    }
    for (unsigned x = 0; x <= full; ++x)
      for (unsigned y = x; y <= full; ++y)
        REQUIRE(rank(x | y) + rank(x & y) <= rank(x) + rank(y));
  }
}

TEST_CASE("intersection of a gammoid with itself") {
  auto host = testgen::cylinder_host(5, 3);
  Gammoid g{host.g, host.outer, host.inner};
  std::vector<std::pair<int, int>> ident;
  for (int v : host.outer) ident.emplace_back(v, v);
  auto cert = matroid_intersection(g, g, ident, 3);
  CHECK(cert.common.size() == 5);
  CHECK_FALSE(cert.below_target);
  CHECK(g.independent(cert.common));
}

TEST_CASE("two rank-1 gammoids sharing ground have common size 1") {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  Gammoid a{g, {0, 1}, {3}};  // everything funnels through 2
  auto cert = matroid_intersection(a, a, {{0, 0}, {1, 1}}, 2);
  CHECK(cert.common.size() == 1);
  CHECK(cert.below_target);
  CHECK(cert.bound == 1);
}

TEST_CASE("engineered certificate: optimum 2 below target 3") {
  auto host = testgen::cylinder_host(4, 3);
  Gammoid g{host.g, host.outer, {host.inner[0], host.inner[1]}};
  std::vector<std::pair<int, int>> ident;
  for (int v : host.outer) ident.emplace_back(v, v);
  auto cert = matroid_intersection(g, g, ident, 3);
  CHECK(cert.common.size() == 2);
  CHECK(cert.below_target);
  CHECK(cert.bound == 2);
  CHECK(cert.part_a.size() + cert.part_b.size() == host.outer.size());
  CHECK(static_cast<int>(cert.separator_a.size()) == g.rank(cert.part_a));
}

TEST_CASE("min-max equals enumerated minimum partition bound") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    int m = 4 + static_cast<int>(rng() % 4);
    auto h0 = testgen::cylinder_host(m, 2 + static_cast<int>(rng() % 2), &rng, 0.3);
    auto h1 = testgen::cylinder_host(m, 2 + static_cast<int>(rng() % 2), &rng, 0.3);
    int gsize = std::min(m, 5 + static_cast<int>(rng() % 3));
    std::vector<int> ground0(h0.outer.begin(), h0.outer.begin() + gsize);
    std::vector<int> ground1(h1.outer.begin(), h1.outer.begin() + gsize);
    Gammoid g0{h0.g, ground0, h0.inner};
    Gammoid g1{h1.g, ground1, h1.inner};
    std::vector<std::pair<int, int>> ident;
    for (int i = 0; i < gsize; ++i) ident.emplace_back(ground0[i], ground1[i]);
    auto cert = matroid_intersection(g0, g1, ident, gsize + 1);
    RankTable r0(g0), r1(g1);
    unsigned full = (1u << gsize) - 1;
    int best = 1 << 20;
    for (unsigned mask = 0; mask <= full; ++mask)
      best = std::min(best, r0(mask) + r1(full & ~mask));
    REQUIRE(static_cast<int>(cert.common.size()) == best);
    REQUIRE(cert.bound == best);
    // the returned common set really is independent in both matroids
    REQUIRE(g0.independent(cert.common));
    std::vector<int> copies;
    for (int v : cert.common)
      for (const auto& [x, y] : ident)
        if (x == v) copies.push_back(y);
    REQUIRE(g1.independent(copies));
  }
}
