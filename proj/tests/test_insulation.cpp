#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "linkagelab/leveled_disk.hpp"
#include "linkagelab/protection.hpp"

using namespace llab;

namespace {

LeveledDisk fixture_disk(int m, int t, const std::set<std::pair<int, int>>& blocked = {}) {
  auto f = testgen::leveled_fixture(m, t, blocked);
  return make_leveled_disk(f.g, f.center, f.rings);
}

}  // namespace

TEST_CASE("leveled fixture classifies as a disk and levels are radial") {
  auto f = testgen::leveled_fixture(6, 3);
  CHECK(f.g.classify() == SurfaceSignature(0, 0, 1));
  LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
  CHECK(d.level_of(f.center) == 1);
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 6; ++j) CHECK(d.level_of(f.ring_vertex(r, j)) == r + 1);
}

TEST_CASE("leveled disk validation") {
  auto f = testgen::leveled_fixture(5, 2);
  // cycles sharing a vertex are rejected
  auto bad = f.rings;
  bad[1][0] = bad[0][0];
  CHECK_THROWS_AS(make_leveled_disk(f.g, f.center, bad), std::invalid_argument);
  // reversed nesting is rejected
  auto swapped = f.rings;
  std::swap(swapped[0], swapped[1]);
  CHECK_THROWS_AS(make_leveled_disk(f.g, f.center, swapped), std::invalid_argument);
}

TEST_CASE("hill-free input returned unchanged") {
  LeveledDisk d = fixture_disk(8, 3);
  auto f = testgen::leveled_fixture(8, 3);
  // straight path along the outer ring between two terminals
  std::vector<int> path;
  for (int j = 0; j <= 3; ++j) path.push_back(f.ring_vertex(2, j));
  Pattern p{{{path.front(), path.back()}}};
  Linkage l{{path}};
  EliminationStats stats;
  Linkage out = eliminate_hills(d, p, l, &stats);
  CHECK(out.paths == l.paths);
  CHECK(stats.reroutes == 0);
}

TEST_CASE("single bump is rerouted along its cap") {
  auto f = testgen::leveled_fixture(8, 3);
  LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
  auto rv = [&](int r, int j) { return f.ring_vertex(r, j); };
  // path on ring 1 (level 2) with a bump over ring 2 (level 3)
  std::vector<int> path{rv(1, 0), rv(1, 1), rv(2, 1), rv(2, 2), rv(1, 2), rv(1, 3)};
  Pattern p{{{rv(1, 0), rv(1, 3)}}};
  Linkage l{{path}};
  REQUIRE(find_hills(d, l.paths).size() == 1);
  EliminationStats stats;
  Linkage out = eliminate_hills(d, p, l, &stats);
  CHECK(stats.reroutes == 1);
  CHECK(find_hills(d, out.paths).empty());
  CHECK(out.paths[0] == std::vector<int>{rv(1, 0), rv(1, 1), rv(1, 2), rv(1, 3)});
  for (std::size_t i = 1; i < stats.potential_trace.size(); ++i)
    CHECK(stats.potential_trace[i] < stats.potential_trace[i - 1]);
}

TEST_CASE("nested hills are eliminated lowest sea level first") {
  auto f = testgen::leveled_fixture(10, 4);
  LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
  auto rv = [&](int r, int j) { return f.ring_vertex(r, j); };
  // bump over ring 2 nested inside a bump over ring 3, sea level on ring 1
  std::vector<int> path{rv(1, 0), rv(1, 1), rv(2, 1), rv(3, 1), rv(3, 2), rv(3, 3),
                        rv(2, 3),  rv(2, 4), rv(1, 4), rv(1, 5)};
  Pattern p{{{rv(1, 0), rv(1, 5)}}};
  Linkage l{{path}};
  EliminationStats stats;
  Linkage out = eliminate_hills(d, p, l, &stats);
  CHECK(find_hills(d, out.paths).empty());
  for (std::size_t i = 1; i < stats.potential_trace.size(); ++i)
    CHECK(stats.potential_trace[i] < stats.potential_trace[i - 1]);
  // still a linkage between the same ends
  CHECK(out.paths[0].front() == rv(1, 0));
  CHECK(out.paths[0].back() == rv(1, 5));
}

TEST_CASE("strict potential decrease across random bump injections") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 8 + static_cast<int>(rng() % 5);
    int t = 3 + static_cast<int>(rng() % 2);
    auto f = testgen::leveled_fixture(m, t);
    LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
    auto rv = [&](int r, int j) { return f.ring_vertex(r, j); };
    int r = 1 + static_cast<int>(rng() % (t - 2 + 1));
    if (r >= t - 1) r = t - 2;
    int j0 = static_cast<int>(rng() % m);
    int bump_at = 1 + static_cast<int>(rng() % 2);
    std::vector<int> path;
    for (int s = 0; s <= 4; ++s) {
      if (s == bump_at) {
        path.push_back(rv(r, j0 + s));
        path.push_back(rv(r + 1, j0 + s));
        path.push_back(rv(r + 1, j0 + s + 1));
      } else if (s == bump_at + 1) {
        path.push_back(rv(r, j0 + s));
      } else {
        path.push_back(rv(r, j0 + s));
      }
    }
    Pattern p{{{path.front(), path.back()}}};
    Linkage l{{path}};
    EliminationStats stats;
    Linkage out = eliminate_hills(d, p, l, &stats);
    REQUIRE(find_hills(d, out.paths).empty());
    for (std::size_t i = 1; i < stats.potential_trace.size(); ++i)
      REQUIRE(stats.potential_trace[i] < stats.potential_trace[i - 1]);
  }
}

TEST_CASE("make_decreasing: straight spokes on a clean disk") {
  auto f = testgen::leveled_fixture(7, 4);
  LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
  std::vector<int> a{f.ring_vertex(3, 0), f.ring_vertex(3, 2), f.ring_vertex(3, 5)};
  auto paths = make_decreasing(d, a, 1);
  REQUIRE(paths.size() == 3);
  std::set<int> used;
  for (const auto& path : paths) {
    for (int v : path) REQUIRE(used.insert(v).second);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      REQUIRE(d.level_of(path[i]) >= d.level_of(path[i + 1]));
    REQUIRE(d.level_of(path.front()) == 4);
    REQUIRE(d.level_of(path.back()) == 1);
  }
}

TEST_CASE("make_decreasing: blocked spokes still yield monotone paths") {
  std::set<std::pair<int, int>> blocked{{2, 0}, {2, 1}, {1, 3}};
  auto f = testgen::leveled_fixture(8, 4, blocked);
  LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
  std::vector<int> a{f.ring_vertex(3, 0), f.ring_vertex(3, 1), f.ring_vertex(3, 4)};
  auto paths = make_decreasing(d, a, 2);
  REQUIRE(paths.size() == 3);
  for (const auto& path : paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      REQUIRE(d.level_of(path[i]) >= d.level_of(path[i + 1]));
    REQUIRE(d.level_of(path.back()) == 2);
  }
}

TEST_CASE("make_decreasing: rank-deficient demand is an error") {
  std::set<std::pair<int, int>> blocked;
  for (int j = 0; j < 6; ++j)
    if (j != 0) blocked.insert({1, j});  // one surviving spoke between rings 2 and 3
  auto f = testgen::leveled_fixture(6, 3, blocked);
  LeveledDisk d = make_leveled_disk(f.g, f.center, f.rings);
  std::vector<int> a{f.ring_vertex(2, 0), f.ring_vertex(2, 3)};
  CHECK_THROWS_AS(make_decreasing(d, a, 1), std::invalid_argument);
}

TEST_CASE("protection depth on onion fixtures") {
  for (int t = 1; t <= 4; ++t) {
    auto f = testgen::leveled_fixture(3, t);
    // terminals outside: attach two pendants on the outer face
    auto& g = f.g;
    int outer_face = g.hole_faces().front();
    g.clear_holes();
    int s = g.add_pendant(outer_face, 0);
    // attach the second pendant in the face that now contains s (the outer
    // face), at a corner of another outer-ring vertex
    int target_face = -1, target_corner = -1;
    for (std::size_t fi = 0; fi < g.faces().size() && target_face < 0; ++fi) {
      const auto& face = g.faces()[fi];
      bool has_s = std::find(face.vertices.begin(), face.vertices.end(), s) != face.vertices.end();
      if (!has_s) continue;
      for (std::size_t c = 0; c < face.orbit.size(); ++c)
        if (g.dart_head(face.darts[c]) == f.ring_vertex(t - 1, 1) && target_corner < 0) {
          target_face = static_cast<int>(fi);
          target_corner = static_cast<int>(c);
        }
    }
    REQUIRE(target_face >= 0);
    int other = g.add_pendant(target_face, target_corner);
    Pattern p{{{s, other}}};
    auto res = protection_depth(g, 0, p);
    CHECK(res.depth == t);
    // nested family sanity: cycles pairwise disjoint
    std::set<int> seen;
    for (const auto& c : res.cycles)
      for (int v : c) CHECK(seen.insert(v).second);
  }
}

TEST_CASE("protection depth: terminal adjacency and error cases") {
  // v on a triangle with a pendant terminal: the only cycle runs through v,
  // so no separating cycle exists and the depth is zero
  EmbeddedGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(i);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const auto& face = g.faces()[0];
  int corner = -1;
  for (std::size_t c = 0; c < face.orbit.size(); ++c)
    if (g.dart_head(face.darts[c]) == 2) corner = static_cast<int>(c);
  int pendant = g.add_pendant(0, corner);
  Pattern p{{{pendant, 0}}};
  CHECK(protection_depth(g, 2, p).depth == 0);
  CHECK_THROWS_AS(protection_depth(g, pendant, p), std::invalid_argument);
}

TEST_CASE("shared-vertex layers are not counted twice") {
  // two nested squares sharing one vertex: only one vertex-disjoint layer
  EmbeddedGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex(i);
  for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
  auto corner_of = [&g](int face, int vertex) {
    const auto& f = g.faces()[face];
    for (std::size_t c = 0; c < f.orbit.size(); ++c)
      if (g.dart_head(f.darts[c]) == vertex) return static_cast<int>(c);
    return -1;
  };
  int center = g.add_pendant(0, corner_of(0, 1));  // hangs inside face 0
  // outer square 0-4-5-6 built in the face on the other side
  int v4 = g.add_pendant(1, corner_of(1, 0));
  auto face_with = [&g](int a, int b) {
    for (std::size_t fi = 0; fi < g.faces().size(); ++fi) {
      const auto& f = g.faces()[fi];
      bool ha = false, hb = false;
      for (std::size_t c = 0; c < f.orbit.size(); ++c) {
        int v = g.dart_head(f.darts[c]);
        ha |= v == a;
        hb |= v == b;
      }
      if (ha && hb) return static_cast<int>(fi);
    }
    return -1;
  };
  int v5 = g.add_pendant(face_with(v4, v4), corner_of(face_with(v4, v4), v4));
  int v6 = g.add_pendant(face_with(v5, v5), corner_of(face_with(v5, v5), v5));
  int f_close = face_with(v6, 0);
  g.add_chord(f_close, corner_of(f_close, v6), corner_of(f_close, 0));
  REQUIRE(g.classify() == SurfaceSignature(0, 0, 0));
  Pattern p{{{v5, v6}}};
  auto res = protection_depth(g, center, p);
  CHECK(res.depth == 1);
}
