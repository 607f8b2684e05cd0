#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkagelab/surface_ops.hpp"
#include "surface_fixtures.hpp"

using namespace llab;

TEST_CASE("signature normalization and invariants") {
  SurfaceSignature torus(1, 0, 0);
  CHECK(torus.genus() == 2);
  CHECK(torus.euler() == 0);
  CHECK(torus.orientable());
  // Dyck: one handle + one crosscap = three crosscaps
  SurfaceSignature mixed(1, 1, 2);
  CHECK(mixed == SurfaceSignature(0, 3, 2));
  CHECK(mixed.euler() == 2 - 3 - 2);
}

TEST_CASE("classify: one-vertex schemes") {
  // sphere: one +1 loop
  {
    EmbeddedGraph g;
    g.add_vertex(0);
    g.add_edge(0, 0, 1);
    CHECK(g.classify() == SurfaceSignature(0, 0, 0));
  }
  // projective plane: one -1 loop (face tracing gives a single face)
  {
    EmbeddedGraph g;
    g.add_vertex(0);
    g.add_edge(0, 0, -1);
    CHECK(g.faces().size() == 1);
    CHECK(g.classify() == SurfaceSignature(0, 1, 0));
  }
  // torus: two interleaved +1 loops (a, b, a, b)
  {
    EmbeddedGraph g;
    g.add_vertex(0);
    int a = g.add_edge(0, 0, 1);
    int b = g.add_edge(0, 0, 1);
    g.set_rotation(0, {{a, 0}, {b, 0}, {a, 1}, {b, 1}});
    CHECK(g.faces().size() == 1);
    CHECK(g.classify() == SurfaceSignature(1, 0, 0));
  }
}

TEST_CASE("classify: canonical surfaces for a,b <= 2, c <= 2") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        EmbeddedGraph g = canonical_surface(a, b, c);
        CHECK(g.classify() == SurfaceSignature(a, b, c));
      }
}

TEST_CASE("classify errors") {
  EmbeddedGraph g;
  g.add_vertex(0);
  g.add_vertex(1);
  CHECK_THROWS_AS(g.classify(), std::invalid_argument);  // disconnected
  EmbeddedGraph h;
  h.add_vertex(0);
  int e = h.add_edge(0, 0, 1);
  CHECK_THROWS_AS(h.set_rotation(0, {{e, 0}, {e, 0}}), std::invalid_argument);
}

TEST_CASE("classify: enrichment preserves the surface") {
  std::mt19937 rng(7);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;  // edgeless scheme, nothing to enrich
      EmbeddedGraph g = canonical_surface(a, b, 0);
      SurfaceSignature before = g.classify();
      fixtures::enrich(g, rng, 6, 6);
      CHECK(g.classify() == before);
      CHECK(g.vertex_count() > 1);
    }
}

TEST_CASE("fixtures classify as expected") {
  CHECK(fixtures::disk_with_chord().classify() == SurfaceSignature(0, 0, 1));
  CHECK(fixtures::mobius_band(4).classify() == SurfaceSignature(0, 1, 1));
  CHECK(fixtures::torus_with_hole(4).classify() == SurfaceSignature(1, 0, 1));
}

TEST_CASE("skeleton collapses loops and parallels") {
  EmbeddedGraph g = canonical_surface(1, 1, 1);
  Graph s = g.skeleton();
  CHECK(s.vertex_count() == 1);
  CHECK(s.edge_count() == 0);
}
