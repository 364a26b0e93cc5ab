// Copyright 2026 The qwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qwc/census.hpp"
#include "qwc/graph.hpp"

namespace qwc {
namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, std::mt19937& rng, double p = 0.4) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  return canonical_form(a) == canonical_form(b);
}

TEST_SUITE("graph.basic") {
  TEST_CASE("edgeless constructor") {
    Graph g(4);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 0);
    for (int i = 0; i < 4; ++i) {
      CHECK(g.degree(i) == 0);
      for (int j = 0; j < 4; ++j) CHECK_FALSE(g.adjacent(i, j));
    }
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(33), std::invalid_argument);
  }

  TEST_CASE("from_edges builds a symmetric adjacency") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {2, 1}};
    Graph g = Graph::from_edges(3, edges);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == 0b101u);
  }

  TEST_CASE("from_edges rejects loops and out-of-range endpoints") {
    std::vector<std::pair<int, int>> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
    std::vector<std::pair<int, int>> oob{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, oob), std::invalid_argument);
    std::vector<std::pair<int, int>> neg{{-1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(3, neg), std::invalid_argument);
  }

  TEST_CASE("duplicate edges collapse") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 0}, {0, 1}};
    Graph g = Graph::from_edges(2, edges);
    CHECK(g.edge_count() == 1);
  }

  TEST_CASE("equality compares vertex count and edges") {
    CHECK(path(3) == path(3));
    CHECK_FALSE(path(3) == path(4));
    CHECK_FALSE(path(3) == cycle_graph(3));
  }
}

TEST_SUITE("graph.vertex_set") {
  TEST_CASE("factories and membership") {
    VertexSet s = VertexSet::of(5, std::vector<int>{0, 3});
    CHECK(s.ambient() == 5);
    CHECK(s.count() == 2);
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(1));
    CHECK(s.contains(3));
    CHECK(s.members() == std::vector<int>{0, 3});

    CHECK(VertexSet::empty_set(4).count() == 0);
    CHECK(VertexSet::all(4).bits() == 0b1111u);
    CHECK(VertexSet::single(4, 2).members() == std::vector<int>{2});
  }

  TEST_CASE("rejects members outside the ambient range") {
    CHECK_THROWS_AS(VertexSet(3, 0b1000u), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet::single(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet::single(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet::of(2, std::vector<int>{0, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(VertexSet(0, 0u), std::invalid_argument);
  }
}

TEST_SUITE("graph.constructions") {
  TEST_CASE("path shape") {
    Graph p = path(5);
    CHECK(p.n() == 5);
    CHECK(p.edge_count() == 4);
    CHECK(degrees(p) == DegreeSequence{1, 1, 2, 2, 2});
    for (int i = 0; i + 1 < 5; ++i) CHECK(p.adjacent(i, i + 1));
    CHECK_FALSE(p.adjacent(0, 2));
    CHECK(path(1).edge_count() == 0);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
  }

  TEST_CASE("cone adds a vertex joined to the chosen subset") {
    Graph p3 = path(3);
    Graph hat = cone(p3, VertexSet::single(3, 0));
    CHECK(hat.n() == 4);
    CHECK(hat.edge_count() == p3.edge_count() + 1);
    // New vertex is index 0 and sees only old vertex 0, now labeled 1.
    CHECK(hat.adjacent(0, 1));
    CHECK_FALSE(hat.adjacent(0, 2));
    CHECK_FALSE(hat.adjacent(0, 3));
    CHECK(isomorphic_small(hat, path(4)));
  }

  TEST_CASE("cone over the empty set adds an isolated vertex") {
    Graph g = cone(path(3), VertexSet::empty_set(3));
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 0);
    CHECK_FALSE(is_connected(g));
  }

  TEST_CASE("cone over all vertices of an edge gives a triangle") {
    Graph g = cone(path(2), VertexSet::all(2));
    CHECK(g == complete_graph(3));
  }

  TEST_CASE("cone edge count is |E| + |S|") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(6, rng);
      std::uint32_t bits = rng() & 0b111111u;
      VertexSet s(6, bits);
      Graph c = cone(g, s);
      CHECK(c.n() == 7);
      CHECK(c.edge_count() == g.edge_count() + s.count());
      // Old adjacencies survive the +1 relabeling.
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          CHECK(c.adjacent(i + 1, j + 1) == g.adjacent(i, j));
    }
  }

  TEST_CASE("delete_vertex relabels order-preservingly") {
    Graph p3 = path(3);
    CHECK(delete_vertex(p3, 2) == path(2));
    Graph mid = delete_vertex(p3, 1);
    CHECK(mid.n() == 2);
    CHECK(mid.edge_count() == 0);
    CHECK_THROWS_AS(delete_vertex(path(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex(p3, 3), std::invalid_argument);
  }

  TEST_CASE("delete_vertex inverts cone") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(5, rng);
      VertexSet s(5, rng() & 0b11111u);
      CHECK(delete_vertex(cone(g, s), 0) == g);
    }
  }

  TEST_CASE("attach_path joins the far end of a new path to S") {
    Graph tri = complete_graph(3);
    Graph k4 = attach_path(tri, VertexSet::all(3), 1);
    CHECK(k4 == complete_graph(4));

    Graph g = attach_path(path(2), VertexSet::single(2, 1), 2);
    // Expected: 0-1-3-2 is a path on 4 vertices (new path 2-3, end 3
    // joined to old vertex 1).
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(2, 3));
    CHECK(g.adjacent(3, 1));
    CHECK_FALSE(g.adjacent(2, 1));
    CHECK(isomorphic_small(g, path(4)));
    CHECK_THROWS_AS(attach_path(tri, VertexSet::all(3), 0),
                    std::invalid_argument);
  }

  TEST_CASE("attach_path edge count is |E| + m - 1 + |S|") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(5, rng);
      VertexSet s(5, rng() & 0b11111u);
      int m = 1 + static_cast<int>(rng() % 3);
      Graph a = attach_path(g, s, m);
      CHECK(a.n() == 5 + m);
      CHECK(a.edge_count() == g.edge_count() + m - 1 + s.count());
    }
  }
}

TEST_SUITE("graph.predicates") {
  TEST_CASE("degrees are sorted ascending") {
    Graph star = Graph::from_edges(
        4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(degrees(star) == DegreeSequence{1, 1, 1, 3});
  }

  TEST_CASE("regularity") {
    CHECK(is_regular(cycle_graph(5)));
    CHECK(is_regular(complete_graph(4)));
    CHECK(is_regular(Graph(3)));
    CHECK(is_regular(path(1)));
    CHECK(is_regular(path(2)));
    CHECK_FALSE(is_regular(path(3)));
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(path(1)));
    CHECK(is_connected(path(8)));
    CHECK(is_connected(cycle_graph(6)));
    CHECK_FALSE(is_connected(Graph(2)));
    Graph two_edges = Graph::from_edges(
        4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));
  }
}

TEST_SUITE("graph.graph6") {
  TEST_CASE("known encodings") {
    CHECK(to_graph6(path(2)) == "A_");
    CHECK(to_graph6(path(3)) == "Bg");
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(path(7)) == "FhCGG");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(Graph(2)) == "A?");
    Graph star5 = Graph::from_edges(
        5,
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(to_graph6(star5) == "Ds_");
    Graph k33 = Graph::from_edges(
        6, std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5},
                                            {1, 3}, {1, 4}, {1, 5},
                                            {2, 3}, {2, 4}, {2, 5}});
    CHECK(to_graph6(k33) == "EFz_");
  }

  TEST_CASE("known decodings") {
    CHECK(from_graph6("A_") == path(2));
    CHECK(from_graph6("Bg") == path(3));
    CHECK(from_graph6("FhCGG") == path(7));
    CHECK(from_graph6("C~") == complete_graph(4));
    Graph petersen = from_graph6("IheA@GUAo");
    CHECK(petersen.n() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(is_regular(petersen));
    CHECK(degrees(petersen) == DegreeSequence(10, 3));
    Graph rand12 = from_graph6("Kd?N|G?_CPAR");
    CHECK(rand12.n() == 12);
    CHECK(rand12.edge_count() == 21);
  }

  TEST_CASE("round trip over random graphs up to 32 vertices") {
    std::mt19937 rng(17);
    for (int n = 1; n <= 32; ++n) {
      for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(n, rng);
        std::string code = to_graph6(g);
        CHECK(from_graph6(code) == g);
        for (char c : code) {
          CHECK(c >= 63);
          CHECK(c <= 126);
        }
      }
    }
  }

  TEST_CASE("strict parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);

    // Size byte above the 32-vertex limit.
    CHECK_THROWS_AS(from_graph6("a?"), Graph6ParseError);
    try {
      from_graph6("a?");
    } catch (const Graph6ParseError& e) {
      CHECK(e.offset() == 0);
    }

    // Truncated body: P7 needs 21 bits = 4 body bytes.
    CHECK_THROWS_AS(from_graph6("FhCG"), Graph6ParseError);

    // Trailing bytes after a complete code.
    CHECK_THROWS_AS(from_graph6("A_A_"), Graph6ParseError);
    try {
      from_graph6("A_A_");
    } catch (const Graph6ParseError& e) {
      CHECK(e.offset() == 2);
    }

    // Byte outside the printable graph6 range.
    CHECK_THROWS_AS(from_graph6("A\n"), Graph6ParseError);
    CHECK_THROWS_AS(from_graph6(" A_"), Graph6ParseError);

    // Nonzero padding bits: P2 has one data bit; the remaining five
    // padding bits must be zero. "A" + chr(63+1) sets a padding bit.
    CHECK_THROWS_AS(from_graph6("A@"), Graph6ParseError);
    try {
      from_graph6("A@");
    } catch (const Graph6ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }

  TEST_CASE("line parser skips blanks and reports line numbers") {
    std::vector<Graph> gs = parse_graph6_lines("A_\r\n\nBg\nFhCGG\n");
    REQUIRE(gs.size() == 3);
    CHECK(gs[0] == path(2));
    CHECK(gs[1] == path(3));
    CHECK(gs[2] == path(7));

    CHECK(parse_graph6_lines("").empty());

    try {
      parse_graph6_lines("A_\nA@\n");
      CHECK(false);
    } catch (const Graph6ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }

  TEST_CASE("triangle bit packing round trips") {
    std::mt19937 rng(19);
    for (int n = 1; n <= 11; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(n, rng);
        CHECK(graph_from_triangle_bits(n, triangle_bits(g)) == g);
      }
    }
    // Bit 0 is x(0,1) and the packing is column-major: for n = 3 the
    // order is x(0,1), x(0,2), x(1,2).
    Graph g = graph_from_triangle_bits(3, 0b101u);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
    CHECK(g == path(3));
    CHECK_THROWS_AS(graph_from_triangle_bits(12, 0u), std::invalid_argument);
  }
}

}  // namespace
}  // namespace qwc
