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

#ifndef QWC_GRAPH_HPP
#define QWC_GRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwc {

/// Simple undirected graph on vertices 0..n-1, n <= 32. Adjacency rows
/// are single machine words; instances are immutable values.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
  /// Neighbourhood of v as a bitmask.
  std::uint32_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcount(adj_[v]); }
  int edge_count() const;

  bool operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int i = 0; i < n_; ++i)
      if (adj_[i] != other.adj_[i]) return false;
    return true;
  }

 private:
  int n_;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

/// Subset of {0,..,n-1}, stored as a bitmask over an ambient vertex count.
class VertexSet {
 public:
  VertexSet(int ambient, std::uint32_t bits);

  static VertexSet empty_set(int ambient) { return {ambient, 0u}; }
  static VertexSet single(int ambient, int v);
  static VertexSet all(int ambient);
  static VertexSet of(int ambient, std::span<const int> members);

  int ambient() const { return ambient_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1u; }
  int count() const { return __builtin_popcount(bits_); }
  std::vector<int> members() const;

  bool operator==(const VertexSet& other) const = default;

 private:
  int ambient_;
  std::uint32_t bits_;
};

/// Sorted ascending; one entry per vertex.
using DegreeSequence = std::vector<int>;

// Constructions. All return new graphs; inputs are never modified.

/// Path on n vertices, edges {i, i+1}. Throws for n = 0.
Graph path(int n);

/// Adds one new vertex adjacent to exactly the vertices of S. The new
/// vertex gets index 0; old vertex i becomes i+1.
Graph cone(const Graph& x, const VertexSet& s);

/// Removes v; remaining vertices are relabeled order-preservingly.
/// Throws for n = 1 (the empty graph is not representable).
Graph delete_vertex(const Graph& x, int v);

/// Disjointly adds a path on m new vertices n..n+m-1 and joins the
/// highest-index end vertex n+m-1 to every vertex of S.
Graph attach_path(const Graph& x, const VertexSet& s, int m);

DegreeSequence degrees(const Graph& x);
bool is_regular(const Graph& x);
bool is_connected(const Graph& x);

/// Raised on malformed graph6 input; offset is the byte where parsing
/// failed.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& message, size_t offset);
  size_t offset() const { return offset_; }
  /// Message without the appended byte offset.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  size_t offset_;
};

/// Bit-exact graph6 encoding: first byte n+63, then the upper triangle
/// column by column, packed big-endian into 6-bit groups, each +63.
std::string to_graph6(const Graph& x);

/// Strict parser: expects exactly one graph6 code with no surrounding
/// whitespace or newline. Accepts n <= 32 only.
Graph from_graph6(std::string_view text);

/// Parses one graph6 code per line. Blank lines are skipped; "\r\n"
/// endings are tolerated. Parse errors are rethrown with the line
/// number prepended.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Builds a graph from its packed upper-triangle bits in graph6 column
/// order (bit 0 = x(0,1), most significant first). n <= 11.
Graph graph_from_triangle_bits(int n, std::uint64_t bits);

/// Packed upper-triangle bits of x in graph6 column order; inverse of
/// graph_from_triangle_bits. n <= 11.
std::uint64_t triangle_bits(const Graph& x);

}  // namespace qwc

#endif  // QWC_GRAPH_HPP
