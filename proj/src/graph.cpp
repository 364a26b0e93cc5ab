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

#include "qwc/graph.hpp"

#include <algorithm>
#include <bit>

namespace qwc {

namespace {

using Edge = std::pair<int, int>;

void check_vertex_count(int n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("vertex count must be in [1, 32], got " +
                                std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_vertex_count(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed");
    g.adj_[i] |= 1u << j;
    g.adj_[j] |= 1u << i;
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

VertexSet::VertexSet(int ambient, std::uint32_t bits)
    : ambient_(ambient), bits_(bits) {
  check_vertex_count(ambient);
  if (ambient < 32 && (bits >> ambient) != 0)
    throw std::invalid_argument("vertex set has members outside the graph");
}

VertexSet VertexSet::single(int ambient, int v) {
  if (v < 0 || v >= ambient)
    throw std::invalid_argument("vertex out of range");
  return {ambient, 1u << v};
}

VertexSet VertexSet::all(int ambient) {
  check_vertex_count(ambient);
  std::uint32_t bits =
      ambient == 32 ? ~0u : ((1u << ambient) - 1u);
  return {ambient, bits};
}

VertexSet VertexSet::of(int ambient, std::span<const int> members) {
  std::uint32_t bits = 0;
  for (int v : members) {
    if (v < 0 || v >= ambient)
      throw std::invalid_argument("vertex out of range");
    bits |= 1u << v;
  }
  return {ambient, bits};
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for (int v = 0; v < ambient_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

Graph path(int n) {
  check_vertex_count(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cone(const Graph& x, const VertexSet& s) {
  if (s.ambient() != x.n())
    throw std::invalid_argument("vertex set belongs to a different graph");
  int n = x.n();
  check_vertex_count(n + 1);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.adjacent(i, j)) edges.emplace_back(i + 1, j + 1);
  for (int v : s.members()) edges.emplace_back(0, v + 1);
  return Graph::from_edges(n + 1, edges);
}

Graph delete_vertex(const Graph& x, int v) {
  int n = x.n();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  if (n == 1)
    throw std::invalid_argument("cannot delete the only vertex");
  auto relabel = [v](int i) { return i < v ? i : i - 1; };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i != v && j != v && x.adjacent(i, j))
        edges.emplace_back(relabel(i), relabel(j));
  return Graph::from_edges(n - 1, edges);
}

Graph attach_path(const Graph& x, const VertexSet& s, int m) {
  if (s.ambient() != x.n())
    throw std::invalid_argument("vertex set belongs to a different graph");
  if (m < 1) throw std::invalid_argument("path length must be positive");
  int n = x.n();
  check_vertex_count(n + m);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.adjacent(i, j)) edges.emplace_back(i, j);
  for (int k = 0; k + 1 < m; ++k) edges.emplace_back(n + k, n + k + 1);
  for (int v : s.members()) edges.emplace_back(n + m - 1, v);
  return Graph::from_edges(n + m, edges);
}

DegreeSequence degrees(const Graph& x) {
  DegreeSequence d(x.n());
  for (int v = 0; v < x.n(); ++v) d[v] = x.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

bool is_regular(const Graph& x) {
  for (int v = 1; v < x.n(); ++v)
    if (x.degree(v) != x.degree(0)) return false;
  return true;
}

bool is_connected(const Graph& x) {
  std::uint32_t seen = 1u;
  std::uint32_t frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1)
      next |= x.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= frontier;
  }
  std::uint32_t want =
      x.n() == 32 ? ~0u : ((1u << x.n()) - 1u);
  return seen == want;
}

Graph6ParseError::Graph6ParseError(const std::string& message, size_t offset)
    : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
      message_(message),
      offset_(offset) {}

std::string to_graph6(const Graph& x) {
  int n = x.n();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;    // 6-bit group under construction
  int nbits = 0;  // bits already in acc
  auto push_bit = [&](int bit) {
    acc = (acc << 1) | bit;
    if (++nbits == 6) {
      out.push_back(static_cast<char>(acc + 63));
      acc = 0;
      nbits = 0;
    }
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) push_bit(x.adjacent(i, j) ? 1 : 0);
  if (nbits > 0)
    out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw Graph6ParseError("empty input", 0);
  int c0 = static_cast<unsigned char>(text[0]);
  if (c0 < 63 || c0 > 126)
    throw Graph6ParseError("size byte out of range", 0);
  int n = c0 - 63;
  if (n == 0) throw Graph6ParseError("graphs must have a vertex", 0);
  if (n > Graph::kMaxVertices)
    throw Graph6ParseError("vertex count exceeds 32", 0);
  size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
  size_t need = (pairs + 5) / 6;
  if (text.size() < 1 + need)
    throw Graph6ParseError("truncated adjacency data", text.size());
  if (text.size() > 1 + need)
    throw Graph6ParseError("trailing bytes after graph", 1 + need);

  std::vector<std::pair<int, int>> edges;
  size_t bit_index = 0;
  int i = 0, j = 1;
  for (size_t b = 1; b < text.size(); ++b) {
    int c = static_cast<unsigned char>(text[b]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("adjacency byte out of range", b);
    int group = c - 63;
    for (int k = 5; k >= 0; --k, ++bit_index) {
      int bit = (group >> k) & 1;
      if (bit_index >= pairs) {
        if (bit != 0)
          throw Graph6ParseError("nonzero padding bits", b);
        continue;
      }
      if (bit) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(from_graph6(line));
      } catch (const Graph6ParseError& e) {
        throw Graph6ParseError(
            "line " + std::to_string(line_no) + ": " + e.message(),
            e.offset());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

Graph graph_from_triangle_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > 11)
    throw std::invalid_argument("triangle bits support n <= 11 only");
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int i = 0, j = 1;
  for (int b = 0; b < pairs; ++b) {
    if ((bits >> (pairs - 1 - b)) & 1u) edges.emplace_back(i, j);
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  return Graph::from_edges(n, edges);
}

std::uint64_t triangle_bits(const Graph& x) {
  int n = x.n();
  if (n > 11)
    throw std::invalid_argument("triangle bits support n <= 11 only");
  std::uint64_t bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      bits = (bits << 1) | (x.adjacent(i, j) ? 1u : 0u);
  return bits;
}

}  // namespace qwc
