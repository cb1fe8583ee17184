#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mostar {

using Vertex = int;
using Word = std::uint64_t;

inline constexpr int kWordBits = 64;
/// Largest order accepted by Graph. Certificates and the enumerator use
/// single-word rows and are limited further (see kMaxCanonicalOrder).
inline constexpr int kMaxOrder = 4096;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

/// Immutable simple undirected graph on vertices 0..n-1, stored as n bit rows.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return m_; }
  int words() const { return words_; }

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph &, const Graph &) = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area for a Graph. Duplicate edges collapse.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return g_.n_; }
  GraphBuilder &add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  Graph build() const;

 private:
  Graph g_;
};

/// Throws Error{OutOfRange} for n outside 1..kMaxOrder or a bad index and
/// Error{SelfLoop} for a pair (i,i).
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

}  // namespace mostar
