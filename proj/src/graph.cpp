#include "mostar/graph.hpp"

#include <bit>
#include <string>

#include "mostar/error.hpp"

namespace mostar {

int Graph::degree(Vertex v) const {
  int d = 0;
  for (Word w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int i = 0; i < words_; ++i) {
    for (Word w = r[i]; w != 0; w &= w - 1) {
      out.push_back(i * kWordBits + std::countr_zero(w));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(Errc::BadParams, "relabeling has wrong length");
  }
  GraphBuilder b(n_);
  for (const Edge &e : edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(Errc::OutOfRange,
                "order " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxOrder));
  }
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = g_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ") has index >= " +
                                      std::to_string(n));
  }
  if (u == v) {
    throw Error(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
  }
  if (g_.adjacent(u, v)) return *this;
  const auto w = static_cast<std::size_t>(g_.words_);
  g_.bits_[u * w + v / kWordBits] |= Word{1} << (v % kWordBits);
  g_.bits_[v * w + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++g_.m_;
  return *this;
}

Graph GraphBuilder::build() const { return g_; }

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                              edges.size()));
}

}  // namespace mostar
