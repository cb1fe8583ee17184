#include "mostar/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "bfs.hpp"
#include "mostar/error.hpp"

namespace mostar {

namespace {

void require_connected(bool connected) {
  if (!connected) {
    throw Error(Errc::Disconnected, "graph is not connected");
  }
}

// Long thin graphs (cycles with a few extras) have hundreds of layers; a
// queue over adjacency lists beats rescanning bit rows once per layer.
bool prefer_queue(const Graph &g) {
  return 2 * static_cast<std::int64_t>(g.size()) <=
         static_cast<std::int64_t>(g.order()) * g.words();
}

class QueueBfs {
 public:
  explicit QueueBfs(const Graph &g) : start_(g.order() + 1, 0), queue_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbors(v);
      adj_.insert(adj_.end(), nb.begin(), nb.end());
      start_[v + 1] = static_cast<int>(adj_.size());
    }
  }

  // Fills dist (kUnreachable where not reached); returns the reach count.
  int run(Vertex source, std::uint16_t *dist) {
    const int n = static_cast<int>(queue_.size());
    std::fill(dist, dist + n, DistanceMatrix::kUnreachable);
    dist[source] = 0;
    queue_[0] = source;
    int head = 0;
    int tail = 1;
    while (head < tail) {
      const Vertex x = queue_[head++];
      for (int i = start_[x]; i < start_[x + 1]; ++i) {
        const Vertex y = adj_[i];
        if (dist[y] == DistanceMatrix::kUnreachable) {
          dist[y] = static_cast<std::uint16_t>(dist[x] + 1);
          queue_[tail++] = y;
        }
      }
    }
    return tail;
  }

 private:
  std::vector<int> start_;
  std::vector<Vertex> adj_;
  std::vector<Vertex> queue_;
};

}  // namespace

bool DistanceMatrix::connected() const {
  return std::none_of(d_.begin(), d_.end(),
                      [](std::uint16_t x) { return x == kUnreachable; });
}

std::optional<int> DistanceMatrix::diameter() const {
  int best = 0;
  for (std::uint16_t x : d_) {
    if (x == kUnreachable) return std::nullopt;
    best = std::max<int>(best, x);
  }
  return best;
}

bool is_connected(const Graph &g) {
  detail::LayeredBfs bfs(g);
  return bfs.run(0, [](int, std::span<const Word>) {}) == g.order();
}

DistanceMatrix distances(const Graph &g) {
  DistanceMatrix d(g.order());
  if (prefer_queue(g)) {
    QueueBfs bfs(g);
    for (Vertex s = 0; s < g.order(); ++s) bfs.run(s, &d(s, 0));
    return d;
  }
  detail::LayeredBfs bfs(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs.run(s, [&](int level, std::span<const Word> layer) {
      detail::for_each_bit(layer, [&](Vertex x) {
        d(s, x) = static_cast<std::uint16_t>(level);
      });
    });
  }
  return d;
}

std::vector<std::int64_t> transmissions(const Graph &g) {
  std::vector<std::int64_t> tr(g.order(), 0);
  if (prefer_queue(g)) {
    QueueBfs bfs(g);
    std::vector<std::uint16_t> dist(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
      require_connected(bfs.run(s, dist.data()) == g.order());
      for (std::uint16_t x : dist) tr[s] += x;
    }
    return tr;
  }
  detail::LayeredBfs bfs(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::int64_t sum = 0;
    const int reached =
        bfs.run(s, [&](int level, std::span<const Word> layer) {
          std::int64_t count = 0;
          for (Word w : layer) count += std::popcount(w);
          sum += count * level;
        });
    require_connected(reached == g.order());
    tr[s] = sum;
  }
  return tr;
}

std::int64_t wiener_index(const Graph &g) {
  std::int64_t total = 0;
  for (std::int64_t t : transmissions(g)) total += t;
  return total / 2;
}

EdgeReport edge_report(const Graph &g, const DistanceMatrix &d, Vertex u,
                       Vertex v) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v || !g.adjacent(u, v)) {
    throw Error(Errc::NotAnEdge, "(" + std::to_string(u) + "," +
                                     std::to_string(v) + ") is not an edge");
  }
  EdgeReport r{u, v, 0, 0, 0, 0};
  for (Vertex x = 0; x < n; ++x) {
    const auto du = d(x, u);
    const auto dv = d(x, v);
    require_connected(du != DistanceMatrix::kUnreachable &&
                      dv != DistanceMatrix::kUnreachable);
    if (du < dv) {
      ++r.n_u;
    } else if (dv < du) {
      ++r.n_v;
    } else {
      ++r.eq;
    }
  }
  r.phi = std::abs(r.n_u - r.n_v);
  return r;
}

EdgeReport edge_report(const Graph &g, Vertex u, Vertex v) {
  const DistanceMatrix d = distances(g);
  require_connected(d.connected());
  return edge_report(g, d, u, v);
}

std::vector<EdgeReport> edge_reports(const Graph &g) {
  const DistanceMatrix d = distances(g);
  require_connected(d.connected());
  std::vector<EdgeReport> out;
  for (const Edge &e : g.edges()) out.push_back(edge_report(g, d, e.u, e.v));
  return out;
}

std::int64_t mostar_index(const Graph &g,
                          const std::vector<std::int64_t> &transmission) {
  std::int64_t mo = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    detail::for_each_bit(g.row(u), [&](Vertex v) {
      if (u < v) mo += std::abs(transmission[u] - transmission[v]);
    });
  }
  return mo;
}

std::int64_t mostar_index(const Graph &g) {
  return mostar_index(g, transmissions(g));
}

bool is_distance_balanced(const Graph &g) { return mostar_index(g) == 0; }

TransmissionBand transmission_band(const Graph &g) {
  const auto tr = transmissions(g);
  const std::set<std::int64_t> distinct(tr.begin(), tr.end());
  TransmissionBand band;
  band.values.assign(distinct.begin(), distinct.end());
  band.consecutive_pair =
      band.values.size() == 2 && band.values[1] == band.values[0] + 1;
  return band;
}

namespace {

struct LowLink {
  std::vector<Edge> bridges;
  std::vector<Vertex> cut_vertices;
};

// Iterative Tarjan low-link over every component.
LowLink low_link(const Graph &g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<bool> is_cut(n, false);
  LowLink out;
  int tick = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = tick++;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      if (next_child[v] < adj[v].size()) {
        const Vertex w = adj[v][next_child[v]++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = tick++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > disc[p]) out.bridges.push_back({std::min(p, v), std::max(p, v)});
      if (p != root && low[v] >= disc[p]) is_cut[p] = true;
    }
    if (root_children > 1) is_cut[root] = true;
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

bool bipartite(const Graph &g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool triangle(const Graph &g) {
  for (const Edge &e : g.edges()) {
    auto a = g.row(e.u);
    auto b = g.row(e.v);
    for (int i = 0; i < g.words(); ++i) {
      if (a[i] & b[i]) return true;
    }
  }
  return false;
}

}  // namespace

StructuralProfile structural_profile(const Graph &g) {
  StructuralProfile p;
  const int n = g.order();
  p.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) p.degrees[v] = g.degree(v);
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.connected = is_connected(g);
  p.is_tree = p.connected && g.size() == n - 1;
  p.is_regular = p.min_degree == p.max_degree;
  p.is_chemical = p.max_degree <= 4;
  p.is_bipartite = bipartite(g);
  p.has_pendant_vertex =
      std::find(p.degrees.begin(), p.degrees.end(), 1) != p.degrees.end();
  p.has_triangle = triangle(g);
  p.diameter = distances(g).diameter();
  auto ll = low_link(g);
  p.bridges = std::move(ll.bridges);
  p.cut_vertices = std::move(ll.cut_vertices);
  p.is_two_connected = p.connected && n >= 3 && p.cut_vertices.empty();
  p.is_two_edge_connected = p.connected && n >= 2 && p.bridges.empty();
  return p;
}

Graph read_edge_list(std::istream &in) {
  std::string line;
  std::optional<GraphBuilder> builder;
  int line_no = 0;
  auto malformed = [&](const std::string &why) {
    return Error(Errc::MalformedRecord,
                 "edge list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!builder) {
      std::string tag;
      long long n = 0;
      if (!(fields >> tag >> n) || tag != "n") {
        throw malformed("expected header 'n <count>'");
      }
      if (n < 1 || n > kMaxOrder) {
        throw Error(Errc::OutOfRange, "order " + std::to_string(n) +
                                          " outside 1.." +
                                          std::to_string(kMaxOrder));
      }
      builder.emplace(static_cast<int>(n));
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) {
      throw malformed("expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= builder->order() || v >= builder->order()) {
      throw Error(Errc::OutOfRange, "edge index out of range on line " +
                                        std::to_string(line_no));
    }
    builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!builder) throw malformed("missing header 'n <count>'");
  return builder->build();
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << "n " << g.order() << '\n';
  for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace mostar
