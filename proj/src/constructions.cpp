#include "mostar/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mostar/error.hpp"
#include "mostar/invariants.hpp"

namespace mostar {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Cycle: return "CYCLE";
    case Family::Path: return "PATH";
    case Family::CompletePlusPendant: return "COMPLETE_PLUS_PENDANT";
    case Family::EvenCyclePlusPendant: return "EVEN_CYCLE_PLUS_PENDANT";
    case Family::OddCyclePendantChord: return "ODD_CYCLE_PENDANT_CHORD";
    case Family::ThreeLayer: return "THREE_LAYER";
    case Family::LayeredEven: return "LAYERED_EVEN";
    case Family::TreePath: return "TREE_PATH";
    case Family::TreeStarlike: return "TREE_STARLIKE";
    case Family::OddCycleOnePendant: return "ODD_CYCLE_ONE_PENDANT";
    case Family::OddCycleTwoPendants: return "ODD_CYCLE_TWO_PENDANTS";
    case Family::CycleTriangleShared: return "CYCLE_TRIANGLE_SHARED";
  }
  return "UNKNOWN";
}

namespace {

[[noreturn]] void bad_params(const std::string &what) {
  throw Error(Errc::BadParams, what);
}

// Vertex counts are checked before allocation so oversized requests surface
// as OutOfRange rather than a builder failure halfway through.
void check_order(std::int64_t n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(Errc::OutOfRange, "construction needs " + std::to_string(n) +
                                      " vertices; limit is " +
                                      std::to_string(kMaxOrder));
  }
}

void add_cycle(GraphBuilder &b, int first, int len) {
  for (int i = 0; i < len; ++i) b.add_edge(first + i, first + (i + 1) % len);
}

WitnessPlan certify(std::int64_t target, Family family, std::vector<int> params,
                    Graph graph) {
  const std::int64_t mo = mostar_index(graph);
  if (mo != target) {
    throw Error(Errc::CertificationFailure,
                std::string(to_string(family)) + " built index " +
                    std::to_string(mo) + " instead of " +
                    std::to_string(target));
  }
  return WitnessPlan{target, family, std::move(params), std::move(graph), mo};
}

// K_{m+1} with one pendant vertex: Mo = 2m.
Graph complete_plus_pendant(int m) {
  check_order(std::int64_t{m} + 2);
  GraphBuilder b(m + 2);
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) b.add_edge(i, j);
  b.add_edge(0, m + 1);
  return b.build();
}

// C_len with a pendant vertex on vertex 0.
Graph cycle_plus_pendants(int len, int pendants) {
  check_order(std::int64_t{len} + pendants);
  GraphBuilder b(len + pendants);
  add_cycle(b, 0, len);
  for (int i = 0; i < pendants; ++i) b.add_edge(0, len + i);
  return b.build();
}

// C_{2m+1} labelled v_1..v_{2m+1} (vertex i-1), pendant on v_{m+1}, chord
// v_2 v_{2m+1}: Mo = 4m+1.
Graph odd_cycle_pendant_chord(int m) {
  const int len = 2 * m + 1;
  check_order(std::int64_t{len} + 1);
  GraphBuilder b(len + 1);
  add_cycle(b, 0, len);
  b.add_edge(m, len);
  b.add_edge(1, len - 1);
  return b.build();
}

// C_{2s} sharing vertex 0 with a triangle: Mo = 8s - 2.
Graph cycle_triangle_shared(int s) {
  const int len = 2 * s;
  check_order(std::int64_t{len} + 2);
  GraphBuilder b(len + 2);
  add_cycle(b, 0, len);
  b.add_edge(0, len).add_edge(0, len + 1).add_edge(len, len + 1);
  return b.build();
}

int as_int(std::int64_t v) {
  if (v > kMaxOrder * 4) throw Error(Errc::OutOfRange, "target too large");
  return static_cast<int>(v);
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) bad_params("path needs n >= 1");
  check_order(n);
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) bad_params("cycle needs n >= 3");
  check_order(n);
  GraphBuilder b(n);
  add_cycle(b, 0, n);
  return b.build();
}

Graph complete_graph(int n) {
  if (n < 1) bad_params("complete graph needs n >= 1");
  check_order(n);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

Graph star_graph(int n) {
  if (n < 1) bad_params("star needs n >= 1");
  check_order(n);
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) b.add_edge(0, i);
  return b.build();
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) bad_params("complete bipartite needs a, b >= 1");
  check_order(std::int64_t{a} + b);
  GraphBuilder g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g.build();
}

Graph cocktail_party_graph(int n) {
  if (n < 4 || n % 2 != 0) bad_params("cocktail party needs even n >= 4");
  check_order(n);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j != i + n / 2) b.add_edge(i, j);
  return b.build();
}

Graph split_graph(int clique, int independent) {
  if (clique < 1 || independent < 0) {
    bad_params("split graph needs clique >= 1, independent >= 0");
  }
  check_order(std::int64_t{clique} + independent);
  GraphBuilder b(clique + independent);
  for (int i = 0; i < clique; ++i) {
    for (int j = i + 1; j < clique; ++j) b.add_edge(i, j);
    for (int j = 0; j < independent; ++j) b.add_edge(i, clique + j);
  }
  return b.build();
}

Graph family(std::string_view kind, std::span<const int> params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      bad_params(std::string(kind) + " takes " + std::to_string(count) +
                 " parameter(s)");
    }
  };
  if (kind == "path") { want(1); return path_graph(params[0]); }
  if (kind == "cycle") { want(1); return cycle_graph(params[0]); }
  if (kind == "complete") { want(1); return complete_graph(params[0]); }
  if (kind == "star") { want(1); return star_graph(params[0]); }
  if (kind == "complete_bipartite") {
    want(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (kind == "cocktail_party") { want(1); return cocktail_party_graph(params[0]); }
  if (kind == "split") { want(2); return split_graph(params[0], params[1]); }
  bad_params("unknown family '" + std::string(kind) + "'");
}

Graph family(std::string_view kind, std::initializer_list<int> params) {
  return family(kind, std::span<const int>(params.begin(), params.size()));
}

Graph starlike(int n, std::span<const int> lengths) {
  if (lengths.size() < 3) bad_params("starlike tree needs at least 3 paths");
  if (std::any_of(lengths.begin(), lengths.end(), [](int l) { return l < 1; })) {
    bad_params("starlike path lengths must be >= 1");
  }
  const std::int64_t total =
      std::accumulate(lengths.begin(), lengths.end(), std::int64_t{0});
  if (total != std::int64_t{n} - 1) {
    bad_params("starlike path lengths must sum to n - 1");
  }
  check_order(n);
  GraphBuilder b(n);
  int next = 1;
  for (int len : lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      b.add_edge(prev, next);
      prev = next++;
    }
  }
  return b.build();
}

Graph starlike(int n, std::initializer_list<int> lengths) {
  return starlike(n, std::span<const int>(lengths.begin(), lengths.size()));
}

WitnessPlan witness(std::int64_t p) {
  if (p < 0) bad_params("target must be nonnegative");
  if (p == 1) {
    throw Error(Errc::NotRealizable,
                "1 is not the Mostar index of any simple connected graph");
  }
  if (p == 0) return certify(0, Family::Cycle, {3}, cycle_graph(3));
  if (p == 2) return certify(2, Family::Path, {3}, path_graph(3));
  if (p == 3 || p == 5) return three_layer(static_cast<int>(p));
  const int t = as_int(p);
  if (t % 2 == 0) {
    const int m = t / 2;
    return certify(p, Family::CompletePlusPendant, {m}, complete_plus_pendant(m));
  }
  if (t % 4 == 3) {
    const int m = (t + 1) / 4;
    return certify(p, Family::EvenCyclePlusPendant, {m},
                   cycle_plus_pendants(2 * m, 1));
  }
  const int m = (t - 1) / 4;
  return certify(p, Family::OddCyclePendantChord, {m}, odd_cycle_pendant_chord(m));
}

WitnessPlan chemical_witness(std::int64_t p) {
  if (p < 0) bad_params("target must be nonnegative");
  if (p == 1) {
    throw Error(Errc::NotRealizable,
                "1 is not the Mostar index of any simple connected graph");
  }
  if (p == 5) {
    throw Error(Errc::Unknown, "no chemical graph with Mostar index 5 is known");
  }
  if (p % 2 == 0) return tree_witness(p);
  return witness(p);
}

WitnessPlan cycle_even_witness(std::int64_t p) {
  if (p < 0 || p % 2 != 0) bad_params("cycle-based even witness needs even p");
  const int t = as_int(p);
  if (t % 4 == 0 && t >= 4) {
    const int r = t / 4;
    return certify(p, Family::OddCycleOnePendant, {r},
                   cycle_plus_pendants(2 * r + 1, 1));
  }
  if (t % 8 == 2 && t >= 10) {
    const int r = (t - 2) / 8;
    return certify(p, Family::OddCycleTwoPendants, {r},
                   cycle_plus_pendants(2 * r + 1, 2));
  }
  if (t % 8 == 6 && t >= 14) {
    const int s = (t + 2) / 8;
    return certify(p, Family::CycleTriangleShared, {s}, cycle_triangle_shared(s));
  }
  bad_params("no cycle-based even witness for " + std::to_string(p));
}

WitnessPlan tree_witness(std::int64_t p) {
  if (p < 0) bad_params("target must be nonnegative");
  if (p % 2 != 0) {
    throw Error(Errc::OddTarget, "trees have even Mostar index; got " +
                                     std::to_string(p));
  }
  auto lower = [](std::int64_t n) { return (n - 1) * (n - 1) / 2; };
  auto upper = [](std::int64_t n) { return n * n / 2; };
  // lower(n) ~ n^2/2, so start just below sqrt(2p) and scan up.
  std::int64_t n = std::max<std::int64_t>(
      2, static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(p))) - 2);
  while (n > 2 && lower(n) > p) --n;
  while (!(lower(n) <= p && p < upper(n))) ++n;
  check_order(n);
  const std::int64_t k = (p - lower(n)) / 2;
  const int order = static_cast<int>(n);
  if (k == 0) return certify(p, Family::TreePath, {order}, path_graph(order));
  const int kk = static_cast<int>(k);
  return certify(p, Family::TreeStarlike, {order, 1, kk, order - 2 - kk},
                 starlike(order, {1, kk, order - 2 - kk}));
}

WitnessPlan three_layer(int p) {
  if (p < 3) bad_params("three-layer construction needs p >= 3");
  check_order(3 * std::int64_t{p});
  // cycle: 0..p-1, independent layer: p..2p-1, clique: 2p..3p-1
  GraphBuilder b(3 * p);
  add_cycle(b, 0, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j) b.add_edge(i, p + j);
    }
    for (int j = i + 1; j < p; ++j) b.add_edge(2 * p + i, 2 * p + j);
    b.add_edge(p + i, 2 * p + i);
  }
  return certify(p, Family::ThreeLayer, {p}, b.build());
}

std::vector<int> layered_even_levels(int m, int k) {
  if (m < 0 || k < 1) bad_params("layered family needs m >= 0, k >= 1");
  const int count = 4 * k + 4;
  std::vector<int> sizes(count, 1);
  for (int j = 1; j <= 2 * k + 1; j += 2) sizes[j] = m + 1;
  for (int j = 2 * k + 4; j <= 4 * k + 2; j += 2) sizes[j] = m + 1;
  return sizes;
}

WitnessPlan layered_even(int m, int k) {
  const auto sizes = layered_even_levels(m, k);
  const std::int64_t total =
      std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
  check_order(total);
  std::vector<int> start(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), start.begin() + 1);
  GraphBuilder b(static_cast<int>(total));
  const int levels = static_cast<int>(sizes.size());
  for (int j = 0; j < levels; ++j) {
    const int nj = (j + 1) % levels;
    for (int a = start[j]; a < start[j + 1]; ++a) {
      for (int c = a + 1; c < start[j + 1]; ++c) b.add_edge(a, c);
      for (int c = start[nj]; c < start[nj + 1]; ++c) b.add_edge(a, c);
    }
  }
  return certify(2 * std::int64_t{m}, Family::LayeredEven, {m, k}, b.build());
}

}  // namespace mostar
