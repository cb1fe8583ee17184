#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

enum class Family {
  Cycle,
  Path,
  CompletePlusPendant,
  EvenCyclePlusPendant,
  OddCyclePendantChord,
  ThreeLayer,
  LayeredEven,
  TreePath,
  TreeStarlike,
  OddCycleOnePendant,
  OddCycleTwoPendants,
  CycleTriangleShared,
};

/// Upper-case tag, e.g. "COMPLETE_PLUS_PENDANT".
std::string_view to_string(Family family);

/// A construction recipe together with the graph it produced and the index
/// recomputed from that graph. Only constructible through the builders below,
/// which refuse to return a plan whose certified index differs from target.
struct WitnessPlan {
  std::int64_t target = 0;
  Family family = Family::Cycle;
  std::vector<int> params;
  Graph graph;
  std::int64_t certified_mo = 0;
};

/// Named families: "path" n, "cycle" n, "complete" n, "star" n (= K_{1,n-1}),
/// "complete_bipartite" a b, "cocktail_party" n, "split" a b (K_a joined to b
/// independent vertices). Throws Error{BadParams}.
Graph family(std::string_view kind, std::span<const int> params);
Graph family(std::string_view kind, std::initializer_list<int> params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cocktail_party_graph(int n);
Graph split_graph(int clique, int independent);

/// Starlike tree: a centre (vertex 0) with one pendant path per entry of
/// lengths. Requires at least three paths, each of length >= 1, summing to
/// n - 1.
Graph starlike(int n, std::span<const int> lengths);
Graph starlike(int n, std::initializer_list<int> lengths);

/// Certified graph with Mostar index p. Throws Error{NotRealizable} for p == 1.
WitnessPlan witness(std::int64_t p);

/// Witness with maximum degree <= 4. Throws Error{NotRealizable} for p == 1
/// and Error{Unknown} for p == 5.
WitnessPlan chemical_witness(std::int64_t p);

/// Sparser even witnesses built on cycles: odd cycle plus one pendant
/// (p = 4r), odd cycle plus two pendants on one vertex (p = 8r + 2), even
/// cycle sharing a vertex with a triangle (p = 8s - 2, s >= 2).
/// Throws Error{BadParams} when p has no representative in these families.
WitnessPlan cycle_even_witness(std::int64_t p);

/// Path or T_n(1, k, n-2-k); a tree with maximum degree <= 3.
/// Throws Error{OddTarget} for odd p.
WitnessPlan tree_witness(std::int64_t p);

/// Cycle C_p joined to p independent vertices minus the index-matching, plus a
/// K_p attached to the independent layer by the index-matching. 3p vertices.
WitnessPlan three_layer(int p);

/// Cyclic chain of 4k+4 levels; 2k+1 levels are cliques K_{m+1}, the rest
/// single vertices, consecutive levels completely joined. Mostar index 2m
/// for every k >= 1.
WitnessPlan layered_even(int m, int k);

/// Level sizes used by layered_even, indexed by cyclic level position.
std::vector<int> layered_even_levels(int m, int k);

}  // namespace mostar
