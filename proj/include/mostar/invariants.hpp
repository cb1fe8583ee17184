#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// All-pairs hop counts. Pairs in different components hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }

  std::uint16_t operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::uint16_t &operator()(Vertex u, Vertex v) {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

  bool connected() const;
  /// Largest finite entry; nullopt when some pair is unreachable.
  std::optional<int> diameter() const;

 private:
  int n_ = 0;
  std::vector<std::uint16_t> d_;
};

struct EdgeReport {
  Vertex u = 0;
  Vertex v = 0;
  int n_u = 0;  // strictly closer to u
  int n_v = 0;  // strictly closer to v
  int eq = 0;
  int phi = 0;

  friend bool operator==(const EdgeReport &, const EdgeReport &) = default;
};

struct StructuralProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool is_tree = false;
  bool is_regular = false;
  bool is_chemical = false;
  bool is_bipartite = false;
  bool has_pendant_vertex = false;
  bool has_triangle = false;
  std::optional<int> diameter;
  std::vector<Edge> bridges;
  std::vector<Vertex> cut_vertices;
  bool is_two_connected = false;
  bool is_two_edge_connected = false;
};

struct TransmissionBand {
  std::vector<std::int64_t> values;  // distinct, ascending
  bool consecutive_pair = false;     // values == {k, k+1}
};

bool is_connected(const Graph &g);

DistanceMatrix distances(const Graph &g);

/// Tr(v) = sum of distances from v. Throws Error{Disconnected}.
std::vector<std::int64_t> transmissions(const Graph &g);
std::int64_t wiener_index(const Graph &g);

/// Compares the two distance rows of u and v. Throws Error{NotAnEdge} when
/// uv is not an edge and Error{Disconnected} for disconnected inputs.
EdgeReport edge_report(const Graph &g, Vertex u, Vertex v);
EdgeReport edge_report(const Graph &g, const DistanceMatrix &d, Vertex u,
                       Vertex v);
std::vector<EdgeReport> edge_reports(const Graph &g);

/// Mostar index: sum over edges of |n_u - n_v|. Evaluated through the
/// transmission identity n_u - n_v = Tr(v) - Tr(u).
std::int64_t mostar_index(const Graph &g);
std::int64_t mostar_index(const Graph &g,
                          const std::vector<std::int64_t> &transmission);

StructuralProfile structural_profile(const Graph &g);

bool is_distance_balanced(const Graph &g);

TransmissionBand transmission_band(const Graph &g);

/// Edge-list text: a line "n <count>" then one "u v" pair per line.
/// Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);

}  // namespace mostar
