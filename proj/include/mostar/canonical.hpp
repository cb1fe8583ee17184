#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

inline constexpr int kMaxCanonicalOrder = 62;

/// Canonical byte string of an isomorphism class: the graph6 record of the
/// canonically relabelled graph (order prefix, then upper-triangle bits).
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string &bytes() const { return bytes_; }
  /// The canonical representative itself.
  Graph graph() const;

  friend bool operator==(const Certificate &, const Certificate &) = default;
  friend std::strong_ordering operator<=>(const Certificate &a,
                                          const Certificate &b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

/// Throws Error{OutOfRange} above kMaxCanonicalOrder.
Certificate canonical_certificate(const Graph &g);

/// Canonical order: position i holds the original vertex labels[i].
std::vector<Vertex> canonical_labeling(const Graph &g);

namespace detail {

/// Canonical graph6 record for single-word rows; the enumerator's hot path.
std::string canonical_graph6(int n, const Word *rows);

}  // namespace detail

}  // namespace mostar
