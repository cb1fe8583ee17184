#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

inline constexpr int kMaxGeneratedOrder = 10;

/// A sequence of graphs held as graph6 records and decoded on access.
/// Generated streams hold one canonical record per isomorphism class, sorted;
/// streams read from files keep the file's order and may mix orders.
class GraphStream {
 public:
  GraphStream() = default;
  explicit GraphStream(std::vector<std::string> records)
      : records_(std::move(records)) {}

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  Graph operator[](std::size_t i) const;
  const std::vector<std::string> &records() const { return records_; }

 private:
  std::vector<std::string> records_;
};

/// Every connected graph of order n up to isomorphism, sorted by certificate.
/// threads == 0 uses the hardware concurrency. Throws Error{OutOfRange}
/// outside 1..kMaxGeneratedOrder.
GraphStream generate_connected(int n, unsigned threads = 0);

/// Extends a sorted connected level of order n-1 to order n.
GraphStream extend_connected(const GraphStream &parents, unsigned threads = 0);

GraphStream read_graph6_stream(std::istream &in);
void write_graph6_stream(std::ostream &out, const GraphStream &stream);

unsigned resolve_threads(unsigned threads);

}  // namespace mostar
