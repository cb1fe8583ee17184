#include "mostar/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <istream>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "mostar/canonical.hpp"
#include "mostar/error.hpp"
#include "mostar/graph6.hpp"

namespace mostar {

Graph GraphStream::operator[](std::size_t i) const {
  return decode_graph6(records_[i]);
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

GraphStream extend_connected(const GraphStream &parents, unsigned threads) {
  if (parents.empty()) return GraphStream{};
  const int parent_order = parents[0].order();
  const int n = parent_order + 1;
  if (n > kMaxGeneratedOrder) {
    throw Error(Errc::OutOfRange, "generation is limited to order " +
                                      std::to_string(kMaxGeneratedOrder));
  }
  const unsigned workers = resolve_threads(threads);
  std::vector<std::unordered_set<std::string>> found(workers);
  std::atomic<std::size_t> next{0};

  auto work = [&](unsigned id) {
    auto &local = found[id];
    std::array<Word, 64> rows{};
    const Word all = (Word{1} << parent_order) - 1;
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= parents.size()) break;
      const Graph parent = parents[i];
      for (int v = 0; v < parent_order; ++v) rows[v] = parent.row(v)[0];
      // The new vertex joins a nonempty neighbour subset; a connected parent
      // keeps every child connected.
      for (Word subset = 1; subset <= all; ++subset) {
        rows[parent_order] = subset;
        for (int v = 0; v < parent_order; ++v) {
          rows[v] = (parent.row(v)[0] & all) |
                    (((subset >> v) & 1U) << parent_order);
        }
        local.insert(detail::canonical_graph6(n, rows.data()));
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto &t : pool) t.join();

  for (unsigned t = 1; t < workers; ++t) {
    found[0].merge(found[t]);
    found[t].clear();
  }
  std::vector<std::string> records(found[0].begin(), found[0].end());
  std::sort(records.begin(), records.end());
  return GraphStream(std::move(records));
}

GraphStream generate_connected(int n, unsigned threads) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw Error(Errc::OutOfRange, "order " + std::to_string(n) +
                                      " outside 1.." +
                                      std::to_string(kMaxGeneratedOrder));
  }
  GraphStream level(std::vector<std::string>{"@"});
  for (int k = 2; k <= n; ++k) level = extend_connected(level, threads);
  return level;
}

GraphStream read_graph6_stream(std::istream &in) {
  return GraphStream(read_graph6_lines(in));
}

void write_graph6_stream(std::ostream &out, const GraphStream &stream) {
  for (const auto &r : stream.records()) out << r << '\n';
}

}  // namespace mostar
