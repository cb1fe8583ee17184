#pragma once

#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar::detail {

/// Word-parallel breadth-first search. Calls visit(level, layer) once per
/// nonempty layer, where layer is the bitset of vertices at that distance.
/// Returns the number of vertices reached.
class LayeredBfs {
 public:
  explicit LayeredBfs(const Graph &g)
      : g_(g),
        visited_(g.words()),
        frontier_(g.words()),
        next_(g.words()) {}

  template <class Visit>
  int run(Vertex source, Visit &&visit) {
    const int words = g_.words();
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    visited_[source / kWordBits] |= Word{1} << (source % kWordBits);
    frontier_[source / kWordBits] = visited_[source / kWordBits];
    int reached = 1;
    int level = 0;
    visit(level, std::span<const Word>(frontier_));
    for (;;) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int i = 0; i < words; ++i) {
        for (Word w = frontier_[i]; w != 0; w &= w - 1) {
          auto r = g_.row(i * kWordBits + std::countr_zero(w));
          for (int j = 0; j < words; ++j) next_[j] |= r[j];
        }
      }
      int found = 0;
      for (int j = 0; j < words; ++j) {
        next_[j] &= ~visited_[j];
        visited_[j] |= next_[j];
        found += std::popcount(next_[j]);
      }
      if (found == 0) break;
      reached += found;
      ++level;
      visit(level, std::span<const Word>(next_));
      std::swap(frontier_, next_);
    }
    return reached;
  }

 private:
  const Graph &g_;
  std::vector<Word> visited_;
  std::vector<Word> frontier_;
  std::vector<Word> next_;
};

template <class F>
void for_each_bit(std::span<const Word> bits, F &&f) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (Word w = bits[i]; w != 0; w &= w - 1) {
      f(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
    }
  }
}

}  // namespace mostar::detail
