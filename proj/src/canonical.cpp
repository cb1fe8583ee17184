#include "mostar/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "mostar/error.hpp"
#include "mostar/graph6.hpp"

namespace mostar {

namespace {

using Cells = std::vector<Word>;  // ordered partition, one mask per cell
using Code = std::array<Word, 64>;

// Splits every cell by the number of neighbours each member has in each
// splitter cell until the partition is equitable. Decisions depend only on
// cell positions and counts, so relabelling the input relabels the result.
void refine(int n, const Word *adj, Cells &cells) {
  std::array<int, 64> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && cells.size() < std::size_t(n);
         ++s) {
      const Word splitter = cells[s];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const Word cell = cells[x];
        if (std::popcount(cell) == 1) continue;
        int lo = 64;
        int hi = -1;
        for (Word w = cell; w != 0; w &= w - 1) {
          const int v = std::countr_zero(w);
          count[v] = std::popcount(adj[v] & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) continue;
        Cells fragments;
        for (int c = lo; c <= hi; ++c) {
          Word frag = 0;
          for (Word w = cell; w != 0; w &= w - 1) {
            const int v = std::countr_zero(w);
            if (count[v] == c) frag |= Word{1} << v;
          }
          if (frag != 0) fragments.push_back(frag);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                     fragments.begin(), fragments.end());
        x += fragments.size() - 1;
        changed = true;
      }
    }
  }
}

class Search {
 public:
  Search(int n, const Word *adj) : n_(n), adj_(adj) {}

  void run() {
    Cells cells{n_ == 64 ? ~Word{0} : (Word{1} << n_) - 1};
    std::vector<int> prefix;
    descend(cells, prefix);
  }

  const std::vector<int> &labeling() const { return best_lab_; }
  const Code &code() const { return best_code_; }

 private:
  void descend(Cells cells, std::vector<int> &prefix) {
    refine(n_, adj_, cells);
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;
    const Word cell = cells[target];

    std::vector<int> explored;
    std::vector<int> orbit;
    std::size_t orbits_from = static_cast<std::size_t>(-1);
    for (Word w = cell; w != 0; w &= w - 1) {
      const int v = std::countr_zero(w);
      if (!explored.empty()) {
        if (orbits_from != automorphisms_.size()) {
          orbit = stabilizer_orbits(prefix);
          orbits_from = automorphisms_.size();
        }
        const bool seen = std::any_of(explored.begin(), explored.end(),
                                      [&](int u) { return orbit[u] == orbit[v]; });
        if (seen) continue;
      }
      Cells child = cells;
      child[target] = cell & ~(Word{1} << v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target),
                   Word{1} << v);
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  // Orbits of the group generated by the known automorphisms that fix every
  // vertex of prefix.
  std::vector<int> stabilizer_orbits(const std::vector<int> &prefix) const {
    std::vector<int> root(n_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto &gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(gamma[x]);
        if (a != b) root[a] = b;
      }
    }
    for (int x = 0; x < n_; ++x) root[x] = find(x);
    return root;
  }

  void leaf(const Cells &cells) {
    std::vector<int> lab(n_);
    std::array<int, 64> pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = std::countr_zero(cells[i]);
      pos[lab[i]] = i;
    }
    Code code{};
    for (int i = 0; i < n_; ++i) {
      Word r = 0;
      for (Word w = adj_[lab[i]]; w != 0; w &= w - 1) {
        r |= Word{1} << pos[std::countr_zero(w)];
      }
      code[i] = r;
    }
    if (best_lab_.empty()) {
      best_code_ = first_code_ = code;
      best_lab_ = first_lab_ = lab;
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, lab);
    } else if (code == best_code_) {
      record_automorphism(best_lab_, lab);
    } else if (std::lexicographical_compare(code.begin(), code.begin() + n_,
                                            best_code_.begin(),
                                            best_code_.begin() + n_)) {
      best_code_ = code;
      best_lab_ = lab;
    }
  }

  void record_automorphism(const std::vector<int> &from,
                           const std::vector<int> &to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  int n_;
  const Word *adj_;
  Code best_code_{};
  Code first_code_{};
  std::vector<int> best_lab_;
  std::vector<int> first_lab_;
  std::vector<std::vector<int>> automorphisms_;
};

std::array<Word, 64> single_word_rows(const Graph &g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(Errc::OutOfRange,
                "canonical labeling supports at most " +
                    std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  std::array<Word, 64> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

}  // namespace

Graph Certificate::graph() const { return decode_graph6(bytes_); }

std::string detail::canonical_graph6(int n, const Word *rows) {
  Search search(n, rows);
  search.run();
  return encode_graph6_rows(n, search.code().data());
}

Certificate canonical_certificate(const Graph &g) {
  const auto rows = single_word_rows(g);
  return Certificate(detail::canonical_graph6(g.order(), rows.data()));
}

std::vector<Vertex> canonical_labeling(const Graph &g) {
  const auto rows = single_word_rows(g);
  Search search(g.order(), rows.data());
  search.run();
  return search.labeling();
}

}  // namespace mostar
