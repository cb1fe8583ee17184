#include "mostar/analytics.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "mostar/constructions.hpp"
#include "mostar/error.hpp"
#include "mostar/graph6.hpp"
#include "mostar/invariants.hpp"

namespace mostar {

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::BadParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::decimal(int places) const {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num < 0;
  const std::int64_t a = negative ? -num : num;
  // round(a * scale / den) with halves going up in magnitude
  const std::int64_t scaled = (2 * a * scale + den) / (2 * den);
  std::string out = std::to_string(scaled / scale);
  if (places > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += '.' + std::string(places - frac.size(), '0') + frac;
  }
  return (negative && scaled != 0 ? "-" : "") + out;
}

void Histogram::add(std::int64_t value, std::uint64_t count) {
  if (count != 0) counts_[value] += count;
}

void Histogram::merge(const Histogram &other) {
  for (const auto &[value, count] : other.counts_) counts_[value] += count;
}

std::uint64_t Histogram::mass() const {
  std::uint64_t total = 0;
  for (const auto &[value, count] : counts_) total += count;
  return total;
}

std::uint64_t Histogram::count(std::int64_t value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

namespace {

ParityView parity_view(const std::map<std::int64_t, std::uint64_t> &counts,
                       int parity) {
  ParityView view;
  for (const auto &[value, count] : counts) {
    if (((value % 2) + 2) % 2 != parity) continue;
    view.mass += count;
    if (!view.min) view.min = value;
    view.max = value;
    if (!view.peak || count >= view.peak->count) view.peak = ValueCount{value, count};
  }
  return view;
}

}  // namespace

ParityView Histogram::even() const { return parity_view(counts_, 0); }
ParityView Histogram::odd() const { return parity_view(counts_, 1); }

ValueCount pick_mode(const Histogram &h) {
  ValueCount best;
  for (const auto &[value, count] : h.counts()) {
    // ascending iteration, so >= keeps the largest of equally frequent values
    if (count >= best.count) best = {value, count};
  }
  return best;
}

namespace {

// Splits [0, size) into chunks handed out to workers on demand.
template <class Fn>
void parallel_chunks(std::size_t size, unsigned threads, Fn &&fn) {
  constexpr std::size_t kChunk = 512;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(
      resolve_threads(threads), std::max<std::size_t>(1, size / kChunk)));
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned id) {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= size) break;
      fn(id, begin, std::min(size, begin + kChunk));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto &t : pool) t.join();
}

unsigned worker_count(std::size_t size, unsigned threads) {
  return static_cast<unsigned>(std::min<std::size_t>(
      resolve_threads(threads), std::max<std::size_t>(1, size / 512)));
}

struct StreamSummary {
  Histogram histogram;
  int min_order = 0;
  int max_order = 0;
};

StreamSummary summarize(const GraphStream &stream, unsigned threads) {
  if (stream.empty()) throw Error(Errc::EmptyStream, "graph stream is empty");
  const unsigned workers = worker_count(stream.size(), threads);
  std::vector<StreamSummary> partial(workers);
  for (auto &p : partial) {
    p.min_order = kMaxOrder + 1;
    p.max_order = 0;
  }
  parallel_chunks(stream.size(), threads,
                  [&](unsigned id, std::size_t begin, std::size_t end) {
                    auto &local = partial[id];
                    for (std::size_t i = begin; i < end; ++i) {
                      const Graph g = stream[i];
                      local.histogram.add(mostar_index(g));
                      local.min_order = std::min(local.min_order, g.order());
                      local.max_order = std::max(local.max_order, g.order());
                    }
                  });
  StreamSummary total = std::move(partial[0]);
  for (unsigned i = 1; i < workers; ++i) {
    total.histogram.merge(partial[i].histogram);
    total.min_order = std::min(total.min_order, partial[i].min_order);
    total.max_order = std::max(total.max_order, partial[i].max_order);
  }
  return total;
}

}  // namespace

Histogram mo_histogram(const GraphStream &stream, unsigned threads) {
  return summarize(stream, threads).histogram;
}

StatsRow stats_from_histogram(int order, const Histogram &h) {
  if (h.empty()) throw Error(Errc::EmptyStream, "histogram is empty");
  StatsRow row;
  row.order = order;
  row.count = h.mass();
  const auto &counts = h.counts();
  row.min = {counts.begin()->first, counts.begin()->second};
  row.max = {counts.rbegin()->first, counts.rbegin()->second};
  row.mode = pick_mode(h);
  std::int64_t sum = 0;
  for (const auto &[value, count] : counts) {
    sum += value * static_cast<std::int64_t>(count);
  }
  row.average = Rational::reduced(sum, static_cast<std::int64_t>(row.count));
  return row;
}

StatsRow stats_row(const GraphStream &stream, unsigned threads) {
  const auto summary = summarize(stream, threads);
  if (summary.min_order != summary.max_order) {
    throw Error(Errc::MixedOrder, "stream mixes orders " +
                                      std::to_string(summary.min_order) +
                                      " and " +
                                      std::to_string(summary.max_order));
  }
  return stats_from_histogram(summary.min_order, summary.histogram);
}

const GraphStream &Census::stream(int n) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw Error(Errc::OutOfRange, "order " + std::to_string(n) +
                                      " outside 1.." +
                                      std::to_string(kMaxGeneratedOrder));
  }
  if (auto it = streams_.find(n); it != streams_.end()) return it->second;
  GraphStream level = n == 1 ? generate_connected(1)
                             : extend_connected(stream(n - 1), threads_);
  return streams_.emplace(n, std::move(level)).first->second;
}

const Histogram &Census::histogram(int n) {
  if (auto it = histograms_.find(n); it != histograms_.end()) return it->second;
  Histogram h = mo_histogram(stream(n), threads_);
  return histograms_.emplace(n, std::move(h)).first->second;
}

RealizerTable realizer_table(Census &census, int n_max, std::int64_t mo_max) {
  if (n_max < 3 || n_max > kMaxGeneratedOrder || mo_max < 2) {
    throw Error(Errc::OutOfRange, "table needs 3 <= n_max <= " +
                                      std::to_string(kMaxGeneratedOrder) +
                                      " and mo_max >= 2");
  }
  RealizerTable table{n_max, mo_max, {}};
  table.counts.assign(static_cast<std::size_t>(mo_max - 1),
                      std::vector<std::uint64_t>(n_max - 2, 0));
  for (int n = 3; n <= n_max; ++n) {
    const Histogram &h = census.histogram(n);
    for (std::int64_t p = 2; p <= mo_max; ++p) {
      table.counts[p - 2][n - 3] = h.count(p);
    }
  }
  return table;
}

RealizerTable realizer_table(int n_max, std::int64_t mo_max, unsigned threads) {
  Census census(threads);
  return realizer_table(census, n_max, mo_max);
}

std::optional<int> first_realizer_order(Census &census, std::int64_t p,
                                        int n_max) {
  if (p < 2 || n_max < 1 || n_max > kMaxGeneratedOrder) {
    throw Error(Errc::OutOfRange, "first realizer needs p >= 2 and n_max <= " +
                                      std::to_string(kMaxGeneratedOrder));
  }
  for (int n = 1; n <= n_max; ++n) {
    if (census.histogram(n).count(p) > 0) return n;
  }
  return std::nullopt;
}

std::optional<int> first_realizer_order(std::int64_t p, int n_max,
                                        unsigned threads) {
  Census census(threads);
  return first_realizer_order(census, p, n_max);
}

bool VerificationReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult &c) {
    return c.proved && c.counterexamples > 0;
  });
}

const ClaimResult *VerificationReport::claim(std::string_view id) const {
  for (const auto &c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::optional<std::int64_t> VerificationReport::observation(
    std::string_view name) const {
  for (const auto &[key, value] : observations) {
    if (key == name) return value;
  }
  return std::nullopt;
}

const std::vector<std::string> &suite_ids() {
  static const std::vector<std::string> ids{
      "trees", "small_gap", "two_connectivity", "transmissions", "conjectures",
      "formulas"};
  return ids;
}

namespace {

// Position of a graph within the census; orders the first counterexample.
using Position = std::pair<int, std::size_t>;

struct Tally {
  std::uint64_t population = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::pair<Position, std::string>> first;

  void observe(bool holds, Position at, const std::string &record) {
    ++population;
    if (holds) return;
    ++counterexamples;
    if (!first || at < first->first) first.emplace(at, record);
  }

  void merge(const Tally &o) {
    population += o.population;
    counterexamples += o.counterexamples;
    if (o.first && (!first || o.first->first < first->first)) first = o.first;
  }

  ClaimResult result(std::string id, bool proved) const {
    ClaimResult r{std::move(id), proved, population, counterexamples, {}};
    if (first) r.first_counterexample = first->second;
    return r;
  }
};

struct GraphView {
  Position at;
  const std::string &record;
  const Graph &graph;
  std::int64_t mo;
};

// Visits every connected graph of order lo..hi with a per-worker State, then
// folds the states with State::merge.
template <class State, class Visit>
State scan(Census &census, int lo, int hi, Visit visit) {
  State total{};
  for (int n = lo; n <= hi; ++n) {
    const GraphStream &stream = census.stream(n);
    const unsigned workers = worker_count(stream.size(), census.threads());
    std::vector<State> partial(workers);
    parallel_chunks(stream.size(), census.threads(),
                    [&](unsigned id, std::size_t begin, std::size_t end) {
                      for (std::size_t i = begin; i < end; ++i) {
                        const Graph g = stream[i];
                        const GraphView view{{n, i}, stream.records()[i], g,
                                             mostar_index(g)};
                        visit(view, partial[id]);
                      }
                    });
    for (const auto &p : partial) total.merge(p);
  }
  return total;
}

template <std::size_t N>
struct Tallies {
  std::array<Tally, N> claims{};
  void merge(const Tallies &o) {
    for (std::size_t i = 0; i < N; ++i) claims[i].merge(o.claims[i]);
  }
};

bool is_small_odd(std::int64_t mo) { return mo == 1 || mo == 3 || mo == 5; }

std::int64_t path_mo(std::int64_t n) { return (n - 1) * (n - 1) / 2; }
std::int64_t star_mo(std::int64_t n) { return (n - 1) * (n - 2); }
std::int64_t max_mo_formula(std::int64_t n) {
  const std::int64_t a = n / 3;
  return a * (n - a) * (n - a - 1);
}

void check_formula(Tally &tally, const Graph &g, std::int64_t expected) {
  tally.observe(mostar_index(g) == expected, {g.order(), 0}, encode_graph6(g));
}

VerificationReport trees_suite(Census &census, int n_max) {
  struct State {
    Tallies<4> t;
    std::map<int, std::set<std::int64_t>> values;
    void merge(const State &o) {
      t.merge(o.t);
      for (const auto &[n, s] : o.values) values[n].insert(s.begin(), s.end());
    }
  };
  auto state = scan<State>(census, 1, n_max, [](const GraphView &v, State &s) {
    const Graph &g = v.graph;
    const int n = g.order();
    if (g.size() != n - 1) return;
    s.values[n].insert(v.mo);
    s.t.claims[0].observe(v.mo % 2 == 0, v.at, v.record);
    if (n <= 3) return;
    s.t.claims[1].observe(path_mo(n) <= v.mo && v.mo <= star_mo(n), v.at, v.record);
    int max_degree = 0;
    for (int u = 0; u < n; ++u) max_degree = std::max(max_degree, g.degree(u));
    s.t.claims[2].observe((v.mo == path_mo(n)) == (max_degree <= 2), v.at, v.record);
    s.t.claims[3].observe((v.mo == star_mo(n)) == (max_degree == n - 1), v.at,
                          v.record);
  });

  Tally starlike_rank;
  for (int n = 4; n <= n_max; ++n) {
    const auto &distinct = state.values[n];
    const std::vector<std::int64_t> sorted(distinct.begin(), distinct.end());
    for (int k = 1; k <= (n - 2) / 2; ++k) {
      const Graph t = starlike(n, {1, k, n - 2 - k});
      const std::int64_t expected = path_mo(n) + 2 * k;
      const bool holds = static_cast<std::size_t>(k) < sorted.size() &&
                         sorted[k] == expected && mostar_index(t) == expected;
      starlike_rank.observe(holds, {n, static_cast<std::size_t>(k)},
                            encode_graph6(t));
    }
  }

  VerificationReport r{"trees", {}, {}};
  r.claims.push_back(state.t.claims[0].result("tree_mostar_even", true));
  r.claims.push_back(state.t.claims[1].result("tree_bounds", true));
  r.claims.push_back(state.t.claims[2].result("tree_lower_extreme_is_path", true));
  r.claims.push_back(state.t.claims[3].result("tree_upper_extreme_is_star", true));
  r.claims.push_back(starlike_rank.result("starlike_kth_smallest", true));
  return r;
}

VerificationReport small_gap_suite(Census &census, int n_max) {
  struct State {
    Tallies<4> t;
    std::map<int, std::int64_t> mo3;
    std::int64_t mo5 = 0;
    void merge(const State &o) {
      t.merge(o.t);
      for (const auto &[n, c] : o.mo3) mo3[n] += c;
      mo5 += o.mo5;
    }
  };
  auto state = scan<State>(census, 1, n_max, [](const GraphView &v, State &s) {
    const int n = v.graph.order();
    s.t.claims[0].observe(v.mo != 1, v.at, v.record);
    if (n <= 6) s.t.claims[1].observe(!is_small_odd(v.mo), v.at, v.record);
    if (n == 7) {
      bool pendant = false;
      for (int u = 0; u < n && !pendant; ++u) pendant = v.graph.degree(u) == 1;
      if (pendant) s.t.claims[2].observe(!is_small_odd(v.mo), v.at, v.record);
    }
    if (n < 9) s.t.claims[3].observe(v.mo != 3, v.at, v.record);
    if (v.mo == 3) ++s.mo3[n];
    if (v.mo == 5) ++s.mo5;
  });
  VerificationReport r{"small_gap", {}, {}};
  r.claims.push_back(state.t.claims[0].result("no_mostar_1", true));
  r.claims.push_back(state.t.claims[1].result("no_1_3_5_up_to_order_6", true));
  r.claims.push_back(
      state.t.claims[2].result("no_1_3_5_order_7_with_pendant", true));
  r.claims.push_back(state.t.claims[3].result("no_mostar_3_below_order_9", false));
  for (int n = 1; n <= n_max; ++n) {
    r.observations.emplace_back("mostar_3_count_order_" + std::to_string(n),
                                state.mo3[n]);
  }
  r.observations.emplace_back("mostar_5_count", state.mo5);
  return r;
}

VerificationReport two_connectivity_suite(Census &census, int n_max) {
  using State = Tallies<1>;
  auto state = scan<State>(census, 1, n_max, [](const GraphView &v, State &s) {
    if (!is_small_odd(v.mo)) return;
    const auto profile = structural_profile(v.graph);
    s.claims[0].observe(profile.bridges.empty() && profile.cut_vertices.empty(),
                        v.at, v.record);
  });
  VerificationReport r{"two_connectivity", {}, {}};
  r.claims.push_back(state.claims[0].result("small_odd_no_bridge_no_cut_vertex", true));
  return r;
}

VerificationReport transmissions_suite(Census &census, int n_max) {
  using State = Tallies<2>;
  auto state = scan<State>(census, 1, n_max, [](const GraphView &v, State &s) {
    if (v.mo != 3) return;
    const auto reports = edge_reports(v.graph);
    const bool small = std::all_of(reports.begin(), reports.end(),
                                   [](const EdgeReport &e) { return e.phi <= 1; });
    s.claims[0].observe(small, v.at, v.record);
    s.claims[1].observe(transmission_band(v.graph).consecutive_pair, v.at, v.record);
  });
  VerificationReport r{"transmissions", {}, {}};
  r.claims.push_back(state.claims[0].result("mostar_3_contributions_0_or_1", true));
  r.claims.push_back(
      state.claims[1].result("mostar_3_two_consecutive_transmissions", true));
  return r;
}

VerificationReport conjectures_suite(Census &census, int n_max) {
  using State = Tallies<3>;
  auto state = scan<State>(census, 1, n_max, [](const GraphView &v, State &s) {
    const Graph &g = v.graph;
    int lo = g.order();
    int hi = 0;
    for (int u = 0; u < g.order(); ++u) {
      lo = std::min(lo, g.degree(u));
      hi = std::max(hi, g.degree(u));
    }
    if (lo == hi) s.claims[0].observe(v.mo % 2 == 0, v.at, v.record);
    if (v.mo == 3) s.claims[1].observe(lo == 3 && hi == 4, v.at, v.record);
    if (v.mo == 3 || v.mo == 5) {
      s.claims[2].observe(structural_profile(g).has_triangle, v.at, v.record);
    }
  });
  VerificationReport r{"conjectures", {}, {}};
  r.claims.push_back(state.claims[0].result("regular_graphs_even", false));
  r.claims.push_back(state.claims[1].result("mostar_3_degrees_3_and_4", false));
  r.claims.push_back(state.claims[2].result("mostar_3_or_5_has_triangle", false));
  return r;
}

VerificationReport formulas_suite(Census &census, int n_max) {
  Tally path;
  Tally star;
  Tally star_like;
  Tally split;
  Tally bipartite;
  for (int n = 1; n <= 30; ++n) {
    check_formula(path, path_graph(n), path_mo(n));
    if (n >= 2) check_formula(star, star_graph(n), star_mo(n));
  }
  for (int n = 4; n <= 20; ++n) {
    for (int k = 1; k <= (n - 2) / 2; ++k) {
      check_formula(star_like, starlike(n, {1, k, n - 2 - k}), path_mo(n) + 2 * k);
    }
  }
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      check_formula(split, split_graph(a, b), std::int64_t{a} * b * (b - 1));
    }
  }
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 7; ++b) {
      check_formula(bipartite, complete_bipartite_graph(a, b),
                    std::int64_t{a} * b * std::abs(a - b));
    }
  }

  Tally maximum;
  VerificationReport r{"formulas", {}, {}};
  for (int n = 3; n <= n_max; ++n) {
    const auto &h = census.histogram(n);
    const auto top = *h.counts().rbegin();
    const std::string record =
        encode_graph6(split_graph(static_cast<int>(n / 3), n - n / 3));
    maximum.observe(top.first == max_mo_formula(n), {n, 0}, record);
    r.observations.emplace_back("max_mostar_order_" + std::to_string(n), top.first);
    r.observations.emplace_back("max_multiplicity_order_" + std::to_string(n),
                                static_cast<std::int64_t>(top.second));
  }
  r.claims.push_back(path.result("path_closed_form", true));
  r.claims.push_back(star.result("star_closed_form", true));
  r.claims.push_back(star_like.result("starlike_closed_form", true));
  r.claims.push_back(split.result("split_closed_form", true));
  r.claims.push_back(bipartite.result("complete_bipartite_closed_form", true));
  r.claims.push_back(maximum.result("max_over_order_matches_split_formula", false));
  return r;
}

}  // namespace

VerificationReport verify_suite(Census &census, std::string_view suite,
                                int n_max) {
  if (n_max < 1 || n_max > kMaxGeneratedOrder) {
    throw Error(Errc::OutOfRange, "n_max outside 1.." +
                                      std::to_string(kMaxGeneratedOrder));
  }
  if (suite == "trees") return trees_suite(census, n_max);
  if (suite == "small_gap") return small_gap_suite(census, n_max);
  if (suite == "two_connectivity") return two_connectivity_suite(census, n_max);
  if (suite == "transmissions") return transmissions_suite(census, n_max);
  if (suite == "conjectures") return conjectures_suite(census, n_max);
  if (suite == "formulas") return formulas_suite(census, n_max);
  throw Error(Errc::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
}

VerificationReport verify_suite(std::string_view suite, int n_max,
                                unsigned threads) {
  Census census(threads);
  return verify_suite(census, suite, n_max);
}

}  // namespace mostar
