// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// `--order10` adds the optional order-10 census row (long).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mostar/analytics.hpp"
#include "mostar/canonical.hpp"
#include "mostar/constructions.hpp"
#include "mostar/enumeration.hpp"
#include "mostar/error.hpp"
#include "mostar/graph6.hpp"
#include "mostar/invariants.hpp"
#include "oracles.hpp"

using namespace mostar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the failing details for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string &what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::string s;
    for (const auto &f : failures_) s += "\n    " + f;
    if (failed_ > failures_.size()) s += "\n    ...";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

int g_failed = 0;

void report(int id, const std::string &title, const std::function<void(Check &, std::string &)> &body) {
  Check check;
  std::string note;
  const auto t0 = Clock::now();
  try {
    body(check, note);
  } catch (const std::exception &e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
  std::cout << (check.ok() ? "PASS" : "FAIL") << "  " << id << ". " << title << " ["
            << timing << (note.empty() ? "" : "; " + note) << "]" << check.detail() << std::endl;
  if (!check.ok()) ++g_failed;
}

std::string vc(const ValueCount &v) {
  return std::to_string(v.value) + " (" + std::to_string(v.count) + ")";
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::vector<std::string> &args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str()};
}

struct Row {
  int n;
  std::uint64_t count;
  ValueCount min, max, mode;
  std::string avg;
};

// min/max/mode with multiplicities and 3-place averages.
const std::vector<Row> kTable1 = {
    {3, 2, {0, 1}, {2, 1}, {2, 1}, "1.000"},
    {4, 6, {0, 2}, {6, 1}, {4, 3}, "3.000"},
    {5, 21, {0, 2}, {12, 2}, {8, 6}, "6.857"},
    {6, 112, {0, 5}, {24, 1}, {12, 21}, "11.670"},
    {7, 853, {0, 4}, {40, 1}, {20, 95}, "18.129"},
    {8, 11117, {0, 15}, {60, 2}, {24, 847}, "25.402"},
    {9, 261080, {0, 23}, {90, 1}, {32, 14652}, "33.741"},
};

// Rows Mo = 2..10, columns n = 3..9.
const std::vector<std::vector<std::uint64_t>> kTable2 = {
    {1, 0, 1, 1, 2, 0, 0},   {0, 0, 0, 0, 0, 0, 1},      {0, 3, 2, 3, 12, 18, 56},
    {0, 0, 0, 0, 0, 0, 0},   {0, 1, 3, 3, 14, 41, 103},  {0, 0, 2, 0, 1, 0, 0},
    {0, 0, 6, 16, 31, 105, 387}, {0, 0, 0, 1, 3, 5, 15}, {0, 0, 3, 8, 24, 113, 480},
};

// Reference cells contradicted by the brute-force recount (and, for n <= 7,
// by an independent graph atlas).
struct Erratum {
  int mo;
  int n;
  std::uint64_t reference;
  std::uint64_t counted;
};
const std::vector<Erratum> kTable2Errata = {{6, 6, 3, 7}, {9, 8, 5, 3}, {7, 9, 0, 4}};

}  // namespace

int main(int argc, char **argv) {
  const bool order10 = argc > 1 && std::string(argv[1]) == "--order10";
  Census census(0);

  if (order10) {
    report(0, "order 10 census row", [&](Check &c, std::string &note) {
      const auto stream = generate_connected(10);
      const auto row = stats_row(stream);
      note = std::to_string(row.count) + " graphs";
      c.expect(row.count == 11716571, "count " + std::to_string(row.count));
      c.expect(row.min == ValueCount{0, 120}, "min " + vc(row.min));
      c.expect(row.max == ValueCount{126, 1}, "max " + vc(row.max));
      c.expect(row.mode == ValueCount{40, 545116}, "mode " + vc(row.mode));
      c.expect(row.average_3dp() == "43.174", "avg " + row.average_3dp());
    });
    return g_failed == 0 ? 0 : 1;
  }

  report(1, "connected-graph census n=1..9", [&](Check &c, std::string &note) {
    const std::vector<std::uint64_t> expected{1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    const auto t0 = Clock::now();
    for (int n = 1; n <= 8; ++n) {
      const auto got = census.stream(n).size();
      c.expect(got == expected[n - 1], "n=" + std::to_string(n) + " count " + std::to_string(got));
    }
    const double small = seconds_since(t0);
    const auto t9 = Clock::now();
    const auto got9 = census.stream(9).size();
    const double large = seconds_since(t9);
    c.expect(got9 == expected[8], "n=9 count " + std::to_string(got9));
    c.expect(small < 10.0, "n<=8 took " + std::to_string(small) + "s");
    c.expect(large < 300.0, "n=9 took " + std::to_string(large) + "s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "n<=8 %.2fs, n=9 %.2fs", small, large);
    note = buf;
  });

  report(2, "census statistics rows n=3..9", [&](Check &c, std::string &) {
    for (const auto &want : kTable1) {
      const auto got = stats_from_histogram(want.n, census.histogram(want.n));
      const std::string tag = "n=" + std::to_string(want.n) + " ";
      c.expect(got.count == want.count, tag + "count");
      c.expect(got.min == want.min, tag + "min " + vc(got.min));
      c.expect(got.max == want.max, tag + "max " + vc(got.max));
      c.expect(got.mode == want.mode, tag + "mode " + vc(got.mode));
      c.expect(got.average_3dp() == want.avg, tag + "avg " + got.average_3dp());
      // The rendering is derived from the exact ratio of the summed index.
      std::int64_t sum = 0;
      for (const auto &[v, k] : census.histogram(want.n).counts()) sum += v * static_cast<std::int64_t>(k);
      c.expect(got.average == Rational::reduced(sum, static_cast<std::int64_t>(got.count)),
               tag + "average not the exact mean");
    }
  });

  report(3, "realizer counts Mo=2..10 by order 3..9", [&](Check &c, std::string &note) {
    const auto table = realizer_table(census, 9, 10);
    // Brute-force recount over the census, independent of the index code.
    std::vector<std::vector<std::uint64_t>> recount(9, std::vector<std::uint64_t>(7, 0));
    for (int n = 3; n <= 9; ++n) {
      const auto &stream = census.stream(n);
      for (std::size_t i = 0; i < stream.size(); ++i) {
        const auto mo = oracle::mostar(stream[i]);
        if (mo >= 2 && mo <= 10) ++recount[mo - 2][n - 3];
      }
    }
    int errata = 0;
    for (int p = 2; p <= 10; ++p)
      for (int n = 3; n <= 9; ++n) {
        const auto got = table.at(p, n);
        const auto reference = kTable2[p - 2][n - 3];
        const std::string cell = "Mo=" + std::to_string(p) + " n=" + std::to_string(n) + ": ";
        c.expect(got == recount[p - 2][n - 3],
                 cell + std::to_string(got) + " vs recount " + std::to_string(recount[p - 2][n - 3]));
        const auto erratum = std::find_if(kTable2Errata.begin(), kTable2Errata.end(),
                                          [&](const Erratum &e) { return e.mo == p && e.n == n; });
        if (erratum == kTable2Errata.end()) {
          c.expect(got == reference, cell + std::to_string(got) + " != reference " + std::to_string(reference));
        } else {
          c.expect(got == erratum->counted && reference == erratum->reference,
                   cell + "erratum no longer reproduces");
          note += (errata++ ? ", " : "reference cells off: ") + cell.substr(0, cell.size() - 2) + " " +
                  std::to_string(reference) + "->" + std::to_string(got);
        }
      }
  });

  report(4, "order-8 distribution by parity", [&](Check &c, std::string &) {
    const auto &h = census.histogram(8);
    const auto even = h.even();
    const auto odd = h.odd();
    c.expect(even.peak == ValueCount{24, 847}, "even peak");
    c.expect(odd.peak && odd.peak->count == 311, "odd peak count");
    c.expect(odd.min == 9 && odd.max == 47, "odd range");
    c.expect(even.min == 0 && even.max == 60, "even range");
  });

  report(5, "witness for every p in 0..2000 except 1", [&](Check &c, std::string &note) {
    const auto t0 = Clock::now();
    for (std::int64_t p = 0; p <= 2000; ++p) {
      if (p == 1) continue;
      const auto plan = witness(p);
      c.expect(plan.certified_mo == p && mostar_index(plan.graph) == p,
               "p=" + std::to_string(p));
      c.expect(is_connected(plan.graph), "p=" + std::to_string(p) + " disconnected");
    }
    const double took = seconds_since(t0);
    c.expect(took < 30.0, "sweep took " + std::to_string(took) + "s");
    bool rejected = false;
    try {
      witness(1);
    } catch (const Error &e) {
      rejected = e.code() == Errc::NotRealizable;
    }
    c.expect(rejected, "witness(1) not rejected as NotRealizable");
    c.expect(run_cli({"witness", "1"}).code == 3, "cli witness 1 exit code");
    char buf[32];
    std::snprintf(buf, sizeof buf, "sweep %.2fs", took);
    note = buf;
  });

  report(6, "tree witnesses and exhaustive tree filter", [&](Check &c, std::string &) {
    for (std::int64_t p = 0; p <= 10000; ++p) {
      if (p % 2 == 1) {
        bool rejected = false;
        try {
          tree_witness(p);
        } catch (const Error &e) {
          rejected = e.code() == Errc::OddTarget;
        }
        c.expect(rejected, "odd p=" + std::to_string(p) + " accepted");
        continue;
      }
      const auto plan = tree_witness(p);
      const auto profile = structural_profile(plan.graph);
      c.expect(plan.certified_mo == p && profile.is_tree && profile.is_chemical,
               "p=" + std::to_string(p));
    }
    // Independent of the suite code: scan trees in the census directly.
    for (int n = 2; n <= 9; ++n) {
      const std::int64_t lo = (n - 1) * (n - 1) / 2;
      const std::int64_t hi = static_cast<std::int64_t>(n - 1) * (n - 2);
      const auto path = canonical_certificate(path_graph(n));
      const auto star = canonical_certificate(star_graph(n));
      int at_lo = 0, at_hi = 0;
      const auto &stream = census.stream(n);
      for (std::size_t i = 0; i < stream.size(); ++i) {
        const Graph g = stream[i];
        if (g.size() != n - 1) continue;
        const auto mo = mostar_index(g);
        const std::string tag = "n=" + std::to_string(n) + " Mo=" + std::to_string(mo);
        c.expect(mo % 2 == 0 && mo >= lo && mo <= hi, tag + " outside bounds or odd");
        const auto cert = canonical_certificate(g);
        if (mo == lo) {
          ++at_lo;
          c.expect(cert == path, tag + " lower extreme is not the path");
        }
        if (mo == hi) {
          ++at_hi;
          c.expect(cert == star, tag + " upper extreme is not the star");
        }
      }
      c.expect(at_lo == 1 && at_hi == 1, "n=" + std::to_string(n) + " extremes not unique");
    }
    const auto suite = verify_suite(census, "trees", 9);
    c.expect(suite.passed(), "trees suite reports a counterexample");
  });

  report(7, "small-gap searches", [&](Check &c, std::string &) {
    for (int n = 1; n <= 9; ++n) {
      const auto &h = census.histogram(n);
      c.expect(h.count(1) == 0, "Mo=1 at n=" + std::to_string(n));
      if (n <= 6)
        for (int p : {3, 5}) c.expect(h.count(p) == 0, "Mo=" + std::to_string(p) + " at n=" + std::to_string(n));
    }
    const auto &s7 = census.stream(7);
    for (std::size_t i = 0; i < s7.size(); ++i) {
      const Graph g = s7[i];
      const auto mo = mostar_index(g);
      if (mo == 1 || mo == 3 || mo == 5) {
        c.expect(!structural_profile(g).has_pendant_vertex, "order-7 pendant graph with Mo=" + std::to_string(mo));
      }
    }
    const auto &s9 = census.stream(9);
    std::vector<Graph> found;
    for (std::size_t i = 0; i < s9.size(); ++i) {
      const Graph g = s9[i];
      if (oracle::mostar(g) == 3) found.push_back(g);
    }
    c.expect(found.size() == 1, "order-9 Mo=3 graphs: " + std::to_string(found.size()));
    if (found.size() != 1) return;
    const Graph &g = found.front();
    const auto profile = structural_profile(g);
    c.expect(profile.bridges.empty(), "has a bridge");
    c.expect(profile.cut_vertices.empty(), "has a cut vertex");
    c.expect(std::all_of(profile.degrees.begin(), profile.degrees.end(),
                         [](int d) { return d == 3 || d == 4; }),
             "degree outside {3,4}");
    c.expect(profile.has_triangle, "no triangle");
    for (const auto &r : edge_reports(g)) c.expect(r.phi <= 1, "edge contribution above 1");
    const auto band = transmission_band(g);
    c.expect(band.values.size() == 2 && band.values[1] == band.values[0] + 1,
             "transmissions not two consecutive values");
    c.expect(canonical_certificate(g) == canonical_certificate(three_layer(3).graph),
             "not isomorphic to the three-layer graph for 3");
  });

  report(8, "layered families", [&](Check &c, std::string &note) {
    int built = 0;
    for (int m = 0; m <= 8; ++m)
      for (int k = 1; k <= 4; ++k) {
        const auto plan = layered_even(m, k);
        c.expect(oracle::mostar(plan.graph) == 2 * m,
                 "m=" + std::to_string(m) + " k=" + std::to_string(k));
        ++built;
      }
    for (int k = 1; k <= 4; ++k) {
      c.expect(canonical_certificate(layered_even(0, k).graph) ==
                   canonical_certificate(cycle_graph(4 * k + 4)),
               "layered_even(0," + std::to_string(k) + ") is not C_" + std::to_string(4 * k + 4));
    }
    for (int p : {3, 5, 7, 9, 11}) {
      const auto plan = three_layer(p);
      c.expect(plan.graph.order() == 3 * p && oracle::mostar(plan.graph) == p,
               "three_layer(" + std::to_string(p) + ")");
    }
    note = std::to_string(built) + " layered graphs";
  });

  report(9, "closed forms and maxima", [&](Check &c, std::string &) {
    for (int n = 1; n <= 30; ++n) {
      c.expect(oracle::mostar(path_graph(n)) == (n - 1) * (n - 1) / 2, "P_" + std::to_string(n));
      c.expect(oracle::mostar(star_graph(n)) == static_cast<std::int64_t>(n - 1) * std::max(n - 2, 0),
               "S_" + std::to_string(n));
    }
    for (int n = 4; n <= 20; ++n) {
      // Three arms 1, k, n-2-k realise the path value plus 2k.
      for (int k = 1; 1 + k <= n - 2 - k; ++k) {
        const auto g = starlike(n, {1, k, n - 2 - k});
        c.expect(oracle::mostar(g) == (n - 1) * (n - 1) / 2 + 2 * k,
                 "T_" + std::to_string(n) + "(1," + std::to_string(k) + ")");
      }
    }
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        c.expect(oracle::mostar(split_graph(a, b)) == a * b * (b - 1),
                 "split " + std::to_string(a) + "," + std::to_string(b));
        c.expect(oracle::mostar(complete_bipartite_graph(a, b)) == a * b * std::abs(a - b),
                 "K_" + std::to_string(a) + "," + std::to_string(b));
      }
    const std::vector<std::uint64_t> mult{1, 1, 2, 1, 1, 2, 1};
    for (int n = 3; n <= 9; ++n) {
      const int t = n / 3;
      const std::int64_t formula = static_cast<std::int64_t>(t) * (n - t) * (n - t - 1);
      const auto max = stats_from_histogram(n, census.histogram(n)).max;
      c.expect(max == ValueCount{formula, mult[n - 3]}, "n=" + std::to_string(n) + " max " + vc(max));
    }
  });

  report(10, "first-realizer orders up to 9", [&](Check &c, std::string &) {
    const std::vector<std::pair<int, int>> want{{2, 3}, {4, 4}, {6, 4}, {7, 5},
                                                 {8, 5}, {9, 6}, {10, 5}, {3, 9}};
    for (const auto &[p, n] : want) {
      const auto got = first_realizer_order(census, p, 9);
      c.expect(got == n, "Mo=" + std::to_string(p) + " -> " + (got ? std::to_string(*got) : "none"));
    }
    c.expect(!first_realizer_order(census, 5, 9).has_value(), "Mo=5 found below the cap");
  });

  report(11, "property suites", [&](Check &c, std::string &) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> order(2, 20);
    std::uniform_real_distribution<double> density(0.0, 0.5);
    for (int trial = 0; trial < 1000; ++trial) {
      const Graph g = oracle::random_connected(rng, order(rng), density(rng));
      const auto tr = transmissions(g);
      for (const auto &r : edge_reports(g)) {
        c.expect(tr[r.u] - tr[r.v] == r.n_v - r.n_u, "identity fails, trial " + std::to_string(trial));
      }
      c.expect(mostar_index(g) == oracle::mostar(g), "Mo differs from oracle, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = oracle::random_connected(rng, order(rng), density(rng));
      const auto mo = mostar_index(g);
      const auto cert = canonical_certificate(g);
      for (int i = 0; i < 100; ++i) {
        const Graph h = g.relabeled(oracle::random_permutation(rng, g.order()));
        c.expect(mostar_index(h) == mo, "Mo changed under relabeling");
        c.expect(canonical_certificate(h) == cert, "certificate changed under relabeling");
      }
    }
    for (int n = 1; n <= 8; ++n) {
      const auto &stream = census.stream(n);
      for (const auto &rec : stream.records()) {
        const Graph g = decode_graph6(rec);
        c.expect(encode_graph6(g) == rec && oracle::graph6(g) == rec, "round trip " + rec);
      }
    }
    for (const std::vector<std::string> &args :
         std::vector<std::vector<std::string>>{{"enumerate", "--n", "8"},
                                               {"stats", "--n", "8", "--histogram"},
                                               {"table2", "--n-max", "8", "--mo-max", "12"},
                                               {"verify", "--suite", "all", "--n-max", "8"}}) {
      std::vector<std::string> one{"--threads", "1"}, four{"--threads", "4"};
      one.insert(one.end(), args.begin(), args.end());
      four.insert(four.end(), args.begin(), args.end());
      const auto a = run_cli(one);
      const auto b = run_cli(four);
      c.expect(a.code == 0 && b.code == 0 && a.out == b.out && !a.out.empty(),
               "cli " + args[0] + " differs across thread counts");
    }
  });

  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed")
            << std::endl;
  return g_failed == 0 ? 0 : 1;
}
