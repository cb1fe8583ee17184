#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mostar/enumeration.hpp"

namespace mostar {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);
  /// Rounds half away from zero.
  std::string decimal(int places) const;

  friend bool operator==(const Rational &, const Rational &) = default;
};

struct ValueCount {
  std::int64_t value = 0;
  std::uint64_t count = 0;

  friend bool operator==(const ValueCount &, const ValueCount &) = default;
};

struct ParityView {
  std::uint64_t mass = 0;
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
  std::optional<ValueCount> peak;
};

/// Mostar value -> number of graphs. Merging is associative and commutative.
class Histogram {
 public:
  void add(std::int64_t value, std::uint64_t count = 1);
  void merge(const Histogram &other);

  std::uint64_t mass() const;
  std::uint64_t count(std::int64_t value) const;
  const std::map<std::int64_t, std::uint64_t> &counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  ParityView even() const;
  ParityView odd() const;

  friend bool operator==(const Histogram &, const Histogram &) = default;

 private:
  std::map<std::int64_t, std::uint64_t> counts_;
};

/// Most frequent value; ties go to the largest value.
ValueCount pick_mode(const Histogram &h);

struct StatsRow {
  int order = 0;
  std::uint64_t count = 0;
  ValueCount min;
  ValueCount max;
  ValueCount mode;
  Rational average;

  std::string average_3dp() const { return average.decimal(3); }
};

/// Throws Error{EmptyStream}.
Histogram mo_histogram(const GraphStream &stream, unsigned threads = 0);
/// Throws Error{EmptyStream} or Error{MixedOrder}.
StatsRow stats_row(const GraphStream &stream, unsigned threads = 0);
StatsRow stats_from_histogram(int order, const Histogram &h);

/// Memoised connected-graph levels and their histograms.
class Census {
 public:
  explicit Census(unsigned threads = 0) : threads_(threads) {}

  const GraphStream &stream(int n);
  const Histogram &histogram(int n);
  unsigned threads() const { return threads_; }

 private:
  unsigned threads_;
  std::map<int, GraphStream> streams_;
  std::map<int, Histogram> histograms_;
};

/// counts[p - 2][n - 3] = number of connected n-vertex graphs with Mo = p.
struct RealizerTable {
  int n_max = 0;
  std::int64_t mo_max = 0;
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t at(std::int64_t mo, int n) const {
    return counts[static_cast<std::size_t>(mo - 2)][static_cast<std::size_t>(n - 3)];
  }
};

RealizerTable realizer_table(Census &census, int n_max, std::int64_t mo_max);
RealizerTable realizer_table(int n_max, std::int64_t mo_max, unsigned threads = 0);

/// Least order <= n_max realising p, or nullopt when none exists below the cap.
std::optional<int> first_realizer_order(Census &census, std::int64_t p, int n_max);
std::optional<int> first_realizer_order(std::int64_t p, int n_max,
                                        unsigned threads = 0);

struct ClaimResult {
  std::string id;
  bool proved = false;  // a counterexample to a proved claim is a failure
  std::uint64_t population = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::string> first_counterexample;  // graph6
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  std::vector<std::pair<std::string, std::int64_t>> observations;

  bool passed() const;
  const ClaimResult *claim(std::string_view id) const;
  std::optional<std::int64_t> observation(std::string_view name) const;
};

const std::vector<std::string> &suite_ids();

/// Runs a named check suite over all connected graphs of order <= n_max.
/// Throws Error{UnknownSuite} or Error{OutOfRange}.
VerificationReport verify_suite(Census &census, std::string_view suite, int n_max);
VerificationReport verify_suite(std::string_view suite, int n_max,
                                unsigned threads = 0);

}  // namespace mostar
