#include "mostar/graph6.hpp"

#include <istream>

#include "mostar/error.hpp"

namespace mostar {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kShortLimit = 62;
constexpr int kLongLimit = 258047;

[[noreturn]] void malformed(const std::string &why) {
  throw Error(Errc::MalformedRecord, "graph6: " + why);
}

void put_order(std::string &out, int n) {
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  out.push_back(static_cast<char>(126));
  out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
  out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
  out.push_back(static_cast<char>((n & 63) + 63));
}

// Packs upper-triangle bits, column by column, into 6-bit groups.
template <class Adjacent>
std::string encode_bits(int n, Adjacent &&adjacent) {
  std::string out;
  put_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace

std::string encode_graph6(const Graph &g) {
  if (g.order() < 1 || g.order() > kLongLimit) {
    throw Error(Errc::OutOfRange, "graph6: order out of range");
  }
  return encode_bits(g.order(),
                     [&](int i, int j) { return g.adjacent(i, j); });
}

std::string encode_graph6_rows(int n, const Word *rows) {
  return encode_bits(n, [&](int i, int j) { return (rows[i] >> j) & 1U; });
}

Graph decode_graph6(std::string_view record) {
  if (record.starts_with(kHeader)) record.remove_prefix(kHeader.size());
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) {
    record.remove_suffix(1);
  }
  if (record.empty()) malformed("empty record");
  for (char c : record) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) malformed("byte outside [63,126]");
  }
  auto value = [&](std::size_t i) {
    return static_cast<int>(static_cast<unsigned char>(record[i])) - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (value(0) == 63) {
    if (record.size() < 4) malformed("truncated size prefix");
    if (value(1) == 63) {
      throw Error(Errc::OutOfRange, "graph6: order exceeds " +
                                        std::to_string(kLongLimit));
    }
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }
  if (n < 1) malformed("order must be positive");
  if (n > kMaxOrder) {
    throw Error(Errc::OutOfRange, "graph6: order " + std::to_string(n) +
                                      " exceeds " + std::to_string(kMaxOrder));
  }

  const long bits = n * (n - 1) / 2;
  const long groups = (bits + 5) / 6;
  if (static_cast<long>(record.size() - pos) != groups) {
    malformed("expected " + std::to_string(groups) + " data bytes, got " +
              std::to_string(record.size() - pos));
  }

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = value(pos + static_cast<std::size_t>(k / 6));
      if ((group >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad = 6 - static_cast<int>(bits % 6);
    if (value(record.size() - 1) & ((1 << pad) - 1)) malformed("nonzero padding");
  }
  return b.build();
}

std::vector<std::string> read_graph6_lines(std::istream &in) {
  std::vector<std::string> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.starts_with(kHeader)) line.erase(0, kHeader.size());
    first = false;
    if (line.empty()) continue;
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace mostar
