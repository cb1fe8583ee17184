#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// graph6 record without header or newline. Orders up to 62 use the one-byte
/// size prefix; larger orders use the 126-prefixed four-byte form.
std::string encode_graph6(const Graph &g);

/// Parses one record. A leading ">>graph6<<" and trailing CR/LF are ignored.
/// Throws Error{MalformedRecord} on a bad length, a byte outside [63,126] or
/// nonzero padding bits, and Error{OutOfRange} for orders above kMaxOrder.
Graph decode_graph6(std::string_view record);

/// Encodes an adjacency given as single-word rows (n <= 64).
std::string encode_graph6_rows(int n, const Word *rows);

/// Non-empty lines of a graph6 file, header line removed.
std::vector<std::string> read_graph6_lines(std::istream &in);

}  // namespace mostar
