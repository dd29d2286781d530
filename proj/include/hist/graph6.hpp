#pragma once

#include <string>

#include "hist/graph.hpp"

namespace hist {

/// Standard header-free graph6 encoding (printable ASCII, 6 bits per byte).
std::string graph6_encode(const Graph& g);

/// Decodes a single graph6 line; throws on malformed input.
Graph graph6_decode(const std::string& line);

}  // namespace hist
