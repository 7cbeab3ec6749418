#pragma once

#include <cstdint>
#include <vector>

#include "detideal/graph.hpp"

namespace detideal {

inline constexpr int kMaxCanonicalVertices = 11;
inline constexpr int kMaxGeneratedVertices = 8;

/// Canonical code of a graph on at most 11 vertices. Vertices are first
/// colored by iterated degree refinement; the code is the minimum, over the
/// labelings that list color classes in rank order, of the upper-triangle
/// column-major edge bit string read with the first bit most significant.
/// Isomorphic graphs and only those share a code.
uint64_t canonical_code(const Graph& g);

/// The labeling realizing canonical_code: perm[v] is v's canonical position.
std::vector<int> canonical_labeling(const Graph& g);

/// The graph relabeled canonically.
Graph canonical_form(const Graph& g);

/// Inverse of the bit-string encoding used by canonical_code.
Graph graph_from_code(int n, uint64_t code);

/// All graphs (connected or not) on n vertices up to isomorphism, sorted by code.
std::vector<Graph> enumerate_all(int n);

/// One representative per isomorphism class of connected graphs, in ascending
/// canonical-code order. Supports 1 <= n <= 8; throws std::invalid_argument otherwise.
std::vector<Graph> enumerate_connected(int n);

}  // namespace detideal
