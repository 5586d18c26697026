#pragma once

#include "sicrank/graph.hpp"

#include <optional>
#include <vector>

namespace sicrank {

/// Finds a vertex bijection m with a.adjacent(u,v) == b.adjacent(m[u],m[v]).
/// Colour refinement followed by backtracking; intended for small graphs
/// (n up to a few dozen).
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a, const Graph& b);

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// True iff v -> perm[v] preserves adjacency.
bool is_automorphism(const Graph& g, const std::vector<std::size_t>& perm);

} // namespace sicrank
