#pragma once

#include "sicrank/bitset.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace sicrank {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1, stored as symmetric bitset rows.
/// Immutable once built; use GraphBuilder to construct one edge at a time.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const { return rows_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;

    Graph complement() const;
    bool is_independent(const Bitset& set) const;
    bool is_clique(const Bitset& set) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::vector<Bitset> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    /// Adds the undirected edge {u,v}; loops are rejected, repeated edges are no-ops.
    GraphBuilder& add_edge(std::size_t u, std::size_t v);
    std::size_t size() const { return g_.size(); }
    Graph build() &&;

private:
    Graph g_;
};

// --- generators and products -------------------------------------------------

Graph complete_graph(std::size_t n);
/// C_len with edges (j, j+1 mod len); len >= 3.
Graph cycle_graph(std::size_t len);
/// Circulant C(n, offsets): j ~ j +/- x mod n for each offset x. An offset that
/// is 0 mod n is rejected.
Graph circulant_graph(std::size_t n, std::span<const long> offsets);
/// AR(r) = C(3r-1, (r, ..., 2r-1)); r >= 2.
Graph ar_graph(std::size_t r);

/// Disjunctive product: (u,v) -> u*|F| + v; adjacent iff u~u' in g or v~v' in f.
Graph disjunctive_product(const Graph& g, const Graph& f);
/// Every vertex v replaced by an r-clique (v*r + a); copies of adjacent vertices
/// are fully joined.
Graph clique_expansion(const Graph& g, std::size_t r);
/// Induced subgraph on the listed vertices, relabeled 0..k-1 in list order.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);
/// Graph with vertices relabeled: new vertex i is old vertex perm[i].
Graph permute(const Graph& g, std::span<const std::size_t> perm);

} // namespace sicrank
