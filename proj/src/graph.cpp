#include "sicrank/graph.hpp"

#include <stdexcept>
#include <string>

namespace sicrank {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
{
    GraphBuilder b(n);
    for (const auto& [u, v] : edges)
        b.add_edge(u, v);
    *this = std::move(b).build();
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& r : rows_)
        twice += r.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < size(); ++u)
        rows_[u].for_each([&](std::size_t v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::complement() const
{
    Graph c(size());
    for (std::size_t u = 0; u < size(); ++u) {
        c.rows_[u] = rows_[u].complement();
        c.rows_[u].reset(u);
    }
    return c;
}

bool Graph::is_independent(const Bitset& set) const
{
    bool ok = true;
    set.for_each([&](std::size_t v) {
        if (ok && rows_[v].intersects(set))
            ok = false;
    });
    return ok;
}

bool Graph::is_clique(const Bitset& set) const
{
    bool ok = true;
    set.for_each([&](std::size_t v) {
        if (!ok)
            return;
        Bitset others = set;
        others.reset(v);
        if (!others.is_subset_of(rows_[v]))
            ok = false;
    });
    return ok;
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(std::size_t u, std::size_t v)
{
    if (u >= g_.size() || v >= g_.size())
        throw std::out_of_range("GraphBuilder::add_edge: vertex out of range");
    if (u == v)
        throw std::invalid_argument("GraphBuilder::add_edge: loop at vertex " + std::to_string(u));
    g_.rows_[u].set(v);
    g_.rows_[v].set(u);
    return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph complete_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle_graph(std::size_t len)
{
    if (len < 3)
        throw std::invalid_argument("cycle_graph: length must be >= 3, got " + std::to_string(len));
    GraphBuilder b(len);
    for (std::size_t j = 0; j < len; ++j)
        b.add_edge(j, (j + 1) % len);
    return std::move(b).build();
}

Graph circulant_graph(std::size_t n, std::span<const long> offsets)
{
    if (n < 1)
        throw std::invalid_argument("circulant_graph: n must be >= 1");
    const long nn = static_cast<long>(n);
    GraphBuilder b(n);
    for (long x : offsets) {
        long off = ((x % nn) + nn) % nn;
        if (off == 0)
            throw std::invalid_argument("circulant_graph: offset " + std::to_string(x) + " is 0 mod " +
                                        std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            b.add_edge(j, (j + static_cast<std::size_t>(off)) % n);
    }
    return std::move(b).build();
}

Graph ar_graph(std::size_t r)
{
    if (r < 2)
        throw std::invalid_argument("ar_graph: r must be >= 2, got " + std::to_string(r));
    std::vector<long> offsets;
    for (std::size_t x = r; x <= 2 * r - 1; ++x)
        offsets.push_back(static_cast<long>(x));
    return circulant_graph(3 * r - 1, offsets);
}

Graph disjunctive_product(const Graph& g, const Graph& f)
{
    const std::size_t ng = g.size(), nf = f.size();
    GraphBuilder b(ng * nf);
    for (std::size_t u = 0; u < ng; ++u)
        for (std::size_t v = 0; v < nf; ++v) {
            const std::size_t a = u * nf + v;
            for (std::size_t u2 = 0; u2 < ng; ++u2)
                for (std::size_t v2 = 0; v2 < nf; ++v2) {
                    const std::size_t c = u2 * nf + v2;
                    if (c > a && (g.adjacent(u, u2) || f.adjacent(v, v2)))
                        b.add_edge(a, c);
                }
        }
    return std::move(b).build();
}

Graph clique_expansion(const Graph& g, std::size_t r)
{
    if (r < 1)
        throw std::invalid_argument("clique_expansion: r must be >= 1");
    const std::size_t n = g.size();
    GraphBuilder b(n * r);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t c = a + 1; c < r; ++c)
                b.add_edge(v * r + a, v * r + c);
            g.neighbors(v).for_each([&](std::size_t w) {
                if (w > v)
                    for (std::size_t c = 0; c < r; ++c)
                        b.add_edge(v * r + a, w * r + c);
            });
        }
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices)
{
    Bitset seen(g.size());
    for (std::size_t v : vertices) {
        if (v >= g.size())
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        if (seen.test(v))
            throw std::invalid_argument("induced_subgraph: duplicate vertex " + std::to_string(v));
        seen.set(v);
    }
    GraphBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph permute(const Graph& g, std::span<const std::size_t> perm)
{
    if (perm.size() != g.size())
        throw std::invalid_argument("permute: permutation size mismatch");
    return induced_subgraph(g, perm);
}

} // namespace sicrank
