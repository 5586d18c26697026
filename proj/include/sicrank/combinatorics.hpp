#pragma once

#include "sicrank/bitset.hpp"
#include "sicrank/graph.hpp"
#include "sicrank/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sicrank {

/// Per-vertex nonnegative weights.
using RationalWeights = std::vector<Rational>;
using RealWeights = std::vector<double>;

/// A list of vertex subsets of a graph with graph_n vertices.
struct IndependentSetFamily {
    std::size_t graph_n = 0;
    std::vector<Bitset> sets;
};

/// Enumeration aborted after `partial_count()` sets.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t partial_count)
        : std::runtime_error(what), partial_count_(partial_count)
    {
    }
    std::size_t partial_count() const { return partial_count_; }

private:
    std::size_t partial_count_;
};

template <typename W>
struct WeightedSet {
    Bitset set;
    W value{};
};

/// All inclusion-maximal independent sets (pivoting Bron-Kerbosch on the
/// complement). Throws CapExceeded once more than `cap` sets are found.
IndependentSetFamily maximal_independent_sets(const Graph& g, std::size_t cap = 1000000);

/// Maximum-weight independent set. Among optimal sets the result contains no
/// zero-weight vertex and is lexicographically smallest. Negative weights throw.
WeightedSet<Rational> max_weight_independent_set(const Graph& g, const RationalWeights& w);
WeightedSet<double> max_weight_independent_set(const Graph& g, const RealWeights& w);

/// alpha(G, w) without the tie-break pass.
Rational weighted_independence_number(const Graph& g, const RationalWeights& w);
double weighted_independence_number(const Graph& g, const RealWeights& w);

std::size_t independence_number(const Graph& g);
std::size_t clique_number(const Graph& g);
/// Number of colours used by first-fit colouring in vertex order (an upper
/// bound on the chromatic number).
std::size_t greedy_coloring_count(const Graph& g);

/// Exact optimum of  min sum_I z_I  s.t.  sum_{I containing i} z_I >= w_i,
/// together with a matching dual  y >= 0, y(I) <= 1  for every independent set.
struct FractionalColoring {
    Rational value;
    /// Maximal independent sets with positive multiplicity.
    std::vector<std::pair<Bitset, Rational>> cover;
    /// Dual weights y; w.y == value.
    std::vector<Rational> dual;
    std::size_t columns_generated = 0;
    std::size_t pricing_rounds = 0;
};

FractionalColoring fractional_chromatic_certified(const Graph& g,
                                                  const std::optional<RationalWeights>& w = std::nullopt);
Rational fractional_chromatic(const Graph& g, const std::optional<RationalWeights>& w = std::nullopt);

/// Exact maximum of y(I) over independent sets for rational y >= 0; the
/// branch and bound runs on integers when the scaled weights fit in 62 bits.
WeightedSet<Rational> exact_max_weight_search(const Graph& g, const RationalWeights& y);

/// Greedily adds vertices (ascending index) until the set is maximal.
Bitset extend_to_maximal(const Graph& g, Bitset set);

} // namespace sicrank
