#pragma once

#include "sicrank/bitset.hpp"
#include "sicrank/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace sicrank::detail {

/// Branch and bound for a maximum-weight independent set restricted to a
/// candidate vertex mask. Bounds come from a greedy partition of the candidates
/// into cliques (an independent set uses at most one vertex per clique).
/// W is double, std::int64_t or Rational; weights must be nonnegative.
template <typename W>
class MwisSearch {
public:
    MwisSearch(const Graph& g, std::span<const W> weights) : g_(g), w_(weights.begin(), weights.end())
    {
        rank_.resize(g.size());
        std::vector<std::size_t> order(g.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (w_[a] != w_[b])
                return w_[b] < w_[a];
            return g.degree(a) < g.degree(b);
        });
        order_ = order;
        for (std::size_t i = 0; i < order.size(); ++i)
            rank_[order[i]] = i;
    }

    struct Result {
        W value{};
        Bitset set;
        std::uint64_t nodes = 0;
    };

    /// Maximum over independent subsets of `candidates`. When `good_enough` is
    /// set, the search stops at the first set whose weight is >= that value.
    Result solve(const Bitset& candidates, std::optional<W> good_enough = std::nullopt)
    {
        best_ = Result{};
        best_.set = Bitset(g_.size());
        best_.value = W{0};
        good_enough_ = good_enough;
        done_ = false;
        Bitset p = candidates;
        for (std::size_t v = 0; v < g_.size(); ++v)
            if (p.test(v) && !(W{0} < w_[v]))
                p.reset(v);
        Bitset current(g_.size());
        if (good_enough_ && !(best_.value < *good_enough_))
            return best_;
        expand(current, W{0}, p);
        return best_;
    }

    Result solve_all(std::optional<W> good_enough = std::nullopt)
    {
        Bitset all(g_.size());
        all.set_all();
        return solve(all, good_enough);
    }

private:
    void expand(Bitset& current, const W& cur, Bitset remaining)
    {
        ++best_.nodes;
        // Greedy clique partition of the candidates, visiting heavy vertices first.
        std::vector<std::size_t> verts;
        remaining.for_each([&](std::size_t v) { verts.push_back(v); });
        std::sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
        std::vector<Bitset> common;
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t v : verts) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c)
                if (common[c].test(v))
                    break;
            if (c == classes.size()) {
                classes.emplace_back();
                common.push_back(g_.neighbors(v));
            } else {
                common[c] &= g_.neighbors(v);
            }
            classes[c].push_back(v);
        }
        // Within a class, ascending weight, so the partial-class bound at a
        // position is the weight at that position.
        std::vector<std::size_t> list;
        std::vector<W> bound;
        list.reserve(verts.size());
        bound.reserve(verts.size());
        W prefix{0};
        for (auto& cls : classes) {
            std::reverse(cls.begin(), cls.end()); // heavy-first -> light-first
            for (std::size_t v : cls) {
                list.push_back(v);
                bound.push_back(prefix + w_[v]);
            }
            prefix += w_[cls.back()];
        }

        for (std::size_t idx = list.size(); idx-- > 0;) {
            if (done_)
                return;
            if (!(best_.value < cur + bound[idx]))
                return;
            const std::size_t v = list[idx];
            remaining.reset(v);
            const W next = cur + w_[v];
            current.set(v);
            if (best_.value < next) {
                best_.value = next;
                best_.set = current;
                if (good_enough_ && !(best_.value < *good_enough_)) {
                    done_ = true;
                    current.reset(v);
                    return;
                }
            }
            Bitset child = remaining;
            child.subtract(g_.neighbors(v));
            if (child.any())
                expand(current, next, std::move(child));
            current.reset(v);
        }
    }

    const Graph& g_;
    std::vector<W> w_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> rank_;
    Result best_;
    std::optional<W> good_enough_;
    bool done_ = false;
};

} // namespace sicrank::detail
