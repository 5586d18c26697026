#include "sicrank/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace sicrank {

namespace {

// Joint colour refinement of both graphs so colour ids are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Graph& a, const Graph& b)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> ca(n, 0), cb(n, 0);
    std::size_t classes = 1;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        auto signature = [&](const Graph& g, const std::vector<std::size_t>& c, std::size_t v) {
            std::vector<std::size_t> sig{c[v]};
            std::vector<std::size_t> nb;
            g.neighbors(v).for_each([&](std::size_t w) { nb.push_back(c[w]); });
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            return sig;
        };
        std::vector<std::vector<std::size_t>> sa(n), sb(n);
        for (std::size_t v = 0; v < n; ++v) {
            sa[v] = signature(a, ca, v);
            sb[v] = signature(b, cb, v);
            ids.emplace(sa[v], 0);
            ids.emplace(sb[v], 0);
        }
        std::size_t next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        for (std::size_t v = 0; v < n; ++v) {
            ca[v] = ids[sa[v]];
            cb[v] = ids[sb[v]];
        }
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return {ca, cb};
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    const std::vector<std::size_t>& ca;
    const std::vector<std::size_t>& cb;
    std::vector<std::size_t> order;
    std::vector<std::size_t> map;
    std::vector<bool> used;

    bool extend(std::size_t depth)
    {
        if (depth == order.size())
            return true;
        const std::size_t u = order[depth];
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (used[v] || ca[u] != cb[v])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t u2 = order[k];
                ok = a.adjacent(u, u2) == b.adjacent(v, map[u2]);
            }
            if (!ok)
                continue;
            map[u] = v;
            used[v] = true;
            if (extend(depth + 1))
                return true;
            used[v] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    const std::size_t n = a.size();
    auto [ca, cb] = refine(a, b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return std::nullopt;

    // Order: rarest colour first, then BFS-ish by connection to already chosen.
    std::map<std::size_t, std::size_t> freq;
    for (auto c : ca)
        ++freq[c];
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
        std::size_t best = n;
        std::size_t best_links = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            std::size_t links = 0;
            for (auto u : order)
                links += a.adjacent(u, v) ? 1 : 0;
            if (best == n || links > best_links ||
                (links == best_links && freq[ca[v]] < freq[ca[best]])) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    Matcher m{a, b, ca, cb, order, std::vector<std::size_t>(n, 0), std::vector<bool>(n, false)};
    if (!m.extend(0))
        return std::nullopt;
    return m.map;
}

bool is_automorphism(const Graph& g, const std::vector<std::size_t>& perm)
{
    if (perm.size() != g.size())
        return false;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
                return false;
    return true;
}

} // namespace sicrank
