#pragma once

#include "sicrank/graph.hpp"
#include "sicrank/linalg.hpp"
#include "sicrank/rational.hpp"

#include <random>
#include <string_view>
#include <vector>

namespace test {

// Catalog graphs in order BBC, YO, H, X, BBCr, CEG.
inline constexpr std::string_view kCatalogGraph6[] = {
    "T??????wCcOcaOSGgWaWODS?IoHoH@BO_eB?",
    "L??G]OxhAgkOc`",
    "Qz[`MNFeCod_K_L?ODsAk_KQ@H?",
    "QzrLDDBOxWD`TGUCEH@cG@T?Hc?",
    "P?ACC@CCXAGPC_H?dUAQEFB?",
    "QtaLc[gDBGkcUHUEG\\IElK\\OMy?",
};

inline sicrank::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    sicrank::GraphBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline std::vector<sicrank::Rational> random_weights(std::size_t n, std::mt19937_64& rng)
{
    std::vector<sicrank::Rational> w;
    for (std::size_t i = 0; i < n; ++i)
        w.emplace_back(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 5));
    return w;
}

// 13 rays in d = 3 whose orthogonality graph is the YO graph.
inline std::vector<sicrank::ComplexVector> yu_oh_rays()
{
    const double raw[13][3] = {{1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {0, 1, 1},  {0, 1, -1}, {1, 0, 1}, {1, 0, -1},
                               {1, 1, 0},  {1, -1, 0}, {1, 1, 1},  {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    std::vector<sicrank::ComplexVector> out;
    for (const auto& r : raw) {
        sicrank::ComplexVector v(3);
        v << r[0], r[1], r[2];
        out.push_back(v);
    }
    return out;
}

} // namespace test
