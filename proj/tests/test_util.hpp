#ifndef DOMPOLY_TEST_UTIL_HPP
#define DOMPOLY_TEST_UTIL_HPP

#include "dompoly/graph.hpp"

#include <random>
#include <utility>
#include <vector>

namespace dompoly::test {

inline SimpleGraph random_graph(std::mt19937_64& rng, int n)
{
    SimpleGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() & 1)
                g.add_edge(i, j);
    return g;
}

inline std::vector<std::pair<int, int>> path_lift_arcs(int m)
{
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= m; ++i)
        arcs.emplace_back(i, i);
    for (int i = 1; i < m; ++i) {
        arcs.emplace_back(i, i + 1);
        arcs.emplace_back(i + 1, i);
    }
    return arcs;
}

// Lifted m-path plus one extra left vertex m+1 arcing into m: left side
// [m+1], right side [m].
inline BipartiteOneWayDigraph i_shape(int m)
{
    if (m == 0)
        return { VertexSet { 1 }, {}, {} };
    auto arcs = path_lift_arcs(m);
    arcs.emplace_back(m + 1, m);
    return { VertexSet::range(m + 1), VertexSet::range(m), arcs };
}

// Lifted m-path plus one extra right vertex m+1 fed from m: left side [m],
// right side [m+1].
inline BipartiteOneWayDigraph j_shape(int m)
{
    if (m == 0)
        return { {}, VertexSet { 1 }, {} };
    auto arcs = path_lift_arcs(m);
    arcs.emplace_back(m, m + 1);
    return { VertexSet::range(m), VertexSet::range(m + 1), arcs };
}

inline BipartiteOneWayDigraph random_digraph(std::mt19937_64& rng, int left, int right)
{
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= left; ++i)
        for (int v = 1; v <= right; ++v)
            if (rng() & 1)
                arcs.emplace_back(i, v);
    return { VertexSet::range(left), VertexSet::range(right), arcs };
}

} // namespace dompoly::test

#endif
