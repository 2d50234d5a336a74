#pragma once

#include "gnorm/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace testutil {

using namespace gnorm;

// C_len with edges in cycle order a0 b0 a1 b1 ...
inline BipartiteGraph cycle_graph(int len) {
    int h = len / 2;
    std::vector<Edge> e;
    for (int i = 0; i < h; ++i) {
        e.push_back({i, i});
        e.push_back({(i + 1) % h, i});
    }
    return BipartiteGraph(h, h, e);
}

inline BipartiteGraph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.push_back({i, j});
    return BipartiteGraph(a, b, e);
}

inline BipartiteGraph path_graph(int edges) {
    // a0 b0 a1 b1 ...
    std::vector<Edge> e;
    for (int i = 0; i < edges; ++i)
        e.push_back({(i + 1) / 2, i / 2});
    int na = edges / 2 + 1, nb = (edges + 1) / 2;
    return BipartiteGraph(na, nb, e);
}

inline Colouring alternating(int m) {
    Colouring a(m);
    for (int i = 0; i < m; ++i)
        a[i] = i % 2 == 0 ? 1 : 0;
    return a;
}

inline Colouring mono(int m, int c = 1) { return Colouring(m, static_cast<std::uint8_t>(c)); }

inline std::vector<Colouring> all_colourings(int m) {
    std::vector<Colouring> r;
    for (std::uint64_t x = 0; x < (1ULL << m); ++x) {
        Colouring a(m);
        for (int i = 0; i < m; ++i)
            a[i] = (x >> (m - 1 - i)) & 1;
        r.push_back(a);
    }
    return r;
}

// Every vertex permutation that maps the edge set onto itself.
inline long long brute_automorphism_count(const BipartiteGraph &g, bool side_swap) {
    int n = g.num_vertices();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        if (!side_swap)
            for (int v = 0; v < n && ok; ++v)
                ok = g.is_left(v) == g.is_left(p[v]);
        for (int e = 0; e < g.num_edges() && ok; ++e)
            ok = g.edge_between(p[g.edge_left(e)], p[g.edge_right(e)]) >= 0;
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

} // namespace testutil
