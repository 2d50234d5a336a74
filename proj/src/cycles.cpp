#include "gnorm/cycles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>

namespace gnorm {

CycleSet enumerate_cycles(const BipartiteGraph &g, int length, const Caps &caps) {
    if (length < 4 || length % 2)
        fail(ErrorKind::InvalidArgument, "cycle length must be even and at least 4");
    CycleSet out;
    out.length = length;
    int n = g.num_vertices();
    std::vector<int> path, path_edges;
    std::vector<char> on(n, 0);
    // DFS rooted at the smallest vertex of each cycle; the second vertex must be
    // smaller than the last so each cycle is produced once.
    auto dfs = [&](auto &&self, int s, int u) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (path[1] > path.back())
                return;
            int e = g.edge_between(u, s);
            if (e < 0)
                return;
            Cycle c;
            c.vertices = path;
            c.edges = path_edges;
            c.edges.push_back(e);
            out.cycles.push_back(std::move(c));
            if (out.cycles.size() > caps.cycles)
                fail(ErrorKind::CapExceeded, "cycle enumeration exceeds cap " + std::to_string(caps.cycles));
            return;
        }
        for (const auto &[w, e] : g.incident(u)) {
            if (w <= s || on[w])
                continue;
            on[w] = 1;
            path.push_back(w);
            path_edges.push_back(e);
            self(self, s, w);
            path.pop_back();
            path_edges.pop_back();
            on[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        path_edges.clear();
        on[s] = 1;
        dfs(dfs, s, s);
        on[s] = 0;
    }
    return out;
}

bool is_alternating(const Cycle &c, const Colouring &a) {
    std::size_t L = c.edges.size();
    for (std::size_t i = 0; i < L; ++i)
        if (a[c.edges[i]] == a[c.edges[(i + 1) % L]])
            return false;
    return true;
}

int ones_on(const Cycle &c, const Colouring &a) {
    int k = 0;
    for (int e : c.edges)
        k += a[e];
    return k;
}

long long kappa_alternating(const BipartiteGraph &g, const Colouring &a, int length, const Caps &caps) {
    check_aligned(g, a);
    long long k = 0;
    for (const auto &c : enumerate_cycles(g, length, caps).cycles)
        k += is_alternating(c, a) ? 1 : 0;
    return k;
}

FourCycleProfile profile_of(const CycleSet &four_cycles, const Colouring &a) {
    FourCycleProfile p;
    for (const auto &c : four_cycles.cycles) {
        int k = ones_on(c, a);
        if (k == 0 || k == 4)
            ++p.c2;
        else if (k == 1 || k == 3)
            ++p.c4;
        else if (is_alternating(c, a))
            ++p.c1;
        else
            ++p.c3;
    }
    return p;
}

FourCycleProfile classify_4cycles(const BipartiteGraph &g, const Colouring &a, const Caps &caps) {
    check_aligned(g, a);
    return profile_of(enumerate_cycles(g, 4, caps), a);
}

long long pattern_score(const FourCycleProfile &p) { return p.c1 + p.c3 - p.c2; }

CycleLaw check_girth_cycle_law(const BipartiteGraph &g, const Colouring &a, const Caps &caps) {
    check_aligned(g, a);
    auto gi = girth(g);
    if (!gi)
        fail(ErrorKind::InvalidArgument, "girth cycle law needs a cycle");
    CycleLaw r;
    for (const auto &c : enumerate_cycles(g, *gi, caps).cycles) {
        int k = ones_on(c, a);
        if (k != 0 && k != *gi && 2 * k != *gi) {
            r.holds = false;
            r.witness = c;
            return r;
        }
    }
    return r;
}

TwoPathLaw check_two_path_law(const BipartiteGraph &g, const Colouring &a) {
    check_aligned(g, a);
    TwoPathLaw r;
    int n = g.num_vertices();
    // for each pair (v1, v2) with common neighbours, record one same-colour
    // and one mixed-colour middle vertex
    for (int v1 = 0; v1 < n; ++v1) {
        std::vector<int> same(n, -1), mixed(n, -1);
        for (const auto &[u, e1] : g.incident(v1))
            for (const auto &[v2, e2] : g.incident(u)) {
                if (v2 <= v1)
                    continue;
                if (a[e1] == a[e2]) {
                    if (same[v2] < 0)
                        same[v2] = u;
                } else if (mixed[v2] < 0) {
                    mixed[v2] = u;
                }
            }
        for (int v2 = v1 + 1; v2 < n; ++v2)
            if (same[v2] >= 0 && mixed[v2] >= 0) {
                r.holds = false;
                r.witness = std::array<int, 4>{same[v2], v1, mixed[v2], v2};
                return r;
            }
    }
    return r;
}

namespace {

struct MaskedCycle {
    std::uint64_t mask = 0;
    std::uint64_t alt = 0; // one of the two alternating patterns
};

// colouring <-> integer with edge 0 as the most significant bit, so integer
// order is lexicographic order
std::uint64_t encode(const Colouring &a) {
    std::uint64_t x = 0;
    for (auto c : a)
        x = (x << 1) | c;
    return x;
}

Colouring decode(std::uint64_t x, int m) {
    Colouring a(m);
    for (int i = m - 1; i >= 0; --i) {
        a[i] = x & 1;
        x >>= 1;
    }
    return a;
}

std::vector<MaskedCycle> masks(const CycleSet &cs, int m) {
    std::vector<MaskedCycle> r;
    for (const auto &c : cs.cycles) {
        MaskedCycle mc;
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            std::uint64_t bit = 1ULL << (m - 1 - c.edges[i]);
            mc.mask |= bit;
            if (i % 2 == 0)
                mc.alt |= bit;
        }
        r.push_back(mc);
    }
    return r;
}

template <class Score>
MaximizerScan scan_all(const BipartiteGraph &g, const Colouring &a, const Caps &caps, Score score) {
    check_aligned(g, a);
    int m = g.num_edges();
    if (static_cast<std::size_t>(m) > caps.colouring_edges || m > 62)
        fail(ErrorKind::CapExceeded, "colouring scan: " + std::to_string(m) + " edges > cap " +
                                         std::to_string(caps.colouring_edges));
    MaximizerScan r;
    r.value = score(encode(a));
    if (m == 0) {
        r.best = r.value;
        r.maximal = true;
        return r;
    }
    // conjugation leaves both scores unchanged, and the lexicographically
    // smaller of x and its conjugate has edge 0 coloured 0
    std::uint64_t half = 1ULL << (m - 1);
    const std::size_t chunks = 256;
    std::vector<long long> best(chunks, LLONG_MIN);
    std::vector<std::uint64_t> arg(chunks, 0);
    std::uint64_t per = (half + chunks - 1) / chunks;
    parallel_for(chunks, [&](std::size_t c) {
        std::uint64_t lo = c * per, hi = std::min<std::uint64_t>(half, lo + per);
        for (std::uint64_t x = lo; x < hi; ++x) {
            long long s = score(x);
            if (s > best[c]) {
                best[c] = s;
                arg[c] = x;
            }
        }
    });
    r.best = LLONG_MIN;
    for (std::size_t c = 0; c < chunks; ++c)
        if (best[c] > r.best) {
            r.best = best[c];
            r.best_colouring = decode(arg[c], m);
        }
    r.scanned = half;
    r.maximal = r.value == r.best;
    return r;
}

} // namespace

MaximizerScan maximizes_kappa_girth(const BipartiteGraph &g, const Colouring &a, const Caps &caps) {
    auto gi = girth(g);
    if (!gi)
        fail(ErrorKind::InvalidArgument, "kappa maximality needs a cycle");
    int m = g.num_edges();
    if (static_cast<std::size_t>(m) > caps.colouring_edges)
        fail(ErrorKind::CapExceeded, "colouring scan: " + std::to_string(m) + " edges > cap " +
                                         std::to_string(caps.colouring_edges));
    auto cyc = masks(enumerate_cycles(g, *gi, caps), m);
    return scan_all(g, a, caps, [&](std::uint64_t x) {
        long long k = 0;
        for (const auto &c : cyc) {
            std::uint64_t y = x & c.mask;
            k += (y == c.alt || y == (c.mask ^ c.alt)) ? 1 : 0;
        }
        return k;
    });
}

MaximizerScan maximizes_c1_plus_c3_minus_c2(const BipartiteGraph &g, const Colouring &a,
                                            const Caps &caps) {
    int m = g.num_edges();
    if (static_cast<std::size_t>(m) > caps.colouring_edges)
        fail(ErrorKind::CapExceeded, "colouring scan: " + std::to_string(m) + " edges > cap " +
                                         std::to_string(caps.colouring_edges));
    auto cyc = masks(enumerate_cycles(g, 4, caps), m);
    return scan_all(g, a, caps, [&](std::uint64_t x) {
        long long s = 0;
        for (const auto &c : cyc) {
            int k = std::popcount(x & c.mask);
            s += k == 2 ? 1 : (k == 0 || k == 4) ? -1 : 0;
        }
        return s;
    });
}

long long count_two_edge_matchings(const BipartiteGraph &g) {
    long long e = g.num_edges();
    long long r = e * (e - 1) / 2;
    for (int v = 0; v < g.num_vertices(); ++v) {
        long long d = g.degree(v);
        r -= d * (d - 1) / 2;
    }
    return r;
}

bool four_cycles_generate_cycle_space(const BipartiteGraph &g, const Caps &caps) {
    int m = g.num_edges();
    int comps = 0;
    connected_components(g, &comps);
    int dim = m - g.num_vertices() + comps;
    if (dim == 0)
        return true;
    std::size_t words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis(m); // indexed by pivot bit
    std::vector<char> has(m, 0);
    int rank = 0;
    for (const auto &c : enumerate_cycles(g, 4, caps).cycles) {
        std::vector<std::uint64_t> row(words, 0);
        for (int e : c.edges)
            row[e / 64] ^= 1ULL << (e % 64);
        for (int bit = m - 1; bit >= 0; --bit) {
            if (!((row[bit / 64] >> (bit % 64)) & 1))
                continue;
            if (!has[bit]) {
                basis[bit] = row;
                has[bit] = 1;
                ++rank;
                break;
            }
            for (std::size_t w = 0; w < words; ++w)
                row[w] ^= basis[bit][w];
        }
        if (rank == dim)
            return true;
    }
    return rank == dim;
}

std::optional<std::vector<std::uint8_t>> potential_colouring(const BipartiteGraph &g, const Colouring &a) {
    check_aligned(g, a);
    int n = g.num_vertices();
    std::vector<int> beta(n, -1);
    for (int s = 0; s < n; ++s) {
        if (beta[s] >= 0)
            continue;
        beta[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto &[w, e] : g.incident(u)) {
                int want = beta[u] ^ a[e];
                if (beta[w] < 0) {
                    beta[w] = want;
                    q.push_back(w);
                } else if (beta[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<std::uint8_t>(beta.begin(), beta.end());
}

} // namespace gnorm
