#include "gnorm/constructions.hpp"

#include "gnorm/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gnorm {

SimpleGraph complete_graph(int n) {
    if (n < 1)
        fail(ErrorKind::InvalidArgument, "complete graph needs n >= 1");
    SimpleGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.edges.push_back({u, v});
    return g;
}

SimpleGraph octahedron() {
    // K_{2,2,2}: parts {0,1}, {2,3}, {4,5}
    SimpleGraph g;
    g.n = 6;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2)
                g.edges.push_back({u, v});
    return g;
}

namespace {

std::string bits_name(unsigned x, int d) {
    std::string s;
    for (int j = 0; j < d; ++j)
        s.push_back((x >> j) & 1 ? '1' : '0');
    return s;
}

void check_even_dim(int d) {
    if (d < 2 || d % 2)
        fail(ErrorKind::OddDimension, "dimension must be even and positive, got " + std::to_string(d));
}

std::vector<unsigned> left_points(int d) {
    std::vector<unsigned> r;
    for (unsigned x = 0; x < (1u << d); ++x)
        if (std::popcount(x) % 2 == 0)
            r.push_back(x);
    return r;
}

} // namespace

BipartiteGraph hypercube(int d, const Caps &caps) {
    if (d < 1)
        fail(ErrorKind::InvalidArgument, "hypercube dimension must be >= 1");
    if (d > caps.hypercube_dim || d > 20)
        fail(ErrorKind::CapExceeded, "hypercube dimension " + std::to_string(d) + " > cap " +
                                         std::to_string(caps.hypercube_dim));
    std::vector<std::string> left, right;
    std::vector<int> pos(1u << d);
    for (unsigned x = 0; x < (1u << d); ++x) {
        if (std::popcount(x) % 2 == 0) {
            pos[x] = static_cast<int>(left.size());
            left.push_back(bits_name(x, d));
        } else {
            pos[x] = static_cast<int>(right.size());
            right.push_back(bits_name(x, d));
        }
    }
    std::vector<Edge> edges;
    for (unsigned x : left_points(d))
        for (int j = 0; j < d; ++j)
            edges.push_back({pos[x], pos[x ^ (1u << j)]});
    return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

Colouring hypercube_alpha(int d) {
    check_even_dim(d);
    int m = d / 2;
    Colouring a;
    for (std::size_t i = 0; i < left_points(d).size(); ++i)
        for (int j = 1; j <= d; ++j)
            a.push_back(j <= m ? 1 : 0);
    return a;
}

Colouring hypercube_beta(int d) {
    check_even_dim(d);
    int m = d / 2;
    Colouring a;
    for (unsigned x : left_points(d)) {
        auto bit = [&](int j) { return static_cast<int>((x >> (j - 1)) & 1); };
        int w = std::popcount(x);
        for (int j = 1; j <= d; ++j) {
            int c = j <= m ? w + bit(j) + bit(j + m) : w + bit(j) + bit(j - m) + 1;
            a.push_back(static_cast<std::uint8_t>(c & 1));
        }
    }
    return a;
}

BipartiteGraph subdivide(const SimpleGraph &g) {
    std::vector<std::string> left, right;
    for (int i = 0; i < g.n; ++i)
        left.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        auto [u, v] = g.edges[k];
        if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
            fail(ErrorKind::InvalidGraph, "subdivide needs a simple graph");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            fail(ErrorKind::InvalidGraph, "subdivide: repeated edge");
        right.push_back("e" + std::to_string(k));
        edges.push_back({u, static_cast<int>(k)});
        edges.push_back({v, static_cast<int>(k)});
    }
    return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

Tournament::Tournament(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1)
        fail(ErrorKind::InvalidArgument, "tournament needs n >= 1");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            adj_[u * n + v] = 1;
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>> &arcs) {
    Tournament t(n);
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            fail(ErrorKind::InvalidGraph, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        int lo = std::min(u, v), hi = std::max(u, v);
        if (seen[lo * n + hi]++)
            fail(ErrorKind::InvalidGraph, "pair {" + std::to_string(lo) + "," + std::to_string(hi) + "} has two arcs");
        t.set_arc(u, v);
    }
    if (arcs.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
        fail(ErrorKind::InvalidGraph, "a tournament needs exactly one arc per pair");
    return t;
}

void Tournament::set_arc(int u, int v) {
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 0;
}

int Tournament::out_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        d += adj_[v * n_ + u];
    return d;
}

bool Tournament::is_regular() const {
    if (n_ % 2 == 0)
        return false;
    for (int v = 0; v < n_; ++v)
        if (out_degree(v) != (n_ - 1) / 2)
            return false;
    return true;
}

std::vector<std::pair<int, int>> Tournament::arcs() const {
    std::vector<std::pair<int, int>> r;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (arc(u, v))
                r.push_back({u, v});
    return r;
}

Digraph tournament_from_colouring(const BipartiteGraph &subdivided, const Colouring &a, const SimpleGraph &original) {
    if (!(subdivided == subdivide(original)))
        fail(ErrorKind::InvalidArgument, "graph is not the subdivision of the given graph");
    check_aligned(subdivided, a);
    if (!is_balanced(subdivided, a))
        fail(ErrorKind::NotBalanced, "colouring is not balanced");
    Digraph d;
    d.n = original.n;
    for (std::size_t k = 0; k < original.edges.size(); ++k) {
        auto [u, v] = original.edges[k];
        if (a[2 * k])
            d.arcs.push_back({u, v});
        else
            d.arcs.push_back({v, u});
    }
    return d;
}

Tournament as_tournament(const Digraph &d) { return Tournament::from_arcs(d.n, d.arcs); }

std::pair<BipartiteGraph, Colouring> colouring_from_tournament(const Tournament &t) {
    auto kn = complete_graph(t.n());
    Colouring a;
    for (auto [u, v] : kn.edges) {
        bool fwd = t.arc(u, v);
        a.push_back(fwd ? 1 : 0);
        a.push_back(fwd ? 0 : 1);
    }
    return {subdivide(kn), a};
}

Tournament clockwise_tournament(int n) {
    if (n < 3 || n % 2 == 0)
        fail(ErrorKind::EvenOrder, "clockwise tournament needs odd n >= 3, got " + std::to_string(n));
    int d = (n - 1) / 2;
    Tournament t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int diff = ((y - x) % n + n) % n;
            if (diff >= 1 && diff <= d)
                t.set_arc(x, y);
        }
    return t;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

Tournament quadratic_residue_tournament(int q) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
        fail(ErrorKind::NotPrime, std::to_string(q) + " is not prime (prime powers are not supported)");
    if (q % 4 != 3)
        fail(ErrorKind::WrongResidueClass, std::to_string(q) + " is not 3 mod 4");
    std::vector<char> square(q, 0);
    for (long long z = 1; z < q; ++z)
        square[(z * z) % q] = 1;
    Tournament t(q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (x != y && square[((y - x) % q + q) % q])
                t.set_arc(x, y);
    return t;
}

long long count_directed_cycles(const Tournament &t, int m) {
    int n = t.n();
    if (m < 3)
        fail(ErrorKind::InvalidArgument, "directed cycles need length >= 3");
    if (n > Caps{}.tournament_vertices)
        fail(ErrorKind::CapExceeded, "tournament too large for cycle counting");
    long long count = 0;
    if (m == 3) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if ((t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) || (t.arc(a, c) && t.arc(c, b) && t.arc(b, a)))
                        ++count;
        return count;
    }
    // each cycle is counted once from its smallest vertex
    std::vector<char> on(n, 0);
    auto dfs = [&](auto &&self, int s, int u, int len) -> void {
        if (len == m) {
            if (t.arc(u, s))
                ++count;
            return;
        }
        for (int w = s + 1; w < n; ++w)
            if (!on[w] && t.arc(u, w)) {
                on[w] = 1;
                self(self, s, w, len + 1);
                on[w] = 0;
            }
    };
    for (int s = 0; s < n; ++s)
        dfs(dfs, s, s, 1);
    return count;
}

bool is_arc_transitive(const Tournament &t) {
    LabelledGraph lg(t.n());
    auto arcs = t.arcs();
    for (auto [u, v] : arcs)
        lg.add_arc(u, v, 0);
    if (arcs.empty())
        return true;
    auto [u0, v0] = arcs[0];
    for (auto [u, v] : arcs)
        if (!find_isomorphism(lg, lg, {{u0, u}, {v0, v}}))
            return false;
    return true;
}

std::vector<Tournament> regular_tournaments(int n) {
    if (n % 2 == 0 || n < 1)
        return {};
    if (n > 7)
        fail(ErrorKind::CapExceeded, "exhaustive tournament enumeration is limited to n <= 7");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::uint64_t total = 1ULL << pairs.size();
    const std::size_t chunks = 64;
    std::uint64_t per = (total + chunks - 1) / chunks;
    std::vector<std::vector<std::uint64_t>> found(chunks);
    int half = (n - 1) / 2;
    parallel_for(chunks, [&](std::size_t c) {
        std::uint64_t lo = c * per, hi = std::min(total, lo + per);
        std::vector<int> out(n);
        for (std::uint64_t x = lo; x < hi; ++x) {
            std::fill(out.begin(), out.end(), 0);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                ++out[(x >> i) & 1 ? pairs[i].first : pairs[i].second];
            if (std::all_of(out.begin(), out.end(), [&](int d) { return d == half; }))
                found[c].push_back(x);
        }
    });
    std::vector<Tournament> r;
    for (const auto &f : found)
        for (auto x : f) {
            Tournament t(n);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto [u, v] = pairs[i];
                if ((x >> i) & 1)
                    t.set_arc(u, v);
                else
                    t.set_arc(v, u);
            }
            r.push_back(std::move(t));
        }
    return r;
}

Tournament sample_regular_tournament(int n, std::uint64_t seed, std::uint64_t index, int steps) {
    Tournament t = clockwise_tournament(n);
    std::mt19937_64 rng(substream_seed(seed, index));
    for (int s = 0; s < steps; ++s) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
        if (a == b || b == c || a == c)
            continue;
        if (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) {
            t.set_arc(b, a);
            t.set_arc(c, b);
            t.set_arc(a, c);
        } else if (t.arc(a, c) && t.arc(c, b) && t.arc(b, a)) {
            t.set_arc(c, a);
            t.set_arc(b, c);
            t.set_arc(a, b);
        }
    }
    return t;
}

std::vector<std::vector<int>> k_subsets(const std::vector<int> &ground, int k) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(ground.size());
    if (k < 0 || k > n)
        return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i)
            s[i] = ground[idx[i]];
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::string set_name(const std::vector<int> &s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            r += ",";
        r += std::to_string(s[i]);
    }
    return r + "}";
}

SetInclusion set_inclusion_graph(int n, int k, int r, const Caps &caps) {
    if (!(n > k && k > r && r > 0))
        fail(ErrorKind::DegenerateParameters, "set inclusion needs n > k > r > 0, got (" + std::to_string(n) + "," +
                                                  std::to_string(k) + "," + std::to_string(r) + ")");
    if (n > 40 || binomial_u64(n, k) + binomial_u64(n, r) > caps.construction_vertices)
        fail(ErrorKind::CapExceeded, "set inclusion graph exceeds vertex cap " +
                                         std::to_string(caps.construction_vertices));
    SetInclusion s;
    s.n = n;
    s.k = k;
    s.r = r;
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i)
        ground[i] = i + 1;
    s.ksets = k_subsets(ground, k);
    s.rsets = k_subsets(ground, r);
    std::map<std::vector<int>, int> rindex;
    for (std::size_t i = 0; i < s.rsets.size(); ++i)
        rindex[s.rsets[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.ksets.size(); ++i)
        for (const auto &b : k_subsets(s.ksets[i], r))
            edges.push_back({static_cast<int>(i), rindex.at(b)});
    std::vector<std::string> left, right;
    for (const auto &a : s.ksets)
        left.push_back(set_name(a));
    for (const auto &b : s.rsets)
        right.push_back(set_name(b));
    s.graph = BipartiteGraph(std::move(left), std::move(right), std::move(edges));
    return s;
}

SetInclusion bipartite_kneser(int n, int r, const Caps &caps) {
    if (!(r >= 1 && n > 2 * r))
        fail(ErrorKind::DegenerateParameters, "bipartite Kneser graph needs n > 2r >= 2, got (" + std::to_string(n) +
                                                  "," + std::to_string(r) + ")");
    return set_inclusion_graph(n, n - r, r, caps);
}

UniformHypergraph make_hypergraph(std::vector<int> vertices, int r, std::vector<std::vector<int>> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        fail(ErrorKind::InvalidGraph, "hypergraph vertices repeat");
    if (r < 1)
        fail(ErrorKind::InvalidGraph, "hypergraph arity must be >= 1");
    for (auto &e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r || std::adjacent_find(e.begin(), e.end()) != e.end())
            fail(ErrorKind::InvalidGraph, "hypergraph edge " + set_name(e) + " is not an r-set");
        for (int x : e)
            if (!std::binary_search(vertices.begin(), vertices.end(), x))
                fail(ErrorKind::InvalidGraph, "hypergraph edge " + set_name(e) + " uses an undeclared vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(ErrorKind::InvalidGraph, "hypergraph edges repeat");
    return {std::move(vertices), r, std::move(edges)};
}

UniformHypergraph link_hypergraph(const SetInclusion &s, const Colouring &a, int left_index) {
    check_aligned(s.graph, a);
    if (left_index < 0 || left_index >= static_cast<int>(s.ksets.size()))
        fail(ErrorKind::UnknownVertex, "no k-set with index " + std::to_string(left_index));
    std::vector<std::vector<int>> edges;
    for (const auto &inc : s.graph.incident(left_index))
        if (a[inc.edge])
            edges.push_back(s.rsets[inc.other - s.graph.num_left()]);
    return make_hypergraph(s.ksets[left_index], s.r, std::move(edges));
}

UniformHypergraph complement(const UniformHypergraph &h) {
    std::vector<std::vector<int>> edges;
    for (auto &e : k_subsets(h.vertices, h.r))
        if (!std::binary_search(h.edges.begin(), h.edges.end(), e))
            edges.push_back(std::move(e));
    return {h.vertices, h.r, std::move(edges)};
}

namespace {

void check_hypergraph_cap(const UniformHypergraph &h, const Caps &caps) {
    if (static_cast<int>(h.vertices.size()) > caps.hypergraph_vertices)
        fail(ErrorKind::CapExceeded, "hypergraph has " + std::to_string(h.vertices.size()) + " vertices > cap " +
                                         std::to_string(caps.hypergraph_vertices));
}

// vertices first (colour 0), then edges (colour 1)
LabelledGraph incidence(const UniformHypergraph &h) {
    int nv = static_cast<int>(h.vertices.size());
    LabelledGraph g(nv + static_cast<int>(h.edges.size()));
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
        g.vertex_colour[nv + j] = 1;
        for (int x : h.edges[j]) {
            int i = static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), x) - h.vertices.begin());
            g.add_edge(i, nv + static_cast<int>(j), 0);
        }
    }
    return g;
}

std::vector<int> degree_sequence(const UniformHypergraph &h) {
    std::map<int, int> deg;
    for (int v : h.vertices)
        deg[v] = 0;
    for (const auto &e : h.edges)
        for (int x : e)
            ++deg[x];
    std::vector<int> r;
    for (auto [v, d] : deg)
        r.push_back(d);
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

bool hypergraph_is_self_complementary(const UniformHypergraph &h, const Caps &caps) {
    check_hypergraph_cap(h, caps);
    auto c = complement(h);
    if (c.edges.size() != h.edges.size())
        return false;
    if (degree_sequence(h) != degree_sequence(c))
        return false;
    return find_isomorphism(incidence(h), incidence(c)).has_value();
}

bool hypergraph_is_edge_transitive(const UniformHypergraph &h, const Caps &caps) {
    check_hypergraph_cap(h, caps);
    if (h.edges.size() <= 1)
        return true;
    auto g = incidence(h);
    auto orb = orbits(g.n, automorphism_group(g).generators);
    int nv = static_cast<int>(h.vertices.size());
    for (int j = nv; j < g.n; ++j)
        if (orb[j] != orb[nv])
            return false;
    return true;
}

std::map<std::vector<int>, int> codegree_profile(const UniformHypergraph &h) {
    std::map<std::vector<int>, int> r;
    for (auto &s : k_subsets(h.vertices, h.r - 1))
        r[s] = 0;
    for (const auto &e : h.edges)
        for (auto &s : k_subsets(e, h.r - 1))
            ++r[s];
    return r;
}

} // namespace gnorm
