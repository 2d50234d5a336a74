#include "gnorm/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

namespace gnorm {

Colouring conjugate(const Colouring &c) {
    Colouring r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        r[i] = c[i] ? 0 : 1;
    return r;
}

int weight(const Colouring &c) {
    int w = 0;
    for (auto x : c)
        w += x ? 1 : 0;
    return w;
}

Colouring colouring_from_string(const std::string &bits) {
    Colouring c;
    for (char ch : bits) {
        if (ch == '0' || ch == '1')
            c.push_back(static_cast<std::uint8_t>(ch - '0'));
        else if (ch != ' ' && ch != ',')
            fail(ErrorKind::ParseError, "colouring string has character '" + std::string(1, ch) + "'");
    }
    return c;
}

std::string to_string(const Colouring &c) {
    std::string s;
    for (auto x : c)
        s.push_back(x ? '1' : '0');
    return s;
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                               std::vector<Edge> edges)
    : left_(std::move(left)), right_(std::move(right)), edges_(std::move(edges)) {
    build();
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                               const std::vector<std::pair<std::string, std::string>> &edges)
    : left_(std::move(left)), right_(std::move(right)) {
    std::unordered_map<std::string, int> li, ri;
    for (int i = 0; i < num_left(); ++i)
        li.emplace(left_[i], i);
    for (int i = 0; i < num_right(); ++i)
        ri.emplace(right_[i], i);
    for (const auto &[u, v] : edges) {
        auto a = li.find(u);
        auto b = ri.find(v);
        if (a == li.end())
            fail(ErrorKind::InvalidGraph, "edge endpoint '" + u + "' is not a left vertex");
        if (b == ri.end())
            fail(ErrorKind::InvalidGraph, "edge endpoint '" + v + "' is not a right vertex");
        edges_.push_back({a->second, b->second});
    }
    build();
}

static std::vector<std::string> default_names(char prefix, int n) {
    std::vector<std::string> r;
    for (int i = 0; i < n; ++i)
        r.push_back(std::string(1, prefix) + std::to_string(i));
    return r;
}

BipartiteGraph::BipartiteGraph(int num_left, int num_right, std::vector<Edge> edges)
    : BipartiteGraph(default_names('a', num_left), default_names('b', num_right), std::move(edges)) {}

void BipartiteGraph::build() {
    std::set<std::string> ids;
    for (const auto &s : left_)
        if (!ids.insert(s).second)
            fail(ErrorKind::InvalidGraph, "duplicate vertex id '" + s + "'");
    for (const auto &s : right_)
        if (!ids.insert(s).second)
            fail(ErrorKind::InvalidGraph, "duplicate vertex id '" + s + "'");
    inc_.assign(num_vertices(), {});
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < num_edges(); ++e) {
        const auto &ed = edges_[e];
        if (ed.a < 0 || ed.a >= num_left() || ed.b < 0 || ed.b >= num_right())
            fail(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " has an endpoint off its side");
        if (!seen.insert({ed.a, ed.b}).second)
            fail(ErrorKind::InvalidGraph, "duplicate edge " + left_[ed.a] + "-" + right_[ed.b]);
        int u = ed.a, v = num_left() + ed.b;
        inc_[u].push_back({v, e});
        inc_[v].push_back({u, e});
    }
    for (int v = 0; v < num_vertices(); ++v)
        if (inc_[v].empty())
            fail(ErrorKind::InvalidGraph, "isolated vertex '" + name(v) + "'");
}

const std::string &BipartiteGraph::name(int v) const {
    return is_left(v) ? left_[v] : right_[v - num_left()];
}

int BipartiteGraph::edge_between(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        return -1;
    const auto &lst = inc_[u].size() <= inc_[v].size() ? inc_[u] : inc_[v];
    int other = inc_[u].size() <= inc_[v].size() ? v : u;
    for (const auto &i : lst)
        if (i.other == other)
            return i.edge;
    return -1;
}

bool same_usual_graph(const BipartiteGraph &g, const BipartiteGraph &h) {
    auto edge_set = [](const BipartiteGraph &x) {
        std::set<std::pair<std::string, std::string>> s;
        for (int e = 0; e < x.num_edges(); ++e) {
            auto u = x.name(x.edge_left(e)), v = x.name(x.edge_right(e));
            if (v < u)
                std::swap(u, v);
            s.insert({u, v});
        }
        return s;
    };
    auto vertex_set = [](const BipartiteGraph &x) {
        std::set<std::string> s(x.left_names().begin(), x.left_names().end());
        s.insert(x.right_names().begin(), x.right_names().end());
        return s;
    };
    return vertex_set(g) == vertex_set(h) && edge_set(g) == edge_set(h);
}

void check_aligned(const BipartiteGraph &g, const Colouring &a) {
    if (static_cast<int>(a.size()) != g.num_edges())
        fail(ErrorKind::InvalidArgument, "colouring has " + std::to_string(a.size()) +
                                             " entries for " + std::to_string(g.num_edges()) + " edges");
    for (auto x : a)
        if (x > 1)
            fail(ErrorKind::InvalidArgument, "colours must be 0 or 1");
}

bool is_eulerian(const BipartiteGraph &g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) % 2)
            return false;
    return true;
}

bool is_biregular(const BipartiteGraph &g) {
    for (int v = 1; v < g.num_left(); ++v)
        if (g.degree(v) != g.degree(0))
            return false;
    for (int b = 1; b < g.num_right(); ++b)
        if (g.degree(g.right_vertex(b)) != g.degree(g.right_vertex(0)))
            return false;
    return true;
}

std::optional<int> girth(const BipartiteGraph &g) {
    int best = std::numeric_limits<int>::max();
    int n = g.num_vertices();
    std::vector<int> dist(n), parent_edge(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent_edge[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (2 * dist[u] + 1 >= best)
                break;
            for (const auto &[w, e] : g.incident(u)) {
                if (e == parent_edge[u])
                    continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    q.push_back(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

bool is_balanced(const BipartiteGraph &g, const Colouring &a) {
    check_aligned(g, a);
    for (int v = 0; v < g.num_vertices(); ++v) {
        int ones = 0;
        for (const auto &i : g.incident(v))
            ones += a[i.edge];
        if (2 * ones != g.degree(v))
            return false;
    }
    return true;
}

DegreeStats degree_stats(const BipartiteGraph &g, const Colouring &a) {
    check_aligned(g, a);
    DegreeStats s;
    int n = g.num_vertices();
    s.degree.resize(n);
    s.d_plus.resize(n);
    s.d_minus.resize(n);
    for (int v = 0; v < n; ++v) {
        int ones = 0;
        for (const auto &i : g.incident(v))
            ones += a[i.edge];
        int zeros = g.degree(v) - ones;
        s.degree[v] = g.degree(v);
        // colour 1 points A -> B
        if (g.is_left(v)) {
            s.d_plus[v] = ones;
            s.d_minus[v] = zeros;
        } else {
            s.d_plus[v] = zeros;
            s.d_minus[v] = ones;
        }
        long long p = s.d_plus[v], m = s.d_minus[v];
        if (g.is_left(v)) {
            s.c1 += p * m;
            s.d1 += m * (m - 1) / 2;
        } else {
            s.c2 += p * m;
            s.d2 += p * (p - 1) / 2;
        }
    }
    return s;
}

std::vector<int> connected_components(const BipartiteGraph &g, int *count) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = c;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto &i : g.incident(u))
                if (comp[i.other] < 0) {
                    comp[i.other] = c;
                    q.push_back(i.other);
                }
        }
        ++c;
    }
    if (count)
        *count = c;
    return comp;
}

bool is_connected(const BipartiteGraph &g) {
    int c = 0;
    connected_components(g, &c);
    return c <= 1;
}

std::pair<BipartiteGraph, Colouring>
disjoint_union(const std::vector<std::pair<BipartiteGraph, Colouring>> &parts) {
    if (parts.empty())
        fail(ErrorKind::InvalidArgument, "disjoint_union of an empty list");
    std::vector<std::string> left, right;
    std::vector<Edge> edges;
    Colouring col;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto &[g, a] = parts[i];
        check_aligned(g, a);
        int lo = static_cast<int>(left.size()), ro = static_cast<int>(right.size());
        std::string tag = std::to_string(i) + ":";
        for (const auto &s : g.left_names())
            left.push_back(tag + s);
        for (const auto &s : g.right_names())
            right.push_back(tag + s);
        for (const auto &e : g.edges())
            edges.push_back({e.a + lo, e.b + ro});
        col.insert(col.end(), a.begin(), a.end());
    }
    return {BipartiteGraph(std::move(left), std::move(right), std::move(edges)), std::move(col)};
}

std::vector<Colouring> enumerate_balanced_colourings(const BipartiteGraph &g, const Caps &caps) {
    if (static_cast<std::size_t>(g.num_edges()) > caps.balanced_edges)
        fail(ErrorKind::CapExceeded, "balanced enumeration: " + std::to_string(g.num_edges()) +
                                         " edges > cap " + std::to_string(caps.balanced_edges));
    std::vector<Colouring> out;
    if (!is_eulerian(g))
        return out;
    int m = g.num_edges(), n = g.num_vertices();
    std::vector<int> ones(n, 0), zeros(n, 0), half(n);
    for (int v = 0; v < n; ++v)
        half[v] = g.degree(v) / 2;
    Colouring cur(m, 0);
    std::vector<int> u_of(m), v_of(m);
    for (int e = 0; e < m; ++e) {
        u_of[e] = g.edge_left(e);
        v_of[e] = g.edge_right(e);
    }
    // iterative depth-first search; colour 0 before 1 gives lexicographic order
    std::vector<int> state(m + 1, -1);
    int e = 0;
    while (e >= 0) {
        if (e == m) {
            out.push_back(cur);
            --e;
            continue;
        }
        int u = u_of[e], v = v_of[e];
        // undo previous choice at this depth
        if (state[e] == 0) {
            --zeros[u];
            --zeros[v];
        } else if (state[e] == 1) {
            --ones[u];
            --ones[v];
        }
        int next = state[e] + 1;
        bool placed = false;
        for (; next <= 1; ++next) {
            if (next == 0 && zeros[u] < half[u] && zeros[v] < half[v]) {
                ++zeros[u];
                ++zeros[v];
                placed = true;
                break;
            }
            if (next == 1 && ones[u] < half[u] && ones[v] < half[v]) {
                ++ones[u];
                ++ones[v];
                placed = true;
                break;
            }
        }
        if (!placed) {
            state[e] = -1;
            --e;
            continue;
        }
        state[e] = next;
        cur[e] = static_cast<std::uint8_t>(next);
        ++e;
    }
    return out;
}

} // namespace gnorm
