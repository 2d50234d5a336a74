#include "gnorm/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gnorm {

namespace {

// Lockstep refinement on the disjoint union g + h. Vertices [0, n) belong to
// g and [n, 2n) to h; every cell must hold equally many of each.
class UnionSearch {
  public:
    UnionSearch(const LabelledGraph &g, const LabelledGraph &h) : n_(g.n) {
        std::map<int, int> labels;
        for (const auto *x : {&g, &h})
            for (const auto &lst : x->out)
                for (const auto &[t, l] : lst)
                    labels.emplace(l, 0);
        int k = 0;
        for (auto &[l, idx] : labels)
            idx = k++;
        num_labels_ = std::max(1, k);
        out_.assign(2 * n_, {});
        in_.assign(2 * n_, {});
        colour_.assign(2 * n_, 0);
        for (int side = 0; side < 2; ++side) {
            const auto &x = side == 0 ? g : h;
            int off = side * n_;
            for (int v = 0; v < n_; ++v) {
                colour_[v + off] = x.vertex_colour[v];
                for (const auto &[t, l] : x.out[v]) {
                    out_[v + off].push_back({t + off, labels[l]});
                    in_[t + off].push_back({v + off, labels[l]});
                }
            }
        }
    }

    using Cells = std::vector<std::vector<int>>;

    std::optional<Cells> initial() const {
        std::map<int, std::vector<int>> by;
        for (int v = 0; v < 2 * n_; ++v)
            by[colour_[v]].push_back(v);
        Cells c;
        for (auto &[col, vs] : by) {
            if (!balanced(vs))
                return std::nullopt;
            c.push_back(std::move(vs));
        }
        if (!refine(c))
            return std::nullopt;
        return c;
    }

    bool balanced(const std::vector<int> &vs) const {
        int a = 0;
        for (int v : vs)
            a += v < n_ ? 1 : -1;
        return a == 0;
    }

    bool refine(Cells &cells) const {
        std::vector<int> cell_of(2 * n_);
        for (;;) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                for (int v : cells[i])
                    cell_of[v] = static_cast<int>(i);
            bool changed = false;
            Cells next;
            next.reserve(cells.size());
            std::vector<std::pair<std::vector<long long>, int>> sig;
            for (const auto &c : cells) {
                if (c.size() <= 2) {
                    next.push_back(c);
                    continue;
                }
                sig.clear();
                for (int v : c) {
                    std::vector<long long> s;
                    s.reserve(out_[v].size() + in_[v].size());
                    for (const auto &[t, l] : out_[v])
                        s.push_back((static_cast<long long>(cell_of[t]) * num_labels_ + l) * 2);
                    for (const auto &[t, l] : in_[v])
                        s.push_back((static_cast<long long>(cell_of[t]) * num_labels_ + l) * 2 + 1);
                    std::sort(s.begin(), s.end());
                    sig.push_back({std::move(s), v});
                }
                std::sort(sig.begin(), sig.end());
                std::size_t start = 0;
                int groups = 0;
                for (std::size_t i = 1; i <= sig.size(); ++i) {
                    if (i == sig.size() || sig[i].first != sig[start].first) {
                        std::vector<int> part;
                        for (std::size_t j = start; j < i; ++j)
                            part.push_back(sig[j].second);
                        if (!balanced(part))
                            return false;
                        std::sort(part.begin(), part.end());
                        next.push_back(std::move(part));
                        ++groups;
                        start = i;
                    }
                }
                if (groups > 1)
                    changed = true;
            }
            cells = std::move(next);
            if (!changed)
                return true;
        }
    }

    bool individualize(Cells &cells, int x, int y) const {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto &c = cells[i];
            if (std::find(c.begin(), c.end(), x) == c.end())
                continue;
            if (std::find(c.begin(), c.end(), y) == c.end())
                return false;
            if (c.size() == 2)
                return true;
            std::vector<int> rest;
            for (int v : c)
                if (v != x && v != y)
                    rest.push_back(v);
            c = {std::min(x, y), std::max(x, y)};
            cells.insert(cells.begin() + static_cast<long>(i) + 1, std::move(rest));
            return true;
        }
        return false;
    }

    int target_cell(const Cells &cells) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 2)
                return static_cast<int>(i);
        return -1;
    }

    bool verify(const Permutation &p) const {
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] != colour_[p[v] + n_])
                return false;
            if (out_[v].size() != out_[p[v] + n_].size())
                return false;
            std::vector<std::pair<int, int>> a, b;
            for (const auto &[t, l] : out_[v])
                a.push_back({p[t] + n_, l});
            b = out_[p[v] + n_];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                return false;
        }
        return true;
    }

    std::optional<Permutation> search(Cells cells) const {
        if (!refine(cells))
            return std::nullopt;
        int ti = target_cell(cells);
        if (ti < 0) {
            Permutation p(n_, -1);
            for (const auto &c : cells)
                p[c[0]] = c[1] - n_;
            if (verify(p))
                return p;
            return std::nullopt;
        }
        const auto &c = cells[ti];
        int v = c.front(); // cells are sorted, so the first member is in g
        for (int w : c) {
            if (w < n_)
                continue;
            Cells next = cells;
            individualize(next, v, w);
            if (auto r = search(std::move(next)))
                return r;
        }
        return std::nullopt;
    }

    int n() const { return n_; }

  private:
    int n_;
    int num_labels_ = 1;
    std::vector<int> colour_;
    std::vector<std::vector<std::pair<int, int>>> out_, in_;
};

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x)
            x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            p[std::max(a, b)] = std::min(a, b);
    }
};

void check_vertex_cap(int n, const Caps &caps) {
    if (static_cast<std::size_t>(n) > caps.vertices)
        fail(ErrorKind::CapExceeded, "automorphism search: " + std::to_string(n) + " vertices > cap " +
                                         std::to_string(caps.vertices));
}

} // namespace

bool is_isomorphism(const LabelledGraph &g, const LabelledGraph &h, const Permutation &p) {
    if (g.n != h.n || static_cast<int>(p.size()) != g.n)
        return false;
    std::vector<char> hit(g.n, 0);
    for (int v : p) {
        if (v < 0 || v >= g.n || hit[v])
            return false;
        hit[v] = 1;
    }
    for (int v = 0; v < g.n; ++v) {
        if (g.vertex_colour[v] != h.vertex_colour[p[v]])
            return false;
        std::vector<std::pair<int, int>> a, b = h.out[p[v]];
        for (const auto &[t, l] : g.out[v])
            a.push_back({p[t], l});
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return false;
    }
    return true;
}

std::optional<Permutation> find_isomorphism(const LabelledGraph &g, const LabelledGraph &h,
                                            const std::vector<std::pair<int, int>> &pinned) {
    if (g.n != h.n)
        return std::nullopt;
    if (g.n == 0)
        return Permutation{};
    UnionSearch s(g, h);
    auto cells = s.initial();
    if (!cells)
        return std::nullopt;
    for (const auto &[x, y] : pinned) {
        if (!s.individualize(*cells, x, y + g.n) || !s.refine(*cells))
            return std::nullopt;
    }
    return s.search(std::move(*cells));
}

std::vector<int> orbits(int n, const std::vector<Permutation> &gens) {
    UnionFind uf(n);
    for (const auto &p : gens)
        for (int i = 0; i < n; ++i)
            uf.unite(i, p[i]);
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i)
        r[i] = uf.find(i);
    return r;
}

GroupInfo automorphism_group(const LabelledGraph &g) {
    GroupInfo info;
    if (g.n == 0)
        return info;
    UnionSearch s(g, g);
    auto start = s.initial();
    if (!start)
        fail(ErrorKind::VerificationFailed, "identity rejected by refinement");
    std::vector<UnionSearch::Cells> levels{*start};
    std::vector<int> targets;
    for (;;) {
        const auto &cur = levels.back();
        int ti = s.target_cell(cur);
        if (ti < 0)
            break;
        int v = cur[ti].front();
        info.base.push_back(v);
        targets.push_back(ti);
        auto next = cur;
        s.individualize(next, v, v + g.n);
        if (!s.refine(next))
            fail(ErrorKind::VerificationFailed, "identity rejected by refinement");
        levels.push_back(std::move(next));
    }
    int depth = static_cast<int>(info.base.size());
    info.orbit_sizes.assign(depth, 1);
    auto orbit_of = [&](int v) {
        std::vector<char> in(g.n, 0);
        std::vector<int> q{v};
        in[v] = 1;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (const auto &p : info.generators)
                if (!in[p[q[i]]]) {
                    in[p[q[i]]] = 1;
                    q.push_back(p[q[i]]);
                }
        return in;
    };
    for (int lvl = depth - 1; lvl >= 0; --lvl) {
        int v = info.base[lvl];
        const auto &cells = levels[lvl];
        auto in = orbit_of(v);
        for (int w : cells[targets[lvl]]) {
            if (w < g.n || in[w - g.n])
                continue;
            auto next = cells;
            s.individualize(next, v, w);
            if (auto p = s.search(std::move(next))) {
                info.generators.push_back(*p);
                in = orbit_of(v);
            }
        }
        int sz = 0;
        for (char c : in)
            sz += c;
        info.orbit_sizes[lvl] = sz;
        info.order *= sz;
    }
    return info;
}

BigInt group_order_by_closure(int n, const std::vector<Permutation> &gens, std::size_t limit) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> seen{id};
    std::vector<Permutation> q{id};
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (const auto &g : gens) {
            Permutation c(n);
            for (int k = 0; k < n; ++k)
                c[k] = g[q[i][k]];
            if (seen.insert(c).second) {
                if (seen.size() > limit)
                    fail(ErrorKind::CapExceeded, "group closure exceeds limit");
                q.push_back(std::move(c));
            }
        }
    }
    return BigInt(seen.size());
}

LabelledGraph labelled_from(const BipartiteGraph &g, bool side_swap, const Colouring *a, bool flip) {
    LabelledGraph lg(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        lg.vertex_colour[v] = side_swap ? 0 : (g.is_left(v) ? 0 : 1);
    for (int e = 0; e < g.num_edges(); ++e) {
        int label = 0;
        if (a)
            label = flip ? 1 - (*a)[e] : (*a)[e];
        lg.add_edge(g.edge_left(e), g.edge_right(e), label);
    }
    return lg;
}

Automorphism automorphism_from(const BipartiteGraph &g, const Permutation &p) {
    Automorphism au;
    au.vertex_map = p;
    au.edge_map.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        int f = g.edge_between(p[g.edge_left(e)], p[g.edge_right(e)]);
        if (f < 0)
            fail(ErrorKind::VerificationFailed, "vertex map does not carry edges to edges");
        au.edge_map[e] = f;
    }
    au.swaps_sides = g.num_vertices() > 0 && !g.is_left(p[0]);
    return au;
}

namespace {

std::vector<int> edge_orbits(const BipartiteGraph &g, const std::vector<Permutation> &gens, int *count) {
    UnionFind uf(g.num_edges());
    for (const auto &p : gens) {
        auto au = automorphism_from(g, p);
        for (int e = 0; e < g.num_edges(); ++e)
            uf.unite(e, au.edge_map[e]);
    }
    std::vector<int> r(g.num_edges());
    std::set<int> distinct;
    for (int e = 0; e < g.num_edges(); ++e) {
        r[e] = uf.find(e);
        distinct.insert(r[e]);
    }
    if (count)
        *count = static_cast<int>(distinct.size());
    return r;
}

} // namespace

SymmetryReport automorphisms(const BipartiteGraph &g, bool side_swap, const Caps &caps) {
    check_vertex_cap(g.num_vertices(), caps);
    SymmetryReport rep;
    rep.side_swap = side_swap;
    auto info = automorphism_group(labelled_from(g, side_swap));
    rep.group_order = info.order;
    for (const auto &p : info.generators)
        rep.generators.push_back(automorphism_from(g, p));
    edge_orbits(g, info.generators, &rep.edge_orbit_count);
    rep.edge_transitive = rep.edge_orbit_count <= 1;
    auto vo = orbits(g.num_vertices(), info.generators);
    rep.vertex_transitive = std::all_of(vo.begin(), vo.end(), [](int x) { return x == 0; });
    return rep;
}

bool is_edge_transitive(const BipartiteGraph &g, bool side_swap, const Caps &caps) {
    return automorphisms(g, side_swap, caps).edge_transitive;
}

std::optional<Automorphism> colour_reversing_automorphism(const BipartiteGraph &g, const Colouring &a,
                                                          bool side_swap, const Caps &caps) {
    check_aligned(g, a);
    check_vertex_cap(g.num_vertices(), caps);
    auto p = find_isomorphism(labelled_from(g, side_swap, &a), labelled_from(g, side_swap, &a, true));
    if (!p)
        return std::nullopt;
    return automorphism_from(g, *p);
}

SelfConjugacy is_self_conjugate(const BipartiteGraph &g, const Colouring &a, bool side_swap,
                                const Caps &caps) {
    SelfConjugacy r;
    r.balanced = is_balanced(g, a);
    if (!r.balanced)
        return r;
    r.witness = colour_reversing_automorphism(g, a, side_swap, caps);
    r.value = r.witness.has_value();
    return r;
}

bool is_transitive_colouring(const BipartiteGraph &g, const Colouring &a, bool side_swap,
                             const Caps &caps) {
    check_vertex_cap(g.num_vertices(), caps);
    if (!is_balanced(g, a))
        return false;
    auto info = automorphism_group(labelled_from(g, side_swap, &a));
    auto orb = edge_orbits(g, info.generators, nullptr);
    int rep[2] = {-1, -1};
    for (int e = 0; e < g.num_edges(); ++e) {
        int c = a[e];
        if (rep[c] < 0)
            rep[c] = orb[e];
        else if (rep[c] != orb[e])
            return false;
    }
    return colour_reversing_automorphism(g, a, side_swap, caps).has_value();
}

TransitiveSearch exists_transitive_colouring(const BipartiteGraph &g, bool side_swap, const Caps &caps) {
    TransitiveSearch out;
    auto all = enumerate_balanced_colourings(g, caps);
    out.balanced_count = all.size();
    if (all.empty())
        return out;
    check_vertex_cap(g.num_vertices(), caps);
    if (!is_edge_transitive(g, side_swap, caps))
        return out;
    // the list is closed under conjugation and sorted, so entry i pairs with N-1-i
    std::size_t half = all.size() / 2;
    std::vector<char> ok(half, 0);
    parallel_for(half, [&](std::size_t i) { ok[i] = is_transitive_colouring(g, all[i], side_swap, caps); });
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < half; ++i)
        if (ok[i]) {
            hits.push_back(i);
            hits.push_back(all.size() - 1 - i);
        }
    std::sort(hits.begin(), hits.end());
    for (auto i : hits)
        out.all_transitive.push_back(all[i]);
    if (!out.all_transitive.empty())
        out.colouring = out.all_transitive.front();
    return out;
}

bool coloured_isomorphic(const BipartiteGraph &g1, const Colouring &a1, const BipartiteGraph &g2,
                         const Colouring &a2, bool side_swap, const Caps &caps) {
    check_aligned(g1, a1);
    check_aligned(g2, a2);
    check_vertex_cap(std::max(g1.num_vertices(), g2.num_vertices()), caps);
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
        return false;
    return find_isomorphism(labelled_from(g1, side_swap, &a1), labelled_from(g2, side_swap, &a2))
        .has_value();
}

bool graphs_isomorphic(const BipartiteGraph &g1, const BipartiteGraph &g2, bool side_swap,
                       const Caps &caps) {
    check_vertex_cap(std::max(g1.num_vertices(), g2.num_vertices()), caps);
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
        return false;
    return find_isomorphism(labelled_from(g1, side_swap), labelled_from(g2, side_swap)).has_value();
}

} // namespace gnorm
