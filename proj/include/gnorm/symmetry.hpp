#pragma once

#include "gnorm/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace gnorm {

using BigInt = boost::multiprecision::cpp_int;
using Permutation = std::vector<int>;

// Vertex-coloured digraph with arc labels. An undirected edge is two arcs.
struct LabelledGraph {
    int n = 0;
    std::vector<int> vertex_colour;
    std::vector<std::vector<std::pair<int, int>>> out; // (target, label)

    explicit LabelledGraph(int n_ = 0) : n(n_), vertex_colour(n_, 0), out(n_) {}
    void add_arc(int u, int v, int label) { out[u].push_back({v, label}); }
    void add_edge(int u, int v, int label) {
        add_arc(u, v, label);
        add_arc(v, u, label);
    }
};

// Individualization-refinement search for a label- and colour-preserving
// bijection g -> h. `pinned` lists forced pairs (g vertex, h vertex).
std::optional<Permutation> find_isomorphism(const LabelledGraph &g, const LabelledGraph &h,
                                            const std::vector<std::pair<int, int>> &pinned = {});

bool is_isomorphism(const LabelledGraph &g, const LabelledGraph &h, const Permutation &p);

struct GroupInfo {
    std::vector<Permutation> generators;
    std::vector<int> base;
    std::vector<int> orbit_sizes; // along the base
    BigInt order = 1;
};

GroupInfo automorphism_group(const LabelledGraph &g);

// Orbit id (smallest member) for each point.
std::vector<int> orbits(int n, const std::vector<Permutation> &gens);

// Brute force over all sizes of closure, for small groups only.
BigInt group_order_by_closure(int n, const std::vector<Permutation> &gens, std::size_t limit);

struct Automorphism {
    Permutation vertex_map; // global vertex ids
    Permutation edge_map;
    bool swaps_sides = false;
};

struct SymmetryReport {
    bool edge_transitive = false;
    bool vertex_transitive = false;
    bool side_swap = true;
    std::vector<Automorphism> generators;
    BigInt group_order = 1;
    int edge_orbit_count = 0;
};

LabelledGraph labelled_from(const BipartiteGraph &g, bool side_swap, const Colouring *a = nullptr,
                            bool flip = false);
Automorphism automorphism_from(const BipartiteGraph &g, const Permutation &p);

SymmetryReport automorphisms(const BipartiteGraph &g, bool side_swap = true, const Caps &caps = {});
bool is_edge_transitive(const BipartiteGraph &g, bool side_swap = true, const Caps &caps = {});

struct SelfConjugacy {
    bool value = false;
    bool balanced = false;
    std::optional<Automorphism> witness; // colour-reversing
};

SelfConjugacy is_self_conjugate(const BipartiteGraph &g, const Colouring &a, bool side_swap = true,
                                const Caps &caps = {});
std::optional<Automorphism> colour_reversing_automorphism(const BipartiteGraph &g, const Colouring &a,
                                                          bool side_swap = true, const Caps &caps = {});
bool is_transitive_colouring(const BipartiteGraph &g, const Colouring &a, bool side_swap = true,
                             const Caps &caps = {});

struct TransitiveSearch {
    std::optional<Colouring> colouring;
    bool exhaustive = true;
    std::size_t balanced_count = 0;
    std::vector<Colouring> all_transitive;
};

// All balanced colourings are tested; `colouring` is the lexicographically least transitive one.
TransitiveSearch exists_transitive_colouring(const BipartiteGraph &g, bool side_swap = true,
                                             const Caps &caps = {});

bool coloured_isomorphic(const BipartiteGraph &g1, const Colouring &a1, const BipartiteGraph &g2,
                         const Colouring &a2, bool side_swap = true, const Caps &caps = {});
bool graphs_isomorphic(const BipartiteGraph &g1, const BipartiteGraph &g2, bool side_swap = true,
                       const Caps &caps = {});

} // namespace gnorm
