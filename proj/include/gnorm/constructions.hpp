#pragma once

#include "gnorm/graph.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gnorm {

// Plain undirected simple graph on 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v
};

SimpleGraph complete_graph(int n);
SimpleGraph octahedron();

BipartiteGraph hypercube(int d, const Caps &caps = {});
Colouring hypercube_alpha(int d);
Colouring hypercube_beta(int d);

// Branch vertices "v{i}" on A, subdivision vertices "e{k}" on B.
// G-edge k = (u,v) gives edges 2k = (u, e{k}) and 2k+1 = (v, e{k}).
BipartiteGraph subdivide(const SimpleGraph &g);

struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

class Tournament {
  public:
    Tournament() = default;
    explicit Tournament(int n); // every arc i -> j for i < j
    static Tournament from_arcs(int n, const std::vector<std::pair<int, int>> &arcs);

    int n() const { return n_; }
    bool arc(int u, int v) const { return adj_[u * n_ + v] != 0; }
    void set_arc(int u, int v);
    int out_degree(int v) const;
    bool is_regular() const;
    std::vector<std::pair<int, int>> arcs() const; // sorted
    bool operator==(const Tournament &) const = default;

  private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

// u -> v when the edge from branch vertex u into the subdivision vertex has colour 1.
Digraph tournament_from_colouring(const BipartiteGraph &subdivided, const Colouring &a, const SimpleGraph &original);
Tournament as_tournament(const Digraph &d);
std::pair<BipartiteGraph, Colouring> colouring_from_tournament(const Tournament &t);

Tournament clockwise_tournament(int n);
Tournament quadratic_residue_tournament(int q);
bool is_prime(std::uint64_t n);

long long count_directed_cycles(const Tournament &t, int m);
bool is_arc_transitive(const Tournament &t);

// All regular tournaments on n <= 7 vertices (labelled), in arc-mask order.
std::vector<Tournament> regular_tournaments(int n);
// Random walk by directed-triangle reversals from the clockwise tournament.
Tournament sample_regular_tournament(int n, std::uint64_t seed, std::uint64_t index, int steps = 256);

struct SetInclusion {
    int n = 0, k = 0, r = 0;
    std::vector<std::vector<int>> ksets; // side A, lexicographic, 1-based elements
    std::vector<std::vector<int>> rsets; // side B
    BipartiteGraph graph;
};

std::vector<std::vector<int>> k_subsets(const std::vector<int> &ground, int k);
std::string set_name(const std::vector<int> &s);

SetInclusion set_inclusion_graph(int n, int k, int r, const Caps &caps = {});
SetInclusion bipartite_kneser(int n, int r, const Caps &caps = {});

struct UniformHypergraph {
    std::vector<int> vertices;
    int r = 1;
    std::vector<std::vector<int>> edges; // sorted, each sorted
};

UniformHypergraph make_hypergraph(std::vector<int> vertices, int r, std::vector<std::vector<int>> edges);
UniformHypergraph link_hypergraph(const SetInclusion &s, const Colouring &a, int left_index);
UniformHypergraph complement(const UniformHypergraph &h);
bool hypergraph_is_self_complementary(const UniformHypergraph &h, const Caps &caps = {});
bool hypergraph_is_edge_transitive(const UniformHypergraph &h, const Caps &caps = {});
std::map<std::vector<int>, int> codegree_profile(const UniformHypergraph &h);

} // namespace gnorm
