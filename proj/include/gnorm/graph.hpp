#pragma once

#include "gnorm/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gnorm {

// a indexes the left side A, b the right side B.
struct Edge {
    int a;
    int b;
    bool operator==(const Edge &) const = default;
};

// Index-aligned with a graph's edge list. 1 = plain factor, 0 = conjugated factor.
using Colouring = std::vector<std::uint8_t>;

Colouring conjugate(const Colouring &c);
int weight(const Colouring &c);
Colouring colouring_from_string(const std::string &bits);
std::string to_string(const Colouring &c);

class BipartiteGraph {
  public:
    struct Incidence {
        int other; // global vertex id
        int edge;
    };

    BipartiteGraph() = default;
    BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                   std::vector<Edge> edges);
    BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                   const std::vector<std::pair<std::string, std::string>> &edges);
    // Default names a0.. and b0..
    BipartiteGraph(int num_left, int num_right, std::vector<Edge> edges);

    int num_left() const { return static_cast<int>(left_.size()); }
    int num_right() const { return static_cast<int>(right_.size()); }
    int num_vertices() const { return num_left() + num_right(); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int e) const { return edges_[e]; }

    // Global vertex ids: left a -> a, right b -> num_left() + b.
    int left_vertex(int a) const { return a; }
    int right_vertex(int b) const { return num_left() + b; }
    bool is_left(int v) const { return v < num_left(); }
    int edge_left(int e) const { return edges_[e].a; }
    int edge_right(int e) const { return num_left() + edges_[e].b; }

    const std::vector<std::string> &left_names() const { return left_; }
    const std::vector<std::string> &right_names() const { return right_; }
    const std::string &name(int v) const;

    int degree(int v) const { return static_cast<int>(inc_[v].size()); }
    const std::vector<Incidence> &incident(int v) const { return inc_[v]; }

    // -1 when absent. Arguments are global ids in either order.
    int edge_between(int u, int v) const;

    // Same sides, same ids, same ordered edge list.
    bool operator==(const BipartiteGraph &o) const {
        return left_ == o.left_ && right_ == o.right_ && edges_ == o.edges_;
    }

  private:
    void build();

    std::vector<std::string> left_, right_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> inc_;
};

// Equality as unoriented graphs: same vertex ids, same unordered edge set.
bool same_usual_graph(const BipartiteGraph &g, const BipartiteGraph &h);

struct DegreeStats {
    std::vector<int> degree;
    std::vector<int> d_plus;
    std::vector<int> d_minus;
    long long c1 = 0; // sum over A of d+ d-
    long long c2 = 0; // sum over B of d+ d-
    long long d1 = 0; // sum over A of C(d-, 2)
    long long d2 = 0; // sum over B of C(d+, 2)
};

bool is_eulerian(const BipartiteGraph &g);
bool is_biregular(const BipartiteGraph &g);
std::optional<int> girth(const BipartiteGraph &g); // nullopt for forests
bool is_balanced(const BipartiteGraph &g, const Colouring &a);
DegreeStats degree_stats(const BipartiteGraph &g, const Colouring &a);

// Component id per global vertex, numbered by smallest member.
std::vector<int> connected_components(const BipartiteGraph &g, int *count = nullptr);
bool is_connected(const BipartiteGraph &g);

std::pair<BipartiteGraph, Colouring>
disjoint_union(const std::vector<std::pair<BipartiteGraph, Colouring>> &parts);

// Lexicographic order on colour vectors, index 0 most significant.
std::vector<Colouring> enumerate_balanced_colourings(const BipartiteGraph &g,
                                                     const Caps &caps = {});

void check_aligned(const BipartiteGraph &g, const Colouring &a);

} // namespace gnorm
