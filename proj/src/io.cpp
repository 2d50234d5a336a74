#include "gnorm/io.hpp"

#include <fstream>
#include <sstream>

namespace gnorm {

namespace {

std::string where(const std::string &text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void bad(const std::string &what) { fail(ErrorKind::ParseError, what); }

const json &field(const json &j, const char *key) {
    if (!j.is_object())
        bad("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T as(const json &j, const std::string &what) {
    try {
        return j.get<T>();
    } catch (const json::exception &) {
        bad(what + " has the wrong type");
    }
}

cplx complex_from(const json &v) {
    if (v.is_number())
        return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    bad("kernel entry must be a number or [re, im]");
}

} // namespace

json parse_json_text(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::string msg = e.what();
        auto cut = msg.find("parse error");
        bad(source + ": " + where(text, e.byte) + ": " + (cut == std::string::npos ? msg : msg.substr(cut)));
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out)
        fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

json graph_to_json(const BipartiteGraph &g) {
    json edges = json::array();
    for (int e = 0; e < g.num_edges(); ++e)
        edges.push_back({g.name(g.edge_left(e)), g.name(g.edge_right(e))});
    return {{"left", g.left_names()}, {"right", g.right_names()}, {"edges", edges}};
}

BipartiteGraph graph_from_json(const json &j) {
    auto left = as<std::vector<std::string>>(field(j, "left"), "left");
    auto right = as<std::vector<std::string>>(field(j, "right"), "right");
    auto edges = as<std::vector<std::pair<std::string, std::string>>>(field(j, "edges"), "edges");
    return BipartiteGraph(std::move(left), std::move(right), edges);
}

json colouring_to_json(const Colouring &a) {
    std::vector<int> v(a.begin(), a.end());
    return {{"colours", v}};
}

Colouring colouring_from_json(const json &j) {
    auto v = as<std::vector<int>>(field(j, "colours"), "colours");
    Colouring a;
    for (int x : v) {
        if (x != 0 && x != 1)
            bad("colours must be 0 or 1");
        a.push_back(static_cast<std::uint8_t>(x));
    }
    return a;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json kernel_to_json(const StepKernel &f) {
    json rows = json::array();
    for (int i = 0; i < f.p; ++i) {
        json row = json::array();
        for (int j = 0; j < f.q; ++j)
            row.push_back(complex_to_json(f.at(i, j)));
        rows.push_back(row);
    }
    return {{"rows", f.p}, {"cols", f.q}, {"values", rows}};
}

StepKernel kernel_from_json(const json &j) {
    int p = as<int>(field(j, "rows"), "rows");
    int q = as<int>(field(j, "cols"), "cols");
    const auto &vals = field(j, "values");
    if (p < 1 || q < 1)
        bad("kernel shape must be positive");
    if (!vals.is_array() || static_cast<int>(vals.size()) != p)
        bad("kernel needs " + std::to_string(p) + " rows");
    StepKernel f(p, q);
    for (int i = 0; i < p; ++i) {
        if (!vals[i].is_array() || static_cast<int>(vals[i].size()) != q)
            bad("kernel row " + std::to_string(i) + " needs " + std::to_string(q) + " entries");
        for (int c = 0; c < q; ++c)
            f.at(i, c) = complex_from(vals[i][c]);
    }
    return f;
}

json tournament_to_json(const Tournament &t) {
    json arcs = json::array();
    for (auto [u, v] : t.arcs())
        arcs.push_back({u, v});
    return {{"n", t.n()}, {"arcs", arcs}};
}

Tournament tournament_from_json(const json &j) {
    int n = as<int>(field(j, "n"), "n");
    auto arcs = as<std::vector<std::pair<int, int>>>(field(j, "arcs"), "arcs");
    try {
        return Tournament::from_arcs(n, arcs);
    } catch (const Error &e) {
        bad(e.what());
    }
}

json hypergraph_to_json(const UniformHypergraph &h) {
    return {{"vertices", h.vertices}, {"r", h.r}, {"edges", h.edges}};
}

UniformHypergraph hypergraph_from_json(const json &j) {
    return make_hypergraph(as<std::vector<int>>(field(j, "vertices"), "vertices"), as<int>(field(j, "r"), "r"),
                           as<std::vector<std::vector<int>>>(field(j, "edges"), "edges"));
}

json witness_to_json(const Witness &w, const Colouring &a) {
    json ks = json::array();
    for (const auto &k : w.kernels)
        ks.push_back(kernel_to_json(k));
    return {{"kind", w.kind},
            {"seed", w.seed},
            {"trial", w.trial},
            {"resolution", w.resolution},
            {"colouring", to_string(a)},
            {"kernels", ks},
            {"scalar", complex_to_json(w.scalar)},
            {"lhs", w.lhs},
            {"rhs", w.rhs}};
}

Witness witness_from_json(const json &j) {
    Witness w;
    w.kind = as<std::string>(field(j, "kind"), "kind");
    w.seed = as<std::uint64_t>(field(j, "seed"), "seed");
    w.trial = as<std::uint64_t>(field(j, "trial"), "trial");
    w.resolution = as<int>(field(j, "resolution"), "resolution");
    for (const auto &k : field(j, "kernels"))
        w.kernels.push_back(kernel_from_json(k));
    w.scalar = complex_from(field(j, "scalar"));
    w.lhs = as<double>(field(j, "lhs"), "lhs");
    w.rhs = as<double>(field(j, "rhs"), "rhs");
    return w;
}

json symmetry_to_json(const SymmetryReport &s) {
    json gens = json::array();
    for (const auto &a : s.generators)
        gens.push_back({{"vertices", a.vertex_map}, {"edges", a.edge_map}, {"swaps_sides", a.swaps_sides}});
    return {{"edge_transitive", s.edge_transitive},
            {"vertex_transitive", s.vertex_transitive},
            {"side_swap", s.side_swap},
            {"group_order", s.group_order.str()},
            {"edge_orbits", s.edge_orbit_count},
            {"generators", gens}};
}

json cycle_to_json(const BipartiteGraph &g, const Cycle &c) {
    json vs = json::array();
    for (int v : c.vertices)
        vs.push_back(g.name(v));
    return {{"vertices", vs}, {"edges", c.edges}};
}

json profile_to_json(const FourCycleProfile &p) {
    return {{"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}, {"c4", p.c4}, {"total", p.total()}};
}

} // namespace gnorm
