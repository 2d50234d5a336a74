#include "gnorm/acceptance.hpp"
#include "gnorm/certifier.hpp"
#include "gnorm/constructions.hpp"
#include "gnorm/cycles.hpp"
#include "gnorm/density.hpp"
#include "gnorm/io.hpp"
#include "gnorm/symmetry.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

using namespace gnorm;

namespace {

struct Options {
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 1000;
    int resolution = 3;
    std::optional<std::size_t> cap_edges;
    std::optional<std::uint64_t> cap_assignments;
    bool side_swap = true;
    std::string variant = "t";
    std::string mode = "eliminate";
    bool pretty = false;
    std::string out;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Caps caps_of(const Options &o) {
    Caps c;
    if (o.cap_edges) {
        c.balanced_edges = *o.cap_edges;
        c.colouring_edges = *o.cap_edges;
    }
    if (o.cap_assignments)
        c.assignments = *o.cap_assignments;
    if (c.balanced_edges == 0 || c.colouring_edges == 0 || c.assignments == 0)
        throw UsageError("caps must be positive");
    return c;
}

void pretty_lines(const json &j, const std::string &indent, std::string &out) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                out += indent + k + ":\n";
                pretty_lines(v, indent + "  ", out);
            } else {
                out += indent + k + ": " + v.dump() + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            if (v.is_structured() && !v.empty()) {
                out += indent + "-\n";
                pretty_lines(v, indent + "  ", out);
            } else {
                out += indent + "- " + v.dump() + "\n";
            }
        }
    } else {
        out += indent + j.dump() + "\n";
    }
}

void emit(const Options &o, const json &j) {
    std::string text;
    if (o.pretty)
        pretty_lines(j, "", text);
    else
        text = j.dump() + "\n";
    if (o.out.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_text_file(o.out, text);
}

Mode mode_of(const Options &o) {
    if (o.variant == "t")
        return Mode::Conjugate;
    if (o.variant == "r")
        return Mode::Transpose;
    throw UsageError("--variant must be t or r");
}

Method method_of(const Options &o) {
    if (o.mode == "direct")
        return Method::Direct;
    if (o.mode == "eliminate")
        return Method::Eliminate;
    throw UsageError("--mode must be direct or eliminate");
}

json value_json(cplx z) { return complex_to_json(z); }

int cmd_check(const Options &o, const std::string &graph_file, const std::string &colouring_file) {
    Caps caps = caps_of(o);
    auto g = graph_from_json(read_json_file(graph_file));
    json r;
    r["vertices"] = g.num_vertices();
    r["edges"] = g.num_edges();
    r["connected"] = is_connected(g);
    r["eulerian"] = is_eulerian(g);
    r["biregular"] = is_biregular(g);
    auto gi = girth(g);
    r["girth"] = gi ? json(*gi) : json(nullptr);
    auto sym = automorphisms(g, o.side_swap, caps);
    r["edge_transitive"] = sym.edge_transitive;
    r["vertex_transitive"] = sym.vertex_transitive;
    r["group_order"] = sym.group_order.str();
    r["automorphism_mode"] = o.side_swap ? "side_swap" : "strict";
    if (!colouring_file.empty()) {
        auto a = colouring_from_json(read_json_file(colouring_file));
        check_aligned(g, a);
        r["balanced"] = is_balanced(g, a);
        r["self_conjugate"] = is_self_conjugate(g, a, o.side_swap, caps).value;
        r["transitive"] = is_transitive_colouring(g, a, o.side_swap, caps);
        r["profile"] = profile_to_json(classify_4cycles(g, a, caps));
        if (gi) {
            r["kappa_girth"] = kappa_alternating(g, a, *gi, caps);
            auto law = check_girth_cycle_law(g, a, caps);
            r["girth_cycle_law"] = law.holds;
            if (law.witness)
                r["girth_cycle_witness"] = cycle_to_json(g, *law.witness);
        }
        auto tp = check_two_path_law(g, a);
        r["two_path_law"] = tp.holds;
        if (tp.witness) {
            json w = json::array();
            for (int v : *tp.witness)
                w.push_back(g.name(v));
            r["two_path_witness"] = w;
        }
    }
    emit(o, r);
    return 0;
}

int finish_certificate(const Options &o, const Certificate &c, const BipartiteGraph *g, const Caps &caps) {
    json j = certificate_json(c);
    bool ok = reverify(c, g, caps);
    j["reverified"] = ok;
    emit(o, j);
    if (!ok)
        return 3;
    if (c.cap_stage && c.verdict != Verdict::NotNorming)
        return 2;
    return 0;
}

int cmd_certify(const Options &o, const std::vector<std::string> &args, const std::string &hint_family,
                const std::vector<int> &hint_params) {
    Caps caps = caps_of(o);
    if (args.empty())
        throw UsageError("certify needs a family or 'graph <file>'");
    if (args[0] == "graph") {
        if (args.size() != 2)
            throw UsageError("usage: certify graph <file>");
        auto g = graph_from_json(read_json_file(args[1]));
        std::optional<FamilyHint> hint;
        if (!hint_family.empty())
            hint = FamilyHint{hint_family, hint_params};
        auto c = certify_not_norming(g, hint, o.side_swap, caps);
        return finish_certificate(o, c, &g, caps);
    }
    std::vector<int> params;
    for (std::size_t i = 1; i < args.size(); ++i) {
        try {
            params.push_back(std::stoi(args[i]));
        } catch (const std::exception &) {
            throw UsageError("parameter '" + args[i] + "' is not an integer");
        }
    }
    auto c = certify_family(args[0], params, o.side_swap, caps);
    return finish_certificate(o, c, nullptr, caps);
}

int cmd_colourings(const Options &o, const std::string &graph_file, bool transitive) {
    Caps caps = caps_of(o);
    auto g = graph_from_json(read_json_file(graph_file));
    auto bal = enumerate_balanced_colourings(g, caps);
    json r;
    json list = json::array();
    for (const auto &a : bal)
        list.push_back(to_string(a));
    r["balanced_count"] = bal.size();
    r["balanced"] = list;
    if (transitive) {
        auto ts = exists_transitive_colouring(g, o.side_swap, caps);
        json t = json::array();
        for (const auto &a : ts.all_transitive)
            t.push_back(to_string(a));
        r["transitive"] = t;
    }
    emit(o, r);
    return 0;
}

int cmd_density(const Options &o, const std::string &graph_file, const std::string &colouring_file,
                const std::string &kernel_file) {
    Caps caps = caps_of(o);
    auto g = graph_from_json(read_json_file(graph_file));
    auto a = colouring_from_json(read_json_file(colouring_file));
    auto f = kernel_from_json(read_json_file(kernel_file));
    cplx v = t_density(g, a, f, mode_of(o), method_of(o), caps);
    emit(o, {{"value", value_json(v)}, {"variant", o.variant}, {"mode", o.mode}});
    return 0;
}

int cmd_smax(const Options &o, const std::string &graph_file, const std::string &kernel_file, int rho) {
    Caps caps = caps_of(o);
    auto g = graph_from_json(read_json_file(graph_file));
    auto f = kernel_from_json(read_json_file(kernel_file));
    auto s = s_max(g, f, mode_of(o), caps);
    json r{{"s_max", s.value}, {"argmax", to_string(s.argmax)}, {"variant", o.variant}};
    if (rho > 0) {
        r["rho_m"] = rho;
        r["rho"] = rho_2m(g, f, rho, mode_of(o), caps);
    }
    emit(o, r);
    return 0;
}

int cmd_falsify(const Options &o, const std::string &graph_file, const std::string &colouring_file,
                const std::string &search) {
    if (!o.seed)
        throw UsageError("falsify needs --seed");
    Caps caps = caps_of(o);
    auto g = graph_from_json(read_json_file(graph_file));
    auto a = colouring_from_json(read_json_file(colouring_file));
    std::optional<Witness> w;
    if (search == "triangle")
        w = triangle_falsifier(g, a, *o.seed, o.trials, o.resolution, caps);
    else if (search == "hatami")
        w = hatami_search(g, a, *o.seed, o.trials, o.resolution, caps);
    else
        throw UsageError("--search must be triangle or hatami");
    json r{{"search", search}, {"seed", *o.seed}, {"trials", o.trials}, {"resolution", o.resolution}};
    if (w) {
        if (!replay_witness(g, a, *w, caps))
            fail(ErrorKind::VerificationFailed, "witness does not replay");
        r["witness"] = witness_to_json(*w, a);
    } else {
        r["witness"] = nullptr;
    }
    emit(o, r);
    return 0;
}

int cmd_tournament(const Options &o, const std::string &kind, const std::string &arg) {
    Tournament t;
    if (kind == "clockwise" || kind == "qr") {
        int n;
        try {
            n = std::stoi(arg);
        } catch (const std::exception &) {
            throw UsageError("tournament order must be an integer");
        }
        t = kind == "clockwise" ? clockwise_tournament(n) : quadratic_residue_tournament(n);
    } else if (arg.empty()) {
        t = tournament_from_json(read_json_file(kind));
    } else {
        throw UsageError("usage: tournament clockwise N | qr N | <file>");
    }
    json deg = json::array();
    for (int v = 0; v < t.n(); ++v)
        deg.push_back(t.out_degree(v));
    json r = tournament_to_json(t);
    r["regular"] = t.is_regular();
    r["out_degrees"] = deg;
    r["kappa3"] = count_directed_cycles(t, 3);
    r["kappa4"] = count_directed_cycles(t, 4);
    if (t.n() <= Caps{}.tournament_vertices)
        r["arc_transitive"] = is_arc_transitive(t);
    emit(o, r);
    return 0;
}

int cmd_reproduce(const Options &o) {
    AcceptanceConfig cfg;
    if (o.seed)
        cfg.seed = *o.seed;
    cfg.caps = caps_of(o);
    auto rows = run_acceptance(cfg);
    json list = json::array();
    int failed = 0;
    for (const auto &r : rows) {
        list.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        failed += r.pass ? 0 : 1;
        std::fprintf(stderr, "criterion %d: %.3fs\n", r.id, r.seconds);
    }
    if (o.pretty) {
        std::string text;
        for (const auto &r : rows)
            text += std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name + "  " +
                    r.detail + "\n";
        if (o.out.empty())
            std::fputs(text.c_str(), stdout);
        else
            write_text_file(o.out, text);
    } else {
        Options plain = o;
        emit(plain, {{"seed", cfg.seed}, {"rows", list}, {"failed", failed}});
    }
    return failed ? 3 : 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"gnorm: obstructions to graph norms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::uint64_t seed = 0;
    std::size_t cap_edges = 0;
    std::uint64_t cap_assign = 0;
    auto *seed_opt = app.add_option("--seed", seed, "64-bit seed for randomized commands");
    app.add_option("--trials", o.trials, "number of random trials")->check(CLI::PositiveNumber);
    app.add_option("--resolution", o.resolution, "step-kernel resolution")->check(CLI::PositiveNumber);
    auto *ce = app.add_option("--cap-edges", cap_edges, "edge cap for exponential scans");
    auto *ca = app.add_option("--cap-assignments", cap_assign, "assignment cap for direct evaluation");
    app.add_option("--side-swap", o.side_swap, "allow automorphisms that swap the sides (true/false)");
    app.add_option("--variant", o.variant, "t (conjugate) or r (transpose)");
    app.add_option("--mode", o.mode, "direct or eliminate");
    app.add_flag("--pretty", o.pretty, "human-readable output");
    app.add_option("--out", o.out, "write output to a file");

    std::string graph_file, colouring_file, kernel_file, search = "triangle", hint_family, kind, arg;
    std::vector<std::string> certify_args;
    std::vector<int> hint_params;
    bool transitive = false;
    int rho = 0;

    auto *check = app.add_subcommand("check", "structural report for a graph and optional colouring");
    check->add_option("graph", graph_file)->required();
    check->add_option("colouring", colouring_file);

    auto *certify = app.add_subcommand("certify", "certificate for a family or a graph file");
    certify->add_option("args", certify_args)->required();
    certify->add_option("--family", hint_family, "family hint for 'certify graph'");
    certify->add_option("--params", hint_params, "family hint parameters");

    auto *colourings = app.add_subcommand("colourings", "balanced (and transitive) colourings");
    colourings->add_option("graph", graph_file)->required();
    colourings->add_flag("--transitive", transitive);

    auto *density = app.add_subcommand("density", "evaluate a density");
    density->add_option("graph", graph_file)->required();
    density->add_option("colouring", colouring_file)->required();
    density->add_option("kernel", kernel_file)->required();

    auto *smax = app.add_subcommand("smax", "maximum density over colourings");
    smax->add_option("graph", graph_file)->required();
    smax->add_option("kernel", kernel_file)->required();
    smax->add_option("--rho", rho, "also report rho_2m for this m");

    auto *falsify = app.add_subcommand("falsify", "seeded search for inequality violations");
    falsify->add_option("graph", graph_file)->required();
    falsify->add_option("colouring", colouring_file)->required();
    falsify->add_option("--search", search, "triangle or hatami");

    auto *tournament = app.add_subcommand("tournament", "tournament report");
    tournament->add_option("kind", kind, "clockwise | qr | <file>")->required();
    tournament->add_option("order", arg, "order for clockwise or qr");

    auto *reproduce = app.add_subcommand("reproduce", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (*seed_opt)
        o.seed = seed;
    if (*ce)
        o.cap_edges = cap_edges;
    if (*ca)
        o.cap_assignments = cap_assign;

    try {
        if (*check)
            return cmd_check(o, graph_file, colouring_file);
        if (*certify)
            return cmd_certify(o, certify_args, hint_family, hint_params);
        if (*colourings)
            return cmd_colourings(o, graph_file, transitive);
        if (*density)
            return cmd_density(o, graph_file, colouring_file, kernel_file);
        if (*smax)
            return cmd_smax(o, graph_file, kernel_file, rho);
        if (*falsify)
            return cmd_falsify(o, graph_file, colouring_file, search);
        if (*tournament)
            return cmd_tournament(o, kind, arg);
        if (*reproduce)
            return cmd_reproduce(o);
    } catch (const UsageError &e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const Error &e) {
        std::fprintf(stderr, "%s\n", e.what());
        if (e.kind() == ErrorKind::CapExceeded)
            return 2;
        if (e.kind() == ErrorKind::VerificationFailed)
            return 3;
        return 1;
    }
    return 1;
}
