#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnorm/constructions.hpp"
#include "gnorm/io.hpp"
#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>

using namespace gnorm;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args) {
    const char *bin = std::getenv("GNORM_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct Files {
    fs::path dir;
    Files() {
        dir = fs::temp_directory_path() / ("gnorm_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        put("c4.json", graph_to_json(cycle_graph(4)).dump());
        put("q4.json", graph_to_json(hypercube(4)).dump());
        put("alt.json", colouring_to_json(alternating(4)).dump());
        put("mono.json", colouring_to_json(mono(4)).dump());
        put("f.json", R"({"rows":2,"cols":2,"values":[[1,1],[1,-1]]})");
        put("bad.json", "{\"left\": [\"a\",\n]}");
        put("t3.json", R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
    }
    ~Files() { fs::remove_all(dir); }
    void put(const std::string &name, const std::string &text) { write_text_file((dir / name).string(), text); }
    std::string operator()(const std::string &name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    Files f;
    CHECK(run("falsify " + f("c4.json") + " " + f("mono.json")).code == 1);
    CHECK(run("check " + f("bad.json")).code == 1);
    CHECK(run("check " + f("missing.json")).code == 1);
    CHECK(run("tournament clockwise 6").code == 1);
    CHECK(run("density " + f("c4.json") + " " + f("alt.json") + " " + f("f.json") + " --variant z").code == 1);
}

TEST_CASE("check") {
    Files f;
    auto r = run("check " + f("c4.json") + " " + f("alt.json"));
    REQUIRE(r.code == 0);
    auto j = parse_json_text(r.out);
    CHECK(j["eulerian"] == true);
    CHECK(j["girth"] == 4);
    CHECK(j["balanced"] == true);
    CHECK(j["transitive"] == true);
    CHECK(j["group_order"] == "8");
    auto s = run("check " + f("c4.json") + " --side-swap false");
    CHECK(parse_json_text(s.out)["automorphism_mode"] == "strict");
}

TEST_CASE("density") {
    Files f;
    std::string base = "density " + f("c4.json") + " " + f("alt.json") + " " + f("f.json");
    for (const char *mode : {"direct", "eliminate"}) {
        auto r = run(base + " --mode " + mode);
        REQUIRE(r.code == 0);
        auto v = parse_json_text(r.out)["value"];
        CHECK(std::abs(v[0].get<double>() - 0.5) < 1e-12);
        CHECK(std::abs(v[1].get<double>()) < 1e-12);
    }
    CHECK(run(base + " --variant r").code == 0);
    CHECK(run(base + " --mode direct --cap-assignments 3").code == 2);
}

TEST_CASE("smax and colourings") {
    Files f;
    auto r = run("smax " + f("c4.json") + " " + f("f.json") + " --rho 2");
    REQUIRE(r.code == 0);
    auto j = parse_json_text(r.out);
    CHECK(std::abs(j["s_max"].get<double>() - 0.5) < 1e-12);
    auto c = run("colourings " + f("c4.json") + " --transitive");
    REQUIRE(c.code == 0);
    auto k = parse_json_text(c.out);
    CHECK(k["balanced_count"] == 2);
    CHECK(k["transitive"].size() == 2);
}

TEST_CASE("falsify is deterministic and seed placement is free") {
    Files f;
    std::string args = "falsify " + f("c4.json") + " " + f("mono.json") + " --trials 50 --resolution 3";
    auto a = run(args + " --seed 11");
    auto b = run("--seed 11 " + args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = parse_json_text(a.out);
    CHECK(!j["witness"].is_null());
    CHECK(j["witness"]["seed"] == 11);
    auto none = run("falsify " + f("c4.json") + " " + f("alt.json") + " --trials 50 --seed 4");
    REQUIRE(none.code == 0);
    CHECK(parse_json_text(none.out)["witness"].is_null());
    auto h = run("falsify " + f("c4.json") + " " + f("mono.json") + " --trials 50 --seed 4 --search hatami");
    CHECK(h.code == 0);
}

TEST_CASE("certify") {
    auto h = run("certify hypercube 6");
    REQUIRE(h.code == 0);
    auto j = parse_json_text(h.out);
    CHECK(j["verdict"] == "NotNorming");
    CHECK(j["provenance"] == "thm:cubes");
    CHECK(j["reverified"] == true);
    auto k = parse_json_text(run("certify kneser 7 3").out);
    CHECK(k["obstruction"] == "IntegralityFailure");
    CHECK(k["witness"]["d"] == "100/3");
    CHECK(run("certify kneser seven 3").code == 1);
    CHECK(run("certify inclusion 3 3 1").code == 1);

    Files f;
    auto q = run("certify graph " + f("q4.json"));
    REQUIRE(q.code == 0);
    CHECK(parse_json_text(q.out)["verdict"] == "NotNorming");
    auto capped = run("certify graph " + f("q4.json") + " --cap-edges 8");
    CHECK(capped.code == 2);
    CHECK(!parse_json_text(capped.out)["cap_stage"].is_null());
}

TEST_CASE("tournament") {
    auto r = run("tournament clockwise 7");
    REQUIRE(r.code == 0);
    auto j = parse_json_text(r.out);
    CHECK(j["kappa4"] == 28);
    CHECK(j["regular"] == true);
    CHECK(parse_json_text(run("tournament qr 7").out)["arc_transitive"] == true);
    Files f;
    CHECK(parse_json_text(run("tournament " + f("t3.json")).out)["kappa3"] == 1);
    CHECK(run("tournament qr 5").code == 1);
}

TEST_CASE("pretty and out") {
    auto p = run("certify hypercube 3 --pretty");
    REQUIRE(p.code == 0);
    CHECK(p.out.find("verdict: \"NotNorming\"") != std::string::npos);
    Files f;
    auto o = run("certify hypercube 3 --out " + f("cert.json"));
    CHECK(o.code == 0);
    CHECK(o.out.empty());
    CHECK(parse_json_text(read_json_file(f("cert.json")).dump())["obstruction"] == "NotEulerian");
}
