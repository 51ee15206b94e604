#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gvt/cli.hpp"
#include "gvt/json_io.hpp"

using namespace gvt;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/gvt_test_") + name;
    std::ofstream f(path);
    f << text;
    return path;
}

const char* kK3 = R"({"vertices":["v1","v2","v3"],
 "edges":[{"tail":"v1","head":"v2"},{"tail":"v2","head":"v3"},{"tail":"v1","head":"v3"}]})";
const char* kP2 = R"({"vertices":["u","v"],"edges":[{"tail":"u","head":"v"}]})";
const char* kCfg = R"({"l":[1,2,1],"m":[0,1,0],"a":["2","1","1/3"],"b":{"e3":"5"},
 "field":"q","tree":["e1","e2"]})";

}  // namespace

TEST_CASE("trees on K3 prints the pinned counts") {
    std::string g = write_temp("k3.json", kK3);
    Run r = cli({"trees", "--graph", g});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("spanning_trees") == 3);
    CHECK(j.at("lattice_index") == 3);
}

TEST_CASE("cac on P2 yields three records") {
    std::string g = write_temp("p2.json", kP2);
    Run r = cli({"cac", "--graph", g});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("count") == 3);
    CHECK(j.at("faces").size() == 3);
}

TEST_CASE("ideal on a tree graph is empty") {
    std::string g = write_temp("p2.json", kP2);
    Run r = cli({"ideal", "--graph", g, "--f", "0,0"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("binomials").empty());
}

TEST_CASE("exit codes: usage, validation, window") {
    std::string g = write_temp("k3.json", kK3);
    CHECK(cli({"frobnicate", "--graph", g}).code == 1);
    CHECK(cli({"trees"}).code == 2);  // missing --graph
    std::string bad = write_temp("bad.json", R"({"vertices":["u"],"edges":[]})");
    // single vertex is fine; a disconnected graph is not
    std::string disc = write_temp("disc.json",
                                  R"({"vertices":["u","v","w"],"edges":[{"tail":"u","head":"v"}]})");
    CHECK(cli({"trees", "--graph", disc}).code == 2);
    // locate with a hopeless window
    std::string p2 = write_temp("p2.json", kP2);
    Run r = cli({"locate", "--graph", p2, "--at", "-9,9", "--window", "1"});
    CHECK(r.code == 3);
}

TEST_CASE("point / orbit round-trip through JSON") {
    std::string g = write_temp("k3.json", kK3);
    std::string c = write_temp("cfg.json", kCfg);
    Run p = cli({"point", "--graph", g, "--config", c, "--f", "0,1,2", "--n", "2", "--act",
                 "1,3/2,5"});
    REQUIRE(p.code == 0);
    std::string pt = write_temp("pt.json", p.out);
    Run o = cli({"orbit", "--graph", g, "--config", c, "--point", pt, "--window", "4"});
    REQUIRE(o.code == 0);
    Json j = Json::parse(o.out);
    REQUIRE(!j.at("orbit").is_null());
    CHECK(j.at("member_of").is_string());

    // feeding the classified (n, f, c) back through `point` reproduces it
    std::string fstr;
    for (const auto& x : j.at("orbit").at("f")) {
        if (!fstr.empty()) fstr += ",";
        fstr += std::to_string(x.get<Int>());
    }
    std::string cstr;
    for (const auto& x : j.at("orbit").at("c")) {
        if (!cstr.empty()) cstr += ",";
        cstr += x.get<std::string>();
    }
    Run p2run = cli({"point", "--graph", g, "--config", c, "--f", fstr, "--n",
                     std::to_string(j.at("orbit").at("n").get<Int>()), "--act", cstr});
    REQUIRE(p2run.code == 0);
    CHECK(Json::parse(p2run.out) == Json::parse(p.out));
}

TEST_CASE("zeta handles the sign split") {
    std::string g = write_temp("k3.json", kK3);
    std::string c = write_temp("cfg.json", kCfg);
    Run r = cli({"zeta", "--graph", g, "--config", c, "--alpha", "0,0,0", "--gamma", "1,1,-1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("s") == -1);
    CHECK(j.at("p") == "1/1");
    CHECK(j.at("q") == "0/1");

    Run bad = cli({"zeta", "--graph", g, "--config", c, "--alpha", "0,0,0", "--gamma", "1,0,0"});
    CHECK(bad.code == 2);  // not a cycle
}

TEST_CASE("fiber solve verifies and dump carries t_exp") {
    std::string g = write_temp("k3.json", kK3);
    std::string c = write_temp("cfg.json", kCfg);
    Run r = cli({"fiber", "--graph", g, "--config", c, "--t0", "1/2", "--window", "2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("verified") == true);

    Run d = cli({"fiber", "--graph", g, "--config", c, "--dump", "--window", "1"});
    REQUIRE(d.code == 0);
    Json jd = Json::parse(d.out);
    bool found_chain = false;
    for (const auto& eq : jd.at("equations"))
        if (eq.at("kind") == "chain_pair") {
            found_chain = true;
            CHECK(eq.at("t_exp").get<Int>() >= 1);
        }
    CHECK(found_chain);
}

TEST_CASE("deterministic output across runs and --out") {
    std::string g = write_temp("k3.json", kK3);
    std::string c = write_temp("cfg.json", kCfg);
    Run a = cli({"tiles", "--graph", g, "--config", c, "--window", "2"});
    Run b = cli({"tiles", "--graph", g, "--config", c, "--window", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::string outpath = "/tmp/gvt_test_out.json";
    Run f = cli({"tiles", "--graph", g, "--config", c, "--window", "2", "--out", outpath});
    CHECK(f.code == 0);
    std::ifstream in(outpath);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == a.out);
}

TEST_CASE("render produces deterministic SVG; empty bbox gives empty body") {
    std::string g = write_temp("k3.json", kK3);
    Run r1 = cli({"render", "--graph", g, "--bbox", "-2,-2,2,2"});
    Run r2 = cli({"render", "--graph", g, "--bbox", "-2,-2,2,2"});
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("<polygon") != std::string::npos);

    Run empty = cli({"render", "--graph", g, "--bbox", "1,1,1,1"});
    REQUIRE(empty.code == 0);
    CHECK(empty.out.find("<polygon") == std::string::npos);
    CHECK(empty.out.find("<svg") != std::string::npos);

    // P2 strip: segments at integer centers
    std::string p2 = write_temp("p2.json", kP2);
    std::string cfg2 = write_temp("l2.json", R"({"l":[2]})");
    Run strip = cli({"render", "--graph", p2, "--config", cfg2, "--bbox", "-3,-1,3,1"});
    REQUIRE(strip.code == 0);
    CHECK(strip.out.find("<line") != std::string::npos);

    // rank 3 unsupported
    std::string k4 = write_temp("k4.json",
                                R"({"vertices":["a","b","c","d"],
 "edges":[{"tail":"a","head":"b"},{"tail":"a","head":"c"},{"tail":"a","head":"d"},
          {"tail":"b","head":"c"},{"tail":"b","head":"d"},{"tail":"c","head":"d"}]})");
    CHECK(cli({"render", "--graph", k4, "--bbox", "-1,-1,1,1"}).code == 2);
}

TEST_CASE("field override fp runs the same commands") {
    std::string g = write_temp("k3.json", kK3);
    std::string c = write_temp("cfg.json", kCfg);
    Run r = cli({"point", "--graph", g, "--config", c, "--field", "fp:101", "--f", "0,1,2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("edges").size() == 3);
    CHECK(cli({"point", "--graph", g, "--config", c, "--field", "fp:10", "--f", "0,0,0"}).code ==
          2);  // 10 is not prime
}
