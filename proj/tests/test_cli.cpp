#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cogdim/graph.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

std::string cli_binary() {
    if (const char* env = std::getenv("COGDIM_CLI")) return env;
    // fall back to the usual build layout: tests/cogdim_tests next to ../cogdim
    std::error_code ec;
    fs::path self = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        fs::path guess = self.parent_path().parent_path() / "cogdim";
        if (fs::exists(guess)) return guess.string();
    }
    return "";
}

RunResult run_cli(const std::string& args) {
    std::string cli = cli_binary();
    REQUIRE_MESSAGE(!cli.empty(), "cannot locate the cogdim binary; set COGDIM_CLI");
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.stdout_text.append(buf.data(), got);
    int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
    fs::path p = fs::temp_directory_path() / ("cogdim_cli_" + name);
    std::ofstream out(p);
    out << contents;
    return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen emits one JSON document and is byte-deterministic") {
    auto a = run_cli("gen cycle 7");
    auto b = run_cli("gen cycle 7");
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    json j = json::parse(a.stdout_text);
    CHECK(j["status"] == "ok");
    CHECK(j["graph"]["n"] == 7);
    CHECK(j["graph"]["edges"].size() == 7);
}

TEST_CASE("recognize maps decisions to exit codes") {
    fs::path c4 = write_temp("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    fs::path p4 = write_temp("p4.txt", "4 3\n0 1\n1 2\n2 3\n");

    auto ok = run_cli("recognize " + c4.string() + " --family cograph");
    CHECK(ok.exit_code == 0);
    json jok = json::parse(ok.stdout_text);
    CHECK(jok["certificate"]["kind"] == "cotree");

    auto rej = run_cli("recognize " + c4.string() + " --family threshold");
    CHECK(rej.exit_code == 1);
    json jrej = json::parse(rej.stdout_text);
    CHECK(jrej["status"] == "reject");
    CHECK(jrej["certificate"]["kind"] == "induced-C4");

    auto p4rej = run_cli("recognize " + p4.string() + " --family cograph");
    CHECK(p4rej.exit_code == 1);
    CHECK(json::parse(p4rej.stdout_text)["certificate"]["kind"] == "induced-P4");

    auto split = run_cli("recognize " + c4.string() + " --family split");
    CHECK(split.exit_code == 1);
}

TEST_CASE("construct self-verifies and reports provenance") {
    fs::path tree = write_temp("tree.txt", "5 4\n0 1\n1 2\n1 3\n3 4\n");
    auto res = run_cli("construct " + tree.string() + " --method forest");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.stdout_text);
    CHECK(j["provenance"]["factor_count"] == 2);
    CHECK(j["representation"]["family"] == "cograph");

    fs::path c9 = write_temp("c9.txt", graph_to_edge_list(cogdim::cycle_graph(9)));
    auto cyc = run_cli("construct " + c9.string() + " --method cycle --family threshold");
    CHECK(cyc.exit_code == 0);
    CHECK(json::parse(cyc.stdout_text)["provenance"]["factor_count"] == 3);

    auto tw = run_cli("construct " + tree.string() + " --method treewidth");
    CHECK(tw.exit_code == 0);
    json jtw = json::parse(tw.stdout_text);
    CHECK(jtw["provenance"]["witness_source"] == "derived");
    CHECK(jtw["provenance"]["witness"]["witnessed_width"] == 1);
    CHECK(jtw["provenance"]["factor_count"] == 3);
}

TEST_CASE("construct with a supplied path decomposition") {
    fs::path c4 = write_temp("c4b.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    fs::path dec = write_temp("c4pd.json", R"({"bags":[[0,1,3],[1,2,3]]})");
    auto res = run_cli("construct " + c4.string() + " --method pathwidth --decomposition " + dec.string());
    CHECK(res.exit_code == 0);
    json j = json::parse(res.stdout_text);
    CHECK(j["provenance"]["witness_source"] == "supplied");
    CHECK(j["provenance"]["factor_count"] == 3);
    CHECK(j["representation"]["family"] == "threshold");
}

TEST_CASE("construct derives exact colorings for star and acyclic methods") {
    fs::path p4 = write_temp("p4b.txt", "4 3\n0 1\n1 2\n2 3\n");
    auto star = run_cli("construct " + p4.string() + " --method star");
    CHECK(star.exit_code == 0);
    json j = json::parse(star.stdout_text);
    CHECK(j["provenance"]["witness_source"] == "derived");
    CHECK(j["provenance"]["factor_count"] == 3);  // alpha(3)

    auto acyc = run_cli("construct " + p4.string() + " --method acyclic");
    CHECK(acyc.exit_code == 0);
    CHECK(json::parse(acyc.stdout_text)["provenance"]["factor_count"] == 2);  // 2*alpha(2)
}

TEST_CASE("verify accepts, rejects, and errors per clause") {
    fs::path c6 = write_temp("c6.txt", graph_to_edge_list(cogdim::cycle_graph(6)));
    fs::path good = write_temp("c6rep.json",
                               R"({"family":"cograph","n":6,"factors":[)"
                               R"({"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5],[0,2],[1,3],[2,4],[3,5],[0,4],[1,5]]},)"
                               R"({"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5],[0,3],[1,4],[2,5]]}]})");
    CHECK(run_cli("verify " + c6.string() + " " + good.string()).exit_code == 0);

    fs::path c7 = write_temp("c7.txt", graph_to_edge_list(cogdim::cycle_graph(7)));
    fs::path bad = write_temp("c7rep.json",
                              R"({"family":"cograph","n":7,"factors":[{"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[0,6]]}]})");
    auto rej = run_cli("verify " + c7.string() + " " + bad.string());
    CHECK(rej.exit_code == 1);
    CHECK(json::parse(rej.stdout_text)["clause"] == "family-membership");

    fs::path wrong_n = write_temp("wrongn.json", R"({"family":"cograph","n":5,"factors":[{"edges":[]}]})");
    auto err = run_cli("verify " + c6.string() + " " + wrong_n.string());
    CHECK(err.exit_code == 3);
    CHECK(json::parse(err.stdout_text)["status"] == "error");
}

TEST_CASE("dim, th2 and bound") {
    fs::path c5 = write_temp("c5.txt", graph_to_edge_list(cogdim::cycle_graph(5)));
    auto dim = run_cli("dim " + c5.string() + " --family threshold --kmax 3");
    CHECK(dim.exit_code == 0);
    json jdim = json::parse(dim.stdout_text);
    CHECK(jdim["dimension"] == 3);
    // byte-identical rerun, solver path included
    CHECK(run_cli("dim " + c5.string() + " --family threshold --kmax 3").stdout_text == dim.stdout_text);

    auto above = run_cli("dim " + c5.string() + " --family threshold --kmax 2");
    CHECK(above.exit_code == 1);
    CHECK(json::parse(above.stdout_text)["status"] == "unsat");

    fs::path fig1 = write_temp("fig1.txt", graph_to_edge_list(cogdim::fig1_tree()));
    auto th2 = run_cli("th2 " + fig1.string());
    CHECK(th2.exit_code == 1);
    json jth2 = json::parse(th2.stdout_text);
    CHECK(jth2["status"] == "unsat");
    CHECK(jth2["certificate"]["kind"] == "odd-cycle");

    fs::path tree = write_temp("tree2.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    auto bound = run_cli("bound " + tree.string());
    CHECK(bound.exit_code == 0);
    json jb = json::parse(bound.stdout_text);
    bool saw_forest = false, saw_tw = false;
    for (const auto& row : jb["rows"]) {
        if (row["bound"] == "forest") {
            saw_forest = true;
            CHECK(row["factors"] == 2);
        }
        if (row["bound"] == "treewidth-witness-plus-2") {
            saw_tw = true;
            CHECK(row["witnessed_width"] == 1);
            CHECK(row["factors"] == 3);
        }
    }
    CHECK(saw_forest);
    CHECK(saw_tw);
}

TEST_CASE("aux and cnf exports") {
    fs::path c4 = write_temp("c4c.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    fs::path base = fs::temp_directory_path() / "cogdim_cli_aux_out.txt";
    auto aux = run_cli("aux " + c4.string() + " --out " + base.string());
    CHECK(aux.exit_code == 0);
    {
        std::ifstream in(base);
        cogdim::Graph g = cogdim::parse_graph(in);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 2);
        std::ifstream map(base.string() + ".map");
        std::string first;
        std::getline(map, first);
        CHECK(first == "0 0 1");
    }

    fs::path cnf_out = fs::temp_directory_path() / "cogdim_cli_c5.cnf";
    auto cnf = run_cli("cnf " + c4.string() + " --family threshold -k 2 --out " + cnf_out.string());
    CHECK(cnf.exit_code == 0);
    std::ifstream in(cnf_out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("p cnf 4 ") != std::string::npos);
}

TEST_CASE("gen, construct and verify chain through files") {
    fs::path g = fs::temp_directory_path() / "cogdim_cli_chain_g.txt";
    auto gen = run_cli("gen cycle 6 --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    auto con = run_cli("construct " + g.string() + " --method cycle --family cograph");
    REQUIRE(con.exit_code == 0);
    json rep = json::parse(con.stdout_text)["representation"];
    fs::path rep_file = write_temp("chain_rep.json", rep.dump());
    auto ver = run_cli("verify " + g.string() + " " + rep_file.string());
    CHECK(ver.exit_code == 0);
    CHECK(json::parse(ver.stdout_text)["accepted"] == true);
}

TEST_CASE("errors carry kinds and exit 3") {
    auto missing = run_cli("recognize /nonexistent/file --family cograph");
    CHECK(missing.exit_code == 3);
    CHECK(json::parse(missing.stdout_text)["error_kind"] == "io");

    fs::path selfloop = write_temp("selfloop.txt", "3 1\n1 1\n");
    auto bad = run_cli("recognize " + selfloop.string() + " --family cograph");
    CHECK(bad.exit_code == 3);
    CHECK(json::parse(bad.stdout_text)["error_kind"] == "self-loop");

    fs::path c5 = write_temp("c5b.txt", graph_to_edge_list(cogdim::cycle_graph(5)));
    auto cyc = run_cli("construct " + c5.string() + " --method forest");
    CHECK(cyc.exit_code == 3);
    json j = json::parse(cyc.stdout_text);
    CHECK(j["error_kind"] == "not-a-forest");
    CHECK(j["witness"].size() >= 3);
}

}  // TEST_SUITE("cli")
