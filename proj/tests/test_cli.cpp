#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarcog/cli.hpp"
#include "polarcog/graph6.hpp"
#include "polarcog/obstructions.hpp"
#include "polarcog/polarity.hpp"
#include "polarcog/serialize.hpp"

using namespace polarcog;
using cli::Command;
using cli::Format;
using cli::Subcommand;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const Command& cmd, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(cmd, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

Command make(Subcommand sub) {
    Command c;
    c.sub = sub;
    return c;
}

}  // namespace

TEST_CASE("check reports the minimum s") {
    const std::string two_k3 = graph6_encode(disjoint_union({Graph::complete(3), Graph::complete(3)}));
    const std::string c4 = graph6_encode(Graph::cycle(4));
    const std::string k3 = graph6_encode(Graph::complete(3));
    Command c = make(Subcommand::Check);
    Run r = invoke(c, k3 + "\n\n" + c4 + "\n" + two_k3 + "\n");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"polar s=0", "polar s=2", "polar s=3"});

    c.s = 2;
    r = invoke(c, two_k3 + "\n" + k3 + "\n");
    CHECK(lines_of(r.out) == std::vector<std::string>{"non-polar s=2 min s=3", "polar s=0"});

    c.format = Format::Json;
    r = invoke(c, two_k3 + "\n");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["min_s"] == 3);
    CHECK(j["polar"] == false);
}

TEST_CASE("check on a monopolar-free graph") {
    const Graph two_p3 = disjoint_union({Graph::path(3), Graph::path(3)});
    const Graph g = disjoint_union({two_p3, Graph::complete(1)});
    REQUIRE(monopolar_index(g).is_infinite());
    const Run r = invoke(make(Subcommand::Check), graph6_encode(g) + "\n");
    CHECK(r.out == "non-polar-for-all-s\n");
}

TEST_CASE("certify emits obstruction and partition certificates") {
    Command c = make(Subcommand::Certify);
    c.s = 2;
    Run r = invoke(c, "DGC\n");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "obstruction");
    CHECK(j["vertices"] == nlohmann::json::array({0, 1, 2, 3, 4}));

    const Graph c4 = Graph::cycle(4);
    r = invoke(c, graph6_encode(c4) + "\n");
    j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "polar");
    const PolarPartition p = partition_from_json(j["partition"]);
    CHECK(is_valid_s1_partition(c4, p, 2));

    CHECK(invoke(make(Subcommand::Certify), "DGC\n").code == cli::kExitInputError);
}

TEST_CASE("non-cographs exit with code 2") {
    const Run check = invoke(make(Subcommand::Check), "Ch\n");
    CHECK(check.code == cli::kExitNotCograph);
    CHECK(check.out == "not-a-cograph P4 0 1 2 3\n");
    CHECK(check.err.find("line 1") != std::string::npos);

    Command c = make(Subcommand::Certify);
    c.s = 1;
    const Run certify = invoke(c, "Bw\nCh\n");
    CHECK(certify.code == cli::kExitNotCograph);
    CHECK(lines_of(certify.out).size() == 2);
    CHECK(certify.err.find("line 2") != std::string::npos);

    const Run cotree = invoke(make(Subcommand::Cotree), "Ch\n");
    CHECK(cotree.code == cli::kExitNotCograph);
    CHECK(cotree.out == "P4 0 1 2 3\n");
}

TEST_CASE("malformed input exits with code 1 and names the line") {
    const Run r = invoke(make(Subcommand::Check), "Bw\nB!\nCh\n");
    CHECK(r.code == cli::kExitInputError);
    CHECK(lines_of(r.out) == std::vector<std::string>{"polar s=0", "error", "not-a-cograph P4 0 1 2 3"});
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("cotree prints a parseable tree") {
    const Run r = invoke(make(Subcommand::Cotree), graph6_encode(Graph::cycle(4)) + "\n");
    CHECK(r.code == 0);
    const std::string text = lines_of(r.out).at(0);
    CHECK(canonical_key(realize(Cotree::parse(text))) == canonical_key(Graph::cycle(4)));
}

TEST_CASE("generate lists the family") {
    Command c = make(Subcommand::Generate);
    c.s = 2;
    Run r = invoke(c);
    const auto g6 = lines_of(r.out);
    REQUIRE(g6.size() == 9);
    const auto members = family(2);
    for (std::size_t i = 0; i < g6.size(); ++i) CHECK(graph6_decode(g6[i]) == members[i].graph);

    c.format = Format::Text;
    r = invoke(c);
    CHECK(lines_of(r.out).at(0) == "K1+2K2\t" + g6[0]);

    c.format = Format::Json;
    const auto j = nlohmann::json::parse(invoke(c).out);
    REQUIRE(j.size() == 9);
    CHECK(j[0]["expr"] == "K1+2K2");
    CHECK(j[0]["order"] == 5);
    CHECK(j[0]["connected"] == false);

    c.format = Format::Default;
    c.catalog_path = "polarcog_test_catalog.json";
    std::remove(c.catalog_path.c_str());
    CHECK(invoke(c).code == 0);
    std::ifstream file(c.catalog_path);
    REQUIRE(file);
    CHECK(nlohmann::json::parse(file) == j);
    file.close();
    std::remove(c.catalog_path.c_str());
}

TEST_CASE("count writes a csv table") {
    Command c = make(Subcommand::Count);
    c.s_max = 5;
    const auto rows = lines_of(invoke(c).out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "s,D,n_disc,total,m,bound_3m,bound_3s2");
    CHECK(rows[1].rfind("2,2,2,9,0,2,", 0) == 0);
    CHECK(rows[2].rfind("3,4,6,13,1,12,", 0) == 0);

    c.s_max = 1;
    CHECK(invoke(c).code == cli::kExitInputError);
    c.s_max = 41;
    CHECK(invoke(c).code == cli::kExitInputError);
}

TEST_CASE("enumerate lists each cograph once") {
    Command c = make(Subcommand::Enumerate);
    c.n = 4;
    const auto rows = lines_of(invoke(c).out);
    CHECK(rows.size() == 10);
    c.format = Format::Text;
    const auto trees = lines_of(invoke(c).out);
    REQUIRE(trees.size() == 10);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(graph6_encode(realize(Cotree::parse(trees[i]))) == rows[i]);
}

TEST_CASE("output is deterministic") {
    std::string input;
    for (const Graph& g : {Graph::cycle(4), Graph::complete(5), Graph::path(3), Graph::empty(6)})
        input += graph6_encode(g) + "\n";
    for (int rep = 0; rep < 5; ++rep) input += input;
    Command c = make(Subcommand::Certify);
    c.s = 1;
    const Run first = invoke(c, input);
    for (int rep = 0; rep < 3; ++rep) CHECK(invoke(c, input).out == first.out);
    CHECK(lines_of(first.out).size() == 128);
}

TEST_CASE("parse_format") {
    CHECK(cli::parse_format("json") == Format::Json);
    CHECK(cli::parse_format("") == Format::Default);
    CHECK_THROWS(cli::parse_format("xml"));
}
