#include "germlab/serialize.hpp"
#include "germlab/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace germlab;

namespace {

template <typename T>
void round_trip(const T& v)
{
    json j = v;
    T back = j.get<T>();
    CHECK(back == v);
    CHECK(json(back) == j);
}

// Types without equality are compared through a second serialization.
template <typename T>
void json_round_trip(const T& v)
{
    json j = v;
    json again = j.get<T>();
    CHECK(again == j);
}

std::string read_golden(const std::string& name)
{
    std::ifstream in(std::string(GERMLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Balanced braces, a graph header, and every edge endpoint declared as a node.
void check_dot_structure(const std::string& dot)
{
    const bool directed = dot.rfind("digraph ", 0) == 0;
    REQUIRE((directed || dot.rfind("graph ", 0) == 0));
    int depth = 0;
    for (char c : dot) {
        depth += (c == '{') - (c == '}');
        REQUIRE(depth >= 0);
    }
    REQUIRE(depth == 0);
    const std::string arrow = directed ? " -> " : " -- ";
    std::set<std::string> nodes, used;
    std::istringstream in(dot);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(' ');
        if (first == std::string::npos || line == "}")
            continue;
        std::string stmt = line.substr(first);
        REQUIRE(stmt.back() == ';');
        if (stmt.rfind("rankdir", 0) == 0 || stmt.rfind("node ", 0) == 0)
            continue;
        auto cut = [](const std::string& s) { return s.substr(0, s.find_first_of(" ;")); };
        auto at = stmt.find(arrow);
        if (at == std::string::npos) {
            nodes.insert(cut(stmt));
        } else {
            used.insert(stmt.substr(0, at));
            used.insert(cut(stmt.substr(at + arrow.size())));
        }
    }
    REQUIRE_FALSE(used.empty());
    for (const auto& u : used)
        CHECK(nodes.count(u) == 1);
}

} // namespace

TEST_CASE("tree and Diophantine types round trip", "[serialize]")
{
    round_trip(Orbit(5, 3));
    round_trip(Orbit::unit());
    round_trip(Orbit::root());
    round_trip(path_to_root(Orbit(13, 8)));
    round_trip(DioSol4{5, 3, 3, 1});
    round_trip(DecoratedOrbit(5, 3, 3, 1));
    round_trip(DecoratedOrbit::root());
    round_trip(solve_aux({5, 3, 3, 1}));
    round_trip(extend_to_8({5, 3, 3, 1}));
    CHECK(json(Orbit(5, 3)) == json{{"k1", 5}, {"k2", 3}});
}

TEST_CASE("chain and resolution types round trip", "[serialize]")
{
    Resolution r = resolve(13, 5);
    round_trip(hj_expand(13, 5));
    round_trip(r.graph.chain);
    round_trip(r.graph);
    round_trip(r.sbar);
    for (const BlowupStep& s : r.trace)
        round_trip(s);
    CHECK(json(r.sbar) == json::array({r.sbar.dlt0, r.sbar.drt0, r.sbar.dlt1, r.sbar.drt1}));
}

TEST_CASE("monodromy types round trip", "[serialize]")
{
    round_trip(parse_cycles(5, "(1 2 3)(4 5)"));
    round_trip(local_data(6, 5));
    round_trip(SubcaseTag{1, 2, 0, 1});
    GermClass g = classify(6, 5);
    REQUIRE(g.witness);
    round_trip(*g.witness);
    for (const FamilyMatch& m : g.matches)
        round_trip(m);
    for (const DegreeResult& d : g.degrees)
        json_round_trip(d);
    json_round_trip(g);
    json_round_trip(classify(5, 3));
    CHECK_THROWS(json("(1,2)_{x}").get<SubcaseTag>());
}

TEST_CASE("verify reports round trip", "[serialize]")
{
    VerifyReport r{"thm0-3", 10, 42, {{"(000005,000003)", json{{"k1", 5}}, 1, 2, "mismatch"}}, 0.25};
    json j = r;
    VerifyReport back = j.get<VerifyReport>();
    CHECK(json(back) == j);
    CHECK(j["ok"] == false);
}

TEST_CASE("DOT output matches the frozen files", "[serialize][golden]")
{
    const std::map<std::string, std::string> cases = {
        {"tree_level4.dot", tree_dot(4, true)},
        {"hj_5_3.dot", chain_dot(hj_expand(5, 3), "hj_5_3")},
        {"resolve_5_3.dot", resolution_dot(resolve(5, 3).graph)},
    };
    for (const auto& [file, dot] : cases) {
        INFO(file);
        check_dot_structure(dot);
        CHECK(dot == read_golden(file));
    }
}
