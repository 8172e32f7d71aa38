#pragma once

#include "germlab/blowup.hpp"
#include "germlab/chains.hpp"
#include "germlab/diophantine.hpp"
#include "germlab/monodromy.hpp"
#include "germlab/pairs_tree.hpp"
#include "germlab/permutation.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace germlab {

using json = nlohmann::json;

inline void to_json(json& j, const Orbit& o) { j = {{"k1", o.k1()}, {"k2", o.k2()}}; }

inline void to_json(json& j, const TreePath& p) { j = p.str(); }
inline void from_json(const json& j, TreePath& p)
{
    p.letters.clear();
    for (char c : j.get<std::string>()) {
        require(c == 'A' || c == 'B', "TreePath: letters must be A or B");
        p.letters.push_back(c == 'A' ? Letter::A : Letter::B);
    }
}

inline void to_json(json& j, const DioSol4& s) { j = {{"k1", s.k1}, {"k2", s.k2}, {"q1", s.q1}, {"q2", s.q2}}; }
inline void from_json(const json& j, DioSol4& s)
{
    s = {j.at("k1").get<Int>(), j.at("k2").get<Int>(), j.at("q1").get<Int>(), j.at("q2").get<Int>()};
}

inline void to_json(json& j, const DecoratedOrbit& o)
{
    j = {{"k1", o.k1()}, {"q1", o.q1()}, {"k2", o.k2()}, {"q2", o.q2()}};
}

inline void to_json(json& j, const AuxSol& a) { j = {{"base", a.base}, {"a1", a.a1}, {"a2", a.a2}}; }
inline void from_json(const json& j, AuxSol& a)
{
    a.base = j.at("base").get<DioSol4>();
    a.a1 = j.at("a1").get<Int>();
    a.a2 = j.at("a2").get<Int>();
}

inline void to_json(json& j, const ExtSol8& e)
{
    j = {{"k1", e.k1}, {"k2", e.k2}, {"q1", e.q1}, {"q2", e.q2},
         {"q3", e.q3}, {"q4", e.q4}, {"m1", e.m1}, {"m2", e.m2}};
}
inline void from_json(const json& j, ExtSol8& e)
{
    e = {j.at("k1").get<Int>(), j.at("k2").get<Int>(), j.at("q1").get<Int>(), j.at("q2").get<Int>(),
         j.at("q3").get<Int>(), j.at("q4").get<Int>(), j.at("m1").get<Int>(), j.at("m2").get<Int>()};
}

inline void to_json(json& j, const WeightedChain& c) { j = c.weights; }
inline void from_json(const json& j, WeightedChain& c) { c.weights = j.get<std::vector<Int>>(); }

inline void to_json(json& j, const CenteredChain& c)
{
    j = {{"left", c.left}, {"center", c.center}, {"right", c.right}};
}
inline void from_json(const json& j, CenteredChain& c)
{
    c.left = j.at("left").get<WeightedChain>();
    c.center = j.at("center").get<Int>();
    c.right = j.at("right").get<WeightedChain>();
}

inline void to_json(json& j, const BlowupStep& s)
{
    j = {{"before", {s.k1Before, s.k2Before}},
         {"after", {s.k1After, s.k2After}},
         {"label", edge_name(s.label)},
         {"swapped", s.swapped},
         {"created", s.created},
         {"through", s.through}};
}
inline void from_json(const json& j, BlowupStep& s)
{
    s.k1Before = j.at("before").at(0).get<Int>();
    s.k2Before = j.at("before").at(1).get<Int>();
    s.k1After = j.at("after").at(0).get<Int>();
    s.k2After = j.at("after").at(1).get<Int>();
    s.label = j.at("label").get<std::string>() == "E1" ? Edge::E1 : Edge::E2;
    s.swapped = j.at("swapped").get<bool>();
    s.created = j.at("created").get<int>();
    s.through = j.at("through").get<std::vector<int>>();
}

inline void to_json(json& j, const SbarRecord& s) { j = {s.dlt0, s.drt0, s.dlt1, s.drt1}; }
inline void from_json(const json& j, SbarRecord& s)
{
    s = {j.at(0).get<Int>(), j.at(1).get<Int>(), j.at(2).get<Int>(), j.at(3).get<Int>()};
}

inline void to_json(json& j, const ResolutionGraph& g)
{
    j = {{"k1", g.k1},
         {"k2", g.k2},
         {"multiplicity", g.multiplicity()},
         {"weights", g.chain.full()},
         {"chain", g.chain},
         {"order", g.order},
         {"branch_at", g.branchAt}};
}
inline void from_json(const json& j, ResolutionGraph& g)
{
    g.k1 = j.at("k1").get<Int>();
    g.k2 = j.at("k2").get<Int>();
    g.chain = j.at("chain").get<CenteredChain>();
    g.order = j.at("order").get<std::vector<int>>();
    g.branchAt = j.at("branch_at").get<std::size_t>();
}

inline void to_json(json& j, const Permutation& p)
{
    j = {{"degree", p.degree()}, {"images", p.images()}, {"cycles", p.cycle_notation()}};
}
inline void from_json(const json& j, Permutation& p) { p = Permutation(j.at("images").get<std::vector<int>>()); }

inline void to_json(json& j, const MonodromyDatum& m) { j = {{"a", m.a}, {"t", m.t}, {"b", m.b}}; }
inline void from_json(const json& j, MonodromyDatum& m)
{
    m.a = j.at("a").get<Permutation>();
    m.t = j.at("t").get<Permutation>();
    m.b = j.at("b").get<Permutation>();
}

inline void to_json(json& j, const SubcaseTag& t) { j = t.str(); }
inline void from_json(const json& j, SubcaseTag& t)
{
    std::string s = j.get<std::string>();
    int a, b, c, d;
    require(std::sscanf(s.c_str(), "(%d,%d)_{%d_%d}", &a, &b, &c, &d) == 4, [&] { return std::string("SubcaseTag: bad text " + s); });
    t = {a, b, c, d};
}

inline void to_json(json& j, const LocalPi1Data& d)
{
    j = {{"kLt", d.kLt}, {"qLt", d.qLt}, {"kRt", d.kRt}, {"qRt", d.qRt}, {"mu", d.mu}};
}
inline void from_json(const json& j, LocalPi1Data& d)
{
    d = {j.at("kLt").get<Int>(), j.at("qLt").get<Int>(), j.at("kRt").get<Int>(), j.at("qRt").get<Int>(),
         j.at("mu").get<Int>()};
}

inline void to_json(json& j, const FamilyMatch& m)
{
    j = {{"family", family_name(m.family)}, {"degree", m.degree}, {"parameters", m.parameters}};
}
inline void from_json(const json& j, FamilyMatch& m)
{
    m.family = family_from_name(j.at("family").get<std::string>());
    m.degree = j.at("degree").get<int>();
    m.parameters = j.at("parameters").get<std::string>();
}

template <typename T>
json optional_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

inline void to_json(json& j, const DegreeResult& r)
{
    j = {{"degree", r.degree},
         {"admissible_classes", r.admissibleClasses},
         {"smooth_classes", r.smoothClasses},
         {"cross_checked", r.crossChecked},
         {"witness", optional_json(r.witness)},
         {"subcase", optional_json(r.tag)}};
}
inline void from_json(const json& j, DegreeResult& r)
{
    r.degree = j.at("degree").get<int>();
    r.admissibleClasses = j.at("admissible_classes").get<int>();
    r.smoothClasses = j.at("smooth_classes").get<int>();
    r.crossChecked = j.at("cross_checked").get<bool>();
    r.witness = optional_from<MonodromyDatum>(j, "witness");
    r.tag = optional_from<SubcaseTag>(j, "subcase");
}

inline void to_json(json& j, const GermClass& g)
{
    j = {{"k1", g.k1},
         {"k2", g.k2},
         {"mu", g.mu},
         {"degree_bound", g.mu + 1},
         {"local", g.data},
         {"family", family_name(g.family)},
         {"degree", g.degree},
         {"class_count", g.classCount},
         {"class_notion", "simultaneous conjugacy"},
         {"cross_checked", g.crossChecked},
         {"consistent", g.consistent},
         {"witness", optional_json(g.witness)},
         {"subcase", optional_json(g.tag)},
         {"matches", g.matches},
         {"degrees", g.degrees}};
}
inline void from_json(const json& j, GermClass& g)
{
    g.k1 = j.at("k1").get<Int>();
    g.k2 = j.at("k2").get<Int>();
    g.mu = j.at("mu").get<Int>();
    g.data = j.at("local").get<LocalPi1Data>();
    g.family = family_from_name(j.at("family").get<std::string>());
    g.degree = j.at("degree").get<int>();
    g.classCount = j.at("class_count").get<int>();
    g.crossChecked = j.at("cross_checked").get<bool>();
    g.consistent = j.at("consistent").get<bool>();
    g.witness = optional_from<MonodromyDatum>(j, "witness");
    g.tag = optional_from<SubcaseTag>(j, "subcase");
    g.matches = j.at("matches").get<std::vector<FamilyMatch>>();
    g.degrees = j.at("degrees").get<std::vector<DegreeResult>>();
}

// ---------------------------------------------------------------- DOT

inline std::string dot_escape(const std::string& s)
{
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\')
            r += '\\';
        r += c;
    }
    return r;
}

inline std::string tree_dot(int L, bool decorated)
{
    std::ostringstream out;
    out << "digraph orbit_tree {\n  rankdir=BT;\n  node [shape=box];\n";
    auto label = [&](const Orbit& o) {
        return decorated ? pr_inverse(o).str() : o.str();
    };
    out << "  \"{1,0}\" [label=\"{1,0}\"];\n";
    out << "  \"{1,1}\" [label=\"" << label(Orbit::unit()) << "\"];\n";
    out << "  \"{1,1}\" -> \"{1,0}\" [label=\"ε2\"];\n";
    for (int lv = 2; lv <= L; ++lv)
        for (const Orbit& o : enumerate_to_level(lv)) {
            auto [parent, e] = euclid_step(o);
            out << "  \"" << o.str() << "\" [label=\"" << dot_escape(label(o)) << "\"];\n";
            out << "  \"" << o.str() << "\" -> \"" << parent.str() << "\" [label=\"" << edge_greek(e)
                << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

inline std::string chain_dot(const WeightedChain& c, const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        out << "  v" << i + 1 << " [label=\"" << c.weights[i] << "\"];\n";
    for (std::size_t i = 1; i < c.size(); ++i)
        out << "  v" << i << " -- v" << i + 1 << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string resolution_dot(const ResolutionGraph& g)
{
    std::ostringstream out;
    WeightedChain w = g.chain.full();
    out << "graph resolution_" << g.k1 << "_" << g.k2 << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << "  v" << i + 1 << " [label=\"" << w.weights[i] << "\"";
        if (i + 1 == g.branchAt)
            out << ", style=bold";
        out << "];\n";
    }
    out << "  b [label=\"b\", shape=doublecircle];\n";
    for (std::size_t i = 1; i < w.size(); ++i)
        out << "  v" << i << " -- v" << i + 1 << ";\n";
    out << "  v" << g.branchAt << " -- b;\n";
    out << "}\n";
    return out.str();
}

} // namespace germlab

namespace nlohmann {

template <>
struct adl_serializer<germlab::Orbit> {
    static void to_json(json& j, const germlab::Orbit& o) { germlab::to_json(j, o); }
    static germlab::Orbit from_json(const json& j)
    {
        auto k1 = j.at("k1").get<germlab::Int>(), k2 = j.at("k2").get<germlab::Int>();
        if (k1 == 1 && k2 == 0)
            return germlab::Orbit::root();
        return germlab::Orbit(k1, k2);
    }
};

template <>
struct adl_serializer<germlab::DecoratedOrbit> {
    static void to_json(json& j, const germlab::DecoratedOrbit& o) { germlab::to_json(j, o); }
    static germlab::DecoratedOrbit from_json(const json& j)
    {
        return germlab::DecoratedOrbit(j.at("k1").get<germlab::Int>(), j.at("q1").get<germlab::Int>(),
                                       j.at("k2").get<germlab::Int>(), j.at("q2").get<germlab::Int>());
    }
};

} // namespace nlohmann
