#pragma once

#include "germlab/blowup.hpp"
#include "germlab/chains.hpp"
#include "germlab/diophantine.hpp"
#include "germlab/monodromy.hpp"
#include "germlab/pairs_tree.hpp"
#include "germlab/serialize.hpp"
#include "germlab/verify.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace germlab::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Options {
    std::string format = "table";
};

inline void need_format(const std::string& fmt, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (fmt == a)
            return;
    throw InvalidInput("format '" + fmt + "' is not available for this command");
}

inline int cmd_tree(std::ostream& out, const Options& o, int L, bool decorated)
{
    require(L >= 1 && L <= 24, "tree: level must be in 1..24");
    if (o.format == "dot") {
        out << tree_dot(L, decorated);
        return kOk;
    }
    json levels = json::array();
    for (int lv = 1; lv <= L; ++lv) {
        json entries = json::array();
        for (const Orbit& orb : enumerate_to_level(lv)) {
            json e = {{"orbit", orb}, {"path", path_to_root(orb)}};
            if (!orb.is_unit())
                e["edge"] = edge_name(euclid_step(orb).second);
            if (decorated)
                e["decorated"] = pr_inverse(orb);
            entries.push_back(e);
        }
        levels.push_back({{"level", lv}, {"orbits", entries}});
    }
    if (o.format == "json") {
        out << json{{"levels", levels}}.dump(2) << "\n";
        return kOk;
    }
    for (const auto& lv : levels)
        for (const auto& e : lv["orbits"]) {
            Orbit orb = e["orbit"].get<Orbit>();
            out << std::setw(3) << lv["level"].get<int>() << "  " << std::setw(12) << std::left
                << (decorated ? pr_inverse(orb).str() : orb.str()) << std::right << "  "
                << (e.contains("edge") ? e["edge"].get<std::string>() : std::string("--")) << "  "
                << e["path"].get<std::string>() << "\n";
        }
    return kOk;
}

inline json residuals(const DioSol4& s)
{
    return {{"eq1_residual", eq1_residual(s)}, {"in_D", in_D(s)}, {"in_DP", in_DP(s)}, {"in_DP0", in_DP0(s)}};
}

inline int cmd_dio_solve(std::ostream& out, const Options& o, DioSol4 s)
{
    need_format(o.format, {"table", "json"});
    AuxSol a = solve_aux(s);
    json j = {{"input", s},
              {"checks", residuals(s)},
              {"aux", a},
              {"eq8_residual", eq8_residual(s, a.a1, a.a2)},
              {"in_box", aux_in_box(s, a.a1, a.a2)}};
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << "s = " << s.str() << "\na1 = " << a.a1 << "\na2 = " << a.a2 << "\neq8 residual = "
            << eq8_residual(s, a.a1, a.a2) << "\n";
    return kOk;
}

inline int cmd_dio_extend(std::ostream& out, const Options& o, DioSol4 s)
{
    need_format(o.format, {"table", "json"});
    ExtSol8 e = extend_to_8(s);
    json j = {{"input", s},
              {"checks",
               {{"eq1_residual", eq1_residual(e.base())},
                {"eq2_residual", eq2_residual(e)},
                {"eq3_holds", eq3_holds(e)},
                {"in_bounds", ext_in_bounds(e)},
                {"delta_identity", e.m1 + e.m2 + e.q3 == e.k1 + e.k2 - 1}}},
              {"extended", e}};
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << "s = " << s.str() << "\n(q3,q4,m1,m2) = (" << e.q3 << "," << e.q4 << "," << e.m1 << "," << e.m2
            << ")\neq2 residual = " << eq2_residual(e) << "\neq3 holds = " << (eq3_holds(e) ? "yes" : "no")
            << "\n";
    return kOk;
}

inline int cmd_dio_pr1(std::ostream& out, const Options& o, Int k, Int q)
{
    need_format(o.format, {"table", "json"});
    DecoratedOrbit d = pr1_inverse(k, q);
    json j = {{"input", {{"k1", k}, {"q1", q}}},
              {"orbit", d},
              {"checks", residuals(d.sol())},
              {"on_tree", pr_inverse(pr(d)) == d}};
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << d.str() << "\n";
    return kOk;
}

inline int cmd_hj(std::ostream& out, const Options& o, Int k, Int q)
{
    WeightedChain c = hj_expand(k, q);
    if (o.format == "dot") {
        out << chain_dot(c, "hj_" + std::to_string(k) + "_" + std::to_string(q));
        return kOk;
    }
    auto tail = std::span<const Int>(c.weights).subspan(1);
    json j = {{"k", k}, {"q", q}, {"weights", c}, {"continuant", continuant(c)}, {"tail_continuant", continuant(tail)}};
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << k << "/" << q << " = " << c.str() << "\n";
    return kOk;
}

inline int cmd_resolve(std::ostream& out, const Options& o, Int k1, Int k2, bool trace)
{
    Resolution r = resolve(k1, k2);
    if (o.format == "dot") {
        out << resolution_dot(r.graph);
        return kOk;
    }
    json j = {{"k1", r.graph.k1},
              {"k2", r.graph.k2},
              {"multiplicity", r.graph.multiplicity()},
              {"weights", r.graph.chain.full()},
              {"center", r.graph.branchAt},
              {"sbar", r.sbar},
              {"blowups", r.trace.size()},
              {"degenerate", degenerate(r.graph)}};
    if (trace)
        j["trace"] = r.trace;
    if (o.format == "json") {
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "weights " << r.graph.chain.full().str() << "  center " << r.graph.branchAt << "  sbar "
        << r.sbar.as_sol().str() << "  blowups " << r.trace.size() << "\n";
    if (trace)
        for (const auto& st : r.trace) {
            out << "  {" << st.k1Before << "," << st.k2Before << "} -> {" << st.k1After << "," << st.k2After
                << "}  " << edge_name(st.label) << "  E" << st.created << " through [";
            for (std::size_t i = 0; i < st.through.size(); ++i)
                out << (i ? "," : "") << "E" << st.through[i];
            out << "]\n";
        }
    return kOk;
}

inline int cmd_classify(std::ostream& out, const Options& o, Int k1, Int k2, int cap, bool witness)
{
    need_format(o.format, {"table", "json"});
    require(cap >= 2 && cap <= kHardDegreeCap,
            [] { return "classify: --max-degree must be in 2.." + std::to_string(kHardDegreeCap); });
    GermClass g = classify(k1, k2, cap);
    if (!witness) {
        g.witness.reset();
        for (auto& d : g.degrees)
            d.witness.reset();
    }
    if (o.format == "json") {
        json j = g;
        if (g.witness)
            j["witness_cycles"] = {{"a", g.witness->a.cycle_notation()},
                                   {"t", g.witness->t.cycle_notation()},
                                   {"b", g.witness->b.cycle_notation()}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "pair {" << g.k1 << "," << g.k2 << "}  mu " << g.mu << "  family " << family_name(g.family);
    if (g.family != Family::NONE)
        out << "  degree " << g.degree;
    out << "  classes " << g.classCount << (g.crossChecked ? "" : " (not cross-checked)");
    if (g.tag)
        out << "  subcase " << g.tag->str();
    out << "\n";
    for (const auto& d : g.degrees)
        out << "  d=" << d.degree << "  admissible " << d.admissibleClasses << "  smooth " << d.smoothClasses
            << (d.crossChecked ? "" : "  (above cap)") << "\n";
    if (g.witness)
        out << "  witness a=" << g.witness->a.cycle_notation() << " t=" << g.witness->t.cycle_notation()
            << " b=" << g.witness->b.cycle_notation() << "\n";
    return kOk;
}

inline int print_reports(std::ostream& out, const Options& o, const std::vector<VerifyReport>& reports)
{
    bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
    if (o.format == "json") {
        out << json{{"ok", ok}, {"suites", reports}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.ok() ? "PASS" : "FAIL") << "  " << std::setw(9) << std::left << r.suite << std::right
                << "  bound " << r.bound << "  cases " << r.cases << "  " << std::fixed << std::setprecision(2)
                << r.seconds << "s\n";
            for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) {
                const Failure& f = r.failures[i];
                out << "    " << f.key << "  " << f.what << "  input " << f.input.dump() << "  expected "
                    << f.expected.dump() << "  actual " << f.actual.dump() << "\n";
            }
            if (r.failures.size() > 20)
                out << "    ... " << r.failures.size() - 20 << " more\n";
        }
    }
    return ok ? kOk : kVerifyFailed;
}

inline int cmd_verify(std::ostream& out, const Options& o, const std::string& suite, int bound)
{
    need_format(o.format, {"table", "json"});
    return print_reports(out, o, verify::run(suite, bound));
}

inline int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact invariants of x^k1 - y^k2 germs and their monodromy", "germ-lab"};
    app.require_subcommand(1);
    Options opt;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "dot"}));
    };

    int level = 4;
    bool decorated = false;
    auto* tree = app.add_subcommand("tree", "Orbit tree of coprime pairs");
    tree->add_option("--level", level, "Deepest level")->required();
    tree->add_flag("--decorated", decorated, "Show decorated orbits");
    add_format(tree);

    Int k1 = 0, k2 = 0, q1 = 0, q2 = 0, k = 0, q = 0;
    auto* dio = app.add_subcommand("dio", "Diophantine systems");
    dio->require_subcommand(1);
    auto add_s = [&](CLI::App* sub) {
        sub->add_option("--k1", k1)->required();
        sub->add_option("--k2", k2)->required();
        sub->add_option("--q1", q1)->required();
        sub->add_option("--q2", q2)->required();
        add_format(sub);
    };
    auto* solve = dio->add_subcommand("solve", "Auxiliary pair (a1,a2)");
    add_s(solve);
    auto* extend = dio->add_subcommand("extend", "Extension to (q3,q4,m1,m2)");
    add_s(extend);
    auto* pr1inv = dio->add_subcommand("pr1-inverse", "Decorated orbit with left part k/q");
    pr1inv->add_option("--k", k)->required();
    pr1inv->add_option("--q", q)->required();
    add_format(pr1inv);

    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of k/q");
    hj->add_option("--k", k)->required();
    hj->add_option("--q", q)->required();
    add_format(hj);

    bool trace = false;
    auto* res = app.add_subcommand("resolve", "Blowup resolution of x^k1 - y^k2");
    res->add_option("--k1", k1)->required();
    res->add_option("--k2", k2)->required();
    res->add_flag("--trace", trace, "Print each blowup");
    add_format(res);

    int maxDegree = kDefaultDegreeCap;
    bool witness = false;
    auto* cls = app.add_subcommand("classify", "Classify the germs branched along x^k1 - y^k2");
    cls->add_option("--k1", k1)->required();
    cls->add_option("--k2", k2)->required();
    cls->add_option("--max-degree", maxDegree, "Exhaustive enumeration cap");
    cls->add_flag("--witness", witness, "Include a witness datum");
    add_format(cls);

    std::string suite = "all";
    int bound = 100;
    auto* ver = app.add_subcommand("verify", "Replay identities over a bounded sweep");
    ver->add_option("--suite", suite, "Suite name, 'monodromy' or 'all'");
    ver->add_option("--bound", bound, "Sweep bound");
    add_format(ver);

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i)
            args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (tree->parsed())
            return cmd_tree(out, opt, level, decorated);
        if (solve->parsed())
            return cmd_dio_solve(out, opt, {k1, k2, q1, q2});
        if (extend->parsed())
            return cmd_dio_extend(out, opt, {k1, k2, q1, q2});
        if (pr1inv->parsed())
            return cmd_dio_pr1(out, opt, k, q);
        if (hj->parsed())
            return cmd_hj(out, opt, k, q);
        if (res->parsed())
            return cmd_resolve(out, opt, k1, k2, trace);
        if (cls->parsed())
            return cmd_classify(out, opt, k1, k2, maxDegree, witness);
        if (ver->parsed())
            return cmd_verify(out, opt, suite, bound);
    } catch (const InvalidInput& e) {
        err << "germ-lab: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "germ-lab: " << e.what() << "\n";
        return kUsage;
    } catch (const Overflow& e) {
        err << "germ-lab: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "germ-lab: internal error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    err << "germ-lab: no command\n";
    return kUsage;
}

} // namespace germlab::cli
