#pragma once

#include "germlab/chains.hpp"
#include "germlab/checked.hpp"
#include "germlab/diophantine.hpp"
#include "germlab/pairs_tree.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace germlab {

struct Component {
    int id = 0; // creation order, 1-based
    Int selfIntersection = -1;
    friend bool operator==(const Component&, const Component&) = default;
};

struct BlowupStep {
    Int k1Before = 0, k2Before = 0;
    Int k1After = 0, k2After = 0;
    Edge label = Edge::E1;
    bool swapped = false;
    int created = 0;
    std::vector<int> through; // older components passing through the blown-up point
    friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

// Proper transform x^{k1} - y^{k2} at the current point, with the components
// that pass through it recorded as the coordinate axes {x=0} and {y=0}.
struct ResolutionState {
    std::vector<Component> components;
    std::set<std::pair<int, int>> adjacency; // (smaller id, larger id)
    std::optional<int> onX, onY;
    Int k1 = 1, k2 = 1;
    std::vector<BlowupStep> trace;

    bool terminal() const { return k1 == 1 && k2 == 0; }

    std::vector<int> attach_points() const
    {
        if (terminal())
            return {components.back().id};
        std::vector<int> v;
        if (onX)
            v.push_back(*onX);
        if (onY)
            v.push_back(*onY);
        return v;
    }
};

inline ResolutionState initial_state(Int k1, Int k2)
{
    require(k1 >= 1 && k2 >= 1 && coprime(k1, k2), "resolve: need a coprime pair of positive integers");
    if (k1 < k2)
        std::swap(k1, k2);
    ResolutionState s;
    s.k1 = k1;
    s.k2 = k2;
    return s;
}

inline ResolutionState blow_up_once(ResolutionState s)
{
    require(!s.terminal(), "blow_up_once: state is already terminal");
    const int e = static_cast<int>(s.components.size()) + 1;
    BlowupStep step;
    step.k1Before = s.k1;
    step.k2Before = s.k2;
    step.created = e;

    for (auto c : {s.onX, s.onY}) {
        if (!c)
            continue;
        step.through.push_back(*c);
        s.components[*c - 1].selfIntersection -= 1;
        s.adjacency.insert({*c, e});
    }
    if (s.onX && s.onY)
        s.adjacency.erase({std::min(*s.onX, *s.onY), std::max(*s.onX, *s.onY)});
    s.components.push_back({e, -1});

    // Chart x = x', y = x'y': x^a - y^b becomes x'^b (x'^{a-b} - y'^b).
    Int a = s.k1, b = s.k2, r = a - b;
    if (r >= b) {
        step.label = Edge::E1;
        s.k1 = r;
        s.onX = e;
    } else {
        step.label = Edge::E2;
        step.swapped = true;
        s.k1 = b;
        s.k2 = r;
        s.onX = s.onY;
        s.onY = e;
    }
    if (s.terminal())
        s.onX = s.onY = std::nullopt;
    step.k1After = s.k1;
    step.k2After = s.k2;
    s.trace.push_back(step);
    return s;
}

struct SbarRecord {
    Int dlt0 = 0, drt0 = 0, dlt1 = 0, drt1 = 0;
    DioSol4 as_sol() const { return {dlt0, drt0, dlt1, drt1}; }
    friend bool operator==(const SbarRecord&, const SbarRecord&) = default;
};

struct ResolutionGraph {
    Int k1 = 1, k2 = 1;
    CenteredChain chain;
    std::vector<int> order;     // component ids along the chain, origin first
    std::size_t branchAt = 1;   // 1-based chain position carrying the b vertex
    Int multiplicity() const { return std::min(k1, k2); }
    friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

// Walk the dual graph from E_1; it must be a chain with the newest component inside.
inline ResolutionGraph dual_graph(const ResolutionState& s, Int k1, Int k2)
{
    require(s.terminal(), "dual_graph: state is not terminal");
    const int n = static_cast<int>(s.components.size());
    std::vector<std::vector<int>> nb(n + 1);
    for (auto [u, v] : s.adjacency) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    ensure(static_cast<int>(s.adjacency.size()) == n - 1, "dual_graph: not a tree");
    for (int i = 1; i <= n; ++i)
        ensure(nb[i].size() <= 2, "dual_graph: vertex of degree > 2");
    ensure(nb[1].size() <= 1, "dual_graph: E_1 is not an end of the chain");

    ResolutionGraph g;
    g.k1 = k1;
    g.k2 = k2;
    int prev = 0, cur = 1;
    while (cur != 0) {
        g.order.push_back(cur);
        int next = 0;
        for (int v : nb[cur])
            if (v != prev)
                next = v;
        prev = cur;
        cur = next;
    }
    ensure(static_cast<int>(g.order.size()) == n, "dual_graph: disconnected");

    auto it = std::find(g.order.begin(), g.order.end(), n);
    g.branchAt = static_cast<std::size_t>(it - g.order.begin()) + 1;
    for (auto p = g.order.begin(); p != g.order.end(); ++p) {
        Int w = -s.components[*p - 1].selfIntersection;
        if (p < it)
            g.chain.left.weights.push_back(w);
        else if (p == it)
            g.chain.center = w;
        else
            g.chain.right.weights.push_back(w);
    }
    return g;
}

inline SbarRecord sbar(const ResolutionGraph& g)
{
    const CenteredChain& c = g.chain;
    return {c.dlt(0), c.drt(0), c.dlt(1), c.drt(1)};
}

struct Resolution {
    ResolutionGraph graph;
    SbarRecord sbar;
    std::vector<BlowupStep> trace;
};

inline Resolution resolve(Int k1, Int k2)
{
    ResolutionState s = initial_state(k1, k2);
    while (!s.terminal())
        s = blow_up_once(std::move(s));
    Resolution r;
    r.graph = dual_graph(s, std::max(k1, k2), std::min(k1, k2));
    r.sbar = sbar(r.graph);
    r.trace = std::move(s.trace);
    ensure(r.graph.chain.center == 1, "resolve: center weight is not 1");
    ensure(in_DP(r.sbar.as_sol()), "resolve: s-bar record outside D_P");
    return r;
}

// The center sits at the far end exactly when every earlier weight is 2.
inline bool degenerate(const ResolutionGraph& g) { return g.chain.right.empty(); }

// Isomorphism of partially weighted graphs: equal, or equal after reversal.
inline bool equisingular(const ResolutionGraph& a, const ResolutionGraph& b)
{
    if (a.chain.full() == b.chain.full() && a.branchAt == b.branchAt)
        return true;
    return a.chain.full().reversed() == b.chain.full() &&
           a.chain.full().size() + 1 - a.branchAt == b.branchAt;
}

inline WeightedChain quotient_resolution(Int k, Int q)
{
    WeightedChain c = hj_expand(k, q);
    ensure(pi1_order(c) == k, "quotient_resolution: order mismatch");
    return c;
}

inline Int delta(Int k, Int q)
{
    require(k > q && q >= 1 && coprime(k, q), "delta: need coprime k > q >= 1");
    return q;
}

inline Int delta_rel(Int k, Int q, Int k1)
{
    require(k1 >= 1 && k % k1 == 0, "delta_rel: k1 must divide k");
    Int k2 = k / k1;
    require(coprime(k1, k2), "delta_rel: k1 and k/k1 must be coprime");
    require(0 < q && q < k && coprime(k, q), "delta_rel: need 0 < q < k coprime to k");
    Int q1 = q % k1;
    Int m1 = (q - q1) / k1;
    ensure(-k1 * k2 + q == k1 * (-k2 + m1) + q1, "delta_rel: self-intersection ledger fails");
    ensure(0 <= m1 && m1 < k2, "delta_rel: m1 out of range");
    return m1;
}

} // namespace germlab
