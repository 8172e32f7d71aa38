#pragma once

// Literal polynomial blowups in the two standard charts. Slow but free of the
// exponent-pair shortcuts in blowup.hpp, so the two can be compared.

#include "germlab/chains.hpp"
#include "germlab/checked.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace germlab::chart {

// Sparse bivariate polynomial: (deg x, deg y) -> coefficient.
struct Poly {
    std::map<std::pair<int, int>, Int> terms;

    static Poly monomial(int i, int j, Int c = 1)
    {
        Poly p;
        p.terms[{i, j}] = c;
        return p;
    }
    Poly operator-(const Poly& o) const
    {
        Poly r = *this;
        for (auto [e, c] : o.terms)
            r.add(e, -c);
        return r;
    }
    void add(std::pair<int, int> e, Int c)
    {
        Int v = germlab::add(terms[e], c);
        if (v == 0)
            terms.erase(e);
        else
            terms[e] = v;
    }
    bool vanishes_at_origin() const { return !terms.count({0, 0}); }

    int multiplicity() const
    {
        int m = INT32_MAX;
        for (auto& [e, c] : terms)
            m = std::min(m, e.first + e.second);
        return m;
    }
    // Degree-1 part (coefficient of x, coefficient of y).
    std::pair<Int, Int> linear() const
    {
        auto get = [&](int i, int j) {
            auto it = terms.find({i, j});
            return it == terms.end() ? Int{0} : it->second;
        };
        return {get(1, 0), get(0, 1)};
    }
};

// x = x, y = x*y1, divided by x^m.
inline Poly chart1(const Poly& p, int m)
{
    Poly r;
    for (auto [e, c] : p.terms) {
        int xi = e.first + e.second - m;
        ensure(xi >= 0, "chart1: exceptional factor overdivided");
        r.add({xi, e.second}, c);
    }
    return r;
}

// x = x2*y, y = y, divided by y^m.
inline Poly chart2(const Poly& p, int m)
{
    Poly r;
    for (auto [e, c] : p.terms) {
        int yi = e.first + e.second - m;
        ensure(yi >= 0, "chart2: exceptional factor overdivided");
        r.add({e.first, yi}, c);
    }
    return r;
}

inline Int binom(int n, int k)
{
    Int r = 1;
    for (int i = 1; i <= k; ++i)
        r = mul(r, Int(n - k + i)) / i;
    return r;
}

inline Poly shift_y(const Poly& p, Int r)
{
    if (r == 0)
        return p;
    Poly out;
    for (auto [e, c] : p.terms) {
        Int pw = 1;
        for (int j = e.second; j >= 0; --j) {
            out.add({e.first, j}, mul(c, binom(e.second, j), pw));
            pw = mul(pw, r);
        }
    }
    return out;
}

// Restriction to {x = 0} as a univariate polynomial in y.
inline std::map<int, Int> on_x_axis_zero(const Poly& p)
{
    std::map<int, Int> g;
    for (auto [e, c] : p.terms)
        if (e.first == 0)
            g[e.second] = c;
    return g;
}

struct Curve {
    std::string name;
    int component = 0; // exceptional id, 0 for non-exceptional curves
    Poly f;
};

struct Result {
    std::vector<Int> weights; // along the chain from E_1
    std::size_t centerIndex = 0;
    int blowups = 0;
};

inline bool normal_crossing_at_origin(const std::vector<Curve>& through)
{
    if (through.size() > 2)
        return false;
    for (const Curve& c : through)
        if (c.f.multiplicity() != 1)
            return false;
    if (through.size() == 2) {
        auto [a, b] = through[0].f.linear();
        auto [c, d] = through[1].f.linear();
        return a * d - b * c != 0;
    }
    return true;
}

// Resolve B = x^k1 - y^k2 together with the coordinate axes to normal crossings.
// Keeping the axes reproduces the counting convention for smooth germs.
inline Result resolve(Int k1, Int k2)
{
    std::vector<Curve> here = {
        {"B", 0, Poly::monomial(int(k1), 0) - Poly::monomial(0, int(k2))},
        {"Lx", 0, Poly::monomial(1, 0)},
        {"Ly", 0, Poly::monomial(0, 1)},
    };
    std::vector<Int> self;
    std::set<std::pair<int, int>> edges;

    for (int guard = 0;; ++guard) {
        ensure(guard < 10000, "chart::resolve: runaway");
        ensure(here.front().name == "B", "chart::resolve: lost the branch");
        if (normal_crossing_at_origin(here))
            break;

        const int e = static_cast<int>(self.size()) + 1;
        self.push_back(-1);
        std::vector<int> oldExc;
        for (const Curve& c : here)
            if (c.component) {
                self[c.component - 1] -= c.f.multiplicity();
                edges.insert({c.component, e});
                oldExc.push_back(c.component);
            }
        for (std::size_t i = 0; i < oldExc.size(); ++i)
            for (std::size_t j = i + 1; j < oldExc.size(); ++j)
                edges.erase({std::min(oldExc[i], oldExc[j]), std::max(oldExc[i], oldExc[j])});

        std::vector<Curve> in1, in2;
        for (const Curve& c : here) {
            int m = c.f.multiplicity();
            in1.push_back({c.name, c.component, chart1(c.f, m)});
            in2.push_back({c.name, c.component, chart2(c.f, m)});
        }
        in1.push_back({"E" + std::to_string(e), e, Poly::monomial(1, 0)});
        in2.push_back({"E" + std::to_string(e), e, Poly::monomial(0, 1)});

        // Where does the branch meet the new exceptional curve?
        const int mB = here.front().f.multiplicity();
        auto g = on_x_axis_zero(in1.front().f);
        ensure(!g.empty(), "chart::resolve: branch contains the exceptional curve");
        std::vector<Curve>* next = nullptr;
        if (g.size() == 1 && g.begin()->first == 0) {
            ensure(in2.front().f.vanishes_at_origin(), "chart::resolve: branch missing at chart-2 origin");
            next = &in2;
        } else {
            int deg = g.rbegin()->first;
            ensure(deg == mB, "chart::resolve: branch splits across charts");
            Int lead = g[deg];
            Int r = 0;
            if (g.size() > 1) {
                Int sub1 = g.count(deg - 1) ? g[deg - 1] : 0;
                ensure(sub1 % (deg * lead) == 0, "chart::resolve: non-integral intersection point");
                r = -sub1 / (deg * lead);
            }
            // g must be lead * (y - r)^deg: a single intersection point.
            Poly expect = shift_y(Poly::monomial(0, deg, lead), -r);
            ensure(on_x_axis_zero(expect) == g, "chart::resolve: branch meets E at several points");
            for (Curve& c : in1)
                c.f = shift_y(c.f, r);
            next = &in1;
        }
        std::vector<Curve> through;
        for (Curve& c : *next)
            if (c.f.vanishes_at_origin())
                through.push_back(std::move(c));
        here = std::move(through);
    }

    Result res;
    res.blowups = static_cast<int>(self.size());
    const int n = res.blowups;
    std::vector<std::vector<int>> nb(n + 1);
    for (auto [u, v] : edges) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    int center = 0;
    for (const Curve& c : here)
        if (c.component)
            center = c.component;
    ensure(center != 0, "chart::resolve: branch ends off the exceptional divisor");
    int prev = 0, cur = 1;
    while (cur != 0) {
        res.weights.push_back(-self[cur - 1]);
        if (cur == center)
            res.centerIndex = res.weights.size();
        int nxt = 0;
        for (int v : nb[cur])
            if (v != prev)
                nxt = v;
        prev = cur;
        cur = nxt;
    }
    ensure(static_cast<int>(res.weights.size()) == n, "chart::resolve: dual graph is not a chain from E1");
    return res;
}

} // namespace germlab::chart
