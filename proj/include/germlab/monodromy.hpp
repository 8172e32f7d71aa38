#pragma once

#include "germlab/blowup.hpp"
#include "germlab/chains.hpp"
#include "germlab/checked.hpp"
#include "germlab/diophantine.hpp"
#include "germlab/permutation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace germlab {

// ---------------------------------------------------------------- presentations

// A product of generators raised to a power; a relation is a product of factors.
struct Factor {
    std::vector<int> gens;
    Int exp = 1;
};

struct Relation {
    std::string family; // "commutator", "center", "weight", "order"
    std::vector<Factor> factors;
};

struct Presentation {
    std::vector<std::string> names;
    std::vector<Relation> relations;
};

inline std::string relation_text(const Presentation& p, const Relation& r)
{
    std::string s;
    for (const Factor& f : r.factors) {
        if (!s.empty())
            s += " ";
        std::string base;
        for (std::size_t i = 0; i < f.gens.size(); ++i)
            base += (i ? " " : "") + p.names[f.gens[i]];
        if (f.gens.size() > 1)
            base = "(" + base + ")";
        s += base;
        if (f.exp != 1)
            s += "^" + std::to_string(f.exp);
    }
    return s + " = 1";
}

inline Permutation power(const Permutation& p, Int e)
{
    Permutation base = e < 0 ? p.inverse() : p;
    Permutation r = Permutation::identity(p.degree());
    for (Int n = e < 0 ? -e : e; n > 0; n >>= 1) {
        if (n & 1)
            r = r * base;
        base = base * base;
    }
    return r;
}

inline Permutation evaluate(const Relation& r, const std::vector<Permutation>& images)
{
    const int d = images.front().degree();
    Permutation acc = Permutation::identity(d);
    for (const Factor& f : r.factors) {
        Permutation base = Permutation::identity(d);
        for (int g : f.gens)
            base = base * images.at(g);
        acc = acc * power(base, f.exp);
    }
    return acc;
}

inline bool satisfies(const Presentation& p, const std::vector<Permutation>& images)
{
    for (const Relation& r : p.relations)
        if (!evaluate(r, images).is_identity())
            return false;
    return true;
}

struct FullPresentation {
    Presentation pres;
    ResolutionGraph graph;
    std::size_t n = 0, n0 = 0;
};

// Generators x0 (the branch) and x1..xn (the chain), with weights from the resolution.
inline FullPresentation local_pi1_presentation(Int k1, Int k2)
{
    FullPresentation fp;
    fp.graph = resolve(k1, k2).graph;
    const WeightedChain w = fp.graph.chain.full();
    const int n = static_cast<int>(w.size());
    const int n0 = static_cast<int>(fp.graph.branchAt);
    fp.n = n;
    fp.n0 = n0;
    for (int i = 0; i <= n; ++i)
        fp.pres.names.push_back("x" + std::to_string(i));

    auto commutator = [](int u, int v) {
        return Relation{"commutator", {{{u}, 1}, {{v}, 1}, {{u}, -1}, {{v}, -1}}};
    };
    for (int i = 1; i < n; ++i)
        fp.pres.relations.push_back(commutator(i, i + 1));
    fp.pres.relations.push_back(commutator(0, n0));

    Relation center{"center", {{{n0}, -1}}};
    if (n0 > 1)
        center.factors.push_back({{n0 - 1}, 1});
    center.factors.push_back({{0}, 1});
    if (n0 < n)
        center.factors.push_back({{n0 + 1}, 1});
    fp.pres.relations.push_back(center);

    for (int i = 1; i <= n; ++i) {
        if (i == n0)
            continue;
        Relation r{"weight", {}};
        if (i > 1)
            r.factors.push_back({{i - 1}, 1});
        r.factors.push_back({{i}, -w.weights[i - 1]});
        if (i < n)
            r.factors.push_back({{i + 1}, 1});
        fp.pres.relations.push_back(r);
    }
    return fp;
}

struct LocalPi1Data {
    Int kLt = 1, qLt = 0, kRt = 1, qRt = 0;
    Int mu = 1;
    Int degreeBound() const { return mu + 1; }
    friend bool operator==(const LocalPi1Data&, const LocalPi1Data&) = default;
};

struct ReducedPresentation {
    LocalPi1Data data;
    Presentation pres; // generators x0, x_{n0-1}, x_{n0+1}
};

inline LocalPi1Data local_data(Int k1, Int k2)
{
    Resolution r = resolve(k1, k2);
    LocalPi1Data d{r.sbar.dlt0, r.sbar.dlt1, r.sbar.drt0, r.sbar.drt1, std::min(k1, k2)};
    ensure(eq1_residual(d.kLt, d.kRt, d.qLt, d.qRt) == 0, "local_data: kLt kRt - kLt qRt - kRt qLt != 1");
    return d;
}

// Walking the weight relations outward from the center turns the end relations
// into x_{n0-1}^{kLt} x_{n0}^{-qLt} = 1 and x_{n0+1}^{kRt} x_{n0}^{-qRt} = 1.
inline ReducedPresentation reduced_presentation(Int k1, Int k2)
{
    ReducedPresentation rp;
    rp.data = local_data(k1, k2);
    rp.pres.names = {"x0", "a", "b"}; // a = x_{n0-1}, b = x_{n0+1}
    const std::vector<int> c{1, 0, 2};
    for (int g : {0, 1, 2})
        rp.pres.relations.push_back({"commutator", {{{g}, 1}, {c, 1}, {{g}, -1}, {c, -1}}});
    rp.pres.relations.push_back({"order", {{{1}, rp.data.kLt}, {c, -rp.data.qLt}}});
    rp.pres.relations.push_back({"order", {{{2}, rp.data.kRt}, {c, -rp.data.qRt}}});
    return rp;
}

// ---------------------------------------------------------------- data and the generation rule

struct MonodromyDatum {
    Permutation a, t, b;
    int degree() const { return t.degree(); }
    friend auto operator<=>(const MonodromyDatum&, const MonodromyDatum&) = default;
};

inline bool admissible(const MonodromyDatum& m, Int kLt, Int kRt)
{
    return m.t.is_transposition() && (m.a * m.t * m.b).is_identity() && kLt % m.a.order() == 0 &&
           kRt % m.b.order() == 0 && generates_symmetric({m.a, m.b}, m.t);
}

// Images of x0..xn once x_{n0} is sent to the identity; empty sides force a or b trivial.
inline std::vector<Permutation> images_from_datum(const FullPresentation& fp, const MonodromyDatum& m)
{
    const int n = static_cast<int>(fp.n), n0 = static_cast<int>(fp.n0);
    const int d = m.degree();
    const WeightedChain w = fp.graph.chain.full();
    std::vector<Permutation> x(n + 1, Permutation::identity(d));
    x[0] = m.t;
    if (n0 > 1)
        x[n0 - 1] = m.a;
    if (n0 < n)
        x[n0 + 1] = m.b;
    // x_{i-1} x_i^{-w_i} x_{i+1} = 1 solved for the outer neighbour.
    for (int i = n0 - 1; i >= 2; --i)
        x[i - 1] = x[i + 1].inverse() * power(x[i], w.weights[i - 1]);
    for (int i = n0 + 1; i <= n - 1; ++i)
        x[i + 1] = power(x[i], w.weights[i - 1]) * x[i - 1].inverse();
    return x;
}

struct SymmVerdict {
    bool generates = false;
    int t = 0;                        // cycles of g1, fixed points included
    std::vector<int> productCycles;   // g1*g2
    std::vector<int> reversedCycles;  // g2*g1
    bool ruleHolds = true;
};

inline SymmVerdict symm_classify(const Permutation& g1, const Permutation& g2)
{
    require(g2.is_transposition(), "symm_classify: g2 must be a transposition");
    require(g1.degree() == g2.degree(), "symm_classify: degree mismatch");
    SymmVerdict v;
    v.generates = generates_symmetric({g1}, g2);
    v.t = g1.cycle_count();
    v.productCycles = (g1 * g2).cycle_lengths();
    v.reversedCycles = (g2 * g1).cycle_lengths();
    if (v.generates) {
        const int d = g1.degree();
        if (v.t == 2)
            v.ruleHolds = v.productCycles == std::vector<int>{d};
        else if (v.t == 1)
            v.ruleHolds = d == 1 || v.reversedCycles.size() == 2;
        else
            v.ruleHolds = false;
    }
    return v;
}

// ---------------------------------------------------------------- enumeration

constexpr int kDefaultDegreeCap = 8;
constexpr int kHardDegreeCap = 9;

struct Generating {
    Permutation a, b;
    std::vector<int> la, lb;
    Int orderA = 1, orderB = 1;
};

// All a with <a,(0 1)> = S_d, paired with b = (a t)^{-1}.
inline const std::vector<Generating>& generating_pairs(int d)
{
    require(d >= 2 && d <= kHardDegreeCap, "generating_pairs: degree out of range");
    static std::array<std::once_flag, kHardDegreeCap + 1> once;
    static std::array<std::vector<Generating>, kHardDegreeCap + 1> cache;
    std::call_once(once[d], [d] {
        const Permutation t = Permutation::transposition(d, 0, 1);
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        do {
            Permutation a(img);
            if (!generates_symmetric({a}, t))
                continue;
            Permutation b = (a * t).inverse();
            cache[d].push_back({a, b, a.cycle_lengths(), b.cycle_lengths(), a.order(), b.order()});
        } while (std::next_permutation(img.begin(), img.end()));
    });
    return cache[d];
}

// Relabel points in breadth-first order from each start; keep the smallest result.
inline MonodromyDatum canonical_form(const MonodromyDatum& m)
{
    const int d = m.degree();
    std::optional<MonodromyDatum> best;
    for (int s = 0; s < d; ++s) {
        std::vector<int> label(d, -1), queue{s};
        label[s] = 0;
        int next = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int p = queue[qi];
            for (const Permutation* g : {&m.a, &m.t, &m.b}) {
                int q = (*g)(p);
                if (label[q] < 0) {
                    label[q] = next++;
                    queue.push_back(q);
                }
            }
        }
        ensure(next == d, "canonical_form: datum is not transitive");
        auto relabel = [&](const Permutation& g) {
            std::vector<int> r(d);
            for (int i = 0; i < d; ++i)
                r[label[i]] = label[g(i)];
            return Permutation(r);
        };
        MonodromyDatum c{relabel(m.a), relabel(m.t), relabel(m.b)};
        if (!best || c < *best)
            best = c;
    }
    return *best;
}

inline void check_cap(int d, int cap)
{
    if (cap > kHardDegreeCap)
        throw CapExceeded("degree cap " + std::to_string(cap) + " exceeds the hard limit " +
                          std::to_string(kHardDegreeCap));
    if (d > cap)
        throw CapExceeded("exhaustive enumeration refused: degree " + std::to_string(d) +
                          " exceeds cap " + std::to_string(cap));
}

// Classes of admissible data under simultaneous conjugation.
inline std::vector<MonodromyDatum> enumerate_monodromy(int d, Int kLt, Int kRt, int cap = kDefaultDegreeCap)
{
    require(d >= 3, "enumerate_monodromy: degree must be at least 3");
    require(kLt >= 1 && kRt >= 1, "enumerate_monodromy: orders must be positive");
    check_cap(d, cap);
    const Permutation t = Permutation::transposition(d, 0, 1);
    std::set<MonodromyDatum> classes;
    for (const Generating& g : generating_pairs(d))
        if (kLt % g.orderA == 0 && kRt % g.orderB == 0)
            classes.insert(canonical_form({g.a, t, g.b}));
    return {classes.begin(), classes.end()};
}

// ---------------------------------------------------------------- smoothness ledger

struct UpstairsPoint {
    char side = 'L';
    Int cycle = 1;  // l
    Int k = 1;      // k / l
    Int q = 0;      // q mod k_i
    Int m = 0;      // relative Δ
    bool singular() const { return k > 1; }
};

struct SmoothnessReport {
    int degree = 0;
    std::vector<UpstairsPoint> points;
    Int centerSelfIntersection = 0;
    Int genus = 0;
    CenteredChain chain;
    Int determinant = 0;
    bool smooth = false;
    std::string reason;
};

inline SmoothnessReport smoothness_test(const LocalPi1Data& data, const std::vector<int>& aCycles,
                                        const std::vector<int>& bCycles)
{
    SmoothnessReport rep;
    Int dl = 0, dr = 0;
    for (int l : aCycles)
        dl += l;
    for (int l : bCycles)
        dr += l;
    require(dl == dr && dl >= 1, "smoothness_test: cycle lengths do not share a degree");
    rep.degree = static_cast<int>(dl);

    rep.centerSelfIntersection = -dl;
    auto take = [&](char side, Int k, Int q, int l) {
        require(l >= 1 && k % l == 0, "smoothness_test: cycle length does not divide the local order");
        UpstairsPoint p{side, l, k / l, 0, 0};
        p.q = q % p.k;
        p.m = (q - p.q) / p.k;
        rep.centerSelfIntersection += p.m;
        rep.points.push_back(p);
    };
    for (int l : aCycles)
        take('L', data.kLt, data.qLt, l);
    for (int l : bCycles)
        take('R', data.kRt, data.qRt, l);

    // Riemann-Hurwitz for the cover of the center branched at three points.
    Int ramification = (dl - Int(aCycles.size())) + (dl - Int(bCycles.size())) + 1;
    rep.genus = (ramification - 2 * dl + 2) / 2;

    std::vector<const UpstairsPoint*> sing;
    for (const auto& p : rep.points)
        if (p.singular())
            sing.push_back(&p);
    rep.chain.center = -rep.centerSelfIntersection;
    if (!sing.empty())
        rep.chain.left = hj_expand(sing[0]->k, sing[0]->q).reversed();
    if (sing.size() >= 2)
        rep.chain.right = hj_expand(sing[1]->k, sing[1]->q);

    if (sing.size() > 2) {
        rep.reason = "more than two singular points on the center";
        return rep;
    }
    rep.determinant = continuant(rep.chain.full());
    if (rep.genus != 0)
        rep.reason = "center is not rational";
    else if (rep.centerSelfIntersection != -1)
        rep.reason = "center self-intersection " + std::to_string(rep.centerSelfIntersection);
    else if (!is_positive_definite(rep.chain.full()))
        rep.reason = "intersection form not negative definite";
    else if (rep.determinant != 1)
        rep.reason = "chain determinant " + std::to_string(rep.determinant);
    else
        rep.smooth = true;
    return rep;
}

inline SmoothnessReport smoothness_test(const LocalPi1Data& data, const MonodromyDatum& m)
{
    return smoothness_test(data, m.a.cycle_lengths(), m.b.cycle_lengths());
}

struct SubcaseTag {
    int tLt = 0, tRt = 0, nontrivialLt = 0, nontrivialRt = 0;
    std::string str() const
    {
        return "(" + std::to_string(tLt) + "," + std::to_string(tRt) + ")_{" +
               std::to_string(nontrivialLt) + "_" + std::to_string(nontrivialRt) + "}";
    }
    friend auto operator<=>(const SubcaseTag&, const SubcaseTag&) = default;
};

inline SubcaseTag subcase_tag(const MonodromyDatum& m, const LocalPi1Data& data)
{
    SubcaseTag tag;
    auto la = m.a.cycle_lengths(), lb = m.b.cycle_lengths();
    tag.tLt = static_cast<int>(la.size());
    tag.tRt = static_cast<int>(lb.size());
    for (int l : la)
        tag.nontrivialLt += (data.kLt / l > 1);
    for (int l : lb)
        tag.nontrivialRt += (data.kRt / l > 1);
    return tag;
}

inline const std::vector<std::string>& impossible_tags()
{
    static const std::vector<std::string> tags = {
        "(2,1)_{2_1}", "(1,2)_{1_2}", "(2,1)_{0_0}", "(1,2)_{0_0}", "(2,1)_{1_1}",
        "(2,1)_{0_1}", "(2,1)_{1_0}", "(1,2)_{1_0}", "(1,2)_{0_2}",
    };
    return tags;
}

// ---------------------------------------------------------------- classification

enum class Family { O, D, N, DOUBLE, NONE };

inline std::string family_name(Family f)
{
    switch (f) {
    case Family::O: return "O";
    case Family::D: return "D";
    case Family::N: return "N";
    case Family::DOUBLE: return "DOUBLE";
    default: return "NONE";
    }
}

inline Family family_from_name(const std::string& s)
{
    for (Family f : {Family::O, Family::D, Family::N, Family::DOUBLE, Family::NONE})
        if (family_name(f) == s)
            return f;
    throw InvalidInput("unknown family " + s);
}

struct FamilyMatch {
    Family family = Family::NONE;
    int degree = 0;
    std::string parameters;
    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

inline Int isqrt_exact(Int n)
{
    if (n < 0)
        return -1;
    Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n ? r : -1;
}

// Closed-form membership in the families, sorted by degree.
inline std::vector<FamilyMatch> predict_families(Int k1, Int k2)
{
    require(k1 >= 1 && k2 >= 1 && coprime(k1, k2), "classify: need a coprime pair of positive integers");
    Int K1 = std::max(k1, k2), K2 = std::min(k1, k2);
    std::vector<FamilyMatch> out;

    // {ab, a+b}: a, b are the roots of z^2 - K2 z + K1.
    Int disc = isqrt_exact(K2 * K2 - 4 * K1);
    if (disc >= 0 && (K2 + disc) % 2 == 0) {
        Int a = (K2 + disc) / 2, b = (K2 - disc) / 2;
        if (b >= 2 && a > b && coprime(a, b))
            out.push_back({Family::O, static_cast<int>(K2),
                           "a=" + std::to_string(a) + ",b=" + std::to_string(b)});
    }
    if (K2 >= 2 && K1 % (K2 + 1) == 0) {
        Int c = K1 / (K2 + 1);
        if (c >= 2 && coprime(c, K2)) {
            DioSol4 s = dp_member(c, K2);
            out.push_back({Family::D, static_cast<int>(K2 + 1), "s=" + s.str()});
        }
    }
    if (K1 == K2 + 1 && K2 >= 2)
        out.push_back({Family::N, static_cast<int>(K2 + 1), "k=" + std::to_string(K2)});
    if (K1 == 2 && K2 == 1)
        out.push_back({Family::DOUBLE, 2, "k=1"});
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.degree < y.degree; });
    return out;
}

struct DegreeResult {
    int degree = 0;
    int admissibleClasses = 0;
    int smoothClasses = 0;
    bool crossChecked = false;
    std::optional<MonodromyDatum> witness;
    std::optional<SubcaseTag> tag;
};

// Degree 2: every meridian goes to (1 2), and the double cover is smooth exactly
// when the branch germ is; smooth branches are filed under the type {2,1}.
inline DegreeResult double_cover(Int k1, Int k2)
{
    DegreeResult r;
    r.degree = 2;
    r.crossChecked = true;
    r.admissibleClasses = 1;
    bool smoothBranch = std::min(k1, k2) == 1;
    r.smoothClasses = (smoothBranch && std::max(k1, k2) == 2) ? 1 : 0;
    if (r.smoothClasses) {
        Permutation t = Permutation::transposition(2, 0, 1);
        r.witness = MonodromyDatum{t, t, Permutation::identity(2)};
    }
    return r;
}

inline DegreeResult classify_degree(Int k1, Int k2, const LocalPi1Data& data, int d, int cap)
{
    if (d == 2)
        return double_cover(k1, k2);
    DegreeResult r;
    r.degree = d;
    auto classes = enumerate_monodromy(d, data.kLt, data.kRt, cap);
    r.crossChecked = true;
    r.admissibleClasses = static_cast<int>(classes.size());
    for (const auto& m : classes)
        if (smoothness_test(data, m).smooth) {
            if (!r.witness) {
                r.witness = m;
                r.tag = subcase_tag(m, data);
            }
            ++r.smoothClasses;
        }
    return r;
}

struct GermClass {
    Int k1 = 1, k2 = 1, mu = 1;
    LocalPi1Data data;
    Family family = Family::NONE;
    int degree = 0;
    int classCount = 0;
    bool crossChecked = false;
    bool consistent = true; // enumeration agrees with the closed forms
    std::optional<MonodromyDatum> witness;
    std::optional<SubcaseTag> tag;
    std::vector<FamilyMatch> matches;
    std::vector<DegreeResult> degrees;
};

inline GermClass classify(Int k1, Int k2, int cap = kDefaultDegreeCap)
{
    GermClass g;
    g.matches = predict_families(k1, k2);
    g.k1 = std::max(k1, k2);
    g.k2 = std::min(k1, k2);
    g.mu = g.k2;
    g.data = local_data(g.k1, g.k2);
    const int top = static_cast<int>(g.mu + 1);
    const int checkedTop = std::min(top, cap);
    for (int d = 2; d <= checkedTop; ++d)
        g.degrees.push_back(classify_degree(g.k1, g.k2, g.data, d, cap));
    for (int d = checkedTop + 1; d <= top; ++d)
        g.degrees.push_back({d, 0, 0, false, std::nullopt, std::nullopt});

    for (const DegreeResult& r : g.degrees) {
        if (!r.crossChecked)
            continue;
        int expected = 0;
        for (const FamilyMatch& m : g.matches)
            expected += (m.degree == r.degree);
        if (expected != r.smoothClasses)
            g.consistent = false;
    }
    if (!g.matches.empty()) {
        const FamilyMatch& first = g.matches.front();
        g.family = first.family;
        g.degree = first.degree;
        g.crossChecked = first.degree <= cap;
        const DegreeResult& r = g.degrees.at(first.degree - 2);
        g.classCount = r.crossChecked ? r.smoothClasses : 1;
        g.witness = r.witness;
        g.tag = r.tag;
    } else {
        g.crossChecked = top <= cap;
        for (const DegreeResult& r : g.degrees)
            g.classCount += r.smoothClasses;
    }
    return g;
}

} // namespace germlab
