#pragma once

#include "germlab/blowup.hpp"
#include "germlab/chains.hpp"
#include "germlab/charts.hpp"
#include "germlab/diophantine.hpp"
#include "germlab/monodromy.hpp"
#include "germlab/pairs_tree.hpp"
#include "germlab/permutation.hpp"
#include "germlab/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace germlab {

struct Failure {
    std::string key;
    json input;
    json expected;
    json actual;
    std::string what;
    friend bool operator<(const Failure& a, const Failure& b) { return a.key < b.key; }
};

struct VerifyReport {
    std::string suite;
    int bound = 0;
    long long cases = 0;
    std::vector<Failure> failures;
    double seconds = 0;
    bool ok() const { return failures.empty(); }
};

inline void to_json(json& j, const Failure& f)
{
    j = {{"key", f.key}, {"input", f.input}, {"expected", f.expected}, {"actual", f.actual}, {"what", f.what}};
}
inline void from_json(const json& j, Failure& f)
{
    f.key = j.at("key").get<std::string>();
    f.input = j.at("input");
    f.expected = j.at("expected");
    f.actual = j.at("actual");
    f.what = j.at("what").get<std::string>();
}
inline void to_json(json& j, const VerifyReport& r)
{
    j = {{"suite", r.suite},   {"bound", r.bound},         {"cases", r.cases},
         {"ok", r.ok()},       {"failures", r.failures},   {"seconds", r.seconds}};
}
inline void from_json(const json& j, VerifyReport& r)
{
    r.suite = j.at("suite").get<std::string>();
    r.bound = j.at("bound").get<int>();
    r.cases = j.at("cases").get<long long>();
    r.failures = j.at("failures").get<std::vector<Failure>>();
    r.seconds = j.at("seconds").get<double>();
}

namespace verify {

// Per-worker accumulator; failure payloads are only built when a check fails.
struct Sink {
    long long cases = 0;
    std::vector<Failure> failures;

    template <typename Make>
    void expect(bool ok, Make&& make)
    {
        if (!ok)
            failures.push_back(make());
    }
    template <typename In, typename A, typename B>
    void expect_eq(const std::string& key, const In& input, const A& expected, const B& actual, std::string_view what)
    {
        if (!(expected == actual))
            failures.push_back({key, json(input), json(expected), json(actual), std::string(what)});
    }
};

inline int thread_count()
{
    if (const char* env = std::getenv("GERM_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs body(i, sink) for i in [0, n) on a small pool; exceptions become failures.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, Sink&)>& body, Sink& out,
                         const std::string& label)
{
    const int workers = std::max(1, std::min<int>(thread_count(), static_cast<int>(n)));
    std::atomic<std::size_t> next{0};
    std::vector<Sink> sinks(workers);
    auto run = [&](int w) {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                body(i, sinks[w]);
            } catch (const std::exception& e) {
                sinks[w].failures.push_back(
                    {label + "#" + std::to_string(i), json{{"index", i}}, nullptr, nullptr, e.what()});
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool)
        t.join();
    for (auto& s : sinks) {
        out.cases += s.cases;
        out.failures.insert(out.failures.end(), std::make_move_iterator(s.failures.begin()),
                            std::make_move_iterator(s.failures.end()));
    }
}

inline std::string pair_key(Int a, Int b)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%06lld,%06lld)", static_cast<long long>(a), static_cast<long long>(b));
    return buf;
}

// Coprime k1 >= k2 >= 1 grouped by k1.
inline std::vector<Orbit> orbits_with_k1(Int k1)
{
    std::vector<Orbit> out;
    for (Int k2 = 1; k2 <= k1; ++k2)
        if (coprime(k1, k2) && !(k1 > 1 && k2 == k1))
            out.emplace_back(k1, k2);
    return out;
}

// Sum of regular continued-fraction quotients of k1/k2, minus one.
inline Int euclid_oracle(Int k1, Int k2)
{
    Int s = 0;
    while (k2) {
        s += k1 / k2;
        Int r = k1 % k2;
        k1 = k2;
        k2 = r;
    }
    return s - 1;
}

// All decorated orbits on levels 2..L, chunked for the pool.
inline std::vector<DecoratedOrbit> decorated_sweep(int L)
{
    std::vector<DecoratedOrbit> all;
    for (int lv = 2; lv <= L; ++lv) {
        auto v = enumerate_decorated_to_level(lv);
        all.insert(all.end(), v.begin(), v.end());
    }
    return all;
}

template <typename Item, typename Fn>
void chunked(const std::vector<Item>& items, Sink& out, const std::string& label, Fn&& fn)
{
    constexpr std::size_t kChunk = 2048;
    parallel_for(
        (items.size() + kChunk - 1) / kChunk,
        [&](std::size_t c, Sink& s) {
            std::size_t lo = c * kChunk, hi = std::min(items.size(), lo + kChunk);
            for (std::size_t i = lo; i < hi; ++i)
                fn(items[i], s);
        },
        out, label);
}

// Atkinson's minimal-block test: a transitive group is primitive iff the
// smallest block containing {0, j} is everything, for every j.
inline bool is_primitive(const std::vector<Permutation>& gens, int d)
{
    for (int j = 1; j < d; ++j) {
        std::vector<int> parent(d);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<std::pair<int, int>> queue{{0, j}};
        parent[find(j)] = find(0);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto [u, v] = queue[qi];
            for (const auto& g : gens) {
                int a = find(g(u)), b = find(g(v));
                if (a != b) {
                    parent[a] = b;
                    queue.push_back({g(u), g(v)});
                }
            }
        }
        int root = find(0);
        for (int x = 0; x < d; ++x)
            if (find(x) != root)
                return false;
    }
    return true;
}

inline bool is_transitive(const std::vector<Permutation>& gens, int d)
{
    std::vector<char> seen(d, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const auto& g : gens)
            if (!seen[g(p)]) {
                seen[g(p)] = 1;
                ++count;
                stack.push_back(g(p));
            }
    }
    return count == d;
}

// Primitive + contains a transposition => symmetric group.
inline bool independent_generates(const std::vector<Permutation>& gens, const Permutation& t)
{
    const int d = t.degree();
    std::vector<Permutation> all = gens;
    all.push_back(t);
    return is_transitive(all, d) && is_primitive(all, d);
}

// ---------------------------------------------------------------- suites

inline void tree_1_1(int bound, Sink& out)
{
    parallel_for(
        static_cast<std::size_t>(bound),
        [](std::size_t i, Sink& s) {
            const Int k1 = static_cast<Int>(i) + 1;
            for (const Orbit& o : orbits_with_k1(k1)) {
                ++s.cases;
                const std::string key = pair_key(o.k1(), o.k2());
                const Orbit& in = o;
                TreePath p = path_to_root(o);
                s.expect_eq(key, in, o, replay(p), "replay(path_to_root(o)) != o");
                Int ne = n_euclid(o.k1(), o.k2());
                s.expect_eq(key, in, euclid_oracle(o.k1(), o.k2()), ne, "n_euclid vs continued fraction");
                s.expect_eq(key, in, static_cast<Int>(p.letters.size()), ne, "path length vs n_euclid");
                s.expect_eq(key, in, ne + 1, level(o), "level vs n_euclid + 1");
                // α and β agree on {1,1}, so only the orbit is recovered there.
                for (Letter l : {Letter::A, Letter::B}) {
                    auto [back, e] = euclid_step(apply_action(o, l));
                    if (o.is_unit())
                        e = edge_of(l);
                    s.expect(back == o && e == edge_of(l), [&] {
                        return Failure{key, in, json(o), json(back), "euclid_step does not undo the action"};
                    });
                }
                if (!o.is_unit()) {
                    auto [parent, e] = euclid_step(o);
                    s.expect_eq(key, in, o, apply_action(parent, letter_of(e)), "action does not undo euclid_step");
                }
            }
        },
        out, "tree-1-1");
}

inline void thm0_2(int bound, Sink& out)
{
    const int L = std::clamp(bound, 2, 20);
    chunked(decorated_sweep(L), out, "thm0-2", [](const DecoratedOrbit& d, Sink& s) {
        ++s.cases;
        const std::string key = "orbit" + pair_key(d.k1(), d.k2());
        const DecoratedOrbit& in = d;
        s.expect(in_DP(d.sol()), [&] { return Failure{key, in, "in D_P", d.sol(), "decoration leaves D_P"}; });
        s.expect_eq(key, in, d, pr_inverse(pr(d)), "pr_inverse(pr(o)) != o");
        s.expect_eq(key, in, d, pr1_inverse(d.k1(), d.q1()), "pr1_inverse(pr1(o)) != o");
        for (Letter l : {Letter::A, Letter::B})
            s.expect_eq(key, in, apply_action(pr(d), l), pr(decorated_action(d, l)), "pr does not commute with the action");
        auto [dp, de] = decorated_euclid_step(d);
        auto [op, oe] = euclid_step(pr(d));
        s.expect(oe == de && (op.is_root() ? dp.is_root() : pr(dp) == op), [&] {
            return Failure{key, in, json(op), json(dp), "decorated Euclid step does not project"};
        });
    });
    // pr1 hits every coprime (k1, q1) and lands on the tree's own decoration.
    parallel_for(
        static_cast<std::size_t>(std::max(bound, 2) - 1),
        [](std::size_t i, Sink& s) {
            const Int k1 = static_cast<Int>(i) + 2;
            for (Int q1 = 1; q1 < k1; ++q1) {
                if (!coprime(k1, q1))
                    continue;
                ++s.cases;
                const std::string key = "pr1" + pair_key(k1, q1);
                const json in = {{"k1", k1}, {"q1", q1}};
                DecoratedOrbit d = pr1_inverse(k1, q1);
                s.expect_eq(key, in, std::make_pair(k1, q1), pr1(d), "pr1(pr1_inverse) != id");
                s.expect_eq(key, in, pr_inverse(pr(d)), d, "pr1_inverse leaves the decorated tree");
            }
        },
        out, "thm0-2/pr1");
}

inline void lem1_1(int bound, Sink& out)
{
    chunked(decorated_sweep(std::clamp(bound, 2, 18)), out, "lem1-1", [](const DecoratedOrbit& d, Sink& s) {
        ++s.cases;
        s.expect(q_sum_bounds_hold(d), [&] {
            return Failure{"orbit" + pair_key(d.k1(), d.k2()), d, "k2 <= q1+q2 < k1", d.q1() + d.q2(),
                           "bounds on q1+q2 fail"};
        });
    });
    // The H action on D_P, plus uniqueness of the D_P member over each coprime pair.
    const Int scanTop = std::min(bound, 60);
    parallel_for(
        static_cast<std::size_t>(bound),
        [scanTop](std::size_t i, Sink& s) {
            const Int k1 = static_cast<Int>(i) + 1;
            for (Int k2 = 1; k2 <= k1; ++k2) {
                if (!coprime(k1, k2))
                    continue;
                for (auto [a, b] : {std::pair{k1, k2}, std::pair{k2, k1}}) {
                    ++s.cases;
                    const std::string key = "dp" + pair_key(a, b);
                    DioSol4 x = dp_member(a, b);
                    const DioSol4& in = x;
                    s.expect(in_DP(x), [&] { return Failure{key, in, "in D_P", x, "dp_member outside D_P"}; });
                    for (HGen g : {HGen::H1, HGen::H1INV, HGen::H2}) {
                        DioSol4 y = apply_h(x, g);
                        s.expect_eq(key, in, Int{0}, eq1_residual(y), "residual after " + hgen_name(g));
                    }
                    s.expect_eq(key, in, x, apply_h(apply_h(x, HGen::H1), HGen::H1INV), "H1INV after H1");
                    s.expect_eq(key, in, x, apply_h(apply_h(x, HGen::H2), HGen::H2), "H2 twice");
                    if (a <= scanTop && b <= scanTop)
                        s.expect_eq(key, in, std::vector<DioSol4>{x}, scan::dp_solutions(a, b),
                                    "D_P member not unique");
                    if (a == b)
                        break;
                }
            }
        },
        out, "lem1-1/h");
}

inline void stmt3_2(int bound, Sink& out)
{
    chunked(decorated_sweep(std::clamp(bound, 2, 20)), out, "stmt3-2", [](const DecoratedOrbit& d, Sink& s) {
        ++s.cases;
        const std::string key = "orbit" + pair_key(d.k1(), d.k2());
        const DecoratedOrbit& in = d;
        CenteredChain c = orbit_chain(d);
        s.expect_eq(key, in, Int{1}, center_identity(c), "center identity");
        s.expect_eq(key, in, row_expansion(c), continuant(c.full()), "row expansion vs continuant");
        s.expect_eq(key, in, Int{1}, continuant(c.full()), "orbit chain determinant");
        s.expect_eq(key, in, continuant(c.full()), continuant(c.full().reversed()), "continuant reversal");
        for (const WeightedChain* side : {&c.left, &c.right}) {
            auto pre = prefix_continuants(side->weights);
            bool increasing = true;
            for (std::size_t i = 1; i < pre.size(); ++i)
                increasing = increasing && pre[i] > pre[i - 1];
            s.expect(increasing && is_positive_definite(*side), [&] {
                return Failure{key, in, "increasing positive minors", pre, "prefix minors"};
            });
        }
    });
}

inline void check_determinants(const WeightedChain& c, const std::string& key, const json& in, Sink& s)
{
    const Int D = continuant(c);
    s.expect_eq(key, in, D, bareiss_det(tridiagonal(c.weights, 1)), "det M+ vs continuant");
    s.expect_eq(key, in, D, bareiss_det(tridiagonal(c.weights, -1)), "det M- vs continuant");
    const Int sign = c.size() % 2 ? -1 : 1;
    s.expect_eq(key, in, sign * D, bareiss_det(intersection_matrix(c)), "intersection matrix sign rule");
}

inline void lem3_1(int bound, Sink& out)
{
    parallel_for(
        static_cast<std::size_t>(std::max(bound, 2) - 1),
        [](std::size_t i, Sink& s) {
            const Int k = static_cast<Int>(i) + 2;
            for (Int q = 1; q < k; ++q) {
                if (!coprime(k, q))
                    continue;
                ++s.cases;
                const std::string key = "hj" + pair_key(k, q);
                const json in = {{"k", k}, {"q", q}};
                WeightedChain c = hj_expand(k, q);
                s.expect(std::all_of(c.weights.begin(), c.weights.end(), [](Int w) { return w >= 2; }),
                         [&] { return Failure{key, in, ">= 2", c, "weight below 2"}; });
                s.expect_eq(key, in, std::make_pair(k, q), chain_to_fraction(c), "chain_to_fraction(hj_expand)");
                s.expect_eq(key, in, k, continuant(c), "continuant vs k");
                s.expect_eq(key, in, q, continuant(std::span<const Int>(c.weights).subspan(1)), "tail continuant vs q");
                s.expect_eq(key, in, k, continuant(c.reversed()), "reversal");
                if (c.size() <= 12)
                    check_determinants(c, key, in, s);
            }
            // Orbit chains contain the weight-1 center, so they exercise the signed case too.
            for (const Orbit& o : orbits_with_k1(k)) {
                CenteredChain c = orbit_chain(pr_inverse(o));
                if (c.full().size() > 12)
                    continue;
                ++s.cases;
                check_determinants(c.full(), "orbit" + pair_key(o.k1(), o.k2()), o, s);
            }
        },
        out, "lem3-1");
}

inline void thm4_4(int bound, Sink& out)
{
    parallel_for(
        static_cast<std::size_t>(bound),
        [](std::size_t i, Sink& s) {
            const Int k1 = static_cast<Int>(i) + 1;
            for (const Orbit& o : orbits_with_k1(k1)) {
                ++s.cases;
                const std::string key = pair_key(o.k1(), o.k2());
                const Orbit& in = o;
                Resolution r = resolve(o.k1(), o.k2());
                DecoratedOrbit d = pr_inverse(o);
                s.expect_eq(key, in, orbit_chain(d), r.graph.chain, "dual graph vs orbit chain");
                Int ne = n_euclid(o.k1(), o.k2());
                s.expect_eq(key, in, ne + 1, static_cast<Int>(r.trace.size()), "blowup count");
                std::vector<std::string> want, got;
                auto letters = path_to_root(o).letters;
                for (auto it = letters.rbegin(); it != letters.rend(); ++it)
                    want.push_back(edge_name(edge_of(*it)));
                want.push_back("E2");
                for (const auto& st : r.trace)
                    got.push_back(edge_name(st.label));
                s.expect_eq(key, in, want, got, "trace labels vs Euclid path");
                s.expect_eq(key, in, d.sol(), r.sbar.as_sol(), "s-bar vs decoration");
                s.expect(in_DP(r.sbar.as_sol()), [&] { return Failure{key, in, "in D_P", r.sbar, "s-bar"}; });
                if (r.trace.size() >= 2)
                    s.expect(r.sbar.dlt0 > r.sbar.drt0,
                             [&] { return Failure{key, in, "dlt0 > drt0", r.sbar, "strict inequality"}; });
                s.expect_eq(key, in, o.k2() == 1, degenerate(r.graph), "degeneracy criterion");
                WeightedChain w = r.graph.chain.full();
                s.expect_eq(key, in, w.size() % 2 ? Int{-1} : Int{1}, bareiss_det(intersection_matrix(w)),
                            "terminal intersection determinant");
                if (o.k1() <= 12) {
                    chart::Result ch = chart::resolve(o.k1(), o.k2());
                    s.expect_eq(key, in, w.weights, ch.weights, "chart oracle weights");
                    s.expect_eq(key, in, r.graph.branchAt, ch.centerIndex, "chart oracle center");
                    s.expect_eq(key, in, static_cast<int>(r.trace.size()), ch.blowups, "chart oracle blowups");
                }
            }
        },
        out, "thm4-4");
}

inline void thm0_3(int bound, Sink& out)
{
    parallel_for(
        static_cast<std::size_t>(std::max(bound, 2) - 1),
        [bound](std::size_t i, Sink& s) {
            const Int k1 = static_cast<Int>(i) + 2;
            for (Int k2 = 2; k2 <= bound; ++k2) {
                if (!coprime(k1, k2))
                    continue;
                ++s.cases;
                DioSol4 x = dp_member(k1, k2);
                const std::string key = pair_key(k1, k2);
                const DioSol4& in = x;
                AuxSol a = solve_aux(x);
                s.expect_eq(key, in, std::vector<AuxSol>{a}, scan::aux_solutions(x), "aux solutions");
                ExtSol8 e = extend_to_8(x);
                s.expect_eq(key, in, std::vector<ExtSol8>{e}, scan::ext_solutions(x), "extended solutions");
                s.expect(ext_valid(e), [&] { return Failure{key, in, "valid", e, "extended system"}; });
                s.expect_eq(key, in, a.a1 + a.a2 - 1, e.q3, "q3 vs a1 + a2 - 1");
                s.expect_eq(key, in, k1 + k2 - 1, e.m1 + e.m2 + e.q3, "m1 + m2 + q3");
            }
        },
        out, "thm0-3");
}

inline void lem4_6(int bound, Sink& out)
{
    parallel_for(
        static_cast<std::size_t>(std::max(bound, 2) - 1),
        [](std::size_t i, Sink& s) {
            const Int k = static_cast<Int>(i) + 2;
            for (Int q = 1; q < k; ++q) {
                if (!coprime(k, q))
                    continue;
                ++s.cases;
                const std::string key = pair_key(k, q);
                const json in = {{"k", k}, {"q", q}};
                // Δ read off the resolution chain: the continuant past the first vertex.
                auto tail = [](Int kk, Int qq) {
                    WeightedChain c = quotient_resolution(kk, qq);
                    return continuant(std::span<const Int>(c.weights).subspan(1));
                };
                s.expect_eq(key, in, tail(k, q), delta(k, q), "delta vs chain");
                s.expect_eq(key, in, k, delta(k, q) + delta(k, k - q), "complementary sum");
                s.expect_eq(key, in, k, tail(k, q) + tail(k, k - q), "complementary sum on chains");
            }
        },
        out, "lem4-6");
}

inline void lem4_7(int bound, Sink& out)
{
    parallel_for(
        static_cast<std::size_t>(std::max(bound, 2) - 1),
        [](std::size_t i, Sink& s) {
            const Int k = static_cast<Int>(i) + 2;
            for (Int k1 = 1; k1 <= k; ++k1) {
                if (k % k1 || !coprime(k1, k / k1))
                    continue;
                const Int k2 = k / k1;
                for (Int q = 1; q < k; ++q) {
                    if (!coprime(k, q))
                        continue;
                    ++s.cases;
                    const std::string key = pair_key(k, q) + pair_key(k1, 0);
                    const json in = {{"k", k}, {"q", q}, {"k1", k1}};
                    Int m1 = delta_rel(k, q, k1);
                    Int q1 = q % k1;
                    s.expect_eq(key, in, q / k1, m1, "m1 vs floor division");
                    s.expect_eq(key, in, -k1 * k2 + q, k1 * (-k2 + m1) + q1, "self-intersection ledger");
                    s.expect(0 <= m1 && m1 < k2 && (k1 == 1 || coprime(k1, q1)),
                             [&] { return Failure{key, in, "0 <= m1 < k2", m1, "range"}; });
                }
            }
        },
        out, "lem4-7");
}

inline void stmt5_3(int bound, Sink& out)
{
    const int top = std::clamp(bound, 2, 7);
    for (int d = 2; d <= top; ++d) {
        std::vector<Permutation> all;
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        do
            all.emplace_back(img);
        while (std::next_permutation(img.begin(), img.end()));
        std::vector<Permutation> trans;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                trans.push_back(Permutation::transposition(d, i, j));
        chunked(all, out, "stmt5-3/d" + std::to_string(d), [&](const Permutation& g1, Sink& s) {
            for (const Permutation& g2 : trans) {
                ++s.cases;
                SymmVerdict v = symm_classify(g1, g2);
                const std::string key = "d" + std::to_string(d) + ":" + g1.cycle_notation() + "|" + g2.cycle_notation();
                const json in = {{"g1", g1}, {"g2", g2}};
                bool indep = independent_generates({g1}, g2);
                s.expect_eq(key, in, indep, v.generates, "generation vs primitivity test");
                if (v.generates) {
                    s.expect(v.t <= 2, [&] { return Failure{key, in, "t <= 2", v.t, "cycle count"}; });
                    s.expect(v.ruleHolds, [&] {
                        return Failure{key, in, "product rule", json{{"g1g2", v.productCycles}, {"g2g1", v.reversedCycles}},
                                       "cycle structure of the product"};
                    });
                }
            }
        });
    }
}

// Coprime k1 >= k2 >= 1 with k1 + k2 <= top.
inline std::vector<Orbit> small_pairs(int top)
{
    std::vector<Orbit> out;
    for (Int k1 = 1; k1 <= top; ++k1)
        for (const Orbit& o : orbits_with_k1(k1))
            if (o.k1() + o.k2() <= top)
                out.push_back(o);
    return out;
}

inline void thm0_4(int bound, Sink& out)
{
    chunked(small_pairs(std::clamp(bound, 2, 12)), out, "thm0-4", [](const Orbit& o, Sink& s) {
        ++s.cases;
        const std::string key = pair_key(o.k1(), o.k2());
        const Orbit& in = o;
        GermClass g = classify(o.k1(), o.k2());
        s.expect(g.consistent && g.crossChecked, [&] { return Failure{key, in, "consistent", g, "classification"}; });
        for (const DegreeResult& r : g.degrees) {
            int expected = 0;
            for (const FamilyMatch& m : g.matches)
                expected += m.degree == r.degree;
            s.expect_eq(key + "@" + std::to_string(r.degree), in, expected, r.smoothClasses, "smooth class count");
        }
        // Nothing smooth above the degree bound.
        for (int d = std::max<int>(3, g.mu + 2); d <= kDefaultDegreeCap; ++d)
            s.expect_eq(key + "@" + std::to_string(d), in, 0,
                        classify_degree(g.k1, g.k2, g.data, d, kDefaultDegreeCap).smoothClasses,
                        "smooth datum above mu + 1");
        if (g.witness && g.witness->degree() >= 3) {
            const MonodromyDatum& w = *g.witness;
            s.expect(admissible(w, g.data.kLt, g.data.kRt) && independent_generates({w.a, w.b}, w.t),
                     [&] { return Failure{key, in, "admissible", w, "witness"}; });
            FullPresentation fp = local_pi1_presentation(g.k1, g.k2);
            s.expect(satisfies(fp.pres, images_from_datum(fp, w)),
                     [&] { return Failure{key, in, "all relations", w, "witness images"}; });
            ReducedPresentation rp = reduced_presentation(g.k1, g.k2);
            s.expect(satisfies(rp.pres, {w.t, w.a, w.b}),
                     [&] { return Failure{key, in, "reduced relations", w, "witness on three generators"}; });
        }
    });
}

inline void sub5_6(int bound, Sink& out)
{
    const auto& banned = impossible_tags();
    chunked(small_pairs(std::clamp(bound, 2, 12)), out, "sub5-6", [&](const Orbit& o, Sink& s) {
        const LocalPi1Data data = local_data(o.k1(), o.k2());
        for (int d = 3; d <= std::min<int>(o.k2() + 1, kDefaultDegreeCap); ++d)
            for (const MonodromyDatum& m : enumerate_monodromy(d, data.kLt, data.kRt)) {
                ++s.cases;
                const std::string key = pair_key(o.k1(), o.k2()) + "@" + std::to_string(d) + ":" +
                                        m.a.cycle_notation() + "|" + m.b.cycle_notation();
                const json in = {{"pair", o}, {"datum", m}};
                s.expect(independent_generates({m.a, m.b}, m.t) && m.degree() <= o.k2() + 1,
                         [&] { return Failure{key, in, "S_d", m, "generated group"}; });
                if (!smoothness_test(data, m).smooth)
                    continue;
                SubcaseTag tag = subcase_tag(m, data);
                s.expect(std::find(banned.begin(), banned.end(), tag.str()) == banned.end(),
                         [&] { return Failure{key, in, "allowed subcase", tag, "excluded subcase occurs"}; });
                if (tag.str() == "(2,1)_{2_0}") {
                    auto l = m.a.cycle_lengths();
                    s.expect(l.size() == 2 && l[0] == data.kLt / l[1] && l[1] == data.kLt / l[0],
                             [&] { return Failure{key, in, "l1 = k2, l2 = k1", l, "coprimality forced lengths"}; });
                }
            }
    });
}

struct Suite {
    std::string name;
    std::string summary;
    void (*run)(int, Sink&);
};

inline const std::vector<Suite>& suites()
{
    static const std::vector<Suite> list = {
        {"tree-1-1", "orbit tree round trips and levels", tree_1_1},
        {"thm0-2", "pr and pr1 bijections on decorated orbits", thm0_2},
        {"lem1-1", "q1+q2 bounds and the H action on D_P", lem1_1},
        {"stmt3-2", "center identity and row expansion", stmt3_2},
        {"lem3-1", "continuants vs integer determinants", lem3_1},
        {"thm4-4", "blowup engine vs orbit chains and chart oracle", thm4_4},
        {"thm0-3", "auxiliary and extended systems vs exhaustive scans", thm0_3},
        {"lem4-6", "delta and its complement", lem4_6},
        {"lem4-7", "relative delta ledger", lem4_7},
        {"stmt5-3", "transposition generation rule in S_d", stmt5_3},
        {"thm0-4", "germ classification vs exhaustive monodromy", thm0_4},
        {"sub5-6", "excluded subcases never occur", sub5_6},
    };
    return list;
}

inline std::vector<std::string> expand_suite(const std::string& name)
{
    std::vector<std::string> out;
    if (name == "all") {
        for (const auto& s : suites())
            out.push_back(s.name);
    } else if (name == "monodromy") {
        out = {"stmt5-3", "thm0-4", "sub5-6"};
    } else {
        for (const auto& s : suites())
            if (s.name == name)
                out.push_back(name);
        require(!out.empty(), [&] { return "unknown suite " + name; });
    }
    return out;
}

inline VerifyReport run_suite(const std::string& name, int bound)
{
    require(bound >= 1, "verify: bound must be positive");
    auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == name; });
    require(it != suites().end(), [&] { return "unknown suite " + name; });
    VerifyReport r;
    r.suite = name;
    r.bound = bound;
    Sink sink;
    auto t0 = std::chrono::steady_clock::now();
    it->run(bound, sink);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.cases = sink.cases;
    r.failures = std::move(sink.failures);
    std::sort(r.failures.begin(), r.failures.end());
    return r;
}

inline std::vector<VerifyReport> run(const std::string& name, int bound)
{
    std::vector<VerifyReport> out;
    for (const auto& s : expand_suite(name))
        out.push_back(run_suite(s, bound));
    return out;
}

} // namespace verify
} // namespace germlab
