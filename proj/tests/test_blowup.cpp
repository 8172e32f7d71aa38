#include "germlab/blowup.hpp"
#include "germlab/charts.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace germlab;

namespace {

WeightedChain wc(std::vector<Int> w) { return {std::move(w)}; }

// Self-intersection bookkeeping replayed on a plain weight list: every blowup
// appends a -1 curve and lowers the curves through the point by one.
std::vector<Int> simulate_weights(Int k1, Int k2)
{
    std::vector<Int> self;
    int onX = -1, onY = -1;
    Int a = std::max(k1, k2), b = std::min(k1, k2);
    while (!(a == 1 && b == 0)) {
        for (int c : {onX, onY})
            if (c >= 0)
                self[c] -= 1;
        self.push_back(-1);
        int e = static_cast<int>(self.size()) - 1;
        if (a - b >= b) {
            a -= b;
            onX = e;
        } else {
            Int r = a - b;
            a = b;
            b = r;
            onX = onY;
            onY = e;
        }
    }
    return self;
}

} // namespace

TEST_CASE("resolution examples", "[blowup]")
{
    Resolution r11 = resolve(1, 1);
    CHECK(r11.graph.chain.full() == wc({1}));
    CHECK(r11.trace.size() == 1);
    CHECK(r11.sbar == SbarRecord{1, 1, 0, 0});

    Resolution r21 = resolve(2, 1);
    CHECK(r21.graph.chain.full() == wc({2, 1}));
    CHECK(r21.graph.branchAt == 2);
    CHECK(r21.trace.size() == 2);
    CHECK(r21.sbar == SbarRecord{2, 1, 1, 0});
    CHECK(degenerate(r21.graph));

    Resolution r53 = resolve(5, 3);
    CHECK(r53.graph.chain.full() == wc({3, 2, 1, 3}));
    CHECK(r53.graph.branchAt == 3);
    CHECK(r53.trace.size() == 4);
    CHECK(r53.sbar == SbarRecord{5, 3, 3, 1});
    CHECK(r53.graph.multiplicity() == 3);
    CHECK_FALSE(degenerate(r53.graph));

    CHECK_THROWS_AS(resolve(6, 4), InvalidInput);
}

TEST_CASE("single blowups", "[blowup]")
{
    ResolutionState s = blow_up_once(initial_state(5, 3));
    CHECK(s.k1 == 3);
    CHECK(s.k2 == 2);
    CHECK(s.trace.back().swapped);
    CHECK(s.components.back().selfIntersection == -1);

    ResolutionState t = blow_up_once(initial_state(2, 1));
    CHECK(t.k1 == 1);
    CHECK(t.k2 == 1);
    CHECK(t.trace.back().label == Edge::E1);

    ResolutionState done = initial_state(3, 2);
    while (!done.terminal())
        done = blow_up_once(done);
    CHECK(done.components.back().selfIntersection == -1);
    CHECK_THROWS_AS(blow_up_once(done), InvalidInput);
}

TEST_CASE("engine agrees with orbit chains, the weight simulation and the chart oracle", "[blowup][oracle]")
{
    for (Int k1 = 1; k1 <= 60; ++k1)
        for (Int k2 = 1; k2 <= k1; ++k2) {
            if (!coprime(k1, k2) || (k1 > 1 && k1 == k2))
                continue;
            Resolution r = resolve(k1, k2);
            REQUIRE(r.graph.chain == orbit_chain(pr_inverse(Orbit(k1, k2))));
            REQUIRE(static_cast<Int>(r.trace.size()) == n_euclid(k1, k2) + 1);
            REQUIRE(degenerate(r.graph) == (k2 == 1));

            std::vector<Int> sim = simulate_weights(k1, k2);
            std::vector<Int> got;
            for (int id : r.graph.order)
                got.push_back(-sim[id - 1]);
            REQUIRE(got == r.graph.chain.full().weights);

            if (k1 <= 12) {
                chart::Result c = chart::resolve(k1, k2);
                REQUIRE(c.weights == r.graph.chain.full().weights);
                REQUIRE(c.centerIndex == r.graph.branchAt);
            }
        }
}

TEST_CASE("equisingularity is chain isomorphism", "[blowup]")
{
    ResolutionGraph a = resolve(5, 3).graph;
    ResolutionGraph b = a;
    b.chain = {a.chain.right.reversed(), a.chain.center, a.chain.left.reversed()};
    b.branchAt = a.chain.full().size() + 1 - a.branchAt;
    CHECK(equisingular(a, b));
    CHECK_FALSE(equisingular(a, resolve(5, 2).graph));
}

TEST_CASE("quotient invariants", "[blowup]")
{
    CHECK(quotient_resolution(5, 3) == wc({2, 3}));
    CHECK(quotient_resolution(2, 1) == wc({2}));
    CHECK(quotient_resolution(5, 2) == wc({3, 2}));
    CHECK(delta(5, 2) == 2);
    CHECK(delta(5, 3) + delta(5, 2) == 5);
    CHECK(delta(9, 1) == 1);
    CHECK(delta_rel(6, 5, 2) == 2);
    CHECK(delta_rel(6, 1, 2) == 0);
    CHECK(delta_rel(15, 13, 5) == 2);
    CHECK_THROWS_AS(delta_rel(12, 5, 2), InvalidInput);
    CHECK_THROWS_AS(delta_rel(6, 3, 2), InvalidInput);
    CHECK_THROWS_AS(delta(6, 4), InvalidInput);
}
