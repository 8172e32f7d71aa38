#include "germlab/monodromy.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace germlab;

namespace {

Permutation cyc(int d, const std::string& s) { return parse_cycles(d, s); }

std::size_t closure_size(const std::vector<Permutation>& gens)
{
    const int d = gens.front().degree();
    std::set<Permutation> seen{Permutation::identity(d)};
    std::vector<Permutation> frontier{Permutation::identity(d)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Permutation q = p * g;
                if (seen.insert(q).second)
                    next.push_back(q);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

std::vector<Permutation> all_perms(int d)
{
    std::vector<Permutation> out;
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    do
        out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

bool transitive(const std::vector<Permutation>& gens)
{
    const int d = gens.front().degree();
    std::set<int> orbit{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const auto& g : gens)
            if (orbit.insert(g(p)).second)
                stack.push_back(g(p));
    }
    return static_cast<int>(orbit.size()) == d;
}

// Exponents of x_1 along the left arm: e_0 = 0, e_1 = 1, e_{i+1} = w_i e_i - e_{i-1}.
std::vector<Int> exponent_walk(const std::vector<Int>& arm)
{
    std::vector<Int> e{0, 1};
    for (std::size_t i = 0; i < arm.size(); ++i)
        e.push_back(arm[i] * e[i + 1] - e[i]);
    return e;
}

} // namespace

TEST_CASE("permutation basics", "[permutation]")
{
    Permutation a = cyc(3, "(1 2)"), b = cyc(3, "(2 3)");
    // Left factor acts first: 1 -> 2 -> 3.
    CHECK((a * b)(0) == 2);
    CHECK((a * b).cycle_notation() == "(1 3 2)");
    CHECK(Permutation::identity(4).cycle_notation() == "()");
    CHECK(cyc(5, "(1 2 3)(4 5)").order() == 6);
    CHECK(cyc(5, "(1 2 3)(4 5)").cycle_lengths() == std::vector<int>{3, 2});
    CHECK(cyc(4, "(2 4)").is_transposition());
    CHECK_FALSE(cyc(4, "(1 2)(3 4)").is_transposition());
    CHECK_THROWS_AS(cyc(3, "(1 4)"), InvalidInput);
    CHECK_THROWS_AS(cyc(3, "(1 2)(2 3)"), InvalidInput);
    CHECK_THROWS_AS(cyc(3, "(1 2"), InvalidInput);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), InvalidInput);
}

TEST_CASE("generation test against group closure and transitivity", "[permutation][oracle]")
{
    for (int d = 2; d <= 6; ++d) {
        std::size_t fact = 1;
        for (int i = 2; i <= d; ++i)
            fact *= i;
        const Permutation t = Permutation::transposition(d, 0, 1);
        for (const Permutation& a : all_perms(d))
            REQUIRE(generates_symmetric({a}, t) == (closure_size({a, t}) == fact));
    }
    // Degree 7 is prime, so a transitive group is primitive and a transposition makes it S_7.
    const Permutation t7 = Permutation::transposition(7, 2, 5);
    for (const Permutation& a : all_perms(7))
        REQUIRE(generates_symmetric({a}, t7) == transitive({a, t7}));
}

TEST_CASE("transposition generation verdicts", "[monodromy]")
{
    SymmVerdict v = symm_classify(cyc(5, "(1 2 3)(4 5)"), cyc(5, "(3 4)"));
    CHECK(v.generates);
    CHECK(v.t == 2);
    CHECK(v.productCycles == std::vector<int>{5});

    SymmVerdict w = symm_classify(cyc(5, "(1 2 3 4 5)"), cyc(5, "(2 4)"));
    CHECK(w.generates);
    CHECK(w.t == 1);
    CHECK(w.reversedCycles.size() == 2);
    CHECK(w.ruleHolds);

    SymmVerdict x = symm_classify(cyc(6, "(1 2)(3 4)(5 6)"), cyc(6, "(2 3)"));
    CHECK_FALSE(x.generates);
    CHECK(x.t == 3);

    CHECK_THROWS_AS(symm_classify(cyc(4, "(1 2 3)"), cyc(4, "(1 2 3)")), InvalidInput);
}

TEST_CASE("presentations", "[monodromy]")
{
    FullPresentation p21 = local_pi1_presentation(2, 1);
    CHECK(p21.pres.names.size() == 3);
    bool found = false;
    for (const auto& r : p21.pres.relations)
        found = found || relation_text(p21.pres, r) == "x1^-2 x2 = 1";
    CHECK(found);

    FullPresentation p32 = local_pi1_presentation(3, 2);
    CHECK(p32.pres.names.size() == 4);
    for (Int k1 = 2; k1 <= 30; ++k1)
        for (Int k2 = 1; k2 < k1; ++k2)
            if (coprime(k1, k2)) {
                FullPresentation fp = local_pi1_presentation(k1, k2);
                REQUIRE(fp.pres.relations.size() == 2 * fp.n);
            }
}

TEST_CASE("reduced local data", "[monodromy]")
{
    CHECK(local_data(5, 3) == LocalPi1Data{5, 3, 3, 1, 3});
    CHECK(local_data(6, 5) == LocalPi1Data{6, 1, 5, 4, 5});
    CHECK(local_data(9, 2) == LocalPi1Data{9, 4, 2, 1, 2});
}

TEST_CASE("end relations follow from walking exponents out from the center", "[monodromy][oracle]")
{
    for (Int k1 = 2; k1 <= 40; ++k1)
        for (Int k2 = 1; k2 < k1; ++k2) {
            if (!coprime(k1, k2))
                continue;
            Resolution r = resolve(k1, k2);
            LocalPi1Data d = local_data(k1, k2);
            // Left arm read from its far end; the walk lands on x_{n0} and x_{n0-1}.
            auto e = exponent_walk(r.graph.chain.left.weights);
            REQUIRE(e.back() == d.kLt);
            REQUIRE(e[e.size() - 2] == d.qLt);
            // a^kLt c^-qLt has exponent qLt*kLt - kLt*qLt = 0 in <x_1>.
            REQUIRE(e[e.size() - 2] * d.kLt - e.back() * d.qLt == 0);
            auto right = r.graph.chain.right.reversed().weights;
            auto f = exponent_walk(right);
            REQUIRE(f.back() == d.kRt);
            REQUIRE(f[f.size() - 2] == d.qRt);
        }
}

TEST_CASE("enumeration examples", "[monodromy]")
{
    auto c332 = enumerate_monodromy(3, 3, 2);
    REQUIRE(c332.size() == 1);
    CHECK(c332[0].a.cycle_lengths() == std::vector<int>{3});
    CHECK(c332[0].b.is_transposition());

    auto c565 = enumerate_monodromy(5, 6, 5);
    REQUIRE(c565.size() == 1);
    auto la = c565[0].a.cycle_lengths();
    std::sort(la.begin(), la.end());
    CHECK(la == std::vector<int>{2, 3});
    CHECK(c565[0].b.cycle_lengths() == std::vector<int>{5});

    CHECK(enumerate_monodromy(3, 5, 3).empty());
    CHECK_THROWS_AS(enumerate_monodromy(9, 9, 9), CapExceeded);
    CHECK_THROWS_AS(enumerate_monodromy(5, 6, 5, 12), CapExceeded);
    CHECK_THROWS_AS(enumerate_monodromy(2, 2, 1), InvalidInput);
}

TEST_CASE("canonical forms are conjugation invariant", "[monodromy]")
{
    std::mt19937 rng(7);
    for (const MonodromyDatum& m : enumerate_monodromy(6, 6, 5)) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> img(6);
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            Permutation g(img);
            MonodromyDatum c{m.a.conjugate_by(g), m.t.conjugate_by(g), m.b.conjugate_by(g)};
            REQUIRE(canonical_form(c) == m);
        }
    }
}

TEST_CASE("smoothness ledger", "[monodromy]")
{
    // x^6 - y^5 at degree 5: a of type (2,3), b a 5-cycle.
    SmoothnessReport o = smoothness_test(local_data(6, 5), {2, 3}, {5});
    CHECK(o.smooth);
    CHECK(o.centerSelfIntersection == -1);
    CHECK(o.chain.full().weights == std::vector<Int>{3, 1, 2});

    // D-type data (9,4,2,1) at degree 3: the fixed point contributes nothing.
    SmoothnessReport dd = smoothness_test(local_data(9, 2), {3}, {2, 1});
    CHECK(dd.smooth);
    REQUIRE(dd.points.size() == 3);
    CHECK(dd.points[0].m == 1);
    CHECK(dd.points[1].m == 1);

    // Subcase (1,2)_{0_1} with qRt != kRt - 1 fails on the determinant.
    SmoothnessReport bad = smoothness_test(LocalPi1Data{3, 2, 4, 1, 3}, {3}, {2, 1});
    CHECK_FALSE(bad.smooth);
    CHECK(bad.centerSelfIntersection == -1);
    CHECK(bad.determinant == 2);

    CHECK_THROWS_AS(smoothness_test(local_data(6, 5), {4, 1}, {5}), InvalidInput);
    CHECK_THROWS_AS(smoothness_test(local_data(6, 5), {2, 3}, {4}), InvalidInput);
}

TEST_CASE("classification examples", "[monodromy]")
{
    GermClass n = classify(3, 2);
    CHECK(n.family == Family::N);
    CHECK(n.degree == 3);
    CHECK(n.classCount == 1);
    REQUIRE(n.tag);
    CHECK(n.tag->str() == "(1,2)_{0_1}");

    GermClass o = classify(6, 5);
    CHECK(o.family == Family::O);
    CHECK(o.degree == 5);
    CHECK(o.classCount == 1);
    CHECK(o.tag->str() == "(2,1)_{2_0}");
    CHECK(o.consistent);

    GermClass none = classify(5, 3);
    CHECK(none.family == Family::NONE);
    CHECK(none.classCount == 0);
    for (const auto& r : none.degrees)
        CHECK(r.smoothClasses == 0);

    GermClass d = classify(9, 2);
    CHECK(d.family == Family::D);
    CHECK(d.degree == 3);
    CHECK(d.tag->str() == "(1,2)_{1_1}");

    GermClass dbl = classify(2, 1);
    CHECK(dbl.family == Family::DOUBLE);
    CHECK(dbl.degree == 2);
    CHECK(dbl.classCount == 1);

    GermClass big = classify(20, 9);
    CHECK(big.family == Family::O);
    CHECK(big.degree == 9);
    CHECK_FALSE(big.crossChecked);
    REQUIRE(big.matches.size() == 2);
    CHECK(big.matches[1].family == Family::D);
    CHECK(big.matches[1].degree == 10);
}

TEST_CASE("exhaustive counts match the parametrized families for k1 + k2 <= 12", "[monodromy][oracle]")
{
    // Families generated from their parameters, not from the quadratic used by the classifier.
    std::map<std::pair<Int, Int>, std::set<int>> expected;
    for (Int a = 3; a <= 12; ++a)
        for (Int b = 2; b < a; ++b)
            if (coprime(a, b))
                expected[{a * b, a + b}].insert(static_cast<int>(a + b));
    for (Int c = 2; c <= 12; ++c)
        for (Int k = 2; k <= 12; ++k)
            if (coprime(c, k))
                expected[{c * (k + 1), k}].insert(static_cast<int>(k + 1));
    for (Int k = 2; k <= 12; ++k)
        expected[{k + 1, k}].insert(static_cast<int>(k + 1));
    expected[{2, 1}].insert(2);

    for (Int k1 = 2; k1 <= 11; ++k1)
        for (Int k2 = 1; k2 < k1 && k1 + k2 <= 12; ++k2) {
            if (!coprime(k1, k2))
                continue;
            GermClass g = classify(k1, k2);
            REQUIRE(g.crossChecked);
            const auto want = expected[{k1, k2}];
            for (const DegreeResult& r : g.degrees) {
                INFO("pair " << k1 << "," << k2 << " degree " << r.degree);
                REQUIRE(r.smoothClasses == static_cast<int>(want.count(r.degree)));
            }
            if (g.witness && g.witness->degree() >= 3) {
                FullPresentation fp = local_pi1_presentation(k1, k2);
                REQUIRE(satisfies(fp.pres, images_from_datum(fp, *g.witness)));
                const int d = g.witness->degree();
                std::size_t fact = 1;
                for (int i = 2; i <= d; ++i)
                    fact *= i;
                if (d <= 6)
                    REQUIRE(closure_size({g.witness->a, g.witness->t}) == fact);
            }
        }
}

TEST_CASE("excluded subcase tags", "[monodromy]")
{
    CHECK(impossible_tags().size() == 9);
    CHECK(SubcaseTag{2, 1, 2, 0}.str() == "(2,1)_{2_0}");
}
