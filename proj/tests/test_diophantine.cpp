#include "germlab/diophantine.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace germlab;

TEST_CASE("H generators", "[diophantine]")
{
    CHECK(apply_h({1, 1, 0, 0}, HGen::H1) == DioSol4{2, 1, 1, 0});
    CHECK(apply_h({5, 3, 3, 1}, HGen::H2) == DioSol4{3, 5, 1, 3});
    CHECK(apply_h({2, 1, 1, 0}, HGen::H1INV) == DioSol4{1, 1, 0, 0});
    CHECK_THROWS_AS(apply_h({5, 2, 1, 2}, HGen::H1), InvalidInput);
}

TEST_CASE("decorated actions", "[diophantine]")
{
    CHECK(decorated_action(DecoratedOrbit(3, 1, 2, 1), Letter::A) == DecoratedOrbit(5, 2, 2, 1));
    CHECK(decorated_action(DecoratedOrbit(3, 1, 2, 1), Letter::B) == DecoratedOrbit(5, 3, 3, 1));
    CHECK(decorated_action(DecoratedOrbit::root(), Letter::A) == DecoratedOrbit(2, 1, 1, 0));
}

TEST_CASE("pr_inverse by replay", "[diophantine]")
{
    CHECK(pr_inverse(Orbit::unit()) == DecoratedOrbit::root());
    CHECK(pr_inverse(Orbit(5, 3)).str() == "{5/3,3/1}");
    // Derived by replaying ABBA from the root; the tree's {8/3,5/3} sits over {8,5}.
    DecoratedOrbit d83 = pr_inverse(Orbit(8, 3));
    CHECK(d83 == DecoratedOrbit(8, 5, 3, 1));
    CHECK(eq1_residual(d83.sol()) == 0);
    CHECK(pr_inverse(Orbit(8, 5)) == DecoratedOrbit(8, 3, 5, 3));
    CHECK_THROWS_AS(pr_inverse(Orbit::root()), InvalidInput);
}

TEST_CASE("pr1_inverse", "[diophantine]")
{
    CHECK(pr1_inverse(5, 3) == DecoratedOrbit(5, 3, 3, 1));
    CHECK(pr1_inverse(2, 1) == DecoratedOrbit(2, 1, 1, 0));
    CHECK(pr1_inverse(6, 1) == DecoratedOrbit(6, 1, 5, 4));
    CHECK_THROWS_AS(pr1_inverse(6, 3), InvalidInput);
    CHECK_THROWS_AS(pr1_inverse(3, 3), InvalidInput);
}

TEST_CASE("q1 + q2 bounds on decorated orbits", "[diophantine]")
{
    for (int L = 2; L <= 14; ++L)
        for (const auto& d : enumerate_decorated_to_level(L)) {
            REQUIRE(q_sum_bounds_hold(d));
            REQUIRE(pr_inverse(pr(d)) == d);
        }
}

TEST_CASE("auxiliary pair", "[diophantine]")
{
    AuxSol a = solve_aux({3, 2, 1, 1});
    CHECK((a.a1 == 3 && a.a2 == 2));
    AuxSol b = solve_aux({5, 3, 3, 1});
    CHECK((b.a1 == 1 && b.a2 == 1));
    CHECK_THROWS_AS(solve_aux({5, 2, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(solve_aux({2, 1, 1, 0}), InvalidInput);
}

TEST_CASE("extension to eight unknowns", "[diophantine]")
{
    ExtSol8 e = extend_to_8({3, 2, 1, 1});
    CHECK(e == ExtSol8{3, 2, 1, 1, 4, 1, 0, 0});
    ExtSol8 f = extend_to_8({5, 3, 3, 1});
    CHECK(f == ExtSol8{5, 3, 3, 1, 1, 13, 2, 4});
    CHECK(eq2_residual(f) == 0);
    CHECK(eq3_holds(f));
    CHECK(e.m1 + e.m2 + e.q3 == 4);
    CHECK(f.m1 + f.m2 + f.q3 == 7);
}

TEST_CASE("closed forms agree with exhaustive scans for k1, k2 <= 40", "[diophantine][sweep]")
{
    for (Int k1 = 2; k1 <= 40; ++k1)
        for (Int k2 = 2; k2 <= 40; ++k2) {
            if (!coprime(k1, k2))
                continue;
            DioSol4 s = dp_member(k1, k2);
            REQUIRE(scan::dp_solutions(k1, k2) == std::vector<DioSol4>{s});
            REQUIRE(scan::aux_solutions(s) == std::vector<AuxSol>{solve_aux(s)});
            REQUIRE(scan::ext_solutions(s) == std::vector<ExtSol8>{extend_to_8(s)});
        }
}
