#include "germlab/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace germlab;

TEST_CASE("every suite passes at a small bound", "[verify]")
{
    for (const auto& s : verify::suites()) {
        VerifyReport r = verify::run_suite(s.name, 12);
        INFO(s.name << ": " << (r.failures.empty() ? std::string() : r.failures.front().what));
        CHECK(r.ok());
        CHECK(r.cases > 0);
    }
}

TEST_CASE("suite names and aliases", "[verify]")
{
    CHECK(verify::suites().size() == 12);
    CHECK(verify::expand_suite("all").size() == 12);
    CHECK(verify::expand_suite("monodromy") == std::vector<std::string>{"stmt5-3", "thm0-4", "sub5-6"});
    CHECK(verify::expand_suite("lem4-6") == std::vector<std::string>{"lem4-6"});
    CHECK_THROWS_AS(verify::expand_suite("nosuch"), InvalidInput);
    CHECK_THROWS_AS(verify::run_suite("tree-1-1", 0), InvalidInput);
}

TEST_CASE("parallel sweeps collect failures and exceptions, sorted by key", "[verify]")
{
    setenv("GERM_LAB_THREADS", "3", 1);
    CHECK(verify::thread_count() == 3);
    verify::Sink sink;
    verify::parallel_for(
        50,
        [](std::size_t i, verify::Sink& s) {
            ++s.cases;
            if (i == 7)
                throw InvalidInput("boom");
            s.expect_eq(verify::pair_key(static_cast<Int>(50 - i), 1), json(i), 0, static_cast<int>(i % 10),
                        "nonzero remainder");
        },
        sink, "probe");
    unsetenv("GERM_LAB_THREADS");
    CHECK(sink.cases == 50);
    std::sort(sink.failures.begin(), sink.failures.end());
    // 45 indices have i % 10 != 0; index 7 throws instead of mismatching.
    REQUIRE(sink.failures.size() == 45);
    CHECK(std::is_sorted(sink.failures.begin(), sink.failures.end()));
    CHECK(std::count_if(sink.failures.begin(), sink.failures.end(),
                        [](const Failure& f) { return f.what == "boom"; }) == 1);
    CHECK(verify::pair_key(5, 3) == "(000005,000003)");
}

TEST_CASE("the generation oracle agrees with a primitivity check", "[verify]")
{
    // S_4 acting on {1,2,3,4}: (1 2)(3 4) and (1 3)(2 4) are transitive but imprimitive.
    std::vector<Permutation> v4 = {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")};
    CHECK(verify::is_transitive(v4, 4));
    CHECK_FALSE(verify::is_primitive(v4, 4));
    CHECK(verify::is_primitive({parse_cycles(5, "(1 2 3 4 5)")}, 5));
    CHECK(verify::independent_generates({parse_cycles(4, "(1 2 3 4)")}, parse_cycles(4, "(1 2)")));
    CHECK_FALSE(verify::independent_generates({parse_cycles(4, "(1 2 3 4)")}, parse_cycles(4, "(1 3)")));
}
