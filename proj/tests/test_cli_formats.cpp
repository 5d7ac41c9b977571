#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hahn/json_io.hpp"
#include "hahn/verify.hpp"

using namespace hahn;

TEST_CASE("PolyQ JSON shape: graded-lex order and decimal strings") {
    PolyQ p(2);
    p.add_term({0, 0}, rat(1));
    p.add_term({2, 1}, rat(-7, 3));
    p.add_term({1, 0}, rat(5));
    auto j = poly_to_json(p);
    CHECK(j["nvars"] == 2);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exp"] == nlohmann::json({0, 0}));
    CHECK(j["terms"][1]["exp"] == nlohmann::json({1, 0}));
    CHECK(j["terms"][2]["exp"] == nlohmann::json({2, 1}));
    CHECK(j["terms"][2]["num"] == "-7");
    CHECK(j["terms"][2]["den"] == "3");
}

TEST_CASE("PolyQ JSON round trip over random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int nv = 1 + static_cast<int>(rng() % 3);
        PolyQ p(nv);
        int terms = static_cast<int>(rng() % 8);
        for (int t = 0; t < terms; ++t) {
            Exponents e(nv);
            for (int i = 0; i < nv; ++i) e[i] = static_cast<int>(rng() % 5);
            p.add_term(e, rat(static_cast<long>(rng() % 41) - 20,
                              1 + static_cast<long>(rng() % 9)));
        }
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
}

TEST_CASE("JSON serialization is deterministic") {
    PolyQ p(2);
    p.add_term({1, 2}, rat(22, 7));
    p.add_term({0, 1}, rat(-3));
    CHECK(poly_to_json(p).dump() == poly_to_json(p).dump());
}

TEST_CASE("RunReport exit-code contract and JSON fields") {
    RunReport rep;
    rep.command = "verify demo";
    rep.add("a", true);
    rep.note("b", "skipped", "observation");
    CHECK(rep.all_pass());
    CHECK(rep.exit_code() == 0);
    rep.add("c", false, "boom");
    CHECK(!rep.all_pass());
    CHECK(rep.exit_code() == 1);
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["command"] == "verify demo");
    CHECK(j["checks"].size() == 3);
    CHECK(j["pass"] == 1);
    CHECK(j["fail"] == 1);
    CHECK(j["checks"][2]["detail"] == "boom");
}

TEST_CASE("grids satisfy their constraints") {
    for (const Params1D& p : grid_1d(4, 5)) CHECK(p.ell1 + p.ell2 >= p.N);
    for (const LatticeParams& p : grid_md(2, 4, 5)) {
        CHECK(p.d == 2);
        for (int i = 0; i <= 2; ++i) {
            CHECK(p.ell[i] <= p.N);
            for (int j = i + 1; j <= 2; ++j) CHECK(p.ell[i] + p.ell[j] >= p.N);
        }
    }
}
