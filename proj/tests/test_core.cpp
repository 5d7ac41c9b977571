#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hahn/combinatorics.hpp"
#include "hahn/polynomial.hpp"

using namespace hahn;

TEST_CASE("rational canonical form") {
    Rational a = rat(2, 4);
    CHECK(a.get_num() == 1);
    CHECK(a.get_den() == 2);
    Rational b = rat(3, -6);
    CHECK(b.get_num() == -1);
    CHECK(b.get_den() == 2);
    // exactness: (a + b) - b == a
    Rational x = rat(22, 7), y = rat(-355, 113);
    CHECK((x + y) - y == x);
}

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(rat(5), 0) == 1);
    CHECK(pochhammer(rat(-3), 5) == 0);
    CHECK(pochhammer(rat(-3), 2) == 6);
    CHECK(pochhammer(rat(1, 2), 3) == rat(15, 8));  // (1/2)(3/2)(5/2)
    CHECK(pochhammer_is_zero(-3, 5));
    CHECK(!pochhammer_is_zero(-3, 3));
    CHECK(!pochhammer_is_zero(2, 5));
}

TEST_CASE("pochhammer splitting identity") {
    // (a)_{m+k} = (a)_m (a+m)_k over rationals
    for (long num = -9; num <= 9; num += 3) {
        Rational a = rat(num, 4);
        for (long m = 0; m <= 6; ++m)
            for (long k = 0; k <= 6; ++k)
                CHECK(pochhammer(a, m + k) == pochhammer(a, m) * pochhammer(a + rat(m), k));
    }
}

TEST_CASE("pochhammer of negative integer equals signed factorial ratio") {
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n <= m; ++n) {
            Rational want = rat((n % 2 == 0) ? 1 : -1) * Rational(factorial(m)) /
                            Rational(factorial(m - n));
            CHECK(pochhammer(rat(-m), n) == want);
        }
}

TEST_CASE("binomial") {
    CHECK(binomial(9, 2) == 36);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) ==
                  pochhammer(rat(n - k + 1), k) / Rational(factorial(k)));
}

TEST_CASE("polynomial ring arithmetic and canonical form") {
    PolyQ x = PolyQ::variable(1, 0);
    PolyQ p = (x - PolyQ::constant(1, 4)) *
              (x * x * PolyQ::constant(1, 2) - x.scaled(13) + PolyQ::constant(1, 33));
    PolyQ want(1);
    want.add_term({3}, rat(2));
    want.add_term({2}, rat(-21));
    want.add_term({1}, rat(85));
    want.add_term({0}, rat(-132));
    CHECK(p == want);

    CHECK(p + PolyQ(1) == p);
    CHECK(p.scaled(0).is_zero());
    CHECK(p.scaled(0).terms().empty());
}

TEST_CASE("polynomial evaluation") {
    // -(1/132)(x-4)(2x^2-13x+33) at 0 is 1
    PolyQ x = PolyQ::variable(1, 0);
    PolyQ p = ((x - PolyQ::constant(1, 4)) *
               (x * x * PolyQ::constant(1, 2) - x.scaled(13) + PolyQ::constant(1, 33)))
                  .scaled(rat(-1, 132));
    CHECK(p.eval({rat(0)}) == 1);
    CHECK(PolyQ::constant(3, 1).eval({rat(5), rat(-2), rat(7)}) == 1);
    PolyQ q = PolyQ::variable(2, 0) + PolyQ::variable(2, 1).scaled(2);
    CHECK(q.eval({rat(3), rat(2)}) == 7);
}

TEST_CASE("substitution and derivative") {
    PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
    PolyQ p = x * x * y + y.scaled(3);
    CHECK(p.substitute(0, rat(2)) == y.scaled(7));
    CHECK(p.derivative(1) == x * x + PolyQ::constant(2, 3));
    CHECK(p.substitute(1, x) == x * x * x + x.scaled(3));
}

TEST_CASE("exact division") {
    PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
    PolyQ f = (x + y) * (x - y.scaled(2)) * (x * y + PolyQ::constant(2, 1));
    auto q = PolyQ::divide_exact(f, x + y);
    REQUIRE(q.has_value());
    CHECK(*q == (x - y.scaled(2)) * (x * y + PolyQ::constant(2, 1)));
    CHECK(!PolyQ::divide_exact(f, x + PolyQ::constant(2, 1)).has_value());
}

TEST_CASE("poch_poly") {
    // (-x)_3 = -x(1-x)(2-x)... = -x(-x+1)(-x+2)
    PolyQ x = PolyQ::variable(1, 0);
    PolyQ p = neg_var_poch(1, 0, 3);
    for (long v = -3; v <= 5; ++v)
        CHECK(p.eval({rat(v)}) == pochhammer(rat(-v), 3));
}
