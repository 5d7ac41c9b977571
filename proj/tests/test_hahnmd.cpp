#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hahn/errors.hpp"
#include "hahn/hahnmd.hpp"

using namespace hahn;

namespace {

const LatticeParams& ex() {
    static LatticeParams p({6, 4, 4}, 7);
    return p;
}

MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

PolyQ x1() { return PolyQ::variable(2, 0); }
PolyQ x2() { return PolyQ::variable(2, 1); }
PolyQ c2(long v) { return PolyQ::constant(2, rat(v)); }

// Reference polynomials for the two vanishing indices of
// ell = (6,4,4), N = 7.
PolyQ printed_05() {
    PolyQ q = c2(840) - x1().scaled(638) - x2().scaled(910) + (x1() * x1()).scaled(179) +
              (x1() * x2()).scaled(480) + (x2() * x2()).scaled(375) -
              (x1() * x1() * x1()).scaled(22) - (x1() * x1() * x2()).scaled(85) -
              (x1() * x2() * x2()).scaled(120) - (x2() * x2() * x2()).scaled(70) +
              x1() * x1() * x1() * x1() + (x1() * x1() * x1() * x2()).scaled(5) +
              (x1() * x1() * x2() * x2()).scaled(10) +
              (x1() * x2() * x2() * x2()).scaled(10) +
              (x2() * x2() * x2() * x2()).scaled(5);
    return (x1() - c2(3)) * q;
}

PolyQ printed_33_quadratic() {
    return c2(60) - x1().scaled(22) - x2().scaled(35) + (x1() * x1()).scaled(2) +
           (x1() * x2()).scaled(5) + (x2() * x2()).scaled(5);
}

PolyQ printed_33() {
    return ((x1() - c2(4)) * (x1() - c2(3)) * (x1() - c2(2)) *
            (x1() + x2().scaled(2) - c2(7)) * printed_33_quadratic())
        .scaled(rat(-1, 48));
}

Rational eval_at(const PolyQ& q, const MultiIndex& x) {
    std::vector<Rational> pt;
    for (int i = 0; i < x.dim(); ++i) pt.push_back(rat(x[i]));
    return q.eval(pt);
}

}  // namespace

TEST_CASE("sQ_nu: trivial index and the reference polynomials") {
    CHECK(sQ_nu(mi({0, 0}), ex()).value() == PolyQ::constant(2, 1));
    CHECK(sQ_nu(mi({0, 5}), ex()).value() == printed_05());
    // The (3,3) reference form omits the leading product prefactor
    // (-N+|nu^2|)_{nu_1} = (-4)_3 = -24; the product definition carries it.
    CHECK(sQ_nu(mi({3, 3}), ex()).value() == printed_33().scaled(rat(-24)));
    CHECK(sQ_nu(mi({0, 5}), ex()).value().total_degree() == 5);
    CHECK(sQ_nu(mi({3, 3}), ex()).value().total_degree() == 6);
}

TEST_CASE("weight: normalization, both product forms, d = 1 reduction") {
    Rational total = 0;
    for (const MultiIndex& x : enum_V(ex())) {
        CHECK(weight_H_md(x, ex()) == weight_H_md_poch(x, ex()));
        total += weight_H_md(x, ex());
    }
    CHECK(total == 1);
    CHECK(weight_H_md(mi({0, 0}), ex()) == 0);  // |x| = 0 < N - ell3

    LatticeParams p1({6, 8}, 12);
    Params1D q1(6, 8, 12);
    for (int v = 0; v <= 12; ++v)
        CHECK(weight_H_md(MultiIndex(std::vector<int>{v}), p1) == weight_H(v, q1));
}

TEST_CASE("norms: trivial index, zero on the vanishing set, brute force on H") {
    CHECK(norm_B_nu(mi({0, 0}), ex()).value() == 1);
    CHECK(norm_B_nu(mi({0, 5}), ex()).value() == 0);
    CHECK(norm_B_nu(mi({3, 3}), ex()).value() == 0);

    // Brute-force Gram value over the 23 points for nu = (1,1).
    PolyQ q = sQ_nu(mi({1, 1}), ex()).value();
    Rational ip = 0;
    for (const MultiIndex& x : enum_V(ex())) {
        Rational v = eval_at(q, x);
        ip += v * v * weight_H_md(x, ex());
    }
    CHECK(ip == norm_B_nu(mi({1, 1}), ex()).value());
}

TEST_CASE("d = 1 reduction of the product definition") {
    LatticeParams p1({6, 8}, 12);
    Params1D q1(6, 8, 12);
    for (int n = 0; n <= support(q1).deg_bound; ++n) {
        MultiIndex nu(std::vector<int>{n});
        PolyQ md = sQ_nu(nu, p1).value();
        PolyQ oned = hahn_sQ(n, q1);
        Rational pre = pochhammer(rat(-12), n);
        CHECK(md == oned.scaled(pre));
        CHECK(norm_B_nu(nu, p1).value() == pre * pre * norm_B(n, q1));
        CHECK(hat_sQ(nu, p1).value() == oned);
    }
}

TEST_CASE("vanishing on V for the indices outside H") {
    CHECK(vanishing_check(mi({0, 5}), ex()));
    CHECK(vanishing_check(mi({3, 3}), ex()));
    CHECK_THROWS_AS(vanishing_check(mi({1, 1}), ex()), NotApplicableError);

    for (const MultiIndex& nu : enum_CH(ex())) {
        if (in_H(nu, ex())) continue;
        CHECK(vanishing_check(nu, ex()));
        CHECK(norm_B_nu(nu, ex()).value() == 0);
    }
}

TEST_CASE("the two vanishing-set factors meet in exactly 8 lattice points") {
    // Quartic factor of sQ_{0,5} and quadratic factor of sQ_{3,3}, counted on
    // V's bounding box [0,6] x [0,4].
    PolyQ quartic = *PolyQ::divide_exact(printed_05(), x1() - c2(3));
    PolyQ quadratic = printed_33_quadratic();
    int common = 0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 4; ++b) {
            MultiIndex x(std::vector<int>{a, b});
            if (eval_at(quartic, x) == 0 && eval_at(quadratic, x) == 0) ++common;
        }
    CHECK(common == 8);
}

TEST_CASE("sR: the equal-parameter closed forms and the quartic factor") {
    // sR_5 = (x1 - 3) sR_4 for ell2 = ell3 = 4, N = 7.
    Eval<PolyQ> r4 = sR(4, 4, 4, 7);
    Eval<PolyQ> r5 = sR(5, 4, 4, 7);
    REQUIRE(r4.defined());
    REQUIRE(r5.defined());
    CHECK(r5.value() == (x1() - c2(3)) * r4.value());

    // sR_4 is the quartic factor of sQ_{0,5} up to a rational constant.
    PolyQ quartic = *PolyQ::divide_exact(printed_05(), x1() - c2(3));
    auto ratio = PolyQ::divide_exact(r4.value(), quartic);
    REQUIRE(ratio.has_value());
    CHECK(ratio->total_degree() == 0);

    // Genuine pole: nu2 = ell2 + 1 with ell3 > ell2.
    CHECK(!sR(3, 2, 4, 7).defined());
    CHECK(sR(3, 4, 2, 7).defined());
    CHECK_THROWS_AS(sR(6, 4, 4, 7), OutOfRangeError);
}

TEST_CASE("frontier classification on the worked example") {
    // nu1 = 0: nu2 = 5 = ell2 + 1 with ell2 = ell3 (the limiting case that
    // carries a value).
    FrontierReport r0 = d2_frontier_classify(0, ex());
    CHECK(r0.nu2 == 5);
    CHECK(!r0.direct_undefined);
    CHECK(!r0.predicted_undefined);

    // nu1 = 1: nu2 = 4 = ell2; the sR factor matches the closed form
    // ((-N+x1+x2)_{l2+1} - (-1)^{l2+1} (-x2)_{l2+1}) / (-N+l2+x1).
    FrontierReport r1 = d2_frontier_classify(1, ex());
    CHECK(r1.nu2 == 4);
    Eval<PolyQ> rl = sR(4, 4, 4, 7);
    // (-1)^{l2+1} = -1 here, so the second Pochhammer enters with a plus.
    PolyQ num = poch_poly(c2(-7) + x1() + x2(), 5) + poch_poly(-x2(), 5);
    CHECK(rl.value() * (c2(-3) + x1()) == num);

    // nu1 = 3: nu2 = 3, the (3,3) case; first factor splits (A form).
    FrontierReport r3 = d2_frontier_classify(3, ex());
    CHECK(r3.nu2 == 3);
    CHECK(r3.kind == FrontierKind::Splits);
    CHECK(r3.split == SplitForm::A);
    CHECK(r3.split_matches);
    REQUIRE(r3.factor1.has_value());
    PolyQ want = ((PolyQ::variable(1, 0) - PolyQ::constant(1, 2)) *
                  (PolyQ::variable(1, 0) - PolyQ::constant(1, 3)) *
                  (PolyQ::variable(1, 0) - PolyQ::constant(1, 4)))
                     .scaled(rat(-1, 24));
    CHECK(*r3.factor1 == want);
}

TEST_CASE("frontier classification: undefined ranges") {
    // ell3 > ell2 with small nu1: the sR pole.
    LatticeParams p({5, 2, 4}, 6);
    for (int nu1 = 0; nu1 <= 2; ++nu1) {
        FrontierReport r = d2_frontier_classify(nu1, p);
        CHECK(r.direct_undefined);
        CHECK(r.predicted_undefined);
    }
    // |ell| > 2N with nu1 large: the first-factor pole.
    LatticeParams q({4, 4, 4}, 5);
    FrontierReport r = d2_frontier_classify(4, q);
    CHECK(r.direct_undefined);
    CHECK(r.predicted_undefined);
}

TEST_CASE("elementary kernel building block") {
    MultiIndex x = mi({4, 1}), y = mi({2, 3});
    CHECK(elementary_E(0, x, y, ex()) == 1);
    for (int k = 0; k <= 4; ++k)
        CHECK(elementary_E(k, x, y, ex()) == elementary_E(k, y, x, ex()));
    for (int k = 1; k <= 4; ++k) {
        Rational v = elementary_E(k, x, y, ex());
        CHECK(sign(v) == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("reproducing kernel: direct sum equals closed form") {
    HahnBasis basis(ex());
    MultiIndex x = mi({4, 1}), y = mi({2, 3});
    CHECK(kernel_P_direct(0, x, y, basis) == 1);
    for (int n = 0; n <= ex().ell_min(); ++n)
        CHECK(kernel_P_direct(n, x, y, basis) == kernel_P_closed(n, x, y, ex()));
    CHECK_THROWS_AS(kernel_P_closed(5, x, y, ex()), NotApplicableError);

    // Reproducing property for one basis element.
    MultiIndex mu = mi({2, 1});
    const PolyQ q = sQ_nu(mu, ex()).value();
    for (const MultiIndex& xx : basis.V) {
        Rational acc = 0;
        for (size_t j = 0; j < basis.V.size(); ++j)
            acc += kernel_P_direct(3, xx, basis.V[j], basis) *
                   eval_at(q, basis.V[j]) * basis.weight[j];
        CHECK(acc == eval_at(q, xx));
    }
}

TEST_CASE("Poisson kernel at r = 0 and the triangle closed form") {
    HahnBasis basis(ex());
    CHECK(poisson_Phi(0, mi({4, 1}), mi({2, 3}), basis) == 1);

    int ell = 2;
    LatticeParams tri({ell, ell, ell}, 2 * ell);
    HahnBasis tb(tri);
    MultiIndex y = mi({0, ell});
    for (const MultiIndex& x : tb.V) {
        for (int n = 0; n <= max_H_degree(tri); ++n) {
            Rational direct = kernel_P_direct(n, x, y, tb);
            Rational want = 0;
            if (n <= ell) {
                Rational cst = rat(n % 2 == 0 ? 1 : -1) *
                               pochhammer(rat(-3 * ell - 1), n) *
                               pochhammer(rat(-3 * ell), 2 * n) /
                               (Rational(factorial(n)) * pochhammer(rat(-3 * ell - 1), 2 * n));
                want = cst * hahn_sQ_raw(n, ell, 2 * ell, 2 * ell).eval({rat(x[0])});
            }
            CHECK(direct == want);
        }
        // x2-independence at fixed x1.
        for (const MultiIndex& xx : tb.V)
            if (xx[0] == x[0])
                CHECK(poisson_Phi(rat(1, 3), x, y, tb) == poisson_Phi(rat(1, 3), xx, y, tb));
    }
}

TEST_CASE("generating function coefficients reproduce the sH normalization") {
    for (auto nuv : {std::vector<int>{0, 0}, {1, 0}, {1, 1}}) {
        MultiIndex nu(nuv);
        auto coeffs = genfun_md(nu, ex());
        CHECK(coeffs.size() == 36);  // compositions of 7 into 3 parts
        for (const auto& [alpha, c] : coeffs) {
            if (nu.total() == 0) CHECK(c == 1);
            CHECK(c == sH_nu_at(nu, alpha, ex()));
        }
    }
    CHECK_THROWS_AS(genfun_md(mi({0, 5}), ex()), OutOfRangeError);
}

TEST_CASE("orthogonality of the full basis on the worked example") {
    HahnBasis basis(ex());
    REQUIRE(basis.H.size() == 23);
    REQUIRE(basis.V.size() == 23);
    for (size_t a = 0; a < basis.H.size(); ++a)
        for (size_t b = a; b < basis.H.size(); ++b) {
            Rational ip = 0;
            const auto& va = basis.value.at(basis.H[a]);
            const auto& vb = basis.value.at(basis.H[b]);
            for (size_t i = 0; i < basis.V.size(); ++i)
                ip += va[i] * vb[i] * basis.weight[i];
            if (a == b) {
                CHECK(ip == basis.norm.at(basis.H[a]));
                CHECK(sign(ip) > 0);
            } else {
                CHECK(ip == 0);
            }
        }
}
