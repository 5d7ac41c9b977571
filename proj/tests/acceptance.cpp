// Acceptance suite: one pass/fail line per criterion, zero tolerance
// (every comparison is exact rational equality). Exit code 0 iff all pass.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hahn/bispectral.hpp"
#include "hahn/factorize.hpp"
#include "hahn/hahnmd.hpp"
#include "hahn/verify.hpp"

using namespace hahn;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::string suite_summary(const RunReport& rep) {
    std::ostringstream os;
    os << rep.count("pass") << " checks";
    if (rep.count("fail") > 0) os << ", " << rep.count("fail") << " FAILED";
    os << " (" << rep.elapsed_ms << " ms)";
    return os.str();
}

std::string first_failure(const RunReport& rep) {
    for (const auto& c : rep.checks)
        if (c.status == "fail") return c.name + ": " + c.detail;
    return "";
}

PolyQ x1() { return PolyQ::variable(2, 0); }
PolyQ x2() { return PolyQ::variable(2, 1); }
PolyQ c2(long v) { return PolyQ::constant(2, rat(v)); }
PolyQ ux() { return PolyQ::variable(1, 0); }
PolyQ uc(long v) { return PolyQ::constant(1, rat(v)); }

PolyQ printed_q3_3_5_12() {
    return ((ux() - uc(4)) * ((ux() * ux()).scaled(2) - ux().scaled(13) + uc(33)))
        .scaled(rat(-1, 132));
}

PolyQ printed_q5_6_7_16() {
    PolyQ a = uc(52) - ux().scaled(14) + ux() * ux();
    PolyQ b = uc(-480) + ux().scaled(159) - (ux() * ux()).scaled(20) + ux() * ux() * ux();
    return (a * b).scaled(rat(-1, 24960));
}

PolyQ printed_quartic_05() {
    return c2(840) - x1().scaled(638) - x2().scaled(910) + (x1() * x1()).scaled(179) +
           (x1() * x2()).scaled(480) + (x2() * x2()).scaled(375) -
           (x1() * x1() * x1()).scaled(22) - (x1() * x1() * x2()).scaled(85) -
           (x1() * x2() * x2()).scaled(120) - (x2() * x2() * x2()).scaled(70) +
           x1() * x1() * x1() * x1() + (x1() * x1() * x1() * x2()).scaled(5) +
           (x1() * x1() * x2() * x2()).scaled(10) + (x1() * x2() * x2() * x2()).scaled(10) +
           (x2() * x2() * x2() * x2()).scaled(5);
}

PolyQ printed_quadratic_33() {
    return c2(60) - x1().scaled(22) - x2().scaled(35) + (x1() * x1()).scaled(2) +
           (x1() * x2()).scaled(5) + (x2() * x2()).scaled(5);
}

void criterion_1() {
    RunReport rep = verify_ortho_1d(grid_1d(8, 10));
    report(1, "1D orthogonality with closed-form norms", rep.all_pass(),
           suite_summary(rep) + (rep.all_pass() ? "" : "; " + first_failure(rep)));
}

void criterion_2() {
    RunReport rep = verify_factor(grid_1d(8, 10));
    bool ok = rep.all_pass();
    std::string why;

    // Four reference decompositions, constants included.
    try {
        Params1D pa(6, 8, 12);
        Factor1D fa = factorize_thm(6, pa);
        ok = ok && fa.prefactor == rat(-1, 120) &&
             fa.linear_roots == std::vector<long>{4, 5, 6} &&
             fa.reduced == printed_q3_3_5_12() && fa.product() == hahn_sQ(6, pa);
        ok = ok && hahn_sQ_raw(3, 3, 5, 12) == printed_q3_3_5_12();

        Params1D pb(8, 9, 16);
        Factor1D fb = factorize_thm(7, pb);
        ok = ok && fb.prefactor == rat(1, 56) &&
             fb.linear_roots == std::vector<long>{7, 8} &&
             fb.reduced == printed_q5_6_7_16() && fb.product() == hahn_sQ(7, pb);
        ok = ok && hahn_sQ_raw(5, 6, 7, 16) == printed_q5_6_7_16();
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    report(2, "factorization identity over the grid + reference decompositions", ok,
           suite_summary(rep) + (ok ? "" : "; " + (why.empty() ? first_failure(rep) : why)));
}

void criterion_3() {
    RunReport rep = verify_genfun(grid_1d(8, 10));
    report(3, "generating functions (simplex and support forms, b constant)",
           rep.all_pass(), suite_summary(rep));
}

void criterion_4() {
    RunReport rep = verify_moments(6);
    report(4, "moment functional and G-orthogonality with sign(h_n) = (-1)^n",
           rep.all_pass(), suite_summary(rep));
}

void criterion_5() {
    RunReport rep2 = verify_cardinality(default_grid_d2());
    RunReport rep3 = verify_cardinality(default_grid_d3());
    bool example = enum_V(LatticeParams({6, 4, 4}, 7)).size() == 23 &&
                   enum_H(LatticeParams({6, 4, 4}, 7)).size() == 23 &&
                   card_V_formula(LatticeParams({6, 4, 4}, 7)) == 23;
    bool ok = rep2.all_pass() && rep3.all_pass() && example;
    report(5, "cardinality |V| = |H| = formula (d = 2 and d = 3), worked example = 23",
           ok, suite_summary(rep2) + " d2; " + suite_summary(rep3) + " d3");
}

void criterion_6() {
    RunReport ortho = verify_ortho_md(default_grid_d2());
    RunReport vanish = verify_vanishing(default_grid_d2());
    bool ok = ortho.all_pass() && vanish.all_pass();
    std::string why;

    LatticeParams p({6, 4, 4}, 7);
    PolyQ q05 = sQ_nu(MultiIndex(std::vector<int>{0, 5}), p).value();
    PolyQ q33 = sQ_nu(MultiIndex(std::vector<int>{3, 3}), p).value();
    PolyQ printed05 = (x1() - c2(3)) * printed_quartic_05();
    PolyQ printed33 = ((x1() - c2(4)) * (x1() - c2(3)) * (x1() - c2(2)) *
                       (x1() + x2().scaled(2) - c2(7)) * printed_quadratic_33())
                          .scaled(rat(-1, 48));
    if (q05 != printed05) {
        ok = false;
        why = "sQ_{0,5} != reference polynomial";
    }
    // The (3,3) reference form omits the leading prefactor
    // (-N+|nu^2|)_{nu1} = (-4)_3 = -24 of the product definition; the
    // content reproduces exactly up to that documented constant.
    if (q33 != printed33.scaled(rat(-24))) {
        ok = false;
        why = "sQ_{3,3} != (-24) * reference polynomial";
    }
    // Bezout: the quartic and quadratic factors share exactly 8 lattice
    // zeros in V's bounding box.
    int common = 0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 4; ++b)
            if (printed_quartic_05().eval({rat(a), rat(b)}) == 0 &&
                printed_quadratic_33().eval({rat(a), rat(b)}) == 0)
                ++common;
    if (common != 8) {
        ok = false;
        why = "common zero count != 8";
    }
    report(6, "multivariate orthogonality, zero-norm equivalence, reference polynomials", ok,
           suite_summary(ortho) + " ortho; " + suite_summary(vanish) + " vanishing" +
               (why.empty() ? "" : "; " + why));
}

void criterion_7() {
    RunReport rep = verify_height(default_grid_d2());
    report(7, "height function: min formula = piecewise form, sum = |H|",
           rep.all_pass(), suite_summary(rep));
}

void criterion_8() {
    RunReport rep = verify_frontier(default_grid_d2());
    report(8, "frontier structure: well-definedness iff, split closed forms, sR forms",
           rep.all_pass(),
           suite_summary(rep) + (rep.all_pass() ? "" : "; " + first_failure(rep)));
}

void criterion_9() {
    RunReport kernel = verify_kernel(default_grid_d2());
    RunReport poisson = verify_poisson(3);
    bool ok = kernel.all_pass() && poisson.all_pass();
    report(9, "reproducing kernels (closed = direct, reproducing) and triangle Poisson",
           ok, suite_summary(kernel) + " kernel; " + suite_summary(poisson) + " poisson");
}

void criterion_10() {
    RunReport d2 = verify_bispectral(default_grid_d2());
    RunReport d3 = verify_bispectral({LatticeParams({3, 3, 3, 3}, 4)});
    bool ok = d2.all_pass() && d3.all_pass();
    // Exclusions are carried in the check details; count them for the log.
    int excl = 0;
    for (const auto& c : d2.checks)
        if (c.status == "pass" && c.detail.find("exclusions") != std::string::npos &&
            c.detail.substr(0, 2) != "0 ")
            ++excl;
    std::ostringstream os;
    os << suite_summary(d2) << " d2 (" << excl
       << " parameter sets with logged degenerate-index exclusions); "
       << suite_summary(d3) << " d3 instance";
    report(10, "bispectral equations, coefficient tables, boundary soundness", ok,
           os.str() + (ok ? "" : "; " + first_failure(d2) + first_failure(d3)));
}

void criterion_11() {
    RunReport rep = verify_conjecture(4, 5);
    // Assertions only for the equal-parameter odd-degree structure; all other
    // outcomes are recorded, never claimed as proof.
    int recorded = rep.count("skipped");
    report(11, "conjecture evidence (outcomes recorded, not proof)", rep.all_pass(),
           suite_summary(rep) + "; " + std::to_string(recorded) +
               " recorded irreducibility outcomes");
}

}  // namespace

int main() {
    std::cout << "acceptance suite: exact-arithmetic verification, tolerance = equality\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures == 0) {
        std::cout << "all 11 criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria FAILED" << std::endl;
    return 1;
}
