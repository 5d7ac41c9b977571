// Command-line surface: construction (eval), enumeration (domain) and
// verification (verify) with machine-readable output. Exit codes: 0 all
// checks pass, 1 at least one failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "hahn/bispectral.hpp"
#include "hahn/errors.hpp"
#include "hahn/factorize.hpp"
#include "hahn/hahnmd.hpp"
#include "hahn/json_io.hpp"
#include "hahn/verify.hpp"

namespace {

using namespace hahn;

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int run_eval(const std::string& ell_csv, int N, int n1d, const std::string& nu_csv,
             const std::string& normalization, bool values) {
    std::vector<int> ell = parse_ints(ell_csv);
    if (ell.size() < 2) throw CLI::ValidationError("--ell needs at least two entries");
    int d = static_cast<int>(ell.size()) - 1;

    if (d == 1 && nu_csv.empty()) {
        // The raw series also covers reduced polynomials whose parameters
        // fall outside ell1 + ell2 >= N (they appear in the factorizations).
        PolyQ q = hahn_sQ_raw(n1d, ell[0], ell[1], N);
        if (values) {
            Params1D p(ell[0], ell[1], N);
            Support1D s = support(p);
            std::cout << "x,value\n";
            for (int x = s.lo; x <= s.hi; ++x)
                std::cout << x << "," << to_string(q.eval({rat(x)})) << "\n";
        } else {
            std::cout << poly_to_json(q).dump(2) << "\n";
        }
        return 0;
    }

    LatticeParams p(ell, N);
    MultiIndex nu(parse_ints(nu_csv));
    if (nu.dim() != d) throw CLI::ValidationError("--nu must have d entries");
    Eval<PolyQ> q = sQ_nu(nu, p);
    if (!q.defined()) {
        std::cerr << "undefined: " << q.reason() << "\n";
        return 1;
    }
    PolyQ poly = q.value();
    if (normalization == "hat") {
        Eval<PolyQ> h = hat_sQ(nu, p);
        if (!h.defined()) throw CLI::ValidationError("hat normalization: " + h.reason());
        poly = h.value();
    } else if (normalization == "h") {
        long t = nu.total();
        Rational c = rat(t % 2 == 0 ? 1 : -1) / pochhammer(rat(-p.N), t);
        for (int j = 1; j <= p.d; ++j) {
            Rational den = pochhammer(rat(-zhat_a(j, nu, p)), nu[j - 1]);
            if (den == 0) throw CLI::ValidationError("H normalization needs nu_j <= za_j");
            c *= pochhammer(rat(-p.ell[j - 1]), nu[j - 1]) / den;
        }
        poly = poly.scaled(c);
    } else if (normalization != "q") {
        throw CLI::ValidationError("--normalization must be q, hat or h");
    }
    if (values) {
        std::cout << "x,value\n";
        for (const MultiIndex& x : enum_V(p)) {
            std::vector<Rational> pt;
            for (int i = 0; i < d; ++i) pt.push_back(rat(x[i]));
            for (int i = 0; i < d; ++i) std::cout << x[i] << (i + 1 < d ? "," : ",");
            std::cout << to_string(poly.eval(pt)) << "\n";
        }
    } else {
        std::cout << poly_to_json(poly).dump(2) << "\n";
    }
    return 0;
}

int run_domain(const std::string& set, const std::string& ell_csv, int N,
               const std::string& nu_csv, int kernel_n) {
    LatticeParams p(parse_ints(ell_csv), N);
    auto emit = [&](const std::vector<MultiIndex>& pts) {
        for (const MultiIndex& x : pts) {
            for (int i = 0; i < x.dim(); ++i)
                std::cout << x[i] << (i + 1 < x.dim() ? "," : "\n");
        }
    };
    if (set == "V") emit(enum_V(p));
    else if (set == "H") emit(enum_H(p));
    else if (set == "CH") emit(enum_CH(p));
    else if (set == "zeros") {
        MultiIndex nu(parse_ints(nu_csv));
        Eval<PolyQ> q = sQ_nu(nu, p);
        if (!q.defined()) {
            std::cerr << "undefined: " << q.reason() << "\n";
            return 1;
        }
        // Lattice zeros within V's bounding box.
        std::vector<MultiIndex> zeros;
        std::vector<int> caps(p.d);
        for (int i = 0; i < p.d; ++i) caps[i] = std::min(p.ell[i], p.N);
        MultiIndex cur = MultiIndex::zeros(p.d);
        while (true) {
            std::vector<Rational> pt;
            for (int i = 0; i < p.d; ++i) pt.push_back(rat(cur[i]));
            if (q.value().eval(pt) == 0) zeros.push_back(cur);
            int i = 0;
            while (i < p.d && cur[i] == caps[i]) cur[i++] = 0;
            if (i == p.d) break;
            ++cur[i];
        }
        std::sort(zeros.begin(), zeros.end(), GradedLexMI{});
        emit(zeros);
    } else if (set == "kernel") {
        HahnBasis basis(p);
        if (kernel_n < 0 || kernel_n > max_H_degree(p))
            throw CLI::ValidationError("--kernel-n outside the basis degrees");
        for (size_t i = 0; i < basis.V.size(); ++i) {
            for (size_t j = 0; j < basis.V.size(); ++j)
                std::cout << to_string(kernel_P_direct(kernel_n, basis.V[i], basis.V[j],
                                                       basis))
                          << (j + 1 < basis.V.size() ? "," : "\n");
        }
    } else {
        throw CLI::ValidationError("--set must be V, H, CH, zeros or kernel");
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& ell_csv, int N,
               const std::string& grid_name, int cn, int cl1, int cl2, bool timing) {
    std::vector<LatticeParams> grid;
    if (!ell_csv.empty()) {
        grid.push_back(LatticeParams(parse_ints(ell_csv), N));
    } else if (grid_name == "d3-small") {
        grid = default_grid_d3();
    } else {
        grid = default_grid_d2();
    }

    RunReport rep;
    if (suite == "ortho") {
        if (!ell_csv.empty() && parse_ints(ell_csv).size() == 2) {
            auto e = parse_ints(ell_csv);
            rep = verify_ortho_1d({Params1D(e[0], e[1], N)});
        } else if (ell_csv.empty() && grid_name == "1d") {
            rep = verify_ortho_1d(grid_1d());
        } else {
            rep = verify_ortho_md(grid);
        }
    } else if (suite == "factor") {
        std::vector<Params1D> g;
        if (!ell_csv.empty()) {
            auto e = parse_ints(ell_csv);
            if (e.size() != 2) throw CLI::ValidationError("factor suite is 1D: --ell l1,l2");
            g.emplace_back(e[0], e[1], N);
        } else {
            g = grid_1d();
        }
        rep = verify_factor(g);
    } else if (suite == "genfun") {
        std::vector<Params1D> g;
        if (!ell_csv.empty()) {
            auto e = parse_ints(ell_csv);
            if (e.size() != 2) throw CLI::ValidationError("genfun suite is 1D: --ell l1,l2");
            g.emplace_back(e[0], e[1], N);
        } else {
            g = grid_1d();
        }
        rep = verify_genfun(g);
    } else if (suite == "moments") {
        rep = verify_moments(6);
    } else if (suite == "cardinality") {
        rep = verify_cardinality(grid);
    } else if (suite == "vanishing") {
        rep = verify_vanishing(grid);
    } else if (suite == "kernel") {
        rep = verify_kernel(grid);
    } else if (suite == "poisson") {
        rep = verify_poisson(3);
    } else if (suite == "bispectral") {
        rep = verify_bispectral(grid);
    } else if (suite == "conjecture") {
        if (cn > 0 && cl1 > 0 && cl2 > 0) {
            rep = verify_conjecture(cn, std::max(cl1, cl2));
        } else {
            rep = verify_conjecture();
        }
    } else {
        throw CLI::ValidationError("unknown suite: " + suite);
    }
    std::cout << rep.to_json(timing) << "\n";
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Hahn polynomials with negative integer parameters on polyhedral lattice "
        "domains: exact construction, enumeration and identity verification.\n"
        "All arithmetic is exact rational; verification tolerance is literal "
        "equality. Univariate factorization is desk scale (degree <= 12), the "
        "bivariate irreducibility test total degree <= 8."};
    app.require_subcommand(1);

    std::string ell, nu, normalization = "q", set = "V", suite, grid;
    int N = 0, n = 0, kernel_n = 0, cn = 0, cl1 = 0, cl2 = 0, dflag = 0;
    bool values = false, timing = false;

    CLI::App* eval = app.add_subcommand("eval", "print a polynomial (JSON) or its values on V");
    eval->add_option("--d", dflag, "dimension (optional; inferred from --ell)");
    eval->add_option("--ell", ell, "comma-separated ell_1..ell_{d+1}")->required();
    eval->add_option("--N", N, "top degree N")->required();
    eval->add_option("--n", n, "1D degree n");
    eval->add_option("--nu", nu, "multivariate index nu_1..nu_d");
    eval->add_option("--normalization", normalization, "q | hat | h (default q)");
    eval->add_flag("--values", values, "emit values on V as CSV instead of JSON");

    CLI::App* domain = app.add_subcommand("domain", "emit lattice sets as CSV");
    domain->add_option("--set", set, "V | H | CH | zeros | kernel")->required();
    domain->add_option("--ell", ell, "comma-separated ell_1..ell_{d+1}")->required();
    domain->add_option("--N", N, "top degree N")->required();
    domain->add_option("--nu", nu, "index for --set zeros");
    domain->add_option("--kernel-n", kernel_n, "degree for --set kernel");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite, emit a JSON report");
    verify->add_option("--d", dflag, "dimension (optional; inferred from --ell)");
    verify
        ->add_option("suite", suite,
                     "ortho | factor | genfun | moments | kernel | poisson | "
                     "bispectral | cardinality | vanishing | conjecture")
        ->required();
    verify->add_option("--ell", ell, "restrict to one parameter set");
    verify->add_option("--N", N, "top degree N for --ell");
    verify->add_option("--grid", grid, "d2-small (default) | d3-small | 1d");
    verify->add_option("--n", cn, "conjecture: max degree");
    verify->add_option("--ell1", cl1, "conjecture: ell1 bound");
    verify->add_option("--ell2", cl2, "conjecture: ell2 bound");
    verify->add_flag("--timing", timing, "include elapsed_ms (breaks byte-identical reruns)");

    try {
        app.parse(argc, argv);
        if (dflag > 0 && !ell.empty() &&
            static_cast<int>(parse_ints(ell).size()) != dflag + 1) {
            std::cerr << "usage error: --d disagrees with the length of --ell\n";
            return 2;
        }
        if (eval->parsed()) return run_eval(ell, N, n, nu, normalization, values);
        if (domain->parsed()) return run_domain(set, ell, N, nu, kernel_n);
        if (verify->parsed()) return run_verify(suite, ell, N, grid, cn, cl1, cl2, timing);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const hahn::OutOfRangeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
