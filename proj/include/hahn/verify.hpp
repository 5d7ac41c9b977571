#pragma once

#include <string>
#include <vector>

#include "hahn/hahn1d.hpp"
#include "hahn/lattice.hpp"

namespace hahn {

struct CheckResult {
    std::string name;
    std::string status;  // pass | fail | undefined | skipped
    std::string detail;
};

/// Machine-readable outcome of one verification command.
struct RunReport {
    std::string command;
    std::string params;
    std::vector<CheckResult> checks;
    long elapsed_ms = 0;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    void note(const std::string& name, const std::string& status,
              const std::string& detail = "");
    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
    int count(const std::string& status) const;
    /// Timing is metadata; leave it out for byte-identical reruns.
    std::string to_json(bool include_elapsed = true) const;
};

/// 1D grid: all (l1, l2, N) with l1, l2 <= lmax, N <= nmax, l1 + l2 >= N.
std::vector<Params1D> grid_1d(int lmax = 8, int nmax = 10);
/// Multivariate grid: all valid ell_i <= lmax, N <= nmax for the given d.
std::vector<LatticeParams> grid_md(int d, int lmax, int nmax);
std::vector<LatticeParams> default_grid_d2();  // ell <= 6, N <= 8
std::vector<LatticeParams> default_grid_d3();  // ell <= 4, N <= 5

RunReport verify_ortho_1d(const std::vector<Params1D>& grid);
RunReport verify_factor(const std::vector<Params1D>& grid);
RunReport verify_genfun(const std::vector<Params1D>& grid);
RunReport verify_moments(int lmax = 6);
RunReport verify_cardinality(const std::vector<LatticeParams>& grid);
RunReport verify_ortho_md(const std::vector<LatticeParams>& grid);
RunReport verify_vanishing(const std::vector<LatticeParams>& grid);
RunReport verify_height(const std::vector<LatticeParams>& grid);
RunReport verify_frontier(const std::vector<LatticeParams>& grid);
RunReport verify_kernel(const std::vector<LatticeParams>& grid);
RunReport verify_poisson(int ellmax = 3);
RunReport verify_bispectral(const std::vector<LatticeParams>& grid);
RunReport verify_conjecture(int nmax = 4, int ellmax = 5);

}  // namespace hahn
