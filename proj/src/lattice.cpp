#include "hahn/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hahn/errors.hpp"

namespace hahn {

long MultiIndex::total() const { return std::accumulate(e.begin(), e.end(), 0L); }

long MultiIndex::head_sum(int j) const {
    if (j < 0 || j > dim()) throw OutOfRangeError("head_sum: j out of range");
    return std::accumulate(e.begin(), e.begin() + j, 0L);
}

long MultiIndex::tail_sum(int j) const {
    if (j < 1 || j > dim() + 1) throw OutOfRangeError("tail_sum: j out of range");
    return std::accumulate(e.begin() + (j - 1), e.end(), 0L);
}

bool GradedLexMI::operator()(const MultiIndex& a, const MultiIndex& b) const {
    long ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

LatticeParams::LatticeParams(std::vector<int> ell_, int N_)
    : ell(std::move(ell_)), N(N_), d(static_cast<int>(ell.size()) - 1) {
    if (d < 1) throw OutOfRangeError("LatticeParams: need at least two ell entries");
    if (N < 1) throw OutOfRangeError("LatticeParams: N must be positive");
    for (int i = 0; i <= d; ++i) {
        if (ell[i] < 1) throw OutOfRangeError("LatticeParams: ell entries must be positive");
        if (ell[i] > N) throw OutOfRangeError("LatticeParams: requires ell_i <= N");
    }
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (ell[i] + ell[j] < N)
                throw OutOfRangeError("LatticeParams: requires ell_i + ell_j >= N");
}

long LatticeParams::ell_total() const { return std::accumulate(ell.begin(), ell.end(), 0L); }

long LatticeParams::ell_tail(int j) const {
    if (j < 1 || j > d + 2) throw OutOfRangeError("ell_tail: j out of range");
    return std::accumulate(ell.begin() + (j - 1), ell.end(), 0L);
}

int LatticeParams::ell_min() const { return *std::min_element(ell.begin(), ell.end()); }

long zhat_a(int j, const MultiIndex& nu, const LatticeParams& p) {
    if (j < 1 || j > p.d) throw OutOfRangeError("zhat_a: requires 1 <= j <= d");
    return p.ell_tail(j + 1) - 2 * nu.tail_sum(j + 1);
}

bool in_V(const MultiIndex& x, const LatticeParams& p) {
    if (x.dim() != p.d) throw DimensionError("in_V: dimension mismatch");
    for (int i = 0; i < p.d; ++i)
        if (x[i] < 0 || x[i] > p.ell[i]) return false;
    long t = x.total();
    return p.N - p.ell[p.d] <= t && t <= p.N;
}

bool in_CH(const MultiIndex& nu, const LatticeParams& p) {
    if (nu.dim() != p.d) throw DimensionError("in_CH: dimension mismatch");
    for (int i = 0; i < p.d; ++i)
        if (nu[i] < 0 || nu[i] > p.ell[i]) return false;
    return nu.total() <= p.N;
}

bool in_H(const MultiIndex& nu, const LatticeParams& p) {
    if (nu.dim() != p.d) throw DimensionError("in_H: dimension mismatch");
    for (int i = 0; i < p.d; ++i)
        if (nu[i] < 0) return false;
    long t = nu.total();
    if (t > p.N || t > p.ell_total() - p.N) return false;
    for (int j = 1; j <= p.d; ++j) {
        if (nu[j - 1] > p.ell[j - 1]) return false;
        if (nu[j - 1] > zhat_a(j, nu, p)) return false;
    }
    return true;
}

namespace {

// Enumerates the box prod [0, cap_i] filtered by pred, graded-lex sorted.
template <typename Pred>
std::vector<MultiIndex> enum_box(const std::vector<int>& caps, Pred pred) {
    std::vector<MultiIndex> out;
    MultiIndex cur = MultiIndex::zeros(static_cast<int>(caps.size()));
    // Odometer walk over the box.
    while (true) {
        if (pred(cur)) out.push_back(cur);
        int i = 0;
        while (i < cur.dim() && cur[i] == caps[i]) cur[i++] = 0;
        if (i == cur.dim()) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), GradedLexMI{});
    return out;
}

}  // namespace

std::vector<MultiIndex> enum_V(const LatticeParams& p) {
    std::vector<int> caps(p.ell.begin(), p.ell.begin() + p.d);
    for (int& c : caps) c = std::min(c, p.N);
    return enum_box(caps, [&](const MultiIndex& x) { return in_V(x, p); });
}

std::vector<MultiIndex> enum_CH(const LatticeParams& p) {
    std::vector<int> caps(p.ell.begin(), p.ell.begin() + p.d);
    return enum_box(caps, [&](const MultiIndex& nu) { return in_CH(nu, p); });
}

std::vector<MultiIndex> enum_H(const LatticeParams& p) {
    std::vector<int> caps(p.ell.begin(), p.ell.begin() + p.d);
    return enum_box(caps, [&](const MultiIndex& nu) { return in_H(nu, p); });
}

long card_V_formula(const LatticeParams& p) {
    Rational acc = binomial(p.N + p.d, p.d);
    for (int k = 0; k <= p.d; ++k) acc -= binomial(p.N - p.ell[k] + p.d - 1, p.d);
    return static_cast<long>(acc.get_num().get_si());
}

int height(int nu1, const LatticeParams& p) {
    if (p.d != 2) throw NotApplicableError("height: defined for d = 2 only");
    if (nu1 < 0 || nu1 > p.ell[0]) throw OutOfRangeError("height: nu1 out of range");
    long l1 = p.ell[0], l2 = p.ell[1], l3 = p.ell[2];
    long m = std::min({l2, l3, (l2 + l3 - nu1) / 2, l1 + l2 + l3 - p.N - nu1,
                       static_cast<long>(p.N) - nu1});
    return static_cast<int>(m + 1);
}

int height_piecewise(int nu1, const LatticeParams& p) {
    if (p.d != 2) throw NotApplicableError("height_piecewise: defined for d = 2 only");
    if (nu1 < 0 || nu1 > p.ell[0]) throw OutOfRangeError("height_piecewise: nu1 out of range");
    long l1 = p.ell[0], l2 = p.ell[1], l3 = p.ell[2];
    long L = l1 + l2 + l3;
    long gap = std::labs(l3 - l2);
    long corner = std::labs(2L * p.N - L);
    if (nu1 <= gap) return static_cast<int>(std::min(l2, l3) + 1);
    if (nu1 <= l1 - corner)
        return static_cast<int>(std::min(l2, l3) - (nu1 - gap + 1) / 2 + 1);
    if (L <= 2 * p.N) return static_cast<int>(L - p.N - nu1 + 1);
    return static_cast<int>(p.N - nu1 + 1);
}

}  // namespace hahn
