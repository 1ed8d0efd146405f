#ifndef SREES_SCROLL_HPP
#define SREES_SCROLL_HPP

#include <string>
#include <vector>

#include "srees/poly.hpp"
#include "srees/presentation.hpp"

namespace srees {

struct ScrollError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scroll data attached to a canonical presentation: the 2 x (m-1) matrix psi
// assembled from generic scroll blocks plus the final [y; x] column, the
// minor ideal H = I_2(psi), and the prime K spanned by the top row.
//
// Block variables: T_{1,j} = T_j for 1 <= j <= sigma_1 + 1, and (rho = 2)
// T_{2,j} = T_{sigma_1 + 1 + j}.  The last block has T_{ell,1} = y and
// T_{ell,2} = x with sigma_ell = 1.
struct ScrollStructure {
    PolyRing ring;
    int m = 0, n = 0;
    int rho = 1, ell = 2;
    std::vector<int> sigma;  // sigma_1 [, sigma_2]

    std::vector<std::vector<BiPoly>> psi;  // 2 x (m-1)
    std::vector<BiPoly> h_minors;          // C(m-1, 2) minors
    std::vector<BiPoly> k_gens;            // top row of psi

    int sigma_of(int i) const { return i <= rho ? sigma[i - 1] : 1; }
    // ambient variable index of T_{i,j} (x/y for the last block)
    int tvar(int i, int j) const;
    BiPoly tvar_poly(int i, int j) const { return BiPoly::variable(ring, tvar(i, j)); }
};

ScrollStructure build_scroll(const CanonicalForm& cf, int m, int n, FieldSpec field);

// Tuple a = (a_1..a_k), 0 <= k <= rho, with sum a_u sigma_u < n, together
// with the derived f(a) and r(a).
struct EligibleTuple {
    std::vector<int> a;
    int f = 0, r = 0;

    bool operator==(const EligibleTuple& o) const { return a == o.a; }
};

// All eligible tuples in length-lexicographic order; the empty tuple first.
std::vector<EligibleTuple> eligible_tuples(const ScrollStructure& st, int n);

// Computes f and r for a tuple; throws ScrollError when not eligible.
EligibleTuple eligible_tuple(const ScrollStructure& st, int n, const std::vector<int>& a);

struct SymbolicPowerGens {
    std::vector<BiPoly> all;    // monomial generators of K^(n)
    std::vector<BiPoly> fiber;  // the pure-T sublist (x,y-degree zero)
};

// Monomials T^a T_{k+1,1}^{f(a)} T_{k+1,j}, 1 <= j <= r(a), over all
// eligible tuples; `fiber` keeps the generators of x,y-degree zero.
SymbolicPowerGens symbolic_power_generators(const ScrollStructure& st, int n);

// Extended binomial coefficient: product formula for i > 0, 1 for i = 0,
// 0 for i < 0 (so C(-1, i) = (-1)^i).
long long binomial(long long j, long long i);

// Hilbert function of the generalized Eagon-Northcott module EN[psi, r] for a
// 2 x c matrix of linear forms with I_2 of expected height, over a ring with
// dim P/I_2(psi) = D:  (r+1) C(s+D-2, s) + c C(s+D-2, s-1); 0 for s < 0.
long long en_hilbert(long long c, long long D, long long r, long long s);

// lambda((S/H)_{(u,s)})
long long piece_length_sh(const ScrollStructure& st, long long u, long long s);

// lambda of the filtration factor attached to the eligible tuple at (u, s).
long long piece_length(const ScrollStructure& st, const EligibleTuple& t, long long u,
                       long long s);

}  // namespace srees

#endif
