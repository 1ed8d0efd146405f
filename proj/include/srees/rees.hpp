#ifndef SREES_REES_HPP
#define SREES_REES_HPP

#include <string>
#include <vector>

#include "srees/scroll.hpp"

namespace srees {

struct ReesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One generator of the Rees ideal, with its provenance label.
struct ReesGen {
    enum class Kind { HMinor, F, G, H };  // psi-minor; f_j; g_{a1,j}; h_{a1,a2}
    Kind kind = Kind::HMinor;
    std::vector<int> a;  // tuple indices (empty for minors and f_j)
    int j = 0;           // 1-based; 0 for minors
    int col1 = 0, col2 = 0;  // psi columns for minors (0-based)
    BiPoly poly;
    Bidegree deg;
    std::string label;

    ReesGen() : poly(PolyRing{}) {}
};

struct ReesGenerators {
    std::vector<BiPoly> c;      // c_0..c_n, linear in T (possibly zero)
    std::vector<ReesGen> gens;  // H minors first, then the G family
    BiPoly g;                   // = Delta_{0,n} = T * phi''

    ReesGenerators() : g(PolyRing{}) {}
    std::vector<BiPoly> polys() const;
};

// Coefficients of T * phi'' on the x,y-monomial basis:
// T * phi'' = sum_i c_i x^{n-i} y^i with each c_i of bidegree (0,1).
// Expects the presentation in scroll coordinates.
std::vector<BiPoly> extract_c(const PresentationData& pd, const ScrollStructure& st);

// Delta_{a,b} = sum_{k=0}^{b} c_{a+k} x^{b-k} y^k  (zero when b < 0).
BiPoly delta_poly(int a, int b, const std::vector<BiPoly>& c, const ScrollStructure& st);
// Delta_a = Delta_{a, n-a}.
BiPoly delta_full(int a, const std::vector<BiPoly>& c, const ScrollStructure& st);

// pi_{i,a,b,gamma} = sum_{k=0}^{b} c_{a+k} T_{i,gamma-k}.
BiPoly pi_family(int i, int a, int b, int gamma, const ScrollStructure& st,
                 const std::vector<BiPoly>& c);
// pi_{i,a} = pi_{i,a,sigma_i-1,sigma_i+1}
BiPoly pi_short(int i, int a, const ScrollStructure& st, const std::vector<BiPoly>& c);
// pi'_{i,s,j} = pi_{i,n-s,s,s+j}
BiPoly pi_prime(int i, int s, int j, const ScrollStructure& st, const std::vector<BiPoly>& c);

// The polynomial G_{(a,j)} (cases f_j / g_{a1,j} / h_{a1,a2}).
BiPoly generator_G(const EligibleTuple& t, int j, const ScrollStructure& st,
                   const std::vector<BiPoly>& c);

// Full generating set of the Rees ideal: the psi-minors plus all G_{(a,j)}.
ReesGenerators rees_ideal(const ScrollStructure& st, const std::vector<BiPoly>& c);

// Defining equations of the special fiber ring (implicit equations of the
// parametrized curve): minors of the truncated scroll matrix plus every G of
// x,y-degree zero.  All returned polynomials involve only the T variables.
std::vector<ReesGen> fiber_equations(const ReesGenerators& rg, const ScrollStructure& st);

// Target ring of the substitution T_{i,j} -> x^{j-1} y^{sigma_i-j+1} t_i
// (t_ell = 1; T_m fixed when rho = 1): T slot 1 = t_1, slot 2 = t_2 or T_m.
PolyRing pi_target_ring(const ScrollStructure& st);
BiPoly pi_image(const BiPoly& p, const ScrollStructure& st);

// Certifies the generator against the symbolic power through the scroll
// parameterization: pi(g T^a T_{k+1,1}^{f(a)} T_{k+1,j}) = y^n pi(G_{(a,j)}),
// plus the closed-form expansion of pi(G_{(a,j)}).
bool pi_substitution_check(const EligibleTuple& t, int j, const ScrollStructure& st,
                           const ReesGenerators& rg);

// Bidegree the generator G_{(a,j)} must have:
// f_j: (0, f+2); g_{a1,j}: (0, a1+f+2) for rho = 2 and (f+1, a1+1) for
// rho = 1; h_{a1,a2}: (f+1, a1+a2+1).
Bidegree expected_G_bidegree(const EligibleTuple& t, const ScrollStructure& st);

// The monomial T^a T_{k+1,1}^{f(a)} T_{k+1,j} of the symbolic power.
BiPoly symbolic_power_monomial(const ScrollStructure& st, const EligibleTuple& t, int j);

}  // namespace srees

#endif
