#ifndef SREES_ORACLE_HPP
#define SREES_ORACLE_HPP

#include <map>
#include <vector>

#include "srees/invariants.hpp"
#include "srees/matrix.hpp"
#include "srees/rees.hpp"

namespace srees {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The bidegree-(u,s) slice of an ideal span: rows are the S-multiples of the
// generators landing in (u,s), columns the monomial basis of S_{(u,s)}.
// Brute-force verification runs over a prime field only.
class GradedSpan {
public:
    GradedSpan(const PolyRing& ring, long long u, long long s);

    // Adds every multiple of `gen` of bidegree (u,s); requires gen
    // bihomogeneous.
    void add(const BiPoly& gen);
    void add_all(const std::vector<BiPoly>& gens);

    long long dim() const { return static_cast<long long>(span_.rank()); }
    long long ambient_dim() const { return static_cast<long long>(cols_); }

private:
    PolyRing ring_;
    long long u_, s_;
    std::size_t nt_count_ = 0, cols_ = 0;
    std::map<Expo, std::size_t> t_index_;  // T-exponent -> column slot
    RowSpan span_;

    std::size_t column(const Expo& e) const;
};

// All T-exponent vectors over nt variables of total degree deg.
std::vector<Expo> t_monomials(int nt, long long deg);

// dim of the bidegree-(u,s) piece of the ideal generated by gens.
long long span_dim(const std::vector<BiPoly>& gens, long long u, long long s);

// lambda(I^s_z) by brute force: expand all s-fold products of the delta_i and
// take the rank of their degree-z multiples.  s = 0 gives lambda(R_z).
long long power_dim(const std::vector<BiPoly>& delta, long long s, long long z);

// power_dim with the degree-sd products expanded once and reused across z.
class PowerOracle {
public:
    PowerOracle(const std::vector<BiPoly>& delta, long long s);
    long long dim(long long z) const;

private:
    PolyRing ring_;
    long long s_;
    std::vector<BiPoly> products_;
};

// Does p map to zero under T_i -> delta_i t (x, y fixed)?
bool kernel_membership(const BiPoly& p, const std::vector<BiPoly>& delta);

// Hilbert function of the special fiber ring, by rank: lambda(k[T]_s) minus
// the span of the truncated-scroll minors and the fiber equations.
long long fiber_hilbert_brute(const ScrollStructure& st, const std::vector<ReesGen>& fiber_eqs,
                              long long s);

// Hilbert function of the symbolic power inside the fiber:
// span(minors(psi_tr) + the pure-T symbolic power generators) minus
// span(minors(psi_tr)) in degree s.
long long ksym_hilbert_brute(const ScrollStructure& st, const SymbolicPowerGens& spg,
                             long long s);

// Window check that the spans of y^n * (Rees generators) and g * K^(n),
// both together with the psi-minor multiples, coincide at bidegree (u,s).
bool main1_window_equal(const ScrollStructure& st, const ReesGenerators& rg,
                        const SymbolicPowerGens& spg, long long u, long long s);

}  // namespace srees

#endif
