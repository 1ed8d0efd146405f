#ifndef SREES_INVARIANTS_HPP
#define SREES_INVARIANTS_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "srees/scroll.hpp"

namespace srees {

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoFit : InvariantError {
    using InvariantError::InvariantError;
};

// Shape of the minimal resolution of I^s:
//   0 -> R(-sd-1)^b (+) F -> R(-sd)^{b0} -> I^s -> 0,
// with a = rank F (count of non-linear columns), b0 = b + a + 1.
// `twists` holds the R-twist arguments of F (all < -sd).
struct BettiTable {
    long long s = 0;
    long long a = 0, b = 0, b0 = 0;
    std::multiset<long long> twists;

    bool operator==(const BettiTable& o) const {
        return a == o.a && b == o.b && b0 == o.b0 && twists == o.twists;
    }
};

// reg I^s = max(sd, sd - (s-1) tau + n - 1), d = n + sigma + tau.
long long regularity_power(long long s, long long sigma, long long tau, long long n);

BettiTable betti_table(long long s, const CanonicalForm& cf, long long n);

// lambda(I^s_z) via the filtration lengths.
long long hilbert_power(long long s, long long z, const ScrollStructure& st, long long n);

struct ReductionNumber {
    int value = 0;
    long long lower = 0, upper = 0;  // ceil(n/sigma_1) and ceil((n-1)/sigma_1)+1
    // rho = 2 evidence: the Hilbert value of the symbolic power in the fiber
    // at degree ceil(n/sigma_1), compared against m - 2.
    bool has_evidence = false;
    long long hilbert_value = 0;
    long long threshold = 0;
};

ReductionNumber reduction_number(const CanonicalForm& cf, int n);

// The degree-ceil(n/sigma1) Hilbert value of K^(n) in the fiber:
// sigma_1 ceil(n/sigma_1) - n + 1 plus the count of triples (i,j,k) with
// i+j+1 = ceil(n/sigma_1), sigma_1 i + sigma_2 j < n <= sigma_1 i +
// sigma_2 (j+1) + 1 - k, i,j >= 0, k >= 1.
long long ksym_fiber_hilbert_value(long long sigma1, long long sigma2, long long n);

struct FiberReport {
    int depth_rees = 0, depth_fiber = 0, depth_gr = 0;
    bool fiber_cm = false;
    long long reg_fiber = 0;
};

FiberReport depth_and_fiber_report(const CanonicalForm& cf, int n);

// Postulation number of the special fiber ring.
int postulation(const CanonicalForm& cf, int n);

// Hilbert function of the fiber ring: b0(s) for s >= 1, 1 at s = 0.
long long fiber_hilbert_closed(const CanonicalForm& cf, long long n, long long s);
// Its eventual polynomial q(s).
long long fiber_hilbert_polynomial(const CanonicalForm& cf, long long n, long long s);

// Recover the resolution shape of a projective-dimension-one module over
// k[x,y] generated entirely in degree D from its Hilbert function, peeling
// twists greedily from low degree upward.  `hilbert` must be valid on
// z = D .. zmax and the resolution must settle strictly before zmax.
// Throws NoFit when the values are inconsistent with such a module.
BettiTable fit_resolution(const std::function<long long(long long)>& hilbert, long long D,
                          long long zmax);

}  // namespace srees

#endif
