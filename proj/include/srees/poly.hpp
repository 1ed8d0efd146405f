#ifndef SREES_POLY_HPP
#define SREES_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srees/field.hpp"

namespace srees {

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotBihomogeneous : PolyError {
    using PolyError::PolyError;
};
struct ZeroPolynomial : PolyError {
    using PolyError::PolyError;
};
struct MissingAssignment : PolyError {
    using PolyError::PolyError;
};
struct ParseError : PolyError {
    using PolyError::PolyError;
};

// The ambient polynomial ring k[x, y, T_1..T_m].  Variable indices:
// 0 = x, 1 = y, 2 + i = T_{i+1}.
struct PolyRing {
    FieldSpec field;
    int num_t = 0;

    int num_vars() const { return num_t + 2; }
    bool operator==(const PolyRing&) const = default;
};

constexpr int kVarX = 0;
constexpr int kVarY = 1;
inline int t_var(int i) { return 1 + i; }  // T_i, 1-based

// Exponent vector, length num_vars() of the owning ring.
using Expo = std::vector<std::uint16_t>;

std::string monomial_str(const Expo& e);

// Graded reverse lexicographic order with precedence T_m > ... > T_1 > x > y.
// operator() returns true when `a` strictly precedes `b` in iteration order,
// i.e. when a > b in the monomial order (leading terms iterate first).
struct MonomialOrder {
    bool operator()(const Expo& a, const Expo& b) const;
};

struct Bidegree {
    long long u = 0;  // x,y-degree
    long long s = 0;  // T-degree
    bool operator==(const Bidegree&) const = default;
};

class BiPoly {
public:
    using TermMap = std::map<Expo, Scalar, MonomialOrder>;

    explicit BiPoly(PolyRing ring) : ring_(std::move(ring)) {}

    static BiPoly zero(const PolyRing& r) { return BiPoly(r); }
    static BiPoly constant(const PolyRing& r, long long v);
    static BiPoly constant(const PolyRing& r, const Scalar& c);
    static BiPoly monomial(const PolyRing& r, const Expo& e, const Scalar& c);
    static BiPoly variable(const PolyRing& r, int var, int exp = 1);
    static BiPoly x(const PolyRing& r) { return variable(r, kVarX); }
    static BiPoly y(const PolyRing& r) { return variable(r, kVarY); }
    static BiPoly t(const PolyRing& r, int i) { return variable(r, t_var(i)); }

    const PolyRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator*(const Scalar& c) const;
    BiPoly pow(long long e) const;
    bool operator==(const BiPoly& o) const;
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    // Adds c * X^e in place, dropping the term if it cancels.
    void add_term(const Expo& e, const Scalar& c);

    // Bidegree under deg x = deg y = (1,0), deg T_i = (0,1).
    // Throws ZeroPolynomial / NotBihomogeneous.
    Bidegree bidegree() const;
    bool is_bihomogeneous() const;

    // Total degree in x,y and in the T variables (max over terms; 0 for 0).
    long long xy_degree() const;
    long long t_degree() const;
    bool uses_var(int var) const;

    // Image under var -> assignment[var]; unassigned variables map to the
    // variable of the same name in `target`.  All assignment values must live
    // in `target`.  Throws MissingAssignment when an occurring variable has no
    // assignment and no counterpart in the target ring.
    BiPoly substitute(const PolyRing& target,
                      const std::map<int, BiPoly>& assignment) const;

    std::string str() const;

private:
    PolyRing ring_;
    TermMap terms_;

    void check_ring(const BiPoly& o) const;
};

inline Bidegree bidegree(const BiPoly& p) { return p.bidegree(); }

BiPoly operator*(const Scalar& c, const BiPoly& p);

// Number of monomials of bidegree (u, s) in k[x, y, T_1..T_m]:
// (u + 1) * C(s + m - 1, m - 1); zero when u < 0 or s < 0.
long long graded_piece_dim(long long u, long long s, int m);

// Polynomial text grammar: terms joined by +/-, term = coefficient * monomial,
// monomial = product of x^a, y^b, T<i>^c.  Whitespace insignificant, '*'
// optional.  Coefficients: integers, or a/b fractions (exact division).
BiPoly parse_poly(const PolyRing& ring, const std::string& text);

}  // namespace srees

#endif
