#ifndef SREES_FIELD_HPP
#define SREES_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace srees {

struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadField : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient field: F_p for a prime p, or exact rationals (prime == 0).
struct FieldSpec {
    std::uint32_t prime = 32003;

    static FieldSpec fp(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec default_field() { return FieldSpec{32003}; }

    bool is_rational() const { return prime == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

bool is_prime_u32(std::uint32_t p);

// Exact field element; carries its field so mixed-field arithmetic is rejected.
class Scalar {
public:
    Scalar() : fld_{FieldSpec::default_field()} {}
    Scalar(FieldSpec f, long long v);
    Scalar(FieldSpec f, const mpq_class& q);

    static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }

    const FieldSpec& field() const { return fld_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Residue in [0, p) for prime fields.
    std::uint32_t residue() const;
    const mpq_class& rational() const;

    std::string str() const;

private:
    void check_same(const Scalar& o) const;

    FieldSpec fld_;
    std::uint32_t v_ = 0;  // prime-field residue
    mpq_class q_;          // rational value (prime == 0)
};

// Modular inverse in [0, p); a must be nonzero mod p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace srees

#endif
