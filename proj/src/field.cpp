#include "srees/field.hpp"

namespace srees {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::fp(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw BadField("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

std::string FieldSpec::str() const {
    return is_rational() ? "Q" : "F_" + std::to_string(prime);
}

Scalar::Scalar(FieldSpec f, long long v) : fld_(f) {
    if (f.is_rational()) {
        q_ = mpq_class(static_cast<long>(v));
    } else {
        long long r = v % static_cast<long long>(f.prime);
        if (r < 0) r += f.prime;
        v_ = static_cast<std::uint32_t>(r);
    }
}

Scalar::Scalar(FieldSpec f, const mpq_class& q) : fld_(f) {
    if (f.is_rational()) {
        q_ = q;
        q_.canonicalize();
    } else {
        // reduce num/den mod p
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(f.prime));
        mpz_class nr = num % pz;
        if (nr < 0) nr += pz;
        mpz_class dr = den % pz;
        if (dr < 0) dr += pz;
        std::uint32_t n32 = static_cast<std::uint32_t>(nr.get_ui());
        std::uint32_t d32 = static_cast<std::uint32_t>(dr.get_ui());
        if (d32 == 0) throw BadField("denominator vanishes mod " + std::to_string(f.prime));
        v_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(n32) * mod_inverse(d32, f.prime)) % f.prime);
    }
}

void Scalar::check_same(const Scalar& o) const {
    if (!(fld_ == o.fld_))
        throw FieldMismatch("scalar fields differ: " + fld_.str() + " vs " + o.fld_.str());
}

bool Scalar::is_zero() const {
    return fld_.is_rational() ? q_ == 0 : v_ == 0;
}

bool Scalar::is_one() const {
    return fld_.is_rational() ? q_ == 1 : v_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(fld_, 0);
    if (fld_.is_rational()) {
        r.q_ = q_ + o.q_;
    } else {
        std::uint32_t s = v_ + o.v_;
        if (s >= fld_.prime) s -= fld_.prime;
        r.v_ = s;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(fld_, 0);
    if (fld_.is_rational()) {
        r.q_ = q_ - o.q_;
    } else {
        r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + fld_.prime - o.v_;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(fld_, 0);
    if (fld_.is_rational()) {
        r.q_ = q_ * o.q_;
    } else {
        r.v_ = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(v_) * o.v_ % fld_.prime);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inv();
}

Scalar Scalar::operator-() const {
    Scalar r(fld_, 0);
    if (fld_.is_rational())
        r.q_ = -q_;
    else
        r.v_ = v_ == 0 ? 0 : fld_.prime - v_;
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw BadField("division by zero in " + fld_.str());
    Scalar r(fld_, 0);
    if (fld_.is_rational())
        r.q_ = 1 / q_;
    else
        r.v_ = mod_inverse(v_, fld_.prime);
    return r;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = Scalar::one(fld_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(fld_ == o.fld_)) return false;
    return fld_.is_rational() ? q_ == o.q_ : v_ == o.v_;
}

std::uint32_t Scalar::residue() const {
    if (fld_.is_rational()) throw BadField("residue() on rational scalar");
    return v_;
}

const mpq_class& Scalar::rational() const {
    if (!fld_.is_rational()) throw BadField("rational() on prime-field scalar");
    return q_;
}

std::string Scalar::str() const {
    if (fld_.is_rational()) return q_.get_str();
    return std::to_string(v_);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw BadField("element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace srees
