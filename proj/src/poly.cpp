#include "srees/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace srees {

bool MonomialOrder::operator()(const Expo& a, const Expo& b) const {
    long long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    // Reverse-lex tie break, scanning variables from lowest precedence
    // upward: y, x, T_1, ..., T_m.  Smaller exponent in the first differing
    // variable wins.
    if (a[kVarY] != b[kVarY]) return a[kVarY] < b[kVarY];
    if (a[kVarX] != b[kVarX]) return a[kVarX] < b[kVarX];
    for (std::size_t i = 2; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::string monomial_str(const Expo& e) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& name, int exp) {
        if (exp == 0) return;
        if (!first) os << "*";
        first = false;
        os << name;
        if (exp != 1) os << "^" << exp;
    };
    for (std::size_t i = 2; i < e.size(); ++i)
        emit("T" + std::to_string(i - 1), e[i]);
    emit("x", e[kVarX]);
    emit("y", e[kVarY]);
    if (first) os << "1";
    return os.str();
}

BiPoly BiPoly::constant(const PolyRing& r, long long v) {
    return constant(r, Scalar(r.field, v));
}

BiPoly BiPoly::constant(const PolyRing& r, const Scalar& c) {
    BiPoly p(r);
    if (!c.is_zero()) p.terms_.emplace(Expo(r.num_vars(), 0), c);
    return p;
}

BiPoly BiPoly::monomial(const PolyRing& r, const Expo& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != r.num_vars())
        throw PolyError("exponent vector length does not match ring");
    BiPoly p(r);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

BiPoly BiPoly::variable(const PolyRing& r, int var, int exp) {
    if (var < 0 || var >= r.num_vars())
        throw PolyError("variable index out of range for ring");
    Expo e(r.num_vars(), 0);
    e[var] = static_cast<std::uint16_t>(exp);
    return monomial(r, e, Scalar::one(r.field));
}

void BiPoly::check_ring(const BiPoly& o) const {
    if (!(ring_ == o.ring_))
        throw FieldMismatch("polynomials live in different rings");
}

void BiPoly::add_term(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    r -= o;
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    check_ring(o);
    BiPoly r(ring_);
    const int nv = ring_.num_vars();
    Expo e(nv);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nv; ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

BiPoly BiPoly::operator*(const Scalar& c) const {
    BiPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) {
        Scalar w = v * c;
        if (!w.is_zero()) r.terms_.emplace(e, w);
    }
    return r;
}

BiPoly operator*(const Scalar& c, const BiPoly& p) { return p * c; }

BiPoly BiPoly::pow(long long e) const {
    if (e < 0) throw PolyError("negative polynomial power");
    BiPoly acc = constant(ring_, 1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool BiPoly::operator==(const BiPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

static Bidegree term_bidegree(const Expo& e) {
    Bidegree d;
    d.u = e[kVarX] + e[kVarY];
    for (std::size_t i = 2; i < e.size(); ++i) d.s += e[i];
    return d;
}

Bidegree BiPoly::bidegree() const {
    if (terms_.empty()) throw ZeroPolynomial("bidegree of the zero polynomial");
    auto it = terms_.begin();
    Bidegree d = term_bidegree(it->first);
    for (++it; it != terms_.end(); ++it) {
        Bidegree d2 = term_bidegree(it->first);
        if (!(d2 == d))
            throw NotBihomogeneous("not bihomogeneous: " +
                                   monomial_str(terms_.begin()->first) + " vs " +
                                   monomial_str(it->first));
    }
    return d;
}

bool BiPoly::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    auto it = terms_.begin();
    Bidegree d = term_bidegree(it->first);
    for (++it; it != terms_.end(); ++it)
        if (!(term_bidegree(it->first) == d)) return false;
    return true;
}

long long BiPoly::xy_degree() const {
    long long d = 0;
    for (const auto& [e, c] : terms_) d = std::max<long long>(d, e[kVarX] + e[kVarY]);
    return d;
}

long long BiPoly::t_degree() const {
    long long d = 0;
    for (const auto& [e, c] : terms_) {
        long long s = 0;
        for (std::size_t i = 2; i < e.size(); ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

bool BiPoly::uses_var(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

BiPoly BiPoly::substitute(const PolyRing& target,
                          const std::map<int, BiPoly>& assignment) const {
    for (const auto& [v, img] : assignment) {
        if (!(img.ring() == target))
            throw PolyError("assignment image lives outside the target ring");
        (void)v;
    }
    if (!(ring_.field == target.field))
        throw PolyError("substitution cannot change the coefficient field");
    BiPoly out(target);
    for (const auto& [e, c] : terms_) {
        BiPoly term = BiPoly::constant(target, c);
        for (int v = 0; v < ring_.num_vars(); ++v) {
            if (e[v] == 0) continue;
            auto it = assignment.find(v);
            if (it != assignment.end()) {
                term = term * it->second.pow(e[v]);
            } else if (v < 2) {
                term = term * BiPoly::variable(target, v, e[v]);
            } else if (v < target.num_vars()) {
                term = term * BiPoly::variable(target, v, e[v]);
            } else {
                throw MissingAssignment("no assignment for variable T" +
                                        std::to_string(v - 1));
            }
        }
        out += term;
    }
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mon = monomial_str(e);
        if (mon == "1") {
            os << cs;
        } else if (cs == "1") {
            os << mon;
        } else {
            os << cs << "*" << mon;
        }
    }
    return os.str();
}

long long graded_piece_dim(long long u, long long s, int m) {
    if (u < 0 || s < 0) return 0;
    // C(s + m - 1, m - 1), small exact
    long long num = 1;
    for (int i = 1; i <= m - 1; ++i) num = num * (s + i) / i;
    return (u + 1) * num;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char get() {
        skip_ws();
        return text[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + text + "\"");
    }
    long long integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1LL << 52)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }
};

}  // namespace

BiPoly parse_poly(const PolyRing& ring, const std::string& text) {
    Lexer lx(text);
    BiPoly out(ring);
    while (!lx.eof()) {
        int sign = 1;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.get() == '-') sign = -sign;
        }
        if (lx.eof()) lx.fail("dangling sign");

        Scalar coeff = Scalar::one(ring.field);
        bool saw_factor = false;
        Expo e(ring.num_vars(), 0);

        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            long long num = lx.integer();
            if (lx.peek() == '/') {
                lx.get();
                long long den = lx.integer();
                if (den == 0) lx.fail("zero denominator");
                coeff = Scalar(ring.field, num) / Scalar(ring.field, den);
            } else {
                coeff = Scalar(ring.field, num);
            }
            saw_factor = true;
        }
        for (;;) {
            if (lx.peek() == '*') {
                lx.get();
                continue;
            }
            char c = lx.peek();
            int var = -1;
            if (c == 'x') {
                lx.get();
                var = kVarX;
            } else if (c == 'y') {
                lx.get();
                var = kVarY;
            } else if (c == 'T') {
                lx.get();
                long long idx = lx.integer();
                if (idx < 1 || idx > ring.num_t)
                    lx.fail("T index out of range (ring has " +
                            std::to_string(ring.num_t) + " T variables)");
                var = t_var(static_cast<int>(idx));
            } else {
                break;
            }
            long long exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = lx.integer();
            }
            if (e[var] + exp > 60000) lx.fail("exponent too large");
            e[var] = static_cast<std::uint16_t>(e[var] + exp);
            saw_factor = true;
        }
        if (!saw_factor) lx.fail("expected a term");
        if (sign < 0) coeff = -coeff;
        out.add_term(e, coeff);
        char c = lx.peek();
        if (c != '\0' && c != '+' && c != '-') lx.fail("unexpected character");
    }
    return out;
}

}  // namespace srees
