#pragma once

#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "lmow/errors.hpp"

namespace lmow {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value-semantic wrapper around GMP's mpq_t.
class Rational {
  public:
    Rational() { mpq_init(q_); }

    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, long den) {
        if (den == 0)
            throw domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        mpq_init(q_);
        mpq_set_si(q_, num, (unsigned long)den);
        mpq_canonicalize(q_);
    }

    // Accepts "p", "-p", "p/q".
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0) {
            mpq_clear(q_);
            throw structure_error("Rational: cannot parse '" + s + "'");
        }
        if (mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw structure_error("Rational: zero denominator in '" + s + "'");
        }
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o)
            mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        if (this != &o)
            mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw domain_error("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }

    Rational reciprocal() const {
        if (is_zero())
            throw domain_error("Rational: reciprocal of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    // Integer power, negative exponents allowed for nonzero values.
    Rational pow(long e) const {
        if (e < 0)
            return reciprocal().pow(-e);
        Rational r(1), b(*this);
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    mpq_t q_;
};

inline Rational rational_factorial(unsigned long n) {
    mpz_t f;
    mpz_init(f);
    mpz_fac_ui(f, n);
    char* raw = mpz_get_str(nullptr, 10, f);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    mpz_clear(f);
    return Rational(s);
}

// (2k-1)!! as a plain integer-valued rational.
inline Rational double_factorial_odd(long k) {
    Rational r(1);
    for (long i = 2 * k - 1; i > 1; i -= 2)
        r *= Rational(i);
    return r;
}

} // namespace lmow
