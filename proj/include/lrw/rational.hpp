#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrw {

/// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "n" or "n/d" with optional sign.
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// "3/2", "-1", "0"
    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

inline Rational rational_binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational rational_factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline long binomial_long(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    if (!b.fits_slong_p())
        throw std::overflow_error("binomial does not fit in long");
    return b.get_si();
}

}  // namespace lrw
