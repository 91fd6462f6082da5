#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "emsum/errors.hpp"

namespace emsum {

// Arbitrary-precision integer. Coefficient denominators grow factorially, so
// fixed-width integers are not an option anywhere in the exact pipeline.
using Int = mpz_class;

inline Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Exact fraction, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}     // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw DomainError("zero to a negative power");
            return Rational(0);
        }
        Rational base = *this;
        if (e < 0) {
            base = Rational(denominator(), numerator());
            e = -e;
        }
        Rational r(1);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Accepts "p/q", plain integers, and decimal literals, all parsed exactly.
    static Rational parse(std::string_view s) {
        auto bad = [&] { throw DomainError("malformed rational literal '" + std::string(s) + "'"); };
        if (s.empty()) bad();
        std::string str(s);
        auto slash = str.find('/');
        if (slash != std::string::npos) {
            Int num, den;
            if (num.set_str(str.substr(0, slash), 10) != 0) bad();
            if (den.set_str(str.substr(slash + 1), 10) != 0) bad();
            if (den == 0) bad();
            return Rational(num, den);
        }
        auto dot = str.find('.');
        if (dot != std::string::npos) {
            std::string digits = str.substr(0, dot) + str.substr(dot + 1);
            std::size_t frac_len = str.size() - dot - 1;
            if (digits.empty() || frac_len == 0) bad();
            Int num;
            if (num.set_str(digits, 10) != 0) bad();
            Int den(1);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(num, den);
        }
        Int num;
        if (num.set_str(str, 10) != 0) bad();
        return Rational(num);
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

inline Rational operator*(const Int& a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, const Int& b) { return a * Rational(b); }

}  // namespace emsum
