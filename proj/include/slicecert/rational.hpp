#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slicecert {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "n" or "n/d" with optional leading minus.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        return Rational(num, den);
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(q_ / o.q_);
    }
    Rational operator-() const { return Rational(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational inv() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return Rational(1 / q_);
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational rational_factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

/// b!/(b-a)! = b (b-1) ... (b-a+1); requires 0 <= a <= b.
inline Rational falling_factorial(long b, long a) {
    mpz_class r(1);
    for (long i = 0; i < a; ++i) r *= (b - i);
    return Rational(r);
}

// Field-generic hooks shared with the prime-field scalar.
inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline bool scalar_same_field(const Rational&, const Rational&) { return true; }

}  // namespace slicecert
