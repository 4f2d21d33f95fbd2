#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "slicecert/rational.hpp"

namespace slicecert {

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Residue in the prime field F_p. The value lies in [0, p); every element
/// carries its modulus and mixed-modulus arithmetic is rejected.
class Fp {
public:
    Fp(long long value, std::uint32_t p) : p_(p) {
        if (!is_prime_u32(p)) throw std::invalid_argument("Fp: modulus is not prime");
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    /// Image of an exact rational in F_p; the denominator must be a unit.
    static Fp from_rational(const Rational& q, std::uint32_t p) {
        Fp num(mod_of(q.numerator(), p), p);
        Fp den(mod_of(q.denominator(), p), p);
        if (den.is_zero()) throw std::invalid_argument("Fp: denominator divisible by p");
        return num * den.inv();
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const { check(o); return raw((v_ + static_cast<std::uint64_t>(o.v_)) % p_); }
    Fp operator-(const Fp& o) const { check(o); return raw((v_ + static_cast<std::uint64_t>(p_) - o.v_) % p_); }
    Fp operator*(const Fp& o) const { check(o); return raw(static_cast<std::uint64_t>(v_) * o.v_ % p_); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inv() const {
        if (v_ == 0) throw std::invalid_argument("Fp: inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t t = a / b;
            a -= t * b; std::swap(a, b);
            x0 -= t * x1; std::swap(x0, x1);
        }
        x0 %= p_;
        if (x0 < 0) x0 += p_;
        return raw(static_cast<std::uint64_t>(x0));
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static long long mod_of(const mpz_class& z, std::uint32_t p) {
        mpz_class r = z % p;
        return r.get_si();
    }
    Fp raw(std::uint64_t v) const {
        Fp r = *this;
        r.v_ = static_cast<std::uint32_t>(v);
        return r;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

inline Fp scalar_one_like(const Fp& x) { return Fp::one(x.modulus()); }
inline bool scalar_same_field(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }

}  // namespace slicecert
