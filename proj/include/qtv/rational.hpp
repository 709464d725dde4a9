#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace qtv {

/// Exact rational with an int64 fast path; falls back to GMP on overflow.
class Rat {
public:
    Rat() = default;
    Rat(long n) : n_(n) {}
    Rat(long n, long d);
    Rat(const mpq_class& q) { assign(q); }
    Rat(const mpz_class& z) { assign(mpq_class(z)); }

    bool is_small() const { return !big_; }
    int sgn() const;
    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);
    Rat inverse() const;

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b);
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);

private:
    void assign(const mpq_class& q);
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::optional<mpq_class> big_;
};

inline int sgn(const Rat& r) { return r.sgn(); }

}  // namespace qtv
