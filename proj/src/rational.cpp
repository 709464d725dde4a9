#include "qtv/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace qtv {

namespace {

using i64 = std::int64_t;

constexpr i64 kMin = INT64_MIN;

bool mul_ok(i64 a, i64 b, i64& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add_ok(i64 a, i64 b, i64& out) { return !__builtin_add_overflow(a, b, &out); }

i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

}  // namespace

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (n == kMin || d == kMin) {
        assign(mpq_class(mpz_class(n), mpz_class(d)));
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = gcd64(n, d);
    n_ = n / g;
    d_ = d / g;
}

void Rat::assign(const mpq_class& q0) {
    mpq_class q = q0;
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != kMin) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::move(q);
        n_ = 0;
        d_ = 1;
    }
}

int Rat::sgn() const {
    if (big_) return ::sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rat::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

mpz_class Rat::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }

mpz_class Rat::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

std::string Rat::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rat Rat::operator-() const {
    Rat r = *this;
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else if (r.n_ == kMin) {
        r.assign(-to_mpq());
    } else {
        r.n_ = -r.n_;
    }
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            i64 n;
            if (add_ok(n_, o.n_, n) && n != kMin) {
                n_ = n;
                return *this;
            }
        }
        i64 g = gcd64(d_, o.d_);
        i64 db = d_ / g, dc = o.d_ / g;
        i64 x, y, n, d;
        if (mul_ok(n_, dc, x) && mul_ok(o.n_, db, y) && add_ok(x, y, n) && mul_ok(d_, dc, d) && n != kMin) {
            if (n == 0) {
                n_ = 0;
                d_ = 1;
                return *this;
            }
            i64 h = gcd64(n, d);
            n_ = n / h;
            d_ = d / h;
            return *this;
        }
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = Rat();
        return *this;
    }
    if (!big_ && !o.big_) {
        if (o.d_ == 1 && o.n_ == 1) return *this;
        if (d_ == 1 && o.d_ == 1) {
            i64 n;
            if (mul_ok(n_, o.n_, n) && n != kMin) {
                n_ = n;
                return *this;
            }
        }
        i64 g1 = gcd64(n_, o.d_), g2 = gcd64(o.n_, d_);
        i64 n, d;
        if (mul_ok(n_ / g1, o.n_ / g2, n) && mul_ok(d_ / g2, o.d_ / g1, d) && n != kMin) {
            n_ = n;
            d_ = d;
            return *this;
        }
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return Rat(1 / *big_);
    Rat r;
    if (n_ < 0) {
        r.n_ = -d_;
        r.d_ = -n_;
    } else {
        r.n_ = d_;
        r.d_ = n_;
    }
    return r;
}

Rat& Rat::operator/=(const Rat& o) { return *this *= o.inverse(); }

bool operator==(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits is always stored small
}

bool operator<(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
        i64 x, y;
        if (mul_ok(a.n_, b.d_, x) && mul_ok(b.n_, a.d_, y)) return x < y;
    }
    return a.to_mpq() < b.to_mpq();
}

}  // namespace qtv
