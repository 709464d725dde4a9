#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtv/rational.hpp"

namespace qtv {

/// Exact Gaussian rational re + im*i.
struct Gauss {
    Rat re;
    Rat im;

    Gauss() = default;
    Gauss(long n) : re(n), im(0) {}
    Gauss(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}

    static Gauss i() { return Gauss(0, 1); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss& operator+=(const Gauss& o);
    Gauss& operator-=(const Gauss& o);
    Gauss& operator*=(const Gauss& o);
    /// *this += x * y
    void add_product(const Gauss& x, const Gauss& y);
    Gauss inverse() const;
    Gauss conj() const { return Gauss(re, -im); }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inverse(); }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    std::string str() const;
};

/// Laurent polynomial in z = q^(1/2): coefficient c[j] multiplies z^(low + j).
/// Both ends are trimmed, so no zero coefficient sits at either end.
class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(int low, std::vector<Gauss> coeffs);
    static HalfLaurent monomial(int e, Gauss c);

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Gauss>& coeffs() const { return c_; }
    Gauss coeff(int e) const;
    /// Exponent/coefficient pairs with nonzero coefficient, ascending.
    std::map<int, Gauss> terms() const;

    HalfLaurent operator-() const;
    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b);
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b);
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) = default;

private:
    void trim();
    int low_ = 0;
    std::vector<Gauss> c_;
};

class QRatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public QRatError {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Exact rational function in z = q^(1/2) with Gaussian rational coefficients.
///
/// Canonical form: z^shift * num(z) / den(z) where num and den are
/// polynomials with nonzero constant terms, gcd(num, den) = 1 and
/// den(0) = 1. Zero is shift 0, num empty, den 1.
class QRat {
public:
    QRat() : den_{Gauss(1)} {}
    QRat(long n);
    QRat(const mpq_class& r);
    QRat(const Gauss& g);
    static QRat frac(long n, long d) { return QRat(mpq_class(n, d)); }
    static QRat from_laurent(const HalfLaurent& num, const HalfLaurent& den);
    static QRat q_half_power(int e);
    static QRat i() { return QRat(Gauss::i()); }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    int shift() const { return shift_; }
    const std::vector<Gauss>& num() const { return num_; }
    const std::vector<Gauss>& den() const { return den_; }
    HalfLaurent num_laurent() const;
    HalfLaurent den_laurent() const;
    Gauss constant_value() const;

    QRat operator-() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    QRat inverse() const;
    QRat pow(int n) const;

    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    friend bool operator==(const QRat& a, const QRat& b);
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

private:
    friend QRat make_canonical(int, std::vector<Gauss>, std::vector<Gauss>);
    int shift_ = 0;
    std::vector<Gauss> num_;
    std::vector<Gauss> den_;
};

/// Exponent of the formal area variable t.
struct TExponent {
    mpq_class value;
    TExponent() = default;
    TExponent(mpq_class v) : value(std::move(v)) {}
    friend TExponent operator+(const TExponent& a, const TExponent& b) { return TExponent(a.value + b.value); }
    friend TExponent operator*(const TExponent& a, const mpq_class& k) { return TExponent(a.value * k); }
    friend bool operator==(const TExponent& a, const TExponent& b) { return a.value == b.value; }
    friend bool operator<(const TExponent& a, const TExponent& b) { return a.value < b.value; }
    std::string str() const { return value.get_str(); }
};

/// [n]_q = -i (q^(n/2) - q^(-n/2)).
QRat qint(long n);

enum class ArithOp { add, sub, mul, div };
QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op);

/// Coefficients of hbar^0..hbar^order after substituting q^(1/2) = exp(i hbar / 2).
std::vector<Gauss> hbar_expand(const QRat& a, int order);

QRat parse_qrat(const std::string& text);
std::string render_qrat(const QRat& a);

}  // namespace qtv
