#include "qtv/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace qtv {

// ---------------------------------------------------------------- Gauss

Gauss& Gauss::operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
    if (o.im.is_zero()) {
        re *= o.re;
        im *= o.re;
        return *this;
    }
    if (o.re.is_zero()) {
        Rat r = -(im * o.im);
        im = re * o.im;
        re = std::move(r);
        return *this;
    }
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

void Gauss::add_product(const Gauss& x, const Gauss& y) {
    if (x.im.is_zero()) {
        if (!y.re.is_zero()) re += x.re * y.re;
        if (!y.im.is_zero()) im += x.re * y.im;
        return;
    }
    if (x.re.is_zero()) {
        if (!y.im.is_zero()) re -= x.im * y.im;
        if (!y.re.is_zero()) im += x.im * y.re;
        return;
    }
    *this += x * y;
}

Gauss Gauss::inverse() const {
    if (is_zero()) throw QRatError("division by zero");
    if (sgn(im) == 0) return Gauss(re.inverse(), 0);
    Rat n = re * re + im * im;
    return Gauss(re / n, -im / n);
}

namespace {

std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace

std::string Gauss::str() const {
    if (sgn(im) == 0) return rat_str(re);
    std::string ims = im == 1 ? "i" : im == -1 ? "-i" : rat_str(im) + "*i";
    if (sgn(re) == 0) return ims;
    if (sgn(im) > 0) return rat_str(re) + "+" + ims;
    return rat_str(re) + ims;
}

// ------------------------------------------------- dense polynomial helpers

namespace {

using Poly = std::vector<Gauss>;

void trim_high(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool is_unit_one(const Poly& p) { return p.size() == 1 && p[0].re == 1 && sgn(p[0].im) == 0; }

Poly padd(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j];
    for (std::size_t j = 0; j < b.size(); ++j) r[j] += b[j];
    trim_high(r);
    return r;
}

Poly pshift(const Poly& a, int k) {
    if (k == 0 || a.empty()) return a;
    Poly r(a.size() + static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < a.size(); ++j) r[j + static_cast<std::size_t>(k)] = a[j];
    return r;
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    if (is_unit_one(a)) return b;
    if (is_unit_one(b)) return a;
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j].add_product(a[i], b[j]);
    }
    trim_high(r);
    return r;
}

void pscale(Poly& a, const Gauss& c) {
    for (auto& x : a) x *= c;
}

// Division with remainder over the Gaussian-rational field.
void pdivmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    rem = a;
    quo.clear();
    if (rem.size() < b.size()) return;
    quo.assign(rem.size() - b.size() + 1, Gauss());
    Gauss lead_inv = b.back().inverse();
    Gauss t;
    for (std::size_t k = rem.size(); k-- >= b.size();) {
        if (rem[k].is_zero()) continue;
        Gauss c = rem[k] * lead_inv;
        std::size_t off = k - (b.size() - 1);
        quo[off] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            t = c;
            t *= b[j];
            rem[off + j] -= t;
        }
        if (k == 0) break;
    }
    trim_high(rem);
    trim_high(quo);
}

Poly pexact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    pdivmod(a, b, q, r);
    return q;
}

Poly pgcd(Poly a, Poly b) {
    if (a.size() <= 1 || b.size() <= 1) return {Gauss(1)};
    if (a.size() < b.size()) std::swap(a, b);
    Poly q, r;
    while (!b.empty()) {
        pdivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (b.size() == 1) return {Gauss(1)};
    }
    pscale(a, a.back().inverse());
    return a;
}

int strip_low(Poly& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k].is_zero()) ++k;
    if (k > 0) p.erase(p.begin(), p.begin() + static_cast<long>(k));
    return static_cast<int>(k);
}

}  // namespace

// ---------------------------------------------------------------- HalfLaurent

HalfLaurent::HalfLaurent(int low, std::vector<Gauss> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

HalfLaurent HalfLaurent::monomial(int e, Gauss c) { return HalfLaurent(e, {std::move(c)}); }

void HalfLaurent::trim() {
    trim_high(c_);
    low_ += strip_low(c_);
    if (c_.empty()) low_ = 0;
}

Gauss HalfLaurent::coeff(int e) const {
    if (c_.empty() || e < low_ || e > high()) return Gauss();
    return c_[static_cast<std::size_t>(e - low_)];
}

std::map<int, Gauss> HalfLaurent::terms() const {
    std::map<int, Gauss> out;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) out.emplace(low_ + static_cast<int>(j), c_[j]);
    return out;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low_, b.low_);
    Poly r = padd(pshift(a.c_, a.low_ - lo), pshift(b.c_, b.low_ - lo));
    return HalfLaurent(lo, std::move(r));
}

HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return a + (-b); }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return HalfLaurent(a.low_ + b.low_, pmul(a.c_, b.c_));
}

// ---------------------------------------------------------------- QRat

QRat make_canonical(int shift, Poly num, Poly den) {
    QRat out;
    trim_high(num);
    trim_high(den);
    if (den.empty()) throw QRatError("division by zero");
    if (num.empty()) return out;
    shift += strip_low(num);
    shift -= strip_low(den);
    if (num.size() > 1 && den.size() > 1) {
        Poly g = pgcd(num, den);
        if (g.size() > 1) {
            num = pexact_div(num, g);
            den = pexact_div(den, g);
        }
    }
    if (!(den[0].re == 1 && sgn(den[0].im) == 0)) {
        Gauss c = den[0].inverse();
        pscale(num, c);
        pscale(den, c);
    }
    out.shift_ = shift;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
}

QRat::QRat(long n) : QRat(Gauss(n)) {}

QRat::QRat(const mpq_class& r) : QRat(Gauss(r)) {}

QRat::QRat(const Gauss& g) : den_{Gauss(1)} {
    if (!g.is_zero()) num_ = {g};
}

QRat QRat::from_laurent(const HalfLaurent& num, const HalfLaurent& den) {
    if (den.is_zero()) throw QRatError("division by zero");
    return make_canonical(num.low() - den.low(), num.coeffs(), den.coeffs());
}

QRat QRat::q_half_power(int e) {
    QRat r(1);
    r.shift_ = e;
    return r;
}

bool QRat::is_one() const { return shift_ == 0 && num_.size() == 1 && den_.size() == 1 && num_[0] == Gauss(1); }

bool QRat::is_constant() const { return is_zero() || (shift_ == 0 && num_.size() == 1 && den_.size() == 1); }

Gauss QRat::constant_value() const {
    if (!is_constant()) throw QRatError("value is not a constant");
    return is_zero() ? Gauss() : num_[0];
}

HalfLaurent QRat::num_laurent() const { return HalfLaurent(shift_, num_); }

HalfLaurent QRat::den_laurent() const { return HalfLaurent(0, den_); }

QRat QRat::operator-() const {
    QRat r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
}

QRat& QRat::operator+=(const QRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_unit_one(den_) && is_unit_one(o.den_)) {
        // In-place Laurent addition.
        if (o.shift_ < shift_) {
            num_.insert(num_.begin(), static_cast<std::size_t>(shift_ - o.shift_), Gauss());
            shift_ = o.shift_;
        }
        std::size_t off = static_cast<std::size_t>(o.shift_ - shift_);
        if (num_.size() < off + o.num_.size()) num_.resize(off + o.num_.size());
        for (std::size_t j = 0; j < o.num_.size(); ++j) num_[off + j] += o.num_[j];
        trim_high(num_);
        if (num_.empty()) return *this = QRat();
        shift_ += strip_low(num_);
        return *this;
    }
    int s = std::min(shift_, o.shift_);
    Poly a = pshift(num_, shift_ - s);
    Poly b = pshift(o.num_, o.shift_ - s);
    if (den_ == o.den_) {
        if (is_unit_one(den_)) {
            Poly n = padd(a, b);
            if (n.empty()) return *this = QRat();
            shift_ = s + strip_low(n);
            num_ = std::move(n);
            return *this;
        }
        return *this = make_canonical(s, padd(a, b), den_);
    }
    Poly g = pgcd(den_, o.den_);
    Poly da = g.size() > 1 ? pexact_div(den_, g) : den_;
    Poly db = g.size() > 1 ? pexact_div(o.den_, g) : o.den_;
    Poly n = padd(pmul(a, db), pmul(b, da));
    return *this = make_canonical(s, std::move(n), pmul(den_, db));
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QRat();
    if (o.is_constant()) {
        pscale(num_, o.num_[0]);
        return *this;
    }
    int s = shift_ + o.shift_;
    if (is_unit_one(den_) && is_unit_one(o.den_)) {
        num_ = pmul(num_, o.num_);
        shift_ = s;
        return *this;
    }
    Poly g1 = pgcd(num_, o.den_);
    Poly g2 = pgcd(o.num_, den_);
    Poly n1 = g1.size() > 1 ? pexact_div(num_, g1) : num_;
    Poly d2 = g1.size() > 1 ? pexact_div(o.den_, g1) : o.den_;
    Poly n2 = g2.size() > 1 ? pexact_div(o.num_, g2) : o.num_;
    Poly d1 = g2.size() > 1 ? pexact_div(den_, g2) : den_;
    Poly n = pmul(n1, n2);
    Poly d = pmul(d1, d2);
    if (!(d[0].re == 1 && sgn(d[0].im) == 0)) {
        Gauss c = d[0].inverse();
        pscale(n, c);
        pscale(d, c);
    }
    shift_ = s;
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

QRat QRat::inverse() const {
    if (is_zero()) throw QRatError("division by zero");
    return make_canonical(-shift_, den_, num_);
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    QRat r(1), b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

bool operator==(const QRat& a, const QRat& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
}

QRat qint(long n) {
    if (n == 0) return QRat();
    // -i z^n + i z^-n = z^-|n| * (i - i z^(2n)) up to sign
    long m = n > 0 ? n : -n;
    Poly num(static_cast<std::size_t>(2 * m + 1));
    Gauss s = n > 0 ? Gauss(0, 1) : Gauss(0, -1);
    num[0] = s;
    num.back() = -s;
    return make_canonical(static_cast<int>(-m), std::move(num), {Gauss(1)});
}

QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw QRatError("unknown operation");
}

// ---------------------------------------------------------------- hbar series

namespace {

// sum_j p[j] exp(i (j + shift) hbar / 2), coefficients of hbar^0..order
std::vector<Gauss> exp_series(const Poly& p, int shift, int order) {
    std::vector<Gauss> out(static_cast<std::size_t>(order + 1));
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].is_zero()) continue;
        Gauss step(0, mpq_class(static_cast<long>(j) + shift, 2));
        Gauss term = p[j];
        for (int m = 0; m <= order; ++m) {
            out[static_cast<std::size_t>(m)] += term;
            term *= step;
            term *= Gauss(mpq_class(1, m + 1));
        }
    }
    return out;
}

}  // namespace

std::vector<Gauss> hbar_expand(const QRat& a, int order) {
    if (order < 0) throw QRatError("negative expansion order");
    std::vector<Gauss> n = exp_series(a.num(), a.shift(), order);
    std::vector<Gauss> d = exp_series(a.den(), 0, order);
    if (d[0].is_zero()) throw QRatError("denominator not invertible as a power series in hbar");
    Gauss inv0 = d[0].inverse();
    std::vector<Gauss> out(static_cast<std::size_t>(order + 1));
    for (int m = 0; m <= order; ++m) {
        Gauss acc = n[static_cast<std::size_t>(m)];
        for (int j = 1; j <= m; ++j) acc -= d[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(m - j)];
        out[static_cast<std::size_t>(m)] = acc * inv0;
    }
    return out;
}

// ---------------------------------------------------------------- text form

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : QRatError("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    QRat parse() {
        QRat v = expr();
        skip();
        if (p_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[p_]) + "'", p_);
        return v;
    }

private:
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool accept(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", p_);
    }

    QRat expr() {
        QRat v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    QRat term() {
        QRat v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                std::size_t at = p_;
                QRat d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    QRat unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    long integer() {
        skip();
        std::size_t start = p_;
        bool neg = false;
        if (p_ < s_.size() && s_[p_] == '-') {
            neg = true;
            ++p_;
        }
        std::size_t digits = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ == digits) throw ParseError("expected integer", start);
        long v = std::stol(s_.substr(digits, p_ - digits));
        return neg ? -v : v;
    }

    // Exponent in units of 1/2.
    int half_exponent(bool allow_half) {
        skip();
        std::size_t at = p_;
        long num = 0, den = 1;
        if (accept('(')) {
            num = integer();
            if (accept('/')) den = integer();
            expect(')');
        } else {
            num = integer();
        }
        if (den == 2 && allow_half) return static_cast<int>(num);
        if (den == 1) return static_cast<int>(2 * num);
        throw ParseError("exponent must be an integer or a half-integer power of q", at);
    }

    QRat power() {
        skip();
        std::size_t at = p_;
        bool is_q = p_ < s_.size() && s_[p_] == 'q';
        QRat base = atom();
        if (!accept('^')) return base;
        int e = half_exponent(is_q);
        if (is_q) return QRat::q_half_power(e);
        if (e % 2 != 0) throw ParseError("half-integer power of a non-q base", at);
        if (base.is_zero() && e < 0) throw ParseError("division by zero", at);
        return base.pow(e / 2);
    }

    QRat atom() {
        skip();
        if (p_ >= s_.size()) throw ParseError("unexpected end of input", p_);
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            QRat v = expr();
            expect(')');
            return v;
        }
        if (c == 'i') {
            ++p_;
            return QRat::i();
        }
        if (c == 'q') {
            ++p_;
            return QRat::q_half_power(2);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            return QRat(mpq_class(mpz_class(s_.substr(start, p_ - start))));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", p_);
    }

    const std::string& s_;
    std::size_t p_ = 0;
};

std::string q_power_str(int e) {
    if (e % 2 != 0) return "q^(" + std::to_string(e) + "/2)";
    return "q^" + std::to_string(e / 2);
}

// A coefficient as it appears in a sum: returns (negative?, magnitude text).
std::pair<bool, std::string> signed_coeff(const Gauss& g) {
    if (sgn(g.im) == 0) {
        bool neg = sgn(g.re) < 0;
        return {neg, rat_str(neg ? -g.re : g.re)};
    }
    if (sgn(g.re) == 0) {
        bool neg = sgn(g.im) < 0;
        Rat m = neg ? -g.im : g.im;
        return {neg, m == 1 ? std::string("i") : rat_str(m) + "*i"};
    }
    return {false, "(" + g.str() + ")"};
}

std::string poly_str(const Poly& p) {
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].is_zero()) continue;
        auto [neg, mag] = signed_coeff(p[j]);
        std::string t;
        if (j == 0) t = mag;
        else if (mag == "1") t = q_power_str(static_cast<int>(j));
        else t = mag + "*" + q_power_str(static_cast<int>(j));
        if (first) out += neg ? "-" + t : t;
        else out += neg ? " - " + t : " + " + t;
        first = false;
    }
    return out;
}

}  // namespace

QRat parse_qrat(const std::string& text) { return Parser(text).parse(); }

std::string render_qrat(const QRat& a) {
    if (a.is_zero()) return "0";
    if (a.is_constant()) return a.num()[0].str();
    std::string out;
    if (a.shift() != 0) out = q_power_str(a.shift()) + "*";
    out += "(" + poly_str(a.num()) + ")";
    if (a.den().size() > 1) out += "/(" + poly_str(a.den()) + ")";
    return out;
}

}  // namespace qtv
