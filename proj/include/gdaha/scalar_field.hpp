#pragma once

#include "gdaha/laurent.hpp"
#include "gdaha/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace gdaha {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the fraction field of Laurent polynomials in v, kept in canonical
/// form: numerator and denominator coprime, denominator an ordinary polynomial
/// with nonzero constant term and leading coefficient 1. Zero is 0/1.
class Scalar {
public:
    Scalar() : den_(Rational(1)) {}
    Scalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    Scalar(int c) : Scalar(Rational(c)) {}
    Scalar(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}

    static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
        Scalar s;
        s.num_ = num;
        s.den_ = den;
        s.reduce();
        return s;
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the canonical denominator is 1, i.e. the element is a Laurent polynomial.
    bool is_laurent() const { return den_.is_one(); }

    Scalar operator-() const {
        Scalar r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_);
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ - b.num_);
        return fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
        return fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return fraction(den_, num_);
    }

    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1), base(*this);
        for (long long k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    /// Canonical forms are unique, so structural comparison decides equality.
    bool operator==(const Scalar&) const = default;

    /// Evaluation at a complex point v0; throws PoleError when the denominator
    /// vanishes there (within floating round-off of the coefficient scale).
    std::complex<double> eval(const std::complex<double>& v0) const {
        const std::complex<double> d = den_.eval(v0);
        const double scale = den_.eval_magnitude_bound(v0);
        if (std::abs(d) <= 1e-12 * std::max(1.0, scale))
            throw PoleError("Scalar: denominator vanishes at evaluation point");
        return num_.eval(v0) / d;
    }

private:
    /// Restores the canonical form invariants.
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rational(1));
            return;
        }
        // Shift all v powers of the denominator into the numerator.
        const int sd = den_.min_exp();
        den_ = den_.shifted(-sd);
        num_ = num_.shifted(-sd);
        // Cancel the polynomial gcd. The gcd has nonzero constant term because
        // it divides the shifted denominator, so the denominator keeps min_exp 0.
        const int sn = num_.min_exp();
        const LaurentPoly g = poly_gcd(num_.shifted(-sn), den_);
        if (!g.is_one()) {
            num_ = exact_divide(num_, g).value();
            den_ = exact_divide(den_, g).value();
        }
        // Monic denominator.
        const Rational lead = den_.coeff(den_.max_exp());
        if (lead != 1) {
            den_ = den_.scaled(Rational(1) / lead);
            num_ = num_.scaled(Rational(1) / lead);
        }
    }

    LaurentPoly num_, den_;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }

/// Context interpreting the formal variable: v is a fixed D-th root of the
/// quantum parameter, q = v^D. Rational powers q^{a/b} exist exactly when b | D.
class ScalarField {
public:
    explicit ScalarField(int root_order) : D_(root_order) {
        if (root_order < 1) throw std::invalid_argument("ScalarField: root order must be >= 1");
    }

    int root_order() const { return D_; }

    Scalar v() const { return v_pow(1); }
    Scalar q() const { return v_pow(D_); }
    Scalar v_pow(long long k) const {
        return Scalar(LaurentPoly::monomial(Rational(1), static_cast<int>(k)));
    }

    bool q_representable(const Rational& r) const { return is_integer(r * D_); }

    /// q^r as a monomial in v. Throws when r is not a multiple of 1/D.
    Scalar q_pow(const Rational& r) const {
        if (!q_representable(r))
            throw std::domain_error("ScalarField: q^(" + to_string(r) + ") needs root order divisible by " +
                                    to_string(denominator(r)));
        return v_pow(to_integer(r * D_));
    }

    /// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
    Scalar q_int(long long n) const {
        if (n == 0) return Scalar();
        const long long a = n < 0 ? -n : n;
        LaurentPoly p;
        for (long long j = 0; j < a; ++j)
            p.add_term(static_cast<int>(D_ * (a - 1 - 2 * j)), Rational(n < 0 ? -1 : 1));
        return Scalar(p);
    }

    Scalar q_factorial(long long a) const {
        if (a < 0) throw std::domain_error("ScalarField: q_factorial of negative argument");
        Scalar r(1);
        for (long long k = 1; k <= a; ++k) r *= q_int(k);
        return r;
    }

    /// Quantum binomial [a][a-1]...[a-n+1] / [n]! for integer a and n >= 0.
    Scalar q_binom(long long a, long long n) const {
        if (n < 0) throw std::domain_error("ScalarField: q_binom with negative lower index");
        Scalar num(1);
        for (long long t = 0; t < n; ++t) num *= q_int(a - t);
        return num / q_factorial(n);
    }

    /// Numeric evaluation at q = q0 via the principal branch v0 = q0^{1/D}.
    std::complex<double> specialize(const Scalar& x, const std::complex<double>& q0) const {
        if (q0 == std::complex<double>(0.0, 0.0))
            throw std::domain_error("ScalarField: cannot specialize at q = 0");
        const std::complex<double> v0 =
            std::polar(std::pow(std::abs(q0), 1.0 / D_), std::arg(q0) / D_);
        return x.eval(v0);
    }

private:
    int D_;
};

inline ScalarField make_field(int root_order) { return ScalarField(root_order); }

// ---------------------------------------------------------------------------
// Textual form. Laurent polynomials print as sums of terms in ascending
// exponent order, e.g. "v^-3 + 2*v^2"; proper fractions as "(num)/(den)".
// parse_scalar accepts exactly this grammar.
// ---------------------------------------------------------------------------

inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += "v";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

inline std::string to_string(const Scalar& x) {
    if (x.is_laurent()) return to_string(x.num());
    return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        skip_ws();
        Scalar r;
        if (peek() == '(') {
            expect('(');
            const LaurentPoly num = parse_poly();
            expect(')');
            skip_ws();
            expect('/');
            skip_ws();
            expect('(');
            const LaurentPoly den = parse_poly();
            expect(')');
            r = Scalar::fraction(num, den);
        } else {
            r = Scalar(parse_poly());
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_scalar: " + what + " at position " + std::to_string(pos_) +
                                    " in \"" + s_ + "\"");
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }

    Integer parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        Integer x = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            x = x * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return x;
    }

    int parse_exponent() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        const Integer e = parse_uint();
        if (e > 1000000) fail("exponent out of range");
        const int v = e.convert_to<int>();
        return neg ? -v : v;
    }

    /// vpow := 'v' ('^' int)?
    int parse_vpow() {
        expect('v');
        if (peek() == '^') {
            ++pos_;
            return parse_exponent();
        }
        return 1;
    }

    /// term := coeff | coeff '*' vpow | vpow, with coeff := uint ('/' uint)?
    void parse_term(LaurentPoly& acc, int sign) {
        if (peek() == 'v') {
            acc.add_term(parse_vpow(), Rational(sign));
            return;
        }
        const Integer num = parse_uint();
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            den = parse_uint();
            if (den == 0) fail("zero coefficient denominator");
        }
        Rational c(num, den);
        if (sign < 0) c = -c;
        if (peek() == '*') {
            ++pos_;
            acc.add_term(parse_vpow(), c);
        } else {
            acc.add_term(0, c);
        }
    }

    LaurentPoly parse_poly() {
        LaurentPoly acc;
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
            skip_ws();
        }
        parse_term(acc, sign);
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            const int s = (peek() == '+') ? 1 : -1;
            ++pos_;
            skip_ws();
            parse_term(acc, s);
            skip_ws();
        }
        return acc;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(const std::string& s) { return detail::ScalarParser(s).parse(); }

inline LaurentPoly parse_laurent(const std::string& s) {
    const Scalar x = parse_scalar(s);
    if (!x.is_laurent()) throw std::invalid_argument("parse_laurent: input is a proper fraction");
    return x.num();
}

}  // namespace gdaha
