#pragma once

#include "gdaha/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gdaha {

/// Sparse Laurent polynomial in one formal variable v with exact rational
/// coefficients. Invariant: every stored coefficient is nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (c != 0) c_[0] = c;
    }
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, int e) {
        LaurentPoly p;
        if (c != 0) p.c_[e] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    bool is_one() const { return is_constant() && coeff(0) == 1; }

    int min_exp() const { return c_.begin()->first; }    // pre: !is_zero()
    int max_exp() const { return c_.rbegin()->first; }   // pre: !is_zero()

    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& terms() const { return c_; }

    void add_term(int e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = c_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly&) const = default;

    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    /// Scales every coefficient by a nonzero rational.
    LaurentPoly scaled(const Rational& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : c_) r.c_[e] = c * s;
        return r;
    }

    std::complex<double> eval(const std::complex<double>& v) const {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : c_) acc += to_double(c) * ipow(v, e);
        return acc;
    }

    /// Upper bound sum |c_e| * |v|^e, used for pole detection scale.
    double eval_magnitude_bound(const std::complex<double>& v) const {
        double acc = 0.0;
        const double av = std::abs(v);
        for (const auto& [e, c] : c_) acc += std::abs(to_double(c)) * std::pow(av, e);
        return acc;
    }

    static std::complex<double> ipow(const std::complex<double>& v, long long e) {
        if (e < 0) return 1.0 / ipow(v, -e);
        std::complex<double> base = v, acc(1.0, 0.0);
        for (long long k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

private:
    std::map<int, Rational> c_;
};

namespace detail {

/// Dense coefficient view of an ordinary polynomial (min_exp >= 0).
inline std::vector<Rational> to_dense(const LaurentPoly& p) {
    std::vector<Rational> d;
    if (p.is_zero()) return d;
    d.assign(static_cast<std::size_t>(p.max_exp()) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e)] = c;
    return d;
}

inline LaurentPoly from_dense(const std::vector<Rational>& d) {
    LaurentPoly p;
    for (std::size_t e = 0; e < d.size(); ++e) p.add_term(static_cast<int>(e), d[e]);
    return p;
}

inline void trim(std::vector<Rational>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

/// Ordinary polynomial division: a = q*b + r with deg r < deg b. Pre: b nonzero.
inline void divmod(std::vector<Rational> a, const std::vector<Rational>& b,
                   std::vector<Rational>& q, std::vector<Rational>& r) {
    trim(a);
    q.assign(a.size() >= b.size() && !a.empty() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    r = std::move(a);
}

}  // namespace detail

/// Monic gcd of two ordinary polynomials (min_exp >= 0; zero allowed).
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<Rational> x = detail::to_dense(a), y = detail::to_dense(b);
    while (!y.empty()) {
        std::vector<Rational> q, r;
        detail::divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return LaurentPoly();
    const Rational lead = x.back();
    for (auto& c : x) c /= lead;
    return detail::from_dense(x);
}

/// Exact Laurent division a/b, or nullopt when b does not divide a. Pre: b nonzero.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return LaurentPoly();
    const int sa = a.min_exp(), sb = b.min_exp();
    std::vector<Rational> q, r;
    detail::divmod(detail::to_dense(a.shifted(-sa)), detail::to_dense(b.shifted(-sb)), q, r);
    if (!r.empty()) return std::nullopt;
    return detail::from_dense(q).shifted(sa - sb);
}

}  // namespace gdaha
