#pragma once

// Exact scalars in the cyclotomic field Q(zeta_N), plus a complex-double
// fallback for numeric cocycle tables.
//
// An exact scalar is a polynomial in zeta_N with rational coefficients,
// reduced modulo the N-th cyclotomic polynomial Phi_N. Q[x]/(Phi_N) is a
// field, so every nonzero value is invertible.

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinsum/error.hpp"

namespace spinsum {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

// Integer polynomials, little-endian coefficient order.
using IPoly = std::vector<boost::multiprecision::cpp_int>;

inline IPoly ipoly_trim(IPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division of integer polynomials; remainder must vanish.
inline IPoly ipoly_div_exact(IPoly num, const IPoly& den) {
    IPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
    for (int i = static_cast<int>(num.size()) - 1;
         i >= static_cast<int>(den.size()) - 1; --i) {
        if (num[i] == 0) continue;
        auto c = num[i] / den.back();
        int shift = i - static_cast<int>(den.size()) + 1;
        q[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num = ipoly_trim(std::move(num));
    if (!num.empty()) throw Error(ErrorKind::Arithmetic, "non-exact polynomial division");
    return ipoly_trim(std::move(q));
}

// Phi_N by dividing x^N - 1 by the cyclotomic polynomials of proper divisors.
inline const IPoly& cyclotomic_poly(int n) {
    static std::map<int, IPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IPoly xn1(n + 1, 0);
    xn1[0] = -1;
    xn1[n] = 1;
    IPoly acc = std::move(xn1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        acc = ipoly_div_exact(std::move(acc), cyclotomic_poly(d));
    }
    return cache.emplace(n, ipoly_trim(std::move(acc))).first->second;
}

using QPoly = std::vector<Rational>;

inline QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return qpoly_trim(std::move(out));
}

inline QPoly qpoly_mod(QPoly p, const QPoly& m) {
    while (p.size() >= m.size()) {
        Rational c = p.back() / m.back();
        std::size_t shift = p.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) p[shift + j] -= c * m[j];
        p = qpoly_trim(std::move(p));
        if (p.empty()) break;
    }
    return p;
}

// (quotient, remainder) over Q[x]
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly p, const QPoly& m) {
    QPoly q(p.size() >= m.size() ? p.size() - m.size() + 1 : 0, 0);
    while (p.size() >= m.size() && !p.empty()) {
        Rational c = p.back() / m.back();
        std::size_t shift = p.size() - m.size();
        q[shift] = c;
        for (std::size_t j = 0; j < m.size(); ++j) p[shift + j] -= c * m[j];
        p = qpoly_trim(std::move(p));
    }
    return {qpoly_trim(std::move(q)), std::move(p)};
}

inline QPoly qpoly_of(const IPoly& p) {
    QPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i]);
    return out;
}

// Inverse of a mod m via extended Euclid in Q[x]; m irreducible, a != 0.
inline QPoly qpoly_invmod(QPoly a, const QPoly& m) {
    QPoly r0 = m, r1 = std::move(a);
    QPoly t0 = {}, t1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = qpoly_divmod(r0, r1);
        QPoly t2 = t0;
        QPoly qt = qpoly_mul(q, t1);
        t2.resize(std::max(t2.size(), qt.size()), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        t2 = qpoly_trim(std::move(t2));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a nonzero constant since m is irreducible and a != 0 mod m)
    if (r0.size() != 1) throw Error(ErrorKind::Arithmetic, "inverse does not exist");
    QPoly out = std::move(t0);
    for (auto& c : out) c /= r0[0];
    return qpoly_trim(std::move(out));
}

}  // namespace detail

// Exact element of Q(zeta_N): coefficients of 1, zeta, ..., zeta^{deg-1}
// where deg = deg Phi_N.
class CycNumber {
public:
    CycNumber() : n_(1) {}  // zero in Q(zeta_1) = Q

    static CycNumber zero(int n) { return CycNumber(n, {}); }

    static CycNumber integer(int n, long v) {
        if (v == 0) return zero(n);
        return CycNumber(n, {Rational(v)});
    }

    static CycNumber rational(int n, Rational v) {
        if (v == 0) return zero(n);
        return CycNumber(n, {std::move(v)});
    }

    // zeta_N^k
    static CycNumber root_power(int n, long k) {
        if (n < 1) throw Error(ErrorKind::Usage, "root order must be positive");
        k %= n;
        if (k < 0) k += n;
        detail::QPoly p(static_cast<std::size_t>(k) + 1, 0);
        p.back() = 1;
        return CycNumber(n, std::move(p));
    }

    static CycNumber from_coeffs(int n, std::vector<Rational> coeffs) {
        if (n < 1) throw Error(ErrorKind::Usage, "root order must be positive");
        return CycNumber(n, detail::QPoly(coeffs.begin(), coeffs.end()));
    }

    int root_order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        auto [x, y] = align(a, b);
        detail::QPoly out = x.c_;
        out.resize(std::max(out.size(), y.c_.size()), 0);
        for (std::size_t i = 0; i < y.c_.size(); ++i) out[i] += y.c_[i];
        return CycNumber(x.n_, detail::qpoly_trim(std::move(out)));
    }

    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
        auto [x, y] = align(a, b);
        detail::QPoly out = x.c_;
        out.resize(std::max(out.size(), y.c_.size()), 0);
        for (std::size_t i = 0; i < y.c_.size(); ++i) out[i] -= y.c_[i];
        return CycNumber(x.n_, detail::qpoly_trim(std::move(out)));
    }

    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        auto [x, y] = align(a, b);
        return CycNumber(x.n_, detail::qpoly_mul(x.c_, y.c_));
    }

    CycNumber inverse() const {
        if (is_zero()) throw Error(ErrorKind::Arithmetic, "inverting zero scalar");
        return CycNumber(n_, detail::qpoly_invmod(c_, detail::qpoly_of(detail::cyclotomic_poly(n_))));
    }

    CycNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNumber acc = integer(n_, 1);
        CycNumber base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        // keep the root order of *this even for e = 0
        acc.n_ = n_;
        return acc;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        auto [x, y] = align(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        constexpr double kTau = 6.283185307179586476925286766559;
        std::complex<double> z{0.0, 0.0};
        for (std::size_t i = 0; i < c_.size(); ++i) {
            double coeff = static_cast<double>(c_[i]);
            double ang = kTau * static_cast<double>(i) / n_;
            z += coeff * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0) os << "-";
            Rational a = c_[i] > 0 ? c_[i] : Rational(-c_[i]);
            bool unit_coeff = (a == 1) && i > 0;
            if (!unit_coeff) os << a.str();
            if (i > 0) {
                if (!unit_coeff) os << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    CycNumber(int n, detail::QPoly c) : n_(n) {
        const auto& phi = detail::cyclotomic_poly(n);
        c_ = detail::qpoly_mod(std::move(c), detail::qpoly_of(phi));
    }

    // bring two numbers into a common root order (lcm); mixed orders are
    // allowed only when one embeds in the other or in their lcm
    static std::pair<CycNumber, CycNumber> align(const CycNumber& a, const CycNumber& b) {
        if (a.n_ == b.n_) return {a, b};
        long l = std::lcm(static_cast<long>(a.n_), static_cast<long>(b.n_));
        return {a.embed(static_cast<int>(l)), b.embed(static_cast<int>(l))};
    }

    CycNumber embed(int m) const {
        if (m == n_) return *this;
        if (m % n_ != 0)
            throw Error(ErrorKind::Arithmetic, "incompatible root orders " +
                                                   std::to_string(n_) + " and " + std::to_string(m));
        int k = m / n_;
        detail::QPoly out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            std::size_t j = i * static_cast<std::size_t>(k);
            if (out.size() <= j) out.resize(j + 1, 0);
            out[j] += c_[i];
        }
        return CycNumber(m, std::move(out));
    }

    int n_;
    detail::QPoly c_;
};

// A scalar is either exact (cyclotomic) or a complex double.
class Scalar {
public:
    Scalar() : v_(CycNumber::integer(1, 0)) {}

    static Scalar exact(CycNumber c) { return Scalar(std::move(c)); }
    static Scalar approx(std::complex<double> z) { return Scalar(z); }
    static Scalar one() { return Scalar(CycNumber::integer(1, 1)); }
    static Scalar zero() { return Scalar(CycNumber::integer(1, 0)); }

    bool is_exact() const { return std::holds_alternative<CycNumber>(v_); }
    const CycNumber& exact_value() const { return std::get<CycNumber>(v_); }

    std::complex<double> to_complex() const {
        if (is_exact()) return exact_value().to_complex();
        return std::get<std::complex<double>>(v_);
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.exact_value() * b.exact_value());
        return Scalar(a.to_complex() * b.to_complex());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.exact_value() + b.exact_value());
        return Scalar(a.to_complex() + b.to_complex());
    }

    Scalar inverse() const {
        if (is_exact()) return Scalar(exact_value().inverse());
        auto z = to_complex();
        if (std::abs(z) == 0.0) throw Error(ErrorKind::Arithmetic, "inverting zero scalar");
        return Scalar(1.0 / z);
    }

    Scalar pow(long e) const {
        if (is_exact()) return Scalar(exact_value().pow(e));
        return Scalar(std::pow(to_complex(), static_cast<double>(e)));
    }

    bool is_zero() const {
        if (is_exact()) return exact_value().is_zero();
        return std::abs(to_complex()) < 1e-12;
    }

    // exact equality in exact mode, 1e-9 tolerance otherwise
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact_value() == b.exact_value();
        return std::abs(a.to_complex() - b.to_complex()) < 1e-9;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        if (is_exact()) return exact_value().str();
        std::ostringstream os;
        auto z = to_complex();
        os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
        return os.str();
    }

private:
    explicit Scalar(CycNumber c) : v_(std::move(c)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}

    std::variant<CycNumber, std::complex<double>> v_;
};

}  // namespace spinsum
