#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilborb/scalar.hpp"

namespace hilborb {

/// Dense univariate polynomial over the Scalar field. The variable is
/// contextual (q on the Hilbert side, e^{iu} after substitution).
struct PolyS {
    std::vector<Scalar> c;  // c[k] multiplies x^k

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }

    static PolyS constant(Scalar v) {
        PolyS p;
        if (!v.is_zero()) p.c.push_back(std::move(v));
        return p;
    }
    static PolyS variable() {
        PolyS p;
        p.c = {Scalar::zero(), Scalar::one()};
        return p;
    }

    friend PolyS operator+(const PolyS& a, const PolyS& b) {
        PolyS r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t k = 0; k < r.c.size(); ++k) {
            if (k < a.c.size()) r.c[k] += a.c[k];
            if (k < b.c.size()) r.c[k] += b.c[k];
        }
        r.trim();
        return r;
    }
    friend PolyS operator-(const PolyS& a, const PolyS& b) {
        PolyS r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t k = 0; k < r.c.size(); ++k) {
            if (k < a.c.size()) r.c[k] += a.c[k];
            if (k < b.c.size()) r.c[k] -= b.c[k];
        }
        r.trim();
        return r;
    }
    friend PolyS operator*(const PolyS& a, const PolyS& b) {
        PolyS r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Scalar::zero());
        for (size_t j = 0; j < a.c.size(); ++j) {
            if (a.c[j].is_zero()) continue;
            for (size_t k = 0; k < b.c.size(); ++k) r.c[j + k] += a.c[j] * b.c[k];
        }
        r.trim();
        return r;
    }
    PolyS scaled(const Scalar& s) const {
        PolyS r;
        if (s.is_zero()) return r;
        r.c.reserve(c.size());
        for (auto& x : c) r.c.push_back(x * s);
        return r;
    }
    /// Substitute x -> s*x (each coefficient k picks up s^k).
    PolyS dilated(const Scalar& s) const {
        PolyS r = *this;
        Scalar f = Scalar::one();
        for (size_t k = 1; k < r.c.size(); ++k) {
            f *= s;
            r.c[k] *= f;
        }
        r.trim();
        return r;
    }

    static PolyS rem(PolyS a, const PolyS& b) {
        if (b.is_zero()) throw std::domain_error("PolyS: rem by zero");
        Scalar binv = b.c.back().inverse();
        while (!a.is_zero() && a.deg() >= b.deg()) {
            Scalar f = a.c.back() * binv;
            int shift = a.deg() - b.deg();
            for (int k = 0; k <= b.deg(); ++k) a.c[k + shift] -= f * b.c[k];
            a.trim();
        }
        return a;
    }
    static PolyS gcd(PolyS a, PolyS b) {
        while (!b.is_zero()) {
            PolyS r = rem(std::move(a), b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.scaled(a.c.back().inverse());  // monic
        return a;
    }

    Scalar eval(const Scalar& x) const {
        Scalar v = Scalar::zero();
        for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
        return v;
    }

    friend bool operator==(const PolyS& a, const PolyS& b) { return a.c == b.c; }
    friend bool operator!=(const PolyS& a, const PolyS& b) { return !(a == b); }
};

/// Exact rational function in one formal variable over Scalar, reduced and
/// with monic denominator.
struct RationalQ {
    PolyS num, den;

    RationalQ() : num(), den(PolyS::constant(Scalar::one())) {}
    RationalQ(PolyS n, PolyS d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static RationalQ constant(Scalar v) {
        return RationalQ(PolyS::constant(std::move(v)), PolyS::constant(Scalar::one()));
    }
    static RationalQ variable() {
        return RationalQ(PolyS::variable(), PolyS::constant(Scalar::one()));
    }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("RationalQ: zero denominator");
        if (num.is_zero()) {
            den = PolyS::constant(Scalar::one());
            return;
        }
        PolyS g = PolyS::gcd(num, den);
        if (g.deg() > 0) {
            // exact divisions: subtract quotient*g by long division
            num = divide(num, g);
            den = divide(den, g);
        }
        Scalar lead = den.c.back();
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
    }

    static PolyS divide(PolyS a, const PolyS& b) {
        PolyS q;
        if (a.is_zero()) return q;
        q.c.assign(a.deg() - b.deg() + 1, Scalar::zero());
        Scalar binv = b.c.back().inverse();
        while (!a.is_zero() && a.deg() >= b.deg()) {
            Scalar f = a.c.back() * binv;
            int shift = a.deg() - b.deg();
            q.c[shift] = f;
            for (int k = 0; k <= b.deg(); ++k) a.c[k + shift] -= f * b.c[k];
            a.trim();
        }
        if (!a.is_zero()) throw std::domain_error("RationalQ: inexact division");
        q.trim();
        return q;
    }

    friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
        return RationalQ(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
        return RationalQ(a.num * b.num, a.den * b.den);
    }

    bool is_zero() const { return num.is_zero(); }

    /// Coefficients of the Taylor expansion at 0 up to given order.
    /// Requires den(0) != 0.
    std::vector<Scalar> expand(int order) const {
        if (den.c.empty() || den.c[0].is_zero())
            throw std::domain_error("RationalQ: pole at 0, cannot expand");
        std::vector<Scalar> out(order + 1, Scalar::zero());
        Scalar d0inv = den.c[0].inverse();
        for (int k = 0; k <= order; ++k) {
            Scalar acc = k <= num.deg() ? num.c[k] : Scalar::zero();
            for (int j = 1; j <= std::min(k, den.deg()); ++j)
                acc -= den.c[j] * out[k - j];
            out[k] = acc * d0inv;
        }
        return out;
    }

    Scalar value_at_zero() const {
        if (den.c.empty() || den.c[0].is_zero())
            throw std::domain_error("RationalQ: pole at 0");
        return (num.c.empty() ? Scalar::zero() : num.c[0]) * den.c[0].inverse();
    }

    friend bool operator==(const RationalQ& a, const RationalQ& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RationalQ& a, const RationalQ& b) { return !(a == b); }
};

/// Truncated formal series with Scalar coefficients; optionally carries an
/// exact rational form whose expansion matches the stored coefficients.
struct QSeries {
    std::vector<Scalar> coeffs;  // indexed by exponent 0..order
    int order = 0;
    std::optional<RationalQ> exact;

    QSeries() : coeffs(1, Scalar::zero()), order(0) {}
    QSeries(std::vector<Scalar> c, int ord) : coeffs(std::move(c)), order(ord) {
        coeffs.resize(order + 1, Scalar::zero());
    }

    static QSeries zero(int order) {
        QSeries s(std::vector<Scalar>(order + 1, Scalar::zero()), order);
        s.exact = RationalQ();  // exactly zero
        return s;
    }
    static QSeries constant(Scalar v, int order) {
        QSeries s(std::vector<Scalar>(order + 1, Scalar::zero()), order);
        s.coeffs[0] = v;
        return s;
    }
    static QSeries one(int order) {
        QSeries s = constant(Scalar::one(), order);
        s.exact = RationalQ::constant(Scalar::one());
        return s;
    }
    static QSeries from_exact(RationalQ r, int order) {
        QSeries s(r.expand(order), order);
        s.exact = std::move(r);
        return s;
    }

    const Scalar& coeff(int d) const {
        if (d < 0 || d > order) throw std::out_of_range("QSeries: coefficient index");
        return coeffs[d];
    }

    bool coeffs_zero() const {
        for (auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Exact form must reproduce the truncated coefficients when present.
    bool consistent() const {
        if (!exact) return true;
        auto e = exact->expand(order);
        for (int k = 0; k <= order; ++k)
            if (e[k] != coeffs[k]) return false;
        return true;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order == b.order && a.coeffs == b.coeffs && a.exact == b.exact;
    }
};

/// Cauchy product truncated at min(order_a, order_b); exact forms multiply
/// when both operands carry one.
inline QSeries qseries_mul(const QSeries& a, const QSeries& b) {
    int ord = std::min(a.order, b.order);
    std::vector<Scalar> c(ord + 1, Scalar::zero());
    for (int d = 0; d <= ord; ++d)
        for (int j = 0; j <= d; ++j) c[d] += a.coeffs[j] * b.coeffs[d - j];
    QSeries r(std::move(c), ord);
    if (a.exact && b.exact) r.exact = *a.exact * *b.exact;
    return r;
}

inline QSeries qseries_add(const QSeries& a, const QSeries& b) {
    int ord = std::min(a.order, b.order);
    std::vector<Scalar> c(ord + 1, Scalar::zero());
    for (int d = 0; d <= ord; ++d) c[d] = a.coeffs[d] + b.coeffs[d];
    QSeries r(std::move(c), ord);
    if (a.exact && b.exact) r.exact = *a.exact + *b.exact;
    return r;
}

}  // namespace hilborb
