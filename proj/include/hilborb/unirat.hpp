#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hilborb/scalar.hpp"

namespace hilborb {

/// Dense polynomial in one indeterminate over Q. Coefficient workhorse for
/// the generic Jack-parameter computations; the indeterminate is bound to a
/// concrete Scalar only at the end.
struct UniPoly {
    std::vector<Rat> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    static UniPoly constant(Rat v) {
        UniPoly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }
    static UniPoly variable() {
        UniPoly p;
        p.c = {Rat(0), Rat(1)};
        return p;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t j = 0; j < a.c.size(); ++j) {
            if (a.c[j] == 0) continue;
            for (size_t k = 0; k < b.c.size(); ++k) r.c[j + k] += a.c[j] * b.c[k];
        }
        r.trim();
        return r;
    }
    UniPoly scaled(const Rat& s) const {
        UniPoly r;
        if (s == 0) return r;
        r.c.reserve(c.size());
        for (auto& x : c) r.c.push_back(x * s);
        return r;
    }

    static UniPoly div_exact(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
        UniPoly q;
        if (a.is_zero()) return q;
        q.c.assign(a.deg() - b.deg() + 1, Rat(0));
        Rat binv = 1 / b.c.back();
        while (!a.is_zero() && a.deg() >= b.deg()) {
            Rat f = a.c.back() * binv;
            int shift = a.deg() - b.deg();
            q.c[shift] = f;
            for (int k = 0; k <= b.deg(); ++k) a.c[k + shift] -= f * b.c[k];
            a.trim();
        }
        if (!a.is_zero()) throw std::domain_error("UniPoly: inexact division");
        q.trim();
        return q;
    }

    /// Monic gcd via fraction-free PRS over Z.
    static UniPoly gcd(const UniPoly& A, const UniPoly& B) {
        if (A.is_zero()) return B.is_zero() ? B : B.scaled(1 / B.c.back());
        if (B.is_zero()) return A.scaled(1 / A.c.back());
        auto to_int = [](const UniPoly& p) {
            Int l(1);
            for (auto& x : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
            std::vector<Int> v;
            v.reserve(p.c.size());
            for (auto& x : p.c) v.push_back(Int(x.get_num() * (l / x.get_den())));
            // strip integer content
            Int g(0);
            for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1)
                for (auto& x : v) x /= g;
            return v;
        };
        auto prem = [](std::vector<Int> a, const std::vector<Int>& b) {
            while (a.size() >= b.size() && !a.empty()) {
                Int la = a.back();
                const Int& lb = b.back();
                size_t shift = a.size() - b.size();
                std::vector<Int> next(a.size() - 1);
                for (size_t k = 0; k + 1 < a.size(); ++k) {
                    Int term = a[k] * lb;
                    if (k >= shift && k - shift < b.size() - 1) term -= la * b[k - shift];
                    next[k] = std::move(term);
                }
                while (!next.empty() && next.back() == 0) next.pop_back();
                a = std::move(next);
            }
            return a;
        };
        auto strip = [](std::vector<Int>& v) {
            Int g(0);
            for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1)
                for (auto& x : v) x /= g;
        };
        std::vector<Int> a = to_int(A), b = to_int(B);
        if (a.size() < b.size()) std::swap(a, b);
        while (!b.empty()) {
            auto r = prem(a, b);
            strip(r);
            a = std::move(b);
            b = std::move(r);
        }
        UniPoly g;
        g.c.reserve(a.size());
        for (auto& x : a) g.c.push_back(Rat(x));
        if (!g.is_zero()) g = g.scaled(1 / g.c.back());
        return g;
    }

    /// Horner evaluation with Scalar argument.
    Scalar eval(const Scalar& x) const {
        Scalar v;
        for (size_t k = c.size(); k-- > 0;) {
            v = v * x;
            if (c[k] != 0) v += Scalar(GaussRat(c[k]));
        }
        return v;
    }
    Rat eval_rat(const Rat& x) const {
        Rat v(0);
        for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
        return v;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
};

/// Element of Q(x), reduced with monic denominator.
struct UniRat {
    UniPoly num, den;

    UniRat() : num(), den(UniPoly::constant(Rat(1))) {}
    UniRat(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    static UniRat of(Rat v) { return UniRat(UniPoly::constant(std::move(v)), UniPoly::constant(Rat(1))); }
    static UniRat variable() { return UniRat(UniPoly::variable(), UniPoly::constant(Rat(1))); }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_one(); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("UniRat: zero denominator");
        if (num.is_zero()) {
            den = UniPoly::constant(Rat(1));
            return;
        }
        UniPoly g = UniPoly::gcd(num, den);
        if (g.deg() > 0) {
            num = UniPoly::div_exact(std::move(num), g);
            den = UniPoly::div_exact(std::move(den), g);
        }
        Rat lead = den.c.back();
        if (lead != 1) {
            num = num.scaled(1 / lead);
            den = den.scaled(1 / lead);
        }
    }

    friend UniRat operator+(const UniRat& a, const UniRat& b) {
        return UniRat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend UniRat operator-(const UniRat& a, const UniRat& b) {
        return UniRat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend UniRat operator*(const UniRat& a, const UniRat& b) {
        return UniRat(a.num * b.num, a.den * b.den);
    }
    friend UniRat operator/(const UniRat& a, const UniRat& b) {
        if (b.is_zero()) throw std::domain_error("UniRat: division by zero");
        return UniRat(a.num * b.den, a.den * b.num);
    }
    friend UniRat operator-(const UniRat& a) {
        UniRat r = a;
        r.num = UniPoly() - r.num;
        return r;
    }
    UniRat& operator+=(const UniRat& o) { return *this = *this + o; }
    UniRat& operator-=(const UniRat& o) { return *this = *this - o; }
    UniRat& operator*=(const UniRat& o) { return *this = *this * o; }

    /// Bind the indeterminate to a Scalar value. Throws if the denominator
    /// vanishes there.
    Scalar eval(const Scalar& x) const {
        Scalar d = den.eval(x);
        if (d.is_zero()) throw std::domain_error("UniRat: denominator vanishes at argument");
        return num.eval(x) / d;
    }

    friend bool operator==(const UniRat& a, const UniRat& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace hilborb
