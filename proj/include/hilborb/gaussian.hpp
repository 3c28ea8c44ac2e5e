#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilborb {

using Rat = mpq_class;
using Int = mpz_class;

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat conj() const { return GaussRat(re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
        Rat a = re * o.re - im * o.im;
        Rat b = re * o.im + im * o.re;
        re = std::move(a);
        im = std::move(b);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inverse() const {
        Rat n = re * re + im * im;
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return GaussRat(re / n, -im / n);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// i^k for any integer k.
inline GaussRat i_pow(long k) {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
        case 0: return GaussRat(1);
        case 1: return GaussRat(Rat(0), Rat(1));
        case 2: return GaussRat(-1);
        default: return GaussRat(Rat(0), Rat(-1));
    }
}

// gcd in Z[i] (Euclidean by norm); result is some associate, caller canonicalizes.
struct GaussInt {
    Int re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GaussInt gi_sub(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re - b.re, a.im - b.im};
}

// Nearest-integer quotient, remainder norm strictly decreases.
inline GaussInt gi_divround(const GaussInt& a, const GaussInt& b) {
    Int n = b.re * b.re + b.im * b.im;
    Int xr = a.re * b.re + a.im * b.im;
    Int xi = a.im * b.re - a.re * b.im;
    auto round_div = [](const Int& p, const Int& q) {
        Int r2 = 2 * p + q;  // round(p/q) = floor((2p+q)/(2q)) for q>0
        Int d;
        mpz_fdiv_q(d.get_mpz_t(), r2.get_mpz_t(), Int(2 * q).get_mpz_t());
        return d;
    };
    return GaussInt{round_div(xr, n), round_div(xi, n)};
}

inline GaussInt gi_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        GaussInt q = gi_divround(a, b);
        GaussInt r = gi_sub(a, gi_mul(q, b));
        a = b;
        b = r;
    }
    return a;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace hilborb
