#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilborb/gaussian.hpp"

namespace hilborb {

namespace detail {

/// Dense univariate polynomial over Z[i]; the coefficient ring of the
/// fraction-free bivariate gcd (t2 outer, t1 inner).
struct Poly1Z {
    std::vector<GaussInt> c;  // c[k] multiplies t1^k

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const GaussInt& lc() const { return c.back(); }
    bool is_unit() const {
        if (c.size() != 1) return false;
        Int n = c[0].re * c[0].re + c[0].im * c[0].im;
        return n == 1;
    }

    friend Poly1Z operator*(const Poly1Z& a, const Poly1Z& b) {
        Poly1Z r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, GaussInt{Int(0), Int(0)});
        for (size_t j = 0; j < a.c.size(); ++j) {
            if (a.c[j].is_zero()) continue;
            for (size_t k = 0; k < b.c.size(); ++k) {
                GaussInt p = gi_mul(a.c[j], b.c[k]);
                r.c[j + k].re += p.re;
                r.c[j + k].im += p.im;
            }
        }
        r.trim();
        return r;
    }
    friend Poly1Z operator-(const Poly1Z& a, const Poly1Z& b) {
        Poly1Z r;
        r.c.assign(std::max(a.c.size(), b.c.size()), GaussInt{Int(0), Int(0)});
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = gi_sub(r.c[k], b.c[k]);
        r.trim();
        return r;
    }
    Poly1Z scaled(const GaussInt& s) const {
        Poly1Z r;
        if (s.is_zero()) return r;
        r.c.reserve(c.size());
        for (auto& x : c) r.c.push_back(gi_mul(x, s));
        return r;
    }

    GaussInt content() const {
        GaussInt g{Int(0), Int(0)};
        for (auto& x : c) {
            if (x.is_zero()) continue;
            g = g.is_zero() ? x : gi_gcd(g, x);
            if (!g.is_zero()) {
                Int n = g.re * g.re + g.im * g.im;
                if (n == 1) break;
            }
        }
        return g;
    }

    static GaussInt gi_div_exact(const GaussInt& a, const GaussInt& d) {
        Int n = d.re * d.re + d.im * d.im;
        Int xr = a.re * d.re + a.im * d.im;
        Int xi = a.im * d.re - a.re * d.im;
        Int qr, rr, qi, ri;
        mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), xr.get_mpz_t(), n.get_mpz_t());
        mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), xi.get_mpz_t(), n.get_mpz_t());
        if (rr != 0 || ri != 0) throw std::domain_error("Z[i]: inexact division");
        return GaussInt{qr, qi};
    }

    Poly1Z divided_by(const GaussInt& d) const {
        Poly1Z r;
        r.c.reserve(c.size());
        for (auto& x : c) r.c.push_back(gi_div_exact(x, d));
        return r;
    }

    /// Exact quotient by another polynomial (throws if not divisible).
    static Poly1Z div_exact(Poly1Z a, const Poly1Z& b) {
        if (b.is_zero()) throw std::domain_error("Poly1Z: division by zero");
        Poly1Z q;
        if (a.is_zero()) return q;
        if (a.deg() < b.deg()) throw std::domain_error("Poly1Z: inexact division");
        q.c.assign(a.deg() - b.deg() + 1, GaussInt{Int(0), Int(0)});
        while (!a.is_zero() && a.deg() >= b.deg()) {
            GaussInt f = gi_div_exact(a.lc(), b.lc());
            int shift = a.deg() - b.deg();
            q.c[shift] = f;
            for (int k = 0; k <= b.deg(); ++k) {
                GaussInt p = gi_mul(f, b.c[k]);
                a.c[k + shift] = gi_sub(a.c[k + shift], p);
            }
            a.trim();
        }
        if (!a.is_zero()) throw std::domain_error("Poly1Z: inexact division");
        q.trim();
        return q;
    }

    // Pseudo-remainder; content is stripped by callers, so the exact
    // pseudo-multiplier does not matter.
    static Poly1Z prem(Poly1Z a, const Poly1Z& b) {
        while (!a.is_zero() && a.deg() >= b.deg()) {
            GaussInt la = a.lc();
            const GaussInt& lb = b.lc();
            int shift = a.deg() - b.deg();
            Poly1Z next;
            next.c.assign(a.c.size() - 1, GaussInt{Int(0), Int(0)});
            for (int k = 0; k < static_cast<int>(a.c.size()) - 1; ++k) {
                GaussInt term = gi_mul(a.c[k], lb);
                int j = k - shift;
                if (j >= 0 && j < static_cast<int>(b.c.size()))
                    term = gi_sub(term, gi_mul(la, b.c[j]));
                next.c[k] = std::move(term);
            }
            next.trim();
            a = std::move(next);
        }
        return a;
    }

    Poly1Z primitive() const {
        if (is_zero()) return *this;
        GaussInt g = content();
        return divided_by(g);
    }

    static Poly1Z gcd(const Poly1Z& A, const Poly1Z& B) {
        if (A.is_zero()) return B;
        if (B.is_zero()) return A;
        GaussInt cg = gi_gcd(A.content(), B.content());
        Poly1Z a = A.primitive(), b = B.primitive();
        if (a.deg() < b.deg()) std::swap(a, b);
        while (!b.is_zero()) {
            Poly1Z r = prem(a, b);
            a = std::move(b);
            b = r.primitive();
        }
        return a.primitive().scaled(cg);
    }
};

}  // namespace detail

/// Bivariate polynomial in t1, t2 over Q(i), sparse storage.
/// Terms kept sorted by descending lex exponent (t1 before t2),
/// no zero coefficients stored.
struct Poly2 {
    struct Term {
        int a, b;  // exponent of t1^a t2^b
        GaussRat c;
    };
    std::vector<Term> terms;

    static bool exp_less(int a1, int b1, int a2, int b2) {
        return a1 != a2 ? a1 < a2 : b1 < b2;
    }

    void normalize() {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
            return exp_less(y.a, y.b, x.a, x.b);  // descending
        });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().a == t.a && out.back().b == t.b)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return t.c.is_zero(); }),
                  out.end());
        terms = std::move(out);
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms[0].a == 0 && terms[0].b == 0);
    }
    bool is_one() const {
        return terms.size() == 1 && terms[0].a == 0 && terms[0].b == 0 && terms[0].c.is_one();
    }
    bool is_monomial() const { return terms.size() == 1; }
    const Term& lead() const { return terms.front(); }

    int total_degree() const {
        int d = -1;
        for (auto& t : terms) d = std::max(d, t.a + t.b);
        return d;
    }
    bool homogeneous() const {
        if (terms.empty()) return true;
        int d = terms[0].a + terms[0].b;
        for (auto& t : terms)
            if (t.a + t.b != d) return false;
        return true;
    }

    static Poly2 zero() { return Poly2{}; }
    static Poly2 constant(GaussRat v) {
        Poly2 p;
        if (!v.is_zero()) p.terms.push_back({0, 0, std::move(v)});
        return p;
    }
    static Poly2 one() { return constant(GaussRat(1)); }
    static Poly2 monomial(int a, int b, GaussRat v) {
        Poly2 p;
        if (!v.is_zero()) p.terms.push_back({a, b, std::move(v)});
        return p;
    }
    static Poly2 t1() { return monomial(1, 0, GaussRat(1)); }
    static Poly2 t2() { return monomial(0, 1, GaussRat(1)); }
    /// c1*t1 + c2*t2
    static Poly2 linear(long c1, long c2) {
        Poly2 p;
        if (c1 != 0) p.terms.push_back({1, 0, GaussRat(c1)});
        if (c2 != 0) p.terms.push_back({0, 1, GaussRat(c2)});
        return p;
    }

    friend Poly2 operator-(const Poly2& a) {
        Poly2 r = a;
        for (auto& t : r.terms) t.c = -t.c;
        return r;
    }
    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r;
        r.terms.reserve(a.terms.size() + b.terms.size());
        size_t i = 0, j = 0;
        while (i < a.terms.size() && j < b.terms.size()) {
            const Term& x = a.terms[i];
            const Term& y = b.terms[j];
            if (x.a == y.a && x.b == y.b) {
                GaussRat s = x.c + y.c;
                if (!s.is_zero()) r.terms.push_back({x.a, x.b, std::move(s)});
                ++i, ++j;
            } else if (exp_less(y.a, y.b, x.a, x.b)) {
                r.terms.push_back(x);
                ++i;
            } else {
                r.terms.push_back(y);
                ++j;
            }
        }
        for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
        for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
        return r;
    }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        if (a.is_zero() || b.is_zero()) return r;
        r.terms.reserve(a.terms.size() * b.terms.size());
        for (auto& x : a.terms)
            for (auto& y : b.terms)
                r.terms.push_back({x.a + y.a, x.b + y.b, x.c * y.c});
        r.normalize();
        return r;
    }
    Poly2 scaled(const GaussRat& s) const {
        Poly2 r;
        if (s.is_zero()) return r;
        r.terms.reserve(terms.size());
        for (auto& t : terms) r.terms.push_back({t.a, t.b, t.c * s});
        return r;
    }
    Poly2 shifted(int da, int db) const {  // multiply by t1^da t2^db
        Poly2 r = *this;
        for (auto& t : r.terms) {
            t.a += da;
            t.b += db;
        }
        return r;
    }
    Poly2 pow(int e) const {
        Poly2 r = one();
        Poly2 base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly2& a, const Poly2& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (size_t k = 0; k < a.terms.size(); ++k) {
            const Term &x = a.terms[k], &y = b.terms[k];
            if (x.a != y.a || x.b != y.b || x.c != y.c) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    // Exact quotient in lex order; the leading term of an exact multiple is
    // always reducible, so the loop cannot stall.
    static Poly2 div_exact(Poly2 r, const Poly2& d) {
        if (d.is_zero()) throw std::domain_error("Poly2: division by zero");
        if (d.is_one()) return r;
        if (d.is_monomial()) {
            const Term& ld = d.lead();
            GaussRat dinv = ld.c.inverse();
            for (auto& t : r.terms) {
                if (t.a < ld.a || t.b < ld.b)
                    throw std::domain_error("Poly2: inexact division");
                t.a -= ld.a;
                t.b -= ld.b;
                t.c *= dinv;
            }
            return r;
        }
        Poly2 q;
        GaussRat dinv = d.lead().c.inverse();
        while (!r.is_zero()) {
            const Term& lr = r.lead();
            const Term& ld = d.lead();
            if (lr.a < ld.a || lr.b < ld.b)
                throw std::domain_error("Poly2: inexact division");
            Term qt{lr.a - ld.a, lr.b - ld.b, lr.c * dinv};
            q.terms.push_back(qt);
            Poly2 m;
            m.terms.push_back(qt);
            r = r - m * d;
        }
        q.normalize();
        return q;
    }

    /// Monic (leading lex coefficient 1) gcd over Q(i)[t1,t2].
    static Poly2 gcd(const Poly2& A, const Poly2& B);
};

namespace detail {

// Clear rational denominators: the gcd is only defined up to constants.
inline std::vector<Poly1Z> to_t2_major_z(const Poly2& p) {
    Int l(1);
    for (auto& t : p.terms) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.re.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.im.get_den().get_mpz_t());
    }
    int dmax = 0;
    for (auto& t : p.terms) dmax = std::max(dmax, t.b);
    std::vector<Poly1Z> out(static_cast<size_t>(dmax) + 1);
    for (auto& t : p.terms) {
        auto& q = out[t.b];
        if (static_cast<int>(q.c.size()) <= t.a)
            q.c.resize(t.a + 1, GaussInt{Int(0), Int(0)});
        q.c[t.a] = GaussInt{Int(t.c.re.get_num() * (l / t.c.re.get_den())),
                            Int(t.c.im.get_num() * (l / t.c.im.get_den()))};
    }
    for (auto& q : out) q.trim();
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

inline Poly2 from_t2_major_z(const std::vector<Poly1Z>& v) {
    Poly2 p;
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t a = 0; a < v[j].c.size(); ++a)
            if (!v[j].c[a].is_zero())
                p.terms.push_back({static_cast<int>(a), static_cast<int>(j),
                                   GaussRat(Rat(v[j].c[a].re), Rat(v[j].c[a].im))});
    p.normalize();
    return p;
}

inline Poly1Z content_t1(const std::vector<Poly1Z>& v) {
    Poly1Z g;
    for (auto& q : v) {
        if (q.is_zero()) continue;
        g = g.is_zero() ? q : Poly1Z::gcd(g, q);
        if (g.deg() == 0 && g.is_unit()) break;
    }
    return g;
}

inline std::vector<Poly1Z> divide_coeffs(std::vector<Poly1Z> v, const Poly1Z& d) {
    if (d.deg() == 0) {
        for (auto& q : v)
            if (!q.is_zero()) q = q.divided_by(d.c[0]);
        return v;
    }
    for (auto& q : v)
        if (!q.is_zero()) q = Poly1Z::div_exact(std::move(q), d);
    return v;
}

inline int deg2(const std::vector<Poly1Z>& v) { return static_cast<int>(v.size()) - 1; }

// Pseudo-remainder in (Z[i][t1])[t2].
inline std::vector<Poly1Z> prem2(std::vector<Poly1Z> a, const std::vector<Poly1Z>& b) {
    while (deg2(a) >= deg2(b) && !a.empty()) {
        Poly1Z la = a.back();
        const Poly1Z& lb = b.back();
        int shift = deg2(a) - deg2(b);
        std::vector<Poly1Z> next(a.size() - 1);
        for (int k = 0; k < static_cast<int>(a.size()) - 1; ++k) {
            Poly1Z term = a[k] * lb;
            int j = k - shift;
            if (j >= 0 && j < static_cast<int>(b.size()))
                term = term - la * b[j];
            next[k] = std::move(term);
        }
        while (!next.empty() && next.back().is_zero()) next.pop_back();
        a = std::move(next);
    }
    return a;
}

}  // namespace detail

inline Poly2 Poly2::gcd(const Poly2& A, const Poly2& B) {
    if (A.is_zero() && B.is_zero()) return Poly2::zero();
    if (A.is_zero()) return B.scaled(B.lead().c.inverse());
    if (B.is_zero()) return A.scaled(A.lead().c.inverse());
    if (A.is_constant() || B.is_constant()) return Poly2::one();

    // monomial fast path: exponentwise min
    if (A.is_monomial() || B.is_monomial()) {
        int ma = 1 << 30, mb = 1 << 30;
        const Poly2& m = A.is_monomial() ? A : B;
        const Poly2& o = A.is_monomial() ? B : A;
        for (auto& t : o.terms) {
            ma = std::min(ma, t.a);
            mb = std::min(mb, t.b);
        }
        return Poly2::monomial(std::min(ma, m.lead().a), std::min(mb, m.lead().b),
                               GaussRat(1));
    }

    auto va = detail::to_t2_major_z(A);
    auto vb = detail::to_t2_major_z(B);
    detail::Poly1Z ca = detail::content_t1(va);
    detail::Poly1Z cb = detail::content_t1(vb);
    detail::Poly1Z cg = detail::Poly1Z::gcd(ca, cb);

    Poly2 g;
    if (detail::deg2(va) == 0 || detail::deg2(vb) == 0) {
        // one operand is free of t2: gcd reduces to contents
        detail::Poly1Z r = detail::deg2(va) == 0 ? detail::Poly1Z::gcd(va[0], cb)
                                                 : detail::Poly1Z::gcd(vb[0], ca);
        g = detail::from_t2_major_z({r});
    } else {
        va = detail::divide_coeffs(std::move(va), ca);
        vb = detail::divide_coeffs(std::move(vb), cb);
        if (detail::deg2(va) < detail::deg2(vb)) std::swap(va, vb);
        while (!vb.empty()) {
            auto r = detail::prem2(va, vb);
            if (!r.empty()) {
                detail::Poly1Z cr = detail::content_t1(r);
                r = detail::divide_coeffs(std::move(r), cr);
            }
            va = std::move(vb);
            vb = std::move(r);
        }
        Poly2 prim = detail::from_t2_major_z(va);
        g = prim * detail::from_t2_major_z({cg});
    }
    if (g.is_zero()) return g;
    return g.scaled(g.lead().c.inverse());
}

}  // namespace hilborb
