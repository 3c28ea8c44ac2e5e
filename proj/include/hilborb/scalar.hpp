#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hilborb/poly.hpp"

namespace hilborb {

/// Element of the coefficient field Q(i, t1, t2), stored as a normalized
/// fraction num/den of integer-coefficient polynomials. Normalization makes
/// equality of values equality of representations:
///   - gcd(num, den) = 1 over Q(i)[t1,t2],
///   - all coefficients in Z[i] with joint content 1,
///   - the coefficient of den's lex-largest monomial lies in the half-open
///     quadrant Re > 0, Im >= 0 (this realizes the positive-real-part rule
///     and resolves the unit-of-Z[i] ambiguity deterministically).
class Scalar {
  public:
    Scalar() : num_(Poly2::zero()), den_(Poly2::one()) {}
    Scalar(long v) : num_(Poly2::constant(GaussRat(v))), den_(Poly2::one()) {}
    explicit Scalar(const GaussRat& v) : num_(Poly2::constant(v)), den_(Poly2::one()) {}
    explicit Scalar(Poly2 num) : num_(std::move(num)), den_(Poly2::one()) { normalize(); }
    Scalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar unit_i() { return Scalar(GaussRat::unit_i()); }
    static Scalar t1() { return Scalar(Poly2::t1()); }
    static Scalar t2() { return Scalar(Poly2::t2()); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;  // sign flip keeps the denominator convention intact
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) {
            Scalar r;
            r.num_ = a.num_ + b.num_;
            r.normalize_content_only();
            return r;
        }
        Poly2 g = Poly2::gcd(a.den_, b.den_);
        Poly2 bd = Poly2::div_exact(b.den_, g);
        Poly2 ad = Poly2::div_exact(a.den_, g);
        return Scalar(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) {
            Scalar r;
            r.num_ = a.num_ * b.num_;
            r.normalize_content_only();
            return r;
        }
        Poly2 g1 = Poly2::gcd(a.num_, b.den_);
        Poly2 g2 = Poly2::gcd(b.num_, a.den_);
        Poly2 n = Poly2::div_exact(a.num_, g1) * Poly2::div_exact(b.num_, g2);
        Poly2 d = Poly2::div_exact(a.den_, g2) * Poly2::div_exact(b.den_, g1);
        return Scalar(std::move(n), std::move(d));
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return Scalar(den_, num_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r = one();
        Scalar base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {  // arbitrary total order for maps
        return a.to_string() < b.to_string();
    }

    /// Homogeneous as a rational function; degree = deg num - deg den.
    bool homogeneous() const { return num_.homogeneous() && den_.homogeneous(); }
    int degree() const {
        if (is_zero()) return 0;
        return num_.total_degree() - den_.total_degree();
    }

    std::string to_string() const;
    static Scalar parse(const std::string& text);

  private:
    Poly2 num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly2::one();
            return;
        }
        if (!den_.is_one()) {
            Poly2 g = Poly2::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = Poly2::div_exact(num_, g);
                den_ = Poly2::div_exact(den_, g);
            }
        }
        normalize_content_only();
    }

    // Scale num and den jointly so coefficients are Z[i] with content 1 and
    // den's leading coefficient lies in the canonical quadrant.
    void normalize_content_only() {
        if (num_.is_zero()) {
            den_ = Poly2::one();
            return;
        }
        Int l(1);
        auto fold_lcm = [&l](const Poly2& p) {
            for (auto& t : p.terms) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.re.get_den().get_mpz_t());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.im.get_den().get_mpz_t());
            }
        };
        fold_lcm(num_);
        fold_lcm(den_);
        GaussInt g{Int(0), Int(0)};
        auto fold_gcd = [&](const Poly2& p) {
            for (auto& t : p.terms) {
                GaussInt z{Int(t.c.re.get_num() * (l / t.c.re.get_den())),
                           Int(t.c.im.get_num() * (l / t.c.im.get_den()))};
                g = g.is_zero() ? z : gi_gcd(g, z);
            }
        };
        fold_gcd(num_);
        fold_gcd(den_);
        // factor = l / g, applied to every coefficient
        GaussRat gg(Rat(g.re), Rat(g.im));
        GaussRat factor = GaussRat(Rat(l)) / gg;
        auto apply = [&factor](Poly2& p) {
            for (auto& t : p.terms) t.c *= factor;
        };
        apply(num_);
        apply(den_);
        // rotate by the unit putting den's lead into {Re>0, Im>=0}
        const GaussRat& z = den_.lead().c;
        GaussRat u(1);
        if (z.re > 0 && z.im >= 0)
            u = GaussRat(1);
        else if (z.re <= 0 && z.im > 0)
            u = GaussRat(Rat(0), Rat(-1));  // multiply by -i
        else if (z.re < 0 && z.im <= 0)
            u = GaussRat(-1);
        else
            u = GaussRat(Rat(0), Rat(1));  // multiply by i
        if (!u.is_one()) {
            auto rot = [&u](Poly2& p) {
                for (auto& t : p.terms) t.c *= u;
            };
            rot(num_);
            rot(den_);
        }
    }
};

// ---------------------------------------------------------------------------
// Canonical string form. Integer-coefficient polynomial syntax with tokens
// i, t1, t2, *, +, -, ^, parentheses and a single top-level '/'.
// ---------------------------------------------------------------------------

namespace detail {

inline void append_monomial(std::string& s, int a, int b, bool have_coeff) {
    auto var = [&s](const char* name, int e) {
        if (e == 0) return;
        if (!s.empty() && s.back() != '(' && s.back() != ' ') s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    var("t1", a);
    var("t2", b);
    if (a == 0 && b == 0 && !have_coeff) s += "1";
}

inline std::string poly_to_string(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : p.terms) {
        const GaussRat& c = t.c;
        bool realc = c.im == 0;
        bool imagc = c.re == 0 && c.im != 0;
        std::string piece;
        bool neg = false;
        if (realc) {
            Rat m = c.re;
            if (m < 0) {
                neg = true;
                m = -m;
            }
            if (m != 1 || (t.a == 0 && t.b == 0)) piece += m.get_str();
        } else if (imagc) {
            Rat m = c.im;
            if (m < 0) {
                neg = true;
                m = -m;
            }
            if (m != 1) piece += m.get_str() + "*i";
            else piece += "i";
        } else {
            std::string re = c.re.get_str();
            std::string im;
            if (c.im == 1) im = "i";
            else if (c.im == -1) im = "-i";
            else im = c.im.get_str() + "*i";
            if (!im.empty() && im[0] != '-') im = "+" + im;
            piece += "(" + re + im + ")";
        }
        std::string mono;
        bool have_coeff = !piece.empty();
        if (have_coeff) mono = piece;
        {
            std::string tmp = mono;
            append_monomial(tmp, t.a, t.b, have_coeff);
            mono = tmp;
        }
        if (first) {
            if (neg) s += "-";
            s += mono;
            first = false;
        } else {
            s += neg ? " - " : " + ";
            s += mono;
        }
    }
    return s;
}

}  // namespace detail

inline std::string Scalar::to_string() const {
    std::string n = detail::poly_to_string(num_);
    if (den_.is_one()) return n;
    std::string d = detail::poly_to_string(den_);
    if (num_.terms.size() > 1) n = "(" + n + ")";
    // a lone factor like "t1^2" or "(2+i)" stays bare; anything with '*'
    // or several terms would bind wrongly after '/'
    if (den_.terms.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Parser: full field expressions over i, t1, t2 (lenient superset of the
// canonical grammar, so cached and hand-written strings both load).
// ---------------------------------------------------------------------------

namespace detail {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("Scalar parse error at position " +
                                    std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else return v;
        }
    }
    Scalar factor() {
        Scalar v = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            v = v.pow(static_cast<int>(neg ? -e : e));
        }
        return v;
    }
    Scalar atom() {
        skip_ws();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return -atom();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar(GaussRat(Rat(big_integer())));
        if (c == 'i') {
            ++pos_;
            return Scalar::unit_i();
        }
        if (c == 't') {
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '1') {
                ++pos_;
                return Scalar::t1();
            }
            if (pos_ < s_.size() && s_[pos_] == '2') {
                ++pos_;
                return Scalar::t2();
            }
            fail("expected t1 or t2");
        }
        fail("unexpected character");
    }
    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    Int big_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
    return detail::ScalarParser(text).parse();
}

}  // namespace hilborb
