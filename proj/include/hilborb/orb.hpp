#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilborb/hilb.hpp"

namespace hilborb {

/// Extended 3-point series of the symmetric product stack: coefficients are
/// indexed by the number d of extra (2)-sector insertions (powers of u in
/// the generating function); when an exact form is attached its variable is
/// e^{iu}. The q-avatar of the same function lives on the Hilbert side.
struct ExtendedSeries {
    QSeries series;

    const Scalar& coeff(int d) const { return series.coeff(d); }
    bool coeffs_zero() const { return series.coeffs_zero(); }
};

/// Orbifold side of the correspondence for a fixed surface and n.
class SymOrbifold {
  public:
    SymOrbifold(const ToricSurface& surface, int n) : surface_(surface), n_(n) {
        if (n < 0) throw std::invalid_argument("SymOrbifold: n must be nonnegative");
        labels_ = enumerate_multipartitions(n, surface.fixed_point_count());
    }

    const ToricSurface& surface() const { return surface_; }
    int n() const { return n_; }
    /// Fixed-point classes: the same index set as the Hilbert scheme's.
    const std::vector<MultiPartition>& fixed_classes() const { return labels_; }

    CohClass fixed_class(const MultiPartition& l) const {
        return CohClass::single(surface_, n_, BasisKind::orb_fixed, l);
    }

    /// Orbifold Poincare pairing: diagonal with value
    /// prod_k (L_k R_k)^{len(l_k)} / z_{l_k}.
    Scalar pairing(const CohClass& a, const CohClass& b) const {
        check(a);
        check(b);
        Scalar total;
        for (auto& [l, ca] : a.coeffs) {
            auto it = b.coeffs.find(l);
            if (it == b.coeffs.end()) continue;
            total += ca * it->second * diagonal_pairing(l);
        }
        return total;
    }

    Scalar diagonal_pairing(const MultiPartition& l) const {
        Scalar v = Scalar::one();
        for (int k = 0; k < surface_.fixed_point_count(); ++k) {
            const Partition& p = l.slots[k];
            if (p.empty()) continue;
            Scalar lr = surface_.charts[k].L() * surface_.charts[k].R();
            v *= lr.pow(p.length()) / Scalar(GaussRat(Rat(z_of(p))));
        }
        return v;
    }

    /// Equivariant Euler class of the tangent space to the inertia stack at
    /// the fixed-point class: prod_k (L_k R_k)^{len(l_k)}.
    Scalar euler_orb_tangent(const MultiPartition& l) const {
        Scalar v = Scalar::one();
        for (int k = 0; k < surface_.fixed_point_count(); ++k) {
            const Partition& p = l.slots[k];
            if (p.empty()) continue;
            Scalar lr = surface_.charts[k].L() * surface_.charts[k].R();
            v *= lr.pow(p.length());
        }
        return v;
    }

    /// Orbifold degree of the label: 2 len + age = n + len.
    int orbifold_degree(const MultiPartition& l) const {
        return 2 * l.length() + l.age();
    }

  private:
    const ToricSurface& surface_;
    int n_;
    std::vector<MultiPartition> labels_;

    void check(const CohClass& a) const {
        if (a.surface != &surface_ || a.n != n_)
            throw std::invalid_argument("CohClass: mismatched surface binding");
        if (a.kind != BasisKind::orb_fixed)
            throw std::invalid_argument("expected an orbifold-side class");
    }
};

namespace detail {

// permutations of {0..n-1} of a given cycle type
inline std::vector<std::vector<int>> permutations_of_type(int n, const Partition& type) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<bool> seen(n, false);
        std::vector<int> cyc;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            int len = 0, j = s;
            while (!seen[j]) {
                seen[j] = true;
                j = p[j];
                ++len;
            }
            cyc.push_back(len);
        }
        std::sort(cyc.rbegin(), cyc.rend());
        if (Partition(cyc).parts == type.parts) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int orbit_count(const std::vector<int>& a, const std::vector<int>& b) {
    int n = static_cast<int>(a.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[x] = y;
    };
    for (int x = 0; x < n; ++x) {
        unite(x, a[x]);
        unite(x, b[x]);
    }
    int r = 0;
    for (int x = 0; x < n; ++x)
        if (find(x) == x) ++r;
    return r;
}

}  // namespace detail

/// Degree-zero 3-point function of the symmetric product stack of a chart,
/// insertions the fixed-point classes of lambda, mu, nu (all of size n):
/// a sum over pairs (a, b) in S_n^2 with cycle types lambda, mu and (ab)^{-1}
/// of type nu, each weighted by (LR)^{h1 - r} where r counts orbits of
/// <a, b> and h1 = (age lambda + age mu + age nu)/2 - (n - r), times the
/// insertion normalization (LR)^{len lambda + len mu + len nu} / n!.
///
/// The per-term weight and the global 1/n! are fixed by the calibration
/// identity <lambda, mu, unit>_0 = <lambda | mu>_orb; any grading violation
/// across contributing pairs is a hard failure, never a renormalization.
inline Scalar cr_three_point_deg0_c2(const Partition& lam, const Partition& mu,
                                     const Partition& nu, const Scalar& L,
                                     const Scalar& R, int bound = 6) {
    int n = lam.size();
    if (mu.size() != n || nu.size() != n)
        throw std::invalid_argument("cr_three_point_deg0_c2: sizes differ");
    if (n > bound) throw std::invalid_argument("cr_three_point_deg0_c2: n above engine bound");
    if (n == 0) return Scalar::one();

    int age_sum = lam.age() + mu.age() + nu.age();
    if (age_sum % 2) return Scalar::zero();  // no valid h^1: parity obstruction

    auto as = detail::permutations_of_type(n, lam);
    auto bs = detail::permutations_of_type(n, mu);

    long long count = 0;
    int expo = -1;  // common exponent of (LR)^{h1 - r}; must not vary
    for (auto& a : as) {
        for (auto& b : bs) {
            // c = (ab)^{-1}: type of ab equals type of its inverse
            std::vector<int> ab(n);
            for (int x = 0; x < n; ++x) ab[x] = b[a[x]];
            std::vector<bool> seen(n, false);
            std::vector<int> cyc;
            for (int s = 0; s < n; ++s) {
                if (seen[s]) continue;
                int len = 0, j = s;
                while (!seen[j]) {
                    seen[j] = true;
                    j = ab[j];
                    ++len;
                }
                cyc.push_back(len);
            }
            std::sort(cyc.rbegin(), cyc.rend());
            if (Partition(cyc).parts != nu.parts) continue;

            int r = detail::orbit_count(a, b);
            int twice_h1 = age_sum - 2 * (n - r);
            if (twice_h1 < 0 || twice_h1 % 2)
                throw std::logic_error("cr engine: invalid h^1 for a contributing pair");
            int h1 = twice_h1 / 2;
            if (count == 0) expo = h1 - r;
            else if (h1 - r != expo)
                throw std::logic_error("cr engine: grading violated across pairs");
            ++count;
        }
    }
    if (count == 0) return Scalar::zero();

    int total_expo = lam.length() + mu.length() + nu.length() + expo;
    Int nf(1);
    for (int k = 2; k <= n; ++k) nf *= k;
    Rat weight(Int(static_cast<long>(count)), nf);
    weight.canonicalize();
    Scalar lr = L * R;
    return Scalar(GaussRat(weight)) * lr.pow(total_expo);
}

/// Local-theory data for the orbifold side of one chart: extended 3-point
/// series in powers of u. Same symmetry and u^0 consistency contract as the
/// Hilbert-side provider.
inline LocalTheoryProvider make_deg0_extended_provider(int bound = 6) {
    return [bound](const Partition& lam, const Partition& mu, const Partition& nu,
                   const Scalar& L, const Scalar& R, int order) {
        Scalar v = cr_three_point_deg0_c2(lam, mu, nu, L, R, bound);
        if (lam.size() <= 1) {
            QSeries s = QSeries::constant(v, order);
            s.exact = RationalQ::constant(v);
            return s;
        }
        return QSeries::constant(v, 0);
    };
}

/// Extended 3-point function of the symmetric product stack, assembled from
/// chart-local series: zero unless slotwise sizes match, otherwise the
/// product over nonempty slots (series product = slotwise convolution of
/// the extra-insertion degree).
inline ExtendedSeries extended_three_point(const SymOrbifold& orb, const MultiPartition& lam,
                                           const MultiPartition& mu, const MultiPartition& nu,
                                           const LocalTheoryProvider& provider, int order) {
    if (!vanishing_check(lam, mu, nu)) return ExtendedSeries{QSeries::zero(order)};
    QSeries prod = QSeries::one(order);
    const ToricSurface& s = orb.surface();
    for (int k = 0; k < s.fixed_point_count(); ++k) {
        if (lam.slots[k].empty()) continue;
        QSeries local = provider(lam.slots[k], mu.slots[k], nu.slots[k],
                                 s.charts[k].L(), s.charts[k].R(), order);
        prod = qseries_mul(prod, local);
    }
    return ExtendedSeries{std::move(prod)};
}

/// The unit of the orbifold ring in fixed-point coordinates: the untwisted
/// class (1^n per occupied chart) weighted by (L_k R_k)^{-n_k}.
inline CohClass orb_identity_class(const SymOrbifold& orb) {
    const ToricSurface& s = orb.surface();
    int sc = s.fixed_point_count();
    CohClass out = CohClass::zero(s, orb.n(), BasisKind::orb_fixed);
    std::vector<int> sizes(sc, 0);
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == sc - 1) {
            sizes[slot] = rest;
            MultiPartition l;
            Scalar w = Scalar::one();
            for (int k = 0; k < sc; ++k) {
                l.slots.emplace_back(std::vector<int>(sizes[k], 1));
                Scalar lr = s.charts[k].L() * s.charts[k].R();
                w *= lr.pow(sizes[k]).inverse();
            }
            out.add_term(l, w);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            sizes[slot] = k;
            self(self, slot + 1, rest - k);
        }
    };
    rec(rec, 0, orb.n());
    return out;
}

}  // namespace hilborb
