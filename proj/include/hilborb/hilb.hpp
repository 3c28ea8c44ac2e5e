#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "hilborb/partition.hpp"
#include "hilborb/qseries.hpp"
#include "hilborb/symfun.hpp"
#include "hilborb/toric.hpp"

namespace hilborb {

enum class BasisKind { hilb_fixed, nakajima, orb_fixed };

/// Finite linear combination of basis labels bound to a surface and a total
/// size n. Labels are multipartitions; the basis kind says how they are to
/// be read.
struct CohClass {
    const ToricSurface* surface = nullptr;
    int n = 0;
    BasisKind kind = BasisKind::nakajima;
    std::map<MultiPartition, Scalar> coeffs;

    static CohClass zero(const ToricSurface& s, int n, BasisKind k) {
        return CohClass{&s, n, k, {}};
    }
    static CohClass single(const ToricSurface& s, int n, BasisKind k,
                           const MultiPartition& label, Scalar c = Scalar::one()) {
        CohClass cl{&s, n, k, {}};
        if (label.size() != n || label.slot_count() != s.fixed_point_count())
            throw std::invalid_argument("CohClass: label does not match binding");
        if (!c.is_zero()) cl.coeffs.emplace(label, std::move(c));
        return cl;
    }

    void add_term(const MultiPartition& label, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.emplace(label, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    Scalar coeff(const MultiPartition& label) const {
        auto it = coeffs.find(label);
        return it == coeffs.end() ? Scalar::zero() : it->second;
    }
    CohClass scaled(const Scalar& s) const {
        CohClass r{surface, n, kind, {}};
        if (s.is_zero()) return r;
        for (auto& [l, c] : coeffs) r.coeffs.emplace(l, c * s);
        return r;
    }
    friend CohClass operator+(const CohClass& a, const CohClass& b) {
        if (a.surface != b.surface || a.n != b.n || a.kind != b.kind)
            throw std::invalid_argument("CohClass: mismatched binding in +");
        CohClass r = a;
        for (auto& [l, c] : b.coeffs) r.add_term(l, c);
        return r;
    }
    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.surface == b.surface && a.n == b.n && a.kind == b.kind &&
               a.coeffs == b.coeffs;
    }
};

/// Multiset of tangent weights (linear forms in t1, t2) at a fixed point;
/// size 2n on the Hilbert scheme of n points of a chart.
struct TangentCharacter {
    std::vector<Poly2> weights;

    void canonicalize() {
        std::sort(weights.begin(), weights.end(), [](const Poly2& x, const Poly2& y) {
            auto key = [](const Poly2& p) {
                std::vector<long> k;
                for (auto& t : p.terms) {
                    k.push_back(t.a);
                    k.push_back(t.b);
                    k.push_back(mpz_get_si(t.c.re.get_num().get_mpz_t()));
                    k.push_back(mpz_get_si(t.c.re.get_den().get_mpz_t()));
                    k.push_back(mpz_get_si(t.c.im.get_num().get_mpz_t()));
                }
                return k;
            };
            return key(x) < key(y);
        });
    }
    friend bool operator==(const TangentCharacter& a, const TangentCharacter& b) {
        return a.weights == b.weights;
    }
    Scalar euler() const {
        Poly2 e = Poly2::one();
        for (auto& w : weights) e = e * w;
        return Scalar(e);
    }
};

/// Tangent weights of Hilb at the monomial ideal
/// (u^{l1}, v u^{l2}, ..., v^{len}) with rows of the diagram along the
/// L-weighted coordinate u: per box, L(a+1) - R l and R(l+1) - L a.
inline TangentCharacter tangent_weights_hilb(const Partition& lam, const Poly2& L,
                                             const Poly2& R) {
    TangentCharacter ch;
    ch.weights.reserve(2 * lam.size());
    for (int r = 0; r < lam.length(); ++r) {
        for (int c = 0; c < lam.parts[r]; ++c) {
            auto [a, l] = arm_leg(lam, r, c);
            ch.weights.push_back(L.scaled(GaussRat(a + 1)) - R.scaled(GaussRat(l)));
            ch.weights.push_back(R.scaled(GaussRat(l + 1)) - L.scaled(GaussRat(a)));
        }
    }
    ch.canonicalize();
    return ch;
}

/// Brute-force tangent space Hom(I, O/I) at the same monomial ideal,
/// graded by torus weight. Coordinate functions carry weights (-L, -R)
/// (tangent weights are weights of points, so functions get the opposite
/// sign). Independent of the arm/leg formula.
inline TangentCharacter tangent_weights_oracle(const Partition& lam, const Poly2& L,
                                               const Poly2& R, int bound = 6) {
    if (lam.size() > bound)
        throw std::invalid_argument("tangent_weights_oracle: size above bound");
    int n = lam.size();
    int ell = lam.length();

    // quotient monomials u^c v^r below the staircase
    std::vector<std::pair<int, int>> quot;  // (uexp, vexp)
    for (int r = 0; r < ell; ++r)
        for (int c = 0; c < lam.parts[r]; ++c) quot.push_back({c, r});
    auto quot_index = [&](int ue, int ve) {
        for (size_t k = 0; k < quot.size(); ++k)
            if (quot[k].first == ue && quot[k].second == ve) return static_cast<int>(k);
        return -1;
    };

    // ideal generators g_j = v^j u^{lam_{j+1}} for j=0..ell (lam_{ell+1}=0)
    std::vector<std::pair<int, int>> gens;
    for (int j = 0; j <= ell; ++j) gens.push_back({j < ell ? lam.parts[j] : 0, j});

    // integer torus weight of a monomial u^a v^b is (-a, -b) in units (L, R)
    auto mono_weight = [](std::pair<int, int> m) {
        return std::pair<int, int>{-m.first, -m.second};
    };

    // candidate hom weights: weight(q) - weight(g_j)
    std::vector<std::pair<int, int>> cands;
    for (auto& g : gens)
        for (auto& q : quot) {
            auto wg = mono_weight(g), wq = mono_weight(q);
            std::pair<int, int> w{wq.first - wg.first, wq.second - wg.second};
            if (std::find(cands.begin(), cands.end(), w) == cands.end())
                cands.push_back(w);
        }

    TangentCharacter ch;
    int total = 0;
    for (auto& w : cands) {
        // unknowns: for each generator j, the coefficient of the unique
        // quotient monomial of weight weight(g_j) + w (if any)
        std::vector<int> target(gens.size(), -1);
        int nvars = 0;
        std::vector<int> var_of(gens.size(), -1);
        for (size_t j = 0; j < gens.size(); ++j) {
            auto wg = mono_weight(gens[j]);
            int ue = -(wg.first + w.first), ve = -(wg.second + w.second);
            int qi = ue >= 0 && ve >= 0 ? quot_index(ue, ve) : -1;
            target[j] = qi;
            if (qi >= 0) var_of[j] = nvars++;
        }
        if (nvars == 0) continue;

        // syzygy constraints: u^{lam_j - lam_{j+1}} phi(g_{j+1}) = v phi(g_j)
        // in the quotient, per consecutive pair (staircase syzygies generate)
        std::vector<std::vector<Rat>> rows;
        for (size_t j = 0; j + 1 < gens.size(); ++j) {
            int drop = gens[j].first - gens[j + 1].first;  // lam_j - lam_{j+1}
            std::vector<Rat> row(nvars, Rat(0));
            bool nontrivial = false;
            if (target[j + 1] >= 0) {
                auto [ue, ve] = quot[target[j + 1]];
                int qi = quot_index(ue + drop, ve);
                if (qi >= 0) {  // u^drop * m stays in the quotient
                    row[var_of[j + 1]] += 1;
                    nontrivial = true;
                }
            }
            if (target[j] >= 0) {
                auto [ue, ve] = quot[target[j]];
                int qi = quot_index(ue, ve + 1);
                if (qi >= 0) {  // v * m stays in the quotient
                    row[var_of[j]] -= 1;
                    nontrivial = true;
                }
            }
            if (nontrivial) rows.push_back(std::move(row));
        }

        // rank by rational elimination
        int rank = 0;
        {
            std::vector<std::vector<Rat>> m = rows;
            std::vector<bool> used(m.size(), false);
            for (int col = 0; col < nvars; ++col) {
                int piv = -1;
                for (size_t r = 0; r < m.size(); ++r)
                    if (!used[r] && m[r][col] != 0) {
                        piv = static_cast<int>(r);
                        break;
                    }
                if (piv < 0) continue;
                used[piv] = true;
                ++rank;
                for (size_t r = 0; r < m.size(); ++r) {
                    if (static_cast<int>(r) == piv || m[r][col] == 0) continue;
                    Rat f = m[r][col] / m[piv][col];
                    for (int cidx = 0; cidx < nvars; ++cidx) m[r][cidx] -= f * m[piv][cidx];
                }
            }
        }
        int dim = nvars - rank;
        if (dim <= 0) continue;

        // one syzygy constraint per homogeneous pair is linear over Q; the
        // weight-w eigenspace of Hom(I, O/I) has dimension dim
        Poly2 wform = L.scaled(GaussRat(w.first)) + R.scaled(GaussRat(w.second));
        for (int k = 0; k < dim; ++k) ch.weights.push_back(wform);
        total += dim;
    }
    if (total != 2 * n)
        throw std::logic_error("tangent_weights_oracle: dimension is not 2n");
    ch.canonicalize();
    return ch;
}

/// Condition for 3-point invariants: slotwise sizes must agree.
inline bool vanishing_check(const MultiPartition& a, const MultiPartition& b,
                            const MultiPartition& c) {
    if (a.slot_count() != b.slot_count() || a.slot_count() != c.slot_count())
        throw std::invalid_argument("vanishing_check: slot count mismatch");
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("vanishing_check: total size mismatch");
    return a.slot_sizes() == b.slot_sizes() && a.slot_sizes() == c.slot_sizes();
}

/// Euler class of the tangent space at the fixed point carrying basis label
/// lam on a chart (L, R). The Jack dictionary (alpha = -R/L with prefactors
/// in L) attaches to the label the ideal whose rows run along the R-weighted
/// coordinate, i.e. the transposed character; this is the unique assignment
/// under which the closed pairing formula and the localized pairing agree.
inline Scalar fixed_point_euler(const Partition& lam, const Scalar& L, const Scalar& R) {
    Scalar e = Scalar::one();
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam.parts[r]; ++c) {
            auto [a, l] = arm_leg(lam, r, c);
            e *= R * Scalar(a + 1) - L * Scalar(l);
            e *= L * Scalar(l + 1) - R * Scalar(a);
        }
    return e;
}

/// Chart-local degree-zero cup value <a_lam, a_mu, a_nu>_0 on the Hilbert
/// scheme of a single chart with tangent weights (L, R), by diagonal
/// localization in the fixed-point basis.
inline Scalar local_cup_deg0(const Partition& lam, const Partition& mu,
                             const Partition& nu, const Scalar& L, const Scalar& R,
                             JackBank& bank) {
    int m = lam.size();
    if (mu.size() != m || nu.size() != m)
        throw std::invalid_argument("local_cup_deg0: sizes differ");
    if (m == 0) return Scalar::one();
    JackParameter alpha(-R / L);
    BasisChangeTable t = basis_change_table(m, alpha, L, bank);
    int il = t.index_of(lam), im = t.index_of(mu), in = t.index_of(nu);
    Scalar total;
    for (size_t r = 0; r < t.labels.size(); ++r) {
        Scalar prod = t.c[il][r] * t.c[im][r] * t.c[in][r];
        if (prod.is_zero()) continue;
        Scalar e = fixed_point_euler(t.labels[r], L, R);
        total += prod * e * e;
    }
    return total;
}

/// Local-theory data for one chart: the extremal 3-point function of the
/// chart's Hilbert scheme in Nakajima insertions, as a q-series truncated at
/// `order`. Implementations must be symmetric in the three partitions and
/// agree with local_cup_deg0 at q^0; the exact form may only be attached
/// when it represents the complete series.
using LocalTheoryProvider = std::function<QSeries(
    const Partition&, const Partition&, const Partition&, const Scalar& L,
    const Scalar& R, int order)>;

/// Built-in provider: degree-zero data only. Series carry order 0 (a single
/// known coefficient) except for n <= 1, where all positive-degree moduli
/// are empty and the constant is the complete answer.
inline LocalTheoryProvider make_deg0_extremal_provider(JackBank& bank) {
    return [&bank](const Partition& lam, const Partition& mu, const Partition& nu,
                   const Scalar& L, const Scalar& R, int order) {
        Scalar v = local_cup_deg0(lam, mu, nu, L, R, bank);
        if (lam.size() <= 1) {
            QSeries s = QSeries::constant(v, order);
            s.exact = RationalQ::constant(v);
            return s;
        }
        return QSeries::constant(v, 0);
    };
}

/// Hilbert-scheme side of the correspondence for a fixed surface and n:
/// fixed-point and Nakajima bases, pairings, and the degree-zero product.
class HilbScheme {
  public:
    HilbScheme(const ToricSurface& surface, int n, JackBank& bank)
        : surface_(surface), n_(n), bank_(bank) {
        if (n < 0) throw std::invalid_argument("HilbScheme: n must be nonnegative");
        labels_ = enumerate_multipartitions(n, surface.fixed_point_count());
        for (size_t k = 0; k < labels_.size(); ++k) index_[labels_[k]] = static_cast<int>(k);
        eulers_.resize(labels_.size());
        for (size_t k = 0; k < labels_.size(); ++k) {
            Scalar e = Scalar::one();
            for (int s = 0; s < surface.fixed_point_count(); ++s)
                e *= fixed_point_euler(labels_[k].slots[s], surface.charts[s].L(),
                                       surface.charts[s].R());
            eulers_[k] = e;
        }
    }

    const ToricSurface& surface() const { return surface_; }
    int n() const { return n_; }
    JackBank& bank() const { return bank_; }
    const std::vector<MultiPartition>& fixed_points() const { return labels_; }
    int label_index(const MultiPartition& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw std::out_of_range("HilbScheme: unknown label");
        return it->second;
    }
    /// e_T of the tangent space at the fixed point with this basis label.
    const Scalar& euler(const MultiPartition& l) const { return eulers_[label_index(l)]; }

    CohClass nakajima_class(const MultiPartition& l) const {
        return CohClass::single(surface_, n_, BasisKind::nakajima, l);
    }
    CohClass fixed_class(const MultiPartition& l) const {
        return CohClass::single(surface_, n_, BasisKind::hilb_fixed, l);
    }

    /// Expand into fixed-point coordinates (coefficient of each I_label).
    std::vector<Scalar> to_fixed_coords(const CohClass& a) const {
        check_binding(a);
        std::vector<Scalar> out(labels_.size(), Scalar::zero());
        if (a.kind == BasisKind::hilb_fixed) {
            for (auto& [l, c] : a.coeffs) out[label_index(l)] += c;
            return out;
        }
        if (a.kind != BasisKind::nakajima)
            throw std::invalid_argument("expected a Hilbert-side class");
        for (auto& [l, c] : a.coeffs) {
            for (auto& [row, factor] : nakajima_row(l)) out[row] += c * factor;
        }
        return out;
    }

    /// Convert a fixed-basis class back to the Nakajima basis.
    CohClass to_nakajima(const CohClass& a) const {
        check_binding(a);
        if (a.kind == BasisKind::nakajima) return a;
        if (a.kind != BasisKind::hilb_fixed)
            throw std::invalid_argument("expected a Hilbert-side class");
        CohClass out = CohClass::zero(surface_, n_, BasisKind::nakajima);
        int s = surface_.fixed_point_count();
        for (auto& [mu, c] : a.coeffs) {
            // I_mu = sum_lam prod_k d_{mu_k, lam_k} a_lam, slotwise
            std::vector<std::pair<MultiPartition, Scalar>> acc{
                {MultiPartition(std::vector<Partition>{}), c}};
            for (int k = 0; k < s; ++k) {
                const BasisChangeTable& t = chart_table(k, mu.slots[k].size());
                int imu = t.index_of(mu.slots[k]);
                std::vector<std::pair<MultiPartition, Scalar>> next;
                for (auto& [prefix, coeff] : acc) {
                    for (size_t j = 0; j < t.labels.size(); ++j) {
                        Scalar f = t.d[imu][j];
                        if (f.is_zero()) continue;
                        MultiPartition ext = prefix;
                        ext.slots.push_back(t.labels[j]);
                        next.emplace_back(std::move(ext), coeff * f);
                    }
                }
                acc = std::move(next);
            }
            for (auto& [l, f] : acc) out.add_term(l, f);
        }
        return out;
    }

    /// Closed-form Poincare pairing: diagonal on Nakajima labels with value
    /// prod_k (-1)^{|l_k|-len(l_k)} (L_k R_k)^{len(l_k)} / z_{l_k}.
    Scalar pairing(const CohClass& a, const CohClass& b) const {
        CohClass an = to_nakajima_any(a), bn = to_nakajima_any(b);
        Scalar total;
        for (auto& [l, ca] : an.coeffs) {
            auto it = bn.coeffs.find(l);
            if (it == bn.coeffs.end()) continue;
            total += ca * it->second * nakajima_norm(l);
        }
        return total;
    }

    Scalar nakajima_norm(const MultiPartition& l) const {
        Scalar v = Scalar::one();
        for (int k = 0; k < surface_.fixed_point_count(); ++k) {
            const Partition& p = l.slots[k];
            if (p.empty()) continue;
            Scalar lr = surface_.charts[k].L() * surface_.charts[k].R();
            Scalar sign = (p.size() - p.length()) % 2 ? -Scalar::one() : Scalar::one();
            v *= sign * lr.pow(p.length()) / Scalar(GaussRat(Rat(z_of(p))));
        }
        return v;
    }

    /// Localization pairing: expand in the fixed-point basis and sum
    /// a_l b_l e_T(T_l) over fixed points. Must agree with pairing().
    Scalar pairing_localized(const CohClass& a, const CohClass& b) const {
        auto ca = to_fixed_coords(a), cb = to_fixed_coords(b);
        Scalar total;
        for (size_t k = 0; k < labels_.size(); ++k) {
            if (ca[k].is_zero() || cb[k].is_zero()) continue;
            total += ca[k] * cb[k] * eulers_[k];
        }
        return total;
    }

    /// Degree-zero 3-point function by diagonal localization:
    /// sum over fixed points of a_l b_l c_l e_T(T_l)^2.
    Scalar cup_three_point_deg0(const CohClass& a, const CohClass& b,
                                const CohClass& c) const {
        auto ca = to_fixed_coords(a), cb = to_fixed_coords(b), cc = to_fixed_coords(c);
        Scalar total;
        for (size_t k = 0; k < labels_.size(); ++k) {
            Scalar prod = ca[k] * cb[k];
            if (prod.is_zero()) continue;
            prod *= cc[k];
            if (prod.is_zero()) continue;
            total += prod * eulers_[k] * eulers_[k];
        }
        return total;
    }

    /// Unit of the ring: in the fixed-point basis sum_l I_l / e_T(T_l); in
    /// the Nakajima basis the all-ones labels weighted by (L_k R_k)^{-n_k}.
    CohClass identity_class() const {
        CohClass out = CohClass::zero(surface_, n_, BasisKind::nakajima);
        int s = surface_.fixed_point_count();
        std::vector<int> sizes(s, 0);
        auto rec = [&](auto&& self, int slot, int rest) -> void {
            if (slot == s - 1) {
                sizes[slot] = rest;
                MultiPartition l;
                Scalar w = Scalar::one();
                for (int k = 0; k < s; ++k) {
                    l.slots.emplace_back(std::vector<int>(sizes[k], 1));
                    Scalar lr = surface_.charts[k].L() * surface_.charts[k].R();
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
        rec(rec, 0, n_);
        return out;
    }
    CohClass identity_class_fixed() const {
        CohClass out = CohClass::zero(surface_, n_, BasisKind::hilb_fixed);
        for (size_t k = 0; k < labels_.size(); ++k)
            out.add_term(labels_[k], eulers_[k].inverse());
        return out;
    }

    /// Chow degree of a_label is n + len(label).
    int chow_degree(const MultiPartition& l) const { return n_ + l.length(); }

    const BasisChangeTable& chart_table(int chart, int m) const {
        auto key = std::make_pair(chart, m);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
        const Chart& ch = surface_.charts[chart];
        BasisChangeTable t =
            basis_change_table(m, JackParameter(ch.alpha()), ch.L(), bank_);
        return tables_.emplace(key, std::move(t)).first->second;
    }

  private:
    const ToricSurface& surface_;
    int n_;
    JackBank& bank_;
    std::vector<MultiPartition> labels_;
    std::map<MultiPartition, int> index_;
    std::vector<Scalar> eulers_;
    mutable std::map<std::pair<int, int>, BasisChangeTable> tables_;
    mutable std::map<MultiPartition, std::vector<std::pair<int, Scalar>>> nak_rows_;

    void check_binding(const CohClass& a) const {
        if (a.surface != &surface_ || a.n != n_)
            throw std::invalid_argument("CohClass: mismatched surface binding");
    }

    CohClass to_nakajima_any(const CohClass& a) const {
        check_binding(a);
        if (a.kind == BasisKind::nakajima) return a;
        return to_nakajima(a);
    }

    // fixed-basis expansion of one Nakajima label, sparse and memoized
    const std::vector<std::pair<int, Scalar>>& nakajima_row(const MultiPartition& l) const {
        auto it = nak_rows_.find(l);
        if (it != nak_rows_.end()) return it->second;
        int s = surface_.fixed_point_count();
        std::vector<std::pair<MultiPartition, Scalar>> acc{
            {MultiPartition(std::vector<Partition>{}), Scalar::one()}};
        for (int k = 0; k < s; ++k) {
            const BasisChangeTable& t = chart_table(k, l.slots[k].size());
            int il = t.index_of(l.slots[k]);
            std::vector<std::pair<MultiPartition, Scalar>> next;
            for (auto& [prefix, coeff] : acc) {
                for (size_t j = 0; j < t.labels.size(); ++j) {
                    Scalar f = t.c[il][j];
                    if (f.is_zero()) continue;
                    MultiPartition ext = prefix;
                    ext.slots.push_back(t.labels[j]);
                    next.emplace_back(std::move(ext), coeff * f);
                }
            }
            acc = std::move(next);
        }
        std::vector<std::pair<int, Scalar>> row;
        row.reserve(acc.size());
        for (auto& [mu, f] : acc) row.emplace_back(label_index(mu), f);
        return nak_rows_.emplace(l, std::move(row)).first->second;
    }
};

/// Extremal 3-point function of Hilb^n(S) in Nakajima insertions, assembled
/// from chart-local series: zero unless the slotwise sizes match, otherwise
/// the product over nonempty slots of the provider's local series.
inline QSeries extremal_three_point(const HilbScheme& scheme, const MultiPartition& lam,
                                    const MultiPartition& mu, const MultiPartition& nu,
                                    const LocalTheoryProvider& provider, int order) {
    if (!vanishing_check(lam, mu, nu)) return QSeries::zero(order);
    QSeries prod = QSeries::one(order);
    const ToricSurface& s = scheme.surface();
    for (int k = 0; k < s.fixed_point_count(); ++k) {
        if (lam.slots[k].empty()) continue;
        QSeries local = provider(lam.slots[k], mu.slots[k], nu.slots[k],
                                 s.charts[k].L(), s.charts[k].R(), order);
        prod = qseries_mul(prod, local);
    }
    return prod;
}

}  // namespace hilborb
