#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilborb/partition.hpp"
#include "hilborb/scalar.hpp"
#include "hilborb/unirat.hpp"

namespace hilborb {

enum class SymBasis { powersum, monomial, jack };

/// Finite symmetric function of a single degree n, coefficients over the
/// Scalar field in a declared basis.
struct SymFunc {
    int degree = 0;
    SymBasis basis = SymBasis::powersum;
    std::map<Partition, Scalar> coeffs;

    static SymFunc zero(int n, SymBasis b) { return SymFunc{n, b, {}}; }
    static SymFunc single(int n, SymBasis b, const Partition& p, Scalar c) {
        SymFunc f{n, b, {}};
        if (p.size() != n) throw std::invalid_argument("SymFunc: partition size mismatch");
        if (!c.is_zero()) f.coeffs.emplace(p, std::move(c));
        return f;
    }

    void add_term(const Partition& p, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    Scalar coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Scalar::zero() : it->second;
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        if (a.degree != b.degree || a.basis != b.basis)
            throw std::invalid_argument("SymFunc: basis or degree mismatch in +");
        SymFunc r = a;
        for (auto& [p, c] : b.coeffs) r.add_term(p, c);
        return r;
    }
    SymFunc scaled(const Scalar& s) const {
        SymFunc r{degree, basis, {}};
        if (s.is_zero()) return r;
        for (auto& [p, c] : coeffs) r.coeffs.emplace(p, c * s);
        return r;
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.degree == b.degree && a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

struct JackParameter {
    Scalar alpha;
    explicit JackParameter(Scalar a) : alpha(std::move(a)) {
        if (alpha.is_zero()) throw std::invalid_argument("JackParameter: alpha must be nonzero");
    }
};

/// Basis change c_{lambda,mu} on one chart:
///   L^{len(lambda)} p_lambda / z_lambda = sum_mu c_{lambda,mu} L^n J_mu.
struct BasisChangeTable {
    int n = 0;
    Scalar alpha;
    Scalar L;
    std::vector<Partition> labels;               // canonical order
    std::vector<std::vector<Scalar>> c;          // nakajima -> fixed point
    std::vector<std::vector<Scalar>> d;          // fixed point -> nakajima

    int index_of(const Partition& p) const {
        for (size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == p) return static_cast<int>(k);
        throw std::out_of_range("BasisChangeTable: unknown partition");
    }
    Scalar entry(const Partition& lam, const Partition& mu) const {
        return c[index_of(lam)][index_of(mu)];
    }
};

namespace detail {

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace detail

/// Owns the symmetric-function tables: power-sum/monomial transitions over Q,
/// generic-parameter Jack data over Q(x), and their per-alpha bindings.
/// Computations are memoized; Jack monomial tables can persist in a disk
/// cache directory (one JSON file per (n, alpha fingerprint), written via
/// rename so concurrent processes never observe partial files).
///
/// A bank instance is not synchronized: share the returned (immutable)
/// tables freely across threads, but confine each bank to one thread.
class JackBank {
  public:
    explicit JackBank(std::string cache_dir = "") : cache_dir_(std::move(cache_dir)) {}

    const std::string& cache_dir() const { return cache_dir_; }

    struct DegreeTables {
        std::vector<Partition> parts;            // canonical order
        std::vector<std::vector<Rat>> p_in_m;    // row lambda: p_lambda in m basis
        std::vector<std::vector<Rat>> m_in_p;    // inverse
        std::vector<Int> z;
        int index_of(const Partition& p) const {
            for (size_t k = 0; k < parts.size(); ++k)
                if (parts[k] == p) return static_cast<int>(k);
            throw std::out_of_range("DegreeTables: unknown partition");
        }
    };

    struct GenericJack {
        std::vector<std::vector<UniPoly>> j_in_m;  // row mu: J_mu in m basis
        std::vector<std::vector<UniRat>> j_in_p;   // row mu: J_mu in p basis
        std::vector<std::vector<UniRat>> p_in_j;   // row lambda: p_lambda in J basis
    };

    const DegreeTables& degree_tables(int n) {
        auto it = degree_.find(n);
        if (it != degree_.end()) return *it->second;
        auto t = std::make_unique<DegreeTables>(build_degree_tables(n));
        return *degree_.emplace(n, std::move(t)).first->second;
    }

    const GenericJack& generic_jack(int n) {
        auto it = generic_.find(n);
        if (it != generic_.end()) return *it->second;
        auto t = std::make_unique<GenericJack>(build_generic_jack(n));
        return *generic_.emplace(n, std::move(t)).first->second;
    }

    /// J_mu^{(alpha)} in the monomial basis for all mu of size n;
    /// row/column indices follow degree_tables(n).parts.
    const std::vector<std::vector<Scalar>>& jack_monomial(int n, const Scalar& alpha) {
        std::string key = std::to_string(n) + "|" + alpha.to_string();
        auto it = jack_mono_.find(key);
        if (it != jack_mono_.end()) return *it->second;
        auto loaded = load_cache(n, alpha);
        if (loaded) return *jack_mono_.emplace(key, std::move(loaded)).first->second;
        auto& gen = generic_jack(n);
        auto t = std::make_unique<std::vector<std::vector<Scalar>>>();
        t->reserve(gen.j_in_m.size());
        for (auto& row : gen.j_in_m) {
            std::vector<Scalar> r;
            r.reserve(row.size());
            for (auto& e : row) r.push_back(e.eval(alpha));
            t->push_back(std::move(r));
        }
        store_cache(n, alpha, *t);
        return *jack_mono_.emplace(key, std::move(t)).first->second;
    }

    friend std::string jack_cache_file(const JackBank& bank, int n, const Scalar& alpha);

  private:
    std::string cache_dir_;
    std::map<int, std::unique_ptr<DegreeTables>> degree_;
    std::map<int, std::unique_ptr<GenericJack>> generic_;
    std::map<std::string, std::unique_ptr<std::vector<std::vector<Scalar>>>> jack_mono_;

    // p_lambda expanded as an honest polynomial in n variables; monomial
    // coefficients are read off sorted exponent vectors.
    static DegreeTables build_degree_tables(int n) {
        DegreeTables t;
        t.parts = enumerate_partitions(n);
        int P = static_cast<int>(t.parts.size());
        int nv = std::max(n, 1);
        t.z.reserve(P);
        for (auto& p : t.parts) t.z.push_back(z_of(p));

        std::map<std::vector<int>, Int> unit{{std::vector<int>(nv, 0), Int(1)}};
        t.p_in_m.assign(P, std::vector<Rat>(P, Rat(0)));
        for (int i = 0; i < P; ++i) {
            auto poly = unit;
            for (int part : t.parts[i].parts) {
                std::map<std::vector<int>, Int> next;
                for (auto& [e, c] : poly) {
                    for (int v = 0; v < nv; ++v) {
                        auto e2 = e;
                        e2[v] += part;
                        next[e2] += c;
                    }
                }
                poly = std::move(next);
            }
            for (int j = 0; j < P; ++j) {
                std::vector<int> key(nv, 0);
                for (int k = 0; k < t.parts[j].length(); ++k) key[k] = t.parts[j].parts[k];
                auto it = poly.find(key);
                if (it != poly.end()) t.p_in_m[i][j] = Rat(it->second);
            }
        }

        // invert over Q
        int Pn = P;
        std::vector<std::vector<Rat>> a = t.p_in_m;
        std::vector<std::vector<Rat>> inv(Pn, std::vector<Rat>(Pn, Rat(0)));
        for (int i = 0; i < Pn; ++i) inv[i][i] = 1;
        for (int col = 0; col < Pn; ++col) {
            int piv = -1;
            for (int r = col; r < Pn; ++r)
                if (a[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("powersum-to-monomial matrix is singular");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            Rat d = 1 / a[col][col];
            for (int j = 0; j < Pn; ++j) {
                a[col][j] *= d;
                inv[col][j] *= d;
            }
            for (int r = 0; r < Pn; ++r) {
                if (r == col || a[r][col] == 0) continue;
                Rat f = a[r][col];
                for (int j = 0; j < Pn; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        // with p = (p_in_m) m as matrix identity, m = (p_in_m)^{-1} p
        t.m_in_p = std::move(inv);
        return t;
    }

    // Gram-Schmidt against the alpha-deformed pairing, processed up the
    // dominance order, normalized so [m_{1^n}] J = n!.
    GenericJack build_generic_jack(int n) {
        const DegreeTables& dt = degree_tables(n);
        int P = static_cast<int>(dt.parts.size());
        GenericJack g;
        g.j_in_m.assign(P, {});
        g.j_in_p.assign(P, {});

        UniRat x = UniRat::variable();
        auto ip = [&](const std::vector<UniRat>& u, const std::vector<UniRat>& v) {
            UniRat acc;
            for (int r = 0; r < P; ++r) {
                if (u[r].is_zero() || v[r].is_zero()) continue;
                UniPoly xl = UniPoly::constant(Rat(dt.z[r]));
                for (int k = 0; k < dt.parts[r].length(); ++k) xl = xl * UniPoly::variable();
                acc += u[r] * v[r] * UniRat(xl, UniPoly::constant(Rat(1)));
            }
            return acc;
        };

        std::vector<std::vector<UniRat>> vp(P), vm(P);
        std::vector<UniRat> norms(P);
        Rat nfact(1);
        for (int k = 2; k <= n; ++k) nfact *= k;

        for (int i = P - 1; i >= 0; --i) {
            std::vector<UniRat> cur_p(P), cur_m(P);
            for (int r = 0; r < P; ++r) cur_p[r] = UniRat::of(dt.m_in_p[i][r]);
            cur_m[i] = UniRat::of(Rat(1));
            for (int j = i + 1; j < P; ++j) {
                UniRat c = ip(cur_p, vp[j]) / norms[j];
                if (c.is_zero()) continue;
                for (int r = 0; r < P; ++r) {
                    cur_p[r] -= c * vp[j][r];
                    cur_m[r] -= c * vm[j][r];
                }
            }
            norms[i] = ip(cur_p, cur_p);
            if (norms[i].is_zero()) throw std::logic_error("Jack Gram-Schmidt: zero norm");
            vp[i] = std::move(cur_p);
            vm[i] = std::move(cur_m);
        }

        // integral-form scaling
        int bottom = P - 1;  // (1^n) is last in canonical order
        for (int i = 0; i < P; ++i) {
            const UniRat& b = vm[i][bottom];
            if (b.is_zero()) throw std::logic_error("Jack: vanishing [m_{1^n}] coefficient");
            UniRat s = UniRat::of(nfact) / b;
            std::vector<UniPoly> rowm(P);
            std::vector<UniRat> rowp(P);
            for (int r = 0; r < P; ++r) {
                UniRat e = vm[i][r] * s;
                if (!e.is_polynomial())
                    throw std::logic_error("Jack: monomial coefficient not polynomial in alpha");
                rowm[r] = e.num;
                rowp[r] = vp[i][r] * s;
            }
            g.j_in_m[i] = std::move(rowm);
            g.j_in_p[i] = std::move(rowp);
        }

        // invert j_in_p over Q(x)
        std::vector<std::vector<UniRat>> a = g.j_in_p;
        std::vector<std::vector<UniRat>> inv(P, std::vector<UniRat>(P));
        for (int i = 0; i < P; ++i) inv[i][i] = UniRat::of(Rat(1));
        for (int col = 0; col < P; ++col) {
            int piv = -1;
            for (int r = col; r < P; ++r)
                if (!a[r][col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("Jack-to-powersum matrix is singular");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            UniRat d = UniRat::of(Rat(1)) / a[col][col];
            for (int j = 0; j < P; ++j) {
                a[col][j] *= d;
                inv[col][j] *= d;
            }
            for (int r = 0; r < P; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                UniRat f = a[r][col];
                for (int j = 0; j < P; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        // with J = (j_in_p) p as matrix identity, p = (j_in_p)^{-1} J
        g.p_in_j = std::move(inv);
        return g;
    }

    std::unique_ptr<std::vector<std::vector<Scalar>>> load_cache(int n, const Scalar& alpha) {
        if (cache_dir_.empty()) return nullptr;
        std::string path = jack_cache_path(n, alpha);
        std::ifstream in(path);
        if (!in) return nullptr;
        nlohmann::json j;
        try {
            in >> j;
        } catch (...) {
            return nullptr;
        }
        if (!j.is_object() || j.value("alpha", "") != alpha.to_string() ||
            j.value("n", -1) != n)
            return nullptr;
        const DegreeTables& dt = degree_tables(n);
        int P = static_cast<int>(dt.parts.size());
        auto t = std::make_unique<std::vector<std::vector<Scalar>>>(
            P, std::vector<Scalar>(P, Scalar::zero()));
        try {
            auto& rows = j.at("coeffs");
            for (int i = 0; i < P; ++i) {
                auto& row = rows.at(dt.parts[i].to_compact_string());
                for (int k = 0; k < P; ++k) {
                    std::string key = dt.parts[k].to_compact_string();
                    if (row.contains(key))
                        (*t)[i][k] = Scalar::parse(row.at(key).get<std::string>());
                }
            }
        } catch (...) {
            return nullptr;
        }
        return t;
    }

    void store_cache(int n, const Scalar& alpha, const std::vector<std::vector<Scalar>>& t) {
        if (cache_dir_.empty()) return;
        const DegreeTables& dt = degree_tables(n);
        nlohmann::json j;
        j["n"] = n;
        j["alpha"] = alpha.to_string();
        nlohmann::json rows = nlohmann::json::object();
        for (size_t i = 0; i < t.size(); ++i) {
            nlohmann::json row = nlohmann::json::object();
            for (size_t k = 0; k < t[i].size(); ++k)
                if (!t[i][k].is_zero())
                    row[dt.parts[k].to_compact_string()] = t[i][k].to_string();
            rows[dt.parts[i].to_compact_string()] = std::move(row);
        }
        j["coeffs"] = std::move(rows);
        std::error_code ec;
        std::filesystem::create_directories(cache_dir_, ec);
        std::string path = jack_cache_path(n, alpha);
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << j.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, path, ec);  // atomic publish
    }

    std::string jack_cache_path(int n, const Scalar& alpha) const {
        return cache_dir_ + "/jack_n" + std::to_string(n) + "_" +
               detail::fnv1a_hex(alpha.to_string()) + ".json";
    }
};

inline std::string jack_cache_file(const JackBank& bank, int n, const Scalar& alpha) {
    return bank.jack_cache_path(n, alpha);
}

// ---------------------------------------------------------------------------
// spec operations
// ---------------------------------------------------------------------------

inline SymFunc powersum_to_monomial(const SymFunc& f, JackBank& bank) {
    if (f.basis != SymBasis::powersum)
        throw std::invalid_argument("powersum_to_monomial: input not in powersum basis");
    const auto& dt = bank.degree_tables(f.degree);
    SymFunc out = SymFunc::zero(f.degree, SymBasis::monomial);
    for (auto& [p, c] : f.coeffs) {
        int i = dt.index_of(p);
        for (size_t j = 0; j < dt.parts.size(); ++j)
            if (dt.p_in_m[i][j] != 0)
                out.add_term(dt.parts[j], c * Scalar(GaussRat(dt.p_in_m[i][j])));
    }
    return out;
}

inline SymFunc monomial_to_powersum(const SymFunc& f, JackBank& bank) {
    if (f.basis != SymBasis::monomial)
        throw std::invalid_argument("monomial_to_powersum: input not in monomial basis");
    const auto& dt = bank.degree_tables(f.degree);
    SymFunc out = SymFunc::zero(f.degree, SymBasis::powersum);
    for (auto& [p, c] : f.coeffs) {
        int i = dt.index_of(p);
        for (size_t j = 0; j < dt.parts.size(); ++j)
            if (dt.m_in_p[i][j] != 0)
                out.add_term(dt.parts[j], c * Scalar(GaussRat(dt.m_in_p[i][j])));
    }
    return out;
}

/// <p_lambda, p_mu> = delta * z_lambda * alpha^{len(lambda)}, extended
/// bilinearly. Inputs may be in any basis convertible without alpha.
inline Scalar inner_product_alpha(const SymFunc& f, const SymFunc& g,
                                  const JackParameter& alpha, JackBank& bank) {
    if (f.degree != g.degree)
        throw std::invalid_argument("inner_product_alpha: degree mismatch");
    auto to_p = [&bank](const SymFunc& h) {
        if (h.basis == SymBasis::powersum) return h;
        if (h.basis == SymBasis::monomial) return monomial_to_powersum(h, bank);
        throw std::invalid_argument("inner_product_alpha: convert jack basis first");
    };
    SymFunc fp = to_p(f), gp = to_p(g);
    Scalar total;
    for (auto& [p, c] : fp.coeffs) {
        auto it = gp.coeffs.find(p);
        if (it == gp.coeffs.end()) continue;
        total += c * it->second * Scalar(GaussRat(Rat(z_of(p)))) * alpha.alpha.pow(p.length());
    }
    return total;
}

/// Integral-form Jack polynomial J_mu^{(alpha)} in the monomial basis.
inline SymFunc jack_integral(const Partition& mu, const JackParameter& alpha, JackBank& bank) {
    int n = mu.size();
    const auto& dt = bank.degree_tables(n);
    const auto& table = bank.jack_monomial(n, alpha.alpha);
    int i = dt.index_of(mu);
    SymFunc out = SymFunc::zero(n, SymBasis::monomial);
    for (size_t j = 0; j < dt.parts.size(); ++j)
        if (!table[i][j].is_zero()) out.coeffs.emplace(dt.parts[j], table[i][j]);
    return out;
}

/// Entries c_{lambda,mu} with
/// L^{len(lambda)} p_lambda/z_lambda = sum_mu c_{lambda,mu} L^{|mu|} J_mu^{(alpha)},
/// together with the inverse direction d.
inline BasisChangeTable basis_change_table(int n, const JackParameter& alpha,
                                           const Scalar& L, JackBank& bank) {
    if (L.is_zero()) throw std::invalid_argument("basis_change_table: L must be nonzero");
    if (n >= 1) bank.jack_monomial(n, alpha.alpha);  // bind + persist this chart's Jacks
    const auto& dt = bank.degree_tables(n);
    const auto& gen = bank.generic_jack(n);
    int P = static_cast<int>(dt.parts.size());
    BasisChangeTable t;
    t.n = n;
    t.alpha = alpha.alpha;
    t.L = L;
    t.labels = dt.parts;
    t.c.assign(P, std::vector<Scalar>(P, Scalar::zero()));
    t.d.assign(P, std::vector<Scalar>(P, Scalar::zero()));
    std::vector<Scalar> Lpow(n + 1);
    Lpow[0] = Scalar::one();
    for (int k = 1; k <= n; ++k) Lpow[k] = Lpow[k - 1] * L;
    for (int lam = 0; lam < P; ++lam) {
        int l = dt.parts[lam].length();
        Scalar zinv = Scalar(GaussRat(Rat(dt.z[lam]))).inverse();
        Scalar zval = Scalar(GaussRat(Rat(dt.z[lam])));
        for (int mu = 0; mu < P; ++mu) {
            const UniRat& b = gen.p_in_j[lam][mu];
            if (!b.is_zero())
                t.c[lam][mu] = (Lpow[l] / Lpow[n]) * zinv * b.eval(alpha.alpha);
            const UniRat& a = gen.j_in_p[mu][lam];
            if (!a.is_zero())
                t.d[mu][lam] = (Lpow[n] / Lpow[l]) * zval * a.eval(alpha.alpha);
        }
    }
    return t;
}

}  // namespace hilborb
