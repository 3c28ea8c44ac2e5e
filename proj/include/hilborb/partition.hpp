#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilborb/gaussian.hpp"

namespace hilborb {

/// Integer partition, parts nonincreasing and positive.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (k > 0 && parts[k] > parts[k - 1])
                throw std::invalid_argument("Partition: parts must be nonincreasing");
        }
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int age() const { return size() - length(); }

    int part(int k) const { return k < length() ? parts[k] : 0; }

    Partition transpose() const {
        Partition t;
        if (parts.empty()) return t;
        t.parts.resize(parts[0]);
        for (int col = 0; col < parts[0]; ++col) {
            int cnt = 0;
            for (int p : parts)
                if (p > col) ++cnt;
            t.parts[col] = cnt;
        }
        return t;
    }

    bool contains_box(int row, int col) const {
        return row >= 0 && row < length() && col >= 0 && col < parts[row];
    }

    /// |Aut|: product of multiplicities factorial.
    Int aut_order() const {
        Int a(1);
        size_t k = 0;
        while (k < parts.size()) {
            size_t j = k;
            while (j < parts.size() && parts[j] == parts[k]) ++j;
            for (size_t m = 2; m <= j - k; ++m) a *= static_cast<long>(m);
            k = j;
        }
        return a;
    }

    std::string to_compact_string() const {
        std::string s;
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(parts[k]);
        }
        return s;
    }
    static Partition from_compact_string(const std::string& s) {
        Partition p;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t nxt = s.find(',', pos);
            if (nxt == std::string::npos) nxt = s.size();
            p.parts.push_back(std::stoi(s.substr(pos, nxt - pos)));
            pos = nxt + 1;
        }
        p.validate();
        return p;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Canonical order: lexicographic descending, larger partitions first
    /// within equal size. Used for all map keys and output tables.
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts > b.parts;  // reverse lex on part vectors
    }
};

/// z_lambda = |Aut| * prod(parts): order of the centralizer of a permutation
/// of cycle type lambda.
inline Int z_of(const Partition& p) {
    Int z = p.aut_order();
    for (int x : p.parts) z *= x;
    return z;
}

/// (arm, leg) of a box: cells strictly right in the row / strictly below in
/// the column.
inline std::pair<int, int> arm_leg(const Partition& p, int row, int col) {
    if (!p.contains_box(row, col))
        throw std::out_of_range("arm_leg: box outside Young diagram");
    int arm = p.parts[row] - col - 1;
    int leg = 0;
    for (int r = row + 1; r < p.length(); ++r)
        if (p.parts[r] > col) ++leg;
    return {arm, leg};
}

/// All partitions of n in canonical (descending lex) order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back();
            out.back().parts = cur;
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// s-tuple of partitions; slots may be empty. Indexes fixed points and basis
/// labels on both sides of the correspondence.
struct MultiPartition {
    std::vector<Partition> slots;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> s) : slots(std::move(s)) {}
    MultiPartition(std::initializer_list<Partition> s) : slots(s) {}

    int size() const {
        int n = 0;
        for (auto& p : slots) n += p.size();
        return n;
    }
    int slot_count() const { return static_cast<int>(slots.size()); }
    int length() const {
        int l = 0;
        for (auto& p : slots) l += p.length();
        return l;
    }
    int age() const {
        int a = 0;
        for (auto& p : slots) a += p.age();
        return a;
    }

    std::vector<int> slot_sizes() const {
        std::vector<int> v;
        v.reserve(slots.size());
        for (auto& p : slots) v.push_back(p.size());
        return v;
    }

    std::string to_compact_string() const {
        std::string s = "(";
        for (size_t k = 0; k < slots.size(); ++k) {
            if (k) s += ";";
            s += slots[k].to_compact_string();
        }
        return s + ")";
    }

    friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
        return a.slots == b.slots;
    }
    friend bool operator!=(const MultiPartition& a, const MultiPartition& b) {
        return !(a == b);
    }
    friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
        return a.slots < b.slots;  // slotwise canonical partition order
    }
};

/// All s-tuples with total size n, in canonical order.
inline std::vector<MultiPartition> enumerate_multipartitions(int n, int s) {
    if (n < 0) throw std::invalid_argument("enumerate_multipartitions: n must be nonnegative");
    if (s < 1) throw std::invalid_argument("enumerate_multipartitions: s must be positive");
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(s);
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == s - 1) {
            for (auto& p : enumerate_partitions(rest)) {
                cur[slot] = p;
                out.emplace_back(cur);
            }
            cur[slot] = Partition();
            return;
        }
        for (int k = rest; k >= 0; --k) {
            for (auto& p : enumerate_partitions(k)) {
                cur[slot] = p;
                self(self, slot + 1, rest - k);
            }
        }
        cur[slot] = Partition();
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hilborb
