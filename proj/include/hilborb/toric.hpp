#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilborb/scalar.hpp"

namespace hilborb {

struct FanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed fan that fails the smoothness requirement.
struct FanSmoothnessError : FanError {
    using FanError::FanError;
};

/// Complete or non-complete fan of a smooth toric surface: primitive rays
/// and 2-dimensional cones as index pairs into them.
struct Fan {
    std::vector<std::array<long, 2>> rays;
    std::vector<std::array<int, 2>> cones2d;
};

/// One torus-fixed point x_k with the tangent weights of its affine chart.
/// (weight_L, weight_R) follow the cone's ray order; alpha = -R/L.
struct Chart {
    int cone_index = 0;
    int fixed_point_id = 0;
    Poly2 weight_L, weight_R;

    Scalar L() const { return Scalar(weight_L); }
    Scalar R() const { return Scalar(weight_R); }
    Scalar alpha() const { return Scalar(-weight_R, weight_L); }
    Scalar euler_point() const { return Scalar(weight_L * weight_R); }
};

struct ToricSurface {
    Fan fan;
    std::vector<Chart> charts;
    std::string name;  // builtin name or file path, for reports

    int fixed_point_count() const { return static_cast<int>(charts.size()); }
};

namespace detail {

inline long idet(const std::array<long, 2>& u, const std::array<long, 2>& v) {
    return u[0] * v[1] - u[1] * v[0];
}

// r strictly inside cone(u,v): r = a*u + b*v with a, b > 0.
inline bool strictly_inside(const std::array<long, 2>& r, const std::array<long, 2>& u,
                            const std::array<long, 2>& v) {
    long d = idet(u, v);
    if (d == 0) return false;
    // Cramer: a = det(r,v)/d, b = det(u,r)/d
    long an = idet(r, v), bn = idet(u, r);
    if (d < 0) {
        an = -an;
        bn = -bn;
        d = -d;
    }
    return an > 0 && bn > 0;
}

}  // namespace detail

/// Parse a fan file: {"rays": [[int,int],...], "cones": [[i,j],...]}.
/// Checks ray primitivity, cone nondegeneracy and proper cone intersections.
inline Fan parse_fan(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FanError(std::string("fan file: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
        throw FanError("fan file: expected object with \"rays\" and \"cones\"");

    Fan fan;
    int idx = 0;
    for (auto& r : j["rays"]) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
            !r[1].is_number_integer())
            throw FanError("fan file: ray " + std::to_string(idx) +
                           " must be a pair of integers");
        long x = r[0].get<long>(), y = r[1].get<long>();
        if (x == 0 && y == 0)
            throw FanError("fan file: ray " + std::to_string(idx) + " is zero");
        if (std::gcd(std::abs(x), std::abs(y)) != 1)
            throw FanError("fan file: non-primitive ray at index " + std::to_string(idx));
        fan.rays.push_back({x, y});
        ++idx;
    }
    idx = 0;
    for (auto& c : j["cones"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw FanError("fan file: cone " + std::to_string(idx) +
                           " must be a pair of ray indices");
        int a = c[0].get<int>(), b = c[1].get<int>();
        if (a < 0 || b < 0 || a >= static_cast<int>(fan.rays.size()) ||
            b >= static_cast<int>(fan.rays.size()))
            throw FanError("fan file: cone " + std::to_string(idx) +
                           " references a missing ray");
        if (detail::idet(fan.rays[a], fan.rays[b]) == 0)
            throw FanError("fan file: degenerate cone at index " + std::to_string(idx) +
                           " (rays are linearly dependent)");
        fan.cones2d.push_back({a, b});
        ++idx;
    }

    // cones must intersect in common faces: no identical cones, no interior
    // overlap (for strongly convex 2d cones it suffices that no generating
    // ray of one lies strictly inside the other)
    for (size_t p = 0; p < fan.cones2d.size(); ++p) {
        for (size_t q = p + 1; q < fan.cones2d.size(); ++q) {
            auto &cp = fan.cones2d[p], &cq = fan.cones2d[q];
            const auto &u1 = fan.rays[cp[0]], &v1 = fan.rays[cp[1]];
            const auto &u2 = fan.rays[cq[0]], &v2 = fan.rays[cq[1]];
            bool same = (u1 == u2 && v1 == v2) || (u1 == v2 && v1 == u2);
            if (same || detail::strictly_inside(u2, u1, v1) ||
                detail::strictly_inside(v2, u1, v1) ||
                detail::strictly_inside(u1, u2, v2) ||
                detail::strictly_inside(v1, u2, v2))
                throw FanError("fan file: cones " + std::to_string(p) + " and " +
                               std::to_string(q) + " overlap beyond a common face");
        }
    }
    return fan;
}

/// Check smoothness (|det| = 1 per 2d cone) and compute tangent weights.
/// The weight pair of a cone with ordered rays (v1, v2) is (m1.t, m2.t)
/// where (m1, m2) is the dual basis; for the standard cone this gives
/// exactly (t1, t2).
inline std::vector<Chart> validate_smooth(const Fan& fan) {
    std::vector<Chart> charts;
    for (size_t k = 0; k < fan.cones2d.size(); ++k) {
        const auto& c = fan.cones2d[k];
        const auto &v1 = fan.rays[c[0]], &v2 = fan.rays[c[1]];
        long d = detail::idet(v1, v2);
        if (d != 1 && d != -1)
            throw FanSmoothnessError("non-smooth cone at index " + std::to_string(k) +
                                     " (|det| = " + std::to_string(std::abs(d)) + ")");
        // dual basis: m1 = ( v2[1], -v2[0]) / det, m2 = (-v1[1], v1[0]) / det
        long m1x = v2[1] / d, m1y = -v2[0] / d;
        long m2x = -v1[1] / d, m2y = v1[0] / d;
        Chart ch;
        ch.cone_index = static_cast<int>(k);
        ch.fixed_point_id = static_cast<int>(charts.size());
        ch.weight_L = Poly2::linear(m1x, m1y);
        ch.weight_R = Poly2::linear(m2x, m2y);
        charts.push_back(std::move(ch));
    }
    return charts;
}

inline ToricSurface make_surface(Fan fan, std::string name) {
    ToricSurface s;
    s.charts = validate_smooth(fan);
    s.fan = std::move(fan);
    s.name = std::move(name);
    return s;
}

/// Built-in fans: c2, p2, p1xp1, hirzebruch:a.
inline ToricSurface builtin_surface(const std::string& name) {
    Fan fan;
    if (name == "c2") {
        fan.rays = {{1, 0}, {0, 1}};
        fan.cones2d = {{0, 1}};
    } else if (name == "p2") {
        fan.rays = {{1, 0}, {0, 1}, {-1, -1}};
        fan.cones2d = {{0, 1}, {1, 2}, {2, 0}};
    } else if (name == "p1xp1") {
        fan.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        fan.cones2d = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    } else if (name.rfind("hirzebruch:", 0) == 0) {
        int a = 0;
        try {
            a = std::stoi(name.substr(11));
        } catch (...) {
            throw FanError("builtin fan: bad hirzebruch parameter in '" + name + "'");
        }
        if (a < 0) throw FanError("builtin fan: hirzebruch parameter must be >= 0");
        fan.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
        fan.cones2d = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    } else {
        throw FanError("unknown builtin fan '" + name + "'");
    }
    return make_surface(std::move(fan), name);
}

}  // namespace hilborb
