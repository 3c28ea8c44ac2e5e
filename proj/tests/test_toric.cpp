#include <catch_amalgamated.hpp>

#include <set>

#include "hilborb/toric.hpp"

using namespace hilborb;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

// Equivariant integral of 1, c1 and c1^2 over the surface as localization
// sums; for compact S these are 0, 0 and K^2.
Scalar integral_one(const ToricSurface& s) {
    Scalar total;
    for (auto& ch : s.charts) total += ch.euler_point().inverse();
    return total;
}
Scalar integral_c1(const ToricSurface& s) {
    Scalar total;
    for (auto& ch : s.charts) total += (ch.L() + ch.R()) / ch.euler_point();
    return total;
}
Scalar integral_c1sq(const ToricSurface& s) {
    Scalar total;
    for (auto& ch : s.charts) {
        Scalar c1 = ch.L() + ch.R();
        total += c1 * c1 / ch.euler_point();
    }
    return total;
}

}  // namespace

TEST_CASE("parse and validate the affine plane fan") {
    Fan fan = parse_fan(R"({"rays": [[1,0],[0,1]], "cones": [[0,1]]})");
    REQUIRE(fan.cones2d.size() == 1);
    auto charts = validate_smooth(fan);
    REQUIRE(charts.size() == 1);
    CHECK(charts[0].L() == S("t1"));
    CHECK(charts[0].R() == S("t2"));
    CHECK(charts[0].alpha() == S("-t2/t1"));
}

TEST_CASE("parse p2 and compute its three charts") {
    Fan fan = parse_fan(R"({"rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2],[2,0]]})");
    auto charts = validate_smooth(fan);
    REQUIRE(charts.size() == 3);
    CHECK(charts[0].L() == S("t1"));
    CHECK(charts[0].R() == S("t2"));
    // cone <(0,1),(-1,-1)>: dual generators (-1,1) and (-1,0)
    std::set<std::string> w1{charts[1].L().to_string(), charts[1].R().to_string()};
    CHECK(w1 == std::set<std::string>{"-t1 + t2", "-t1"});
    std::set<std::string> w2{charts[2].L().to_string(), charts[2].R().to_string()};
    CHECK(w2 == std::set<std::string>{"-t2", "t1 - t2"});
}

TEST_CASE("fan validation errors") {
    CHECK_THROWS_WITH(parse_fan(R"({"rays": [[2,0],[0,1]], "cones": [[0,1]]})"),
                      Catch::Matchers::ContainsSubstring("non-primitive ray"));
    CHECK_THROWS_WITH(parse_fan(R"({"rays": [[1,0],[-1,0]], "cones": [[0,1]]})"),
                      Catch::Matchers::ContainsSubstring("degenerate cone"));
    CHECK_THROWS_WITH(parse_fan(R"({"rays": [[1,0],[0,1]], "cones": [[0,2]]})"),
                      Catch::Matchers::ContainsSubstring("missing ray"));
    CHECK_THROWS_AS(parse_fan("not json"), FanError);
    // overlapping cones: <e1,e2> and <e1+e2-ish interior ray, ...>
    CHECK_THROWS_WITH(
        parse_fan(R"({"rays": [[1,0],[0,1],[1,1]], "cones": [[0,1],[2,1]]})"),
        Catch::Matchers::ContainsSubstring("overlap"));
    // smoothness
    Fan fan = parse_fan(R"({"rays": [[1,0],[1,2]], "cones": [[0,1]]})");
    CHECK_THROWS_WITH(validate_smooth(fan),
                      Catch::Matchers::ContainsSubstring("non-smooth cone"));
}

TEST_CASE("reversing a cone's ray order swaps (L, R)") {
    Fan f1 = parse_fan(R"({"rays": [[0,1],[-1,-1]], "cones": [[0,1]]})");
    Fan f2 = parse_fan(R"({"rays": [[0,1],[-1,-1]], "cones": [[1,0]]})");
    auto c1 = validate_smooth(f1);
    auto c2 = validate_smooth(f2);
    CHECK(c1[0].L() == c2[0].R());
    CHECK(c1[0].R() == c2[0].L());
}

TEST_CASE("builtin fans") {
    CHECK(builtin_surface("c2").fixed_point_count() == 1);
    CHECK(builtin_surface("p2").fixed_point_count() == 3);
    CHECK(builtin_surface("p1xp1").fixed_point_count() == 4);
    CHECK(builtin_surface("hirzebruch:1").fixed_point_count() == 4);
    CHECK(builtin_surface("hirzebruch:3").fixed_point_count() == 4);
    CHECK_THROWS_AS(builtin_surface("p3"), FanError);
    CHECK_THROWS_AS(builtin_surface("hirzebruch:-1"), FanError);
}

TEST_CASE("localization sums over charts reproduce intersection numbers") {
    // compact surfaces: integral of 1 and of c1 vanish by degree,
    // integral of c1^2 is K^2
    for (auto name : {"p2", "p1xp1", "hirzebruch:1", "hirzebruch:2"}) {
        ToricSurface s = builtin_surface(name);
        INFO(name);
        CHECK(integral_one(s).is_zero());
        CHECK(integral_c1(s).is_zero());
    }
    CHECK(integral_c1sq(builtin_surface("p2")) == S("9"));
    CHECK(integral_c1sq(builtin_surface("p1xp1")) == S("8"));
    CHECK(integral_c1sq(builtin_surface("hirzebruch:1")) == S("8"));
    CHECK(integral_c1sq(builtin_surface("hirzebruch:2")) == S("8"));

    // the affine plane is not compact: the equivariant volume is 1/(t1 t2)
    CHECK(integral_one(builtin_surface("c2")) == S("1/(t1*t2)"));
}

TEST_CASE("chart weight pairs are independent over Q") {
    for (auto name : {"p2", "p1xp1", "hirzebruch:2"}) {
        ToricSurface s = builtin_surface(name);
        for (auto& ch : s.charts) {
            // L and R proportional would make the euler class a square times
            // a rational; independence <=> det of coefficient matrix nonzero
            auto coeff = [](const Poly2& p, int a, int b) {
                for (auto& t : p.terms)
                    if (t.a == a && t.b == b) return t.c;
                return GaussRat(0);
            };
            GaussRat det = coeff(ch.weight_L, 1, 0) * coeff(ch.weight_R, 0, 1) -
                           coeff(ch.weight_L, 0, 1) * coeff(ch.weight_R, 1, 0);
            CHECK(!det.is_zero());
        }
    }
}
