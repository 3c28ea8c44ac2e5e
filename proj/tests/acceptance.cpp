// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion. Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <filesystem>

#include "hilborb/verify.hpp"

using namespace hilborb;

namespace {

int failures = 0;

void run(int number, const char* name, Report (*fn)(JackBank&)) {
    using clock = std::chrono::steady_clock;
    // fresh bank per criterion: cold-cache timings, no cross-talk
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "hilborb_acceptance_cache";
    JackBank bank(dir.string());
    auto t0 = clock::now();
    Report rep;
    bool threw = false;
    std::string what;
    try {
        rep = fn(bank);
    } catch (const std::exception& e) {
        threw = true;
        what = e.what();
    }
    double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count() /
        1000.0;
    bool ok = !threw && rep.all_pass();
    std::printf("criterion %02d %-28s %s  (%d pass, %d fail, %d skipped, %.1fs)\n", number,
                name, ok ? "PASS" : "FAIL", rep.count(CheckStatus::pass),
                rep.count(CheckStatus::fail), rep.count(CheckStatus::skipped), secs);
    if (threw) std::printf("             exception: %s\n", what.c_str());
    if (!ok) {
        ++failures;
        for (auto& r : rep.records)
            if (r.status == CheckStatus::fail)
                std::printf("             FAIL %s %s: %s != %s\n", r.check.c_str(),
                            r.labels.c_str(), r.lhs.c_str(), r.rhs.c_str());
    }
    std::fflush(stdout);
}

ToricSurface two_chart_surface() {
    // two affine charts glued along an invariant curve (a P^1 x C bundle
    // picture): the smallest s = 2 example
    Fan fan = parse_fan(R"({"rays": [[1,0],[0,1],[-1,0]], "cones": [[0,1],[1,2]]})");
    return make_surface(std::move(fan), "two-chart");
}

Report crit1_pairings(JackBank& bank) {
    Report rep;
    ToricSurface c2 = builtin_surface("c2");
    ToricSurface p2 = builtin_surface("p2");
    rep.merge(verify_pairings(c2, 6, bank));
    rep.merge(verify_pairings(p2, 4, bank));
    return rep;
}

Report crit2_isometry(JackBank& bank) {
    Report rep;
    ToricSurface c2 = builtin_surface("c2");
    ToricSurface p2 = builtin_surface("p2");
    rep.merge(verify_isometry_suite(c2, 5, bank, 100));
    rep.merge(verify_isometry_suite(p2, 5, bank, 100));
    return rep;
}

Report crit3_degrees(JackBank&) {
    Report rep;
    rep.merge(verify_degrees(builtin_surface("c2"), 8));
    rep.merge(verify_degrees(builtin_surface("p2"), 8));
    return rep;
}

Report crit4_tangent(JackBank&) { return verify_tangent_oracle(6); }

Report crit5_jack(JackBank& bank) { return verify_jack(bank, 8, 5, 6); }

Report crit6_cross_pairing(JackBank& bank) {
    Report rep;
    rep.merge(verify_cross_pairing(builtin_surface("c2"), 5, bank));
    rep.merge(verify_cross_pairing(builtin_surface("p2"), 3, bank));
    return rep;
}

Report crit7_product_formula(JackBank& bank) {
    return verify_product_formula(builtin_surface("p2"), 4, bank);
}

Report crit8_vanishing(JackBank& bank) {
    Report rep;
    rep.merge(verify_vanishing(builtin_surface("c2"), 4, bank));
    rep.merge(verify_vanishing(two_chart_surface(), 4, bank));
    rep.merge(verify_vanishing(builtin_surface("p2"), 4, bank));
    return rep;
}

Report crit9_cr_engine(JackBank&) { return verify_cr_calibration(5, 4, 6); }

Report crit10_cup_table(JackBank& bank) {
    Report rep;
    rep.merge(verify_cup_table(builtin_surface("c2"), 3, bank));
    rep.merge(verify_cup_table(builtin_surface("p2"), 3, bank));
    return rep;
}

}  // namespace

int main() {
    std::filesystem::remove_all(std::filesystem::temp_directory_path() /
                                "hilborb_acceptance_cache");

    run(1, "pairing-formulas", crit1_pairings);
    run(2, "isometry-of-L", crit2_isometry);
    run(3, "degree-matching", crit3_degrees);
    run(4, "tangent-weight-oracle", crit4_tangent);
    run(5, "jack-suite", crit5_jack);
    run(6, "cross-pairing-consistency", crit6_cross_pairing);
    run(7, "product-formula-deg0", crit7_product_formula);
    run(8, "vanishing", crit8_vanishing);
    run(9, "cr-engine-calibration", crit9_cr_engine);
    run(10, "cup-table-consistency", crit10_cup_table);

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
