// Command-line front end: fan validation, Gram matrices, cup structure
// constants, and the verification suites, with deterministic JSON/CSV/text
// output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilborb/verify.hpp"

using namespace hilborb;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kOracleHardCap = 8;

struct RunConfig {
    std::string fan = "c2";
    int n = 3;
    std::vector<std::string> suites;
    int q_order = 10;
    int oracle_bound = 6;
    std::string cache_dir;
    std::string format = "text";
    std::string out;
};

json to_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts) a.push_back(x);
    return a;
}
json to_json(const MultiPartition& m) {
    json a = json::array();
    for (auto& p : m.slots) a.push_back(to_json(p));
    return a;
}

std::string render(const json& j, const RunConfig& cfg, const std::string& text_form,
                   const std::string& csv_form) {
    if (cfg.format == "json") return j.dump(2) + "\n";
    if (cfg.format == "csv") return csv_form;
    return text_form;
}

void emit(const std::string& s, const RunConfig& cfg) {
    if (cfg.out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << s;
}

ToricSurface load_surface(const RunConfig& cfg) {
    if (cfg.fan == "c2" || cfg.fan == "p2" || cfg.fan == "p1xp1" ||
        cfg.fan.rfind("hirzebruch:", 0) == 0)
        return builtin_surface(cfg.fan);
    std::ifstream f(cfg.fan);
    if (!f) throw FanError("cannot read fan file " + cfg.fan);
    std::stringstream ss;
    ss << f.rdbuf();
    return make_surface(parse_fan(ss.str()), cfg.fan);
}

int cmd_fan_validate(const RunConfig& cfg) {
    ToricSurface s = load_surface(cfg);
    json charts = json::array();
    std::string text = "fan " + s.name + ": " + std::to_string(s.fixed_point_count()) +
                       " fixed point(s)\n";
    std::string csv = "fixed_point,cone,L,R\n";
    for (auto& ch : s.charts) {
        std::string L = ch.L().to_string(), R = ch.R().to_string();
        charts.push_back({{"fixed_point", ch.fixed_point_id},
                          {"cone", ch.cone_index},
                          {"L", L},
                          {"R", R}});
        text += "  x_" + std::to_string(ch.fixed_point_id + 1) + " (cone " +
                std::to_string(ch.cone_index) + "): L = " + L + ", R = " + R + "\n";
        csv += std::to_string(ch.fixed_point_id) + "," + std::to_string(ch.cone_index) +
               ",\"" + L + "\",\"" + R + "\"\n";
    }
    json j{{"surface", s.name}, {"charts", charts}};
    emit(render(j, cfg, text, csv), cfg);
    return kExitOk;
}

int cmd_gram(const RunConfig& cfg, const std::string& side) {
    ToricSurface s = load_surface(cfg);
    JackBank bank(cfg.cache_dir);
    json labels = json::array();
    json diag = json::array();
    std::string text = "gram " + side + " " + s.name + " n=" + std::to_string(cfg.n) + "\n";
    std::string csv = "label,value\n";

    auto record = [&](const MultiPartition& l, const Scalar& v) {
        labels.push_back(to_json(l));
        diag.push_back(v.to_string());
        text += "  " + l.to_compact_string() + " : " + v.to_string() + "\n";
        csv += "\"" + l.to_compact_string() + "\",\"" + v.to_string() + "\"\n";
    };
    if (side == "orb") {
        SymOrbifold orb(s, cfg.n);
        for (auto& l : orb.fixed_classes())
            record(l, orb.pairing(orb.fixed_class(l), orb.fixed_class(l)));
    } else {
        HilbScheme hilb(s, cfg.n, bank);
        for (auto& l : hilb.fixed_points())
            record(l, hilb.pairing(hilb.nakajima_class(l), hilb.nakajima_class(l)));
    }
    json j{{"surface", s.name}, {"n", cfg.n}, {"side", side}, {"labels", labels},
           {"diag", diag}};
    emit(render(j, cfg, text, csv), cfg);
    return kExitOk;
}

int cmd_cup(const RunConfig& cfg, const std::string& side) {
    ToricSurface s = load_surface(cfg);
    JackBank bank(cfg.cache_dir);
    HilbScheme hilb(s, cfg.n, bank);
    SymOrbifold orb(s, cfg.n);
    auto orbp = make_deg0_extended_provider(cfg.oracle_bound);
    const auto& labels = hilb.fixed_points();
    const char* basis = side == "orb" ? "orb_fixed" : "nakajima";

    json arr = json::array();
    std::string text = std::string(side == "orb" ? "degree-zero orbifold" : "cup") +
                       " structure constants, " + s.name + " n=" + std::to_string(cfg.n) +
                       "\n";
    std::string csv = "lhs,mhs,rhs,value\n";
    for (auto& lam : labels)
        for (auto& mu : labels)
            for (auto& nu : labels) {
                if (!vanishing_check(lam, mu, nu)) continue;
                Scalar v;
                if (side == "orb")
                    v = extended_three_point(orb, lam, mu, nu, orbp, 0).coeff(0);
                else
                    v = hilb.cup_three_point_deg0(hilb.nakajima_class(lam),
                                                  hilb.nakajima_class(mu),
                                                  hilb.nakajima_class(nu));
                if (v.is_zero()) continue;
                arr.push_back({{"basis", basis},
                               {"lhs", to_json(lam)},
                               {"mhs", to_json(mu)},
                               {"rhs", to_json(nu)},
                               {"value", v.to_string()}});
                text += "  <" + lam.to_compact_string() + ", " + mu.to_compact_string() +
                        ", " + nu.to_compact_string() + "> = " + v.to_string() + "\n";
                csv += "\"" + lam.to_compact_string() + "\",\"" + mu.to_compact_string() +
                       "\",\"" + nu.to_compact_string() + "\",\"" + v.to_string() +
                       "\"\n";
            }
    emit(render(arr, cfg, text, csv), cfg);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    ToricSurface s = load_surface(cfg);
    JackBank bank(cfg.cache_dir);
    const std::vector<std::string> all = {"pairings",       "isometry",
                                          "degrees",        "tangent-oracle",
                                          "jack",           "product-formula",
                                          "cr-calibration"};
    std::vector<std::string> suites = cfg.suites.empty() ? all : cfg.suites;

    json out = json::object();
    std::string text, csv = "suite,check,labels,status\n";
    bool any_fail = false;
    for (auto& suite : suites) {
        Report rep;
        if (suite == "pairings") {
            rep.merge(verify_pairings(s, cfg.n, bank));
            rep.merge(verify_cross_pairing(s, cfg.n, bank));
        } else if (suite == "isometry") {
            rep = verify_isometry_suite(s, cfg.n, bank, 10);
        } else if (suite == "degrees") {
            rep = verify_degrees(s, cfg.n);
        } else if (suite == "tangent-oracle") {
            rep = verify_tangent_oracle(cfg.oracle_bound);
        } else if (suite == "jack") {
            rep = verify_jack(bank, cfg.n, std::min(cfg.n, 5), cfg.n);
        } else if (suite == "product-formula") {
            rep = verify_product_formula(s, cfg.n, bank);
            rep.merge(verify_theorem_structure(s, std::min(cfg.n, 2), bank,
                                               make_deg0_extended_provider(cfg.oracle_bound),
                                               make_deg0_extremal_provider(bank),
                                               cfg.q_order));
        } else if (suite == "cr-calibration") {
            rep = verify_cr_calibration(cfg.n, std::min(cfg.n, 4), cfg.oracle_bound);
        } else {
            throw CLI::ValidationError("unknown suite '" + suite + "'");
        }
        json records = json::array();
        std::string detail;
        for (auto& r : rep.records) {
            records.push_back({{"check", r.check},
                               {"labels", r.labels},
                               {"lhs", r.lhs},
                               {"rhs", r.rhs},
                               {"status", to_string(r.status)}});
            if (r.status == CheckStatus::fail) {
                detail += "  FAIL " + r.check + " " + r.labels + ": " + r.lhs +
                          " != " + r.rhs + "\n";
                csv += suite + "," + r.check + ",\"" + r.labels + "\",fail\n";
            }
        }
        out[suite] = {{"records", records},
                      {"pass", rep.count(CheckStatus::pass)},
                      {"fail", rep.count(CheckStatus::fail)},
                      {"skipped", rep.count(CheckStatus::skipped)}};
        std::ostringstream line;
        line << (rep.all_pass() ? "PASS" : "FAIL") << " " << suite << " ("
             << rep.count(CheckStatus::pass) << " pass, " << rep.count(CheckStatus::fail)
             << " fail, " << rep.count(CheckStatus::skipped) << " skipped)\n";
        text += line.str() + detail;
        csv += suite + ",summary,," + (rep.all_pass() ? "pass" : "fail") + "\n";
        if (!rep.all_pass()) any_fail = true;
    }
    emit(render(out, cfg, text, csv), cfg);
    return any_fail ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant cohomology tables for symmetric product stacks "
                 "and Hilbert schemes of points on toric surfaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("HILBORB_CACHE")) cfg.cache_dir = env;

    auto add_common = [&](CLI::App* sub, bool with_n = true) {
        sub->add_option("--fan", cfg.fan,
                        "fan file path or builtin (c2, p2, p1xp1, hirzebruch:a)");
        if (with_n) sub->add_option("-n", cfg.n, "number of points")->check(CLI::Range(1, 64));
        sub->add_option("--q-order", cfg.q_order, "series truncation order")
            ->check(CLI::Range(0, 64));
        sub->add_option("--oracle-bound", cfg.oracle_bound, "brute-force size bound")
            ->check(CLI::Range(1, kOracleHardCap));
        sub->add_option("--cache", cfg.cache_dir, "Jack cache directory (env HILBORB_CACHE)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out, "write output to a file instead of stdout");
    };

    CLI::App* fanv = app.add_subcommand("fan-validate", "parse a fan and print its charts");
    add_common(fanv, false);

    std::string side = "orb";
    CLI::App* gram = app.add_subcommand("gram", "Gram matrix of a Poincare pairing");
    gram->add_option("--side", side, "orb or hilb")->check(CLI::IsMember({"orb", "hilb"}));
    add_common(gram);

    std::string cup_side = "hilb";
    CLI::App* cup = app.add_subcommand("cup", "degree-zero structure constants");
    cup->add_option("--side", cup_side, "hilb (cup at q = 0) or orb (u^0 term)")
        ->check(CLI::IsMember({"orb", "hilb"}));
    add_common(cup);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suites,
                       "pairings, isometry, degrees, tangent-oracle, jack, "
                       "product-formula, cr-calibration (default: all)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (fanv->parsed()) return cmd_fan_validate(cfg);
        if (gram->parsed()) return cmd_gram(cfg, side);
        if (cup->parsed()) return cmd_cup(cfg, cup_side);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const FanSmoothnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const FanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitInputError;
}
