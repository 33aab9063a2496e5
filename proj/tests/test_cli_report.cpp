#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dunklosc/report.hpp"

using namespace dunkl;

namespace {

Json build_spectrum_report(const ModelParams& p, double e_max, int p_max) {
    ReportConfig cfg;
    cfg.command = "spectrum";
    cfg.params = p;
    cfg.e_max = e_max;
    cfg.p_max = p_max;
    cfg.tol = 1e-9;
    auto report = make_report(cfg);
    auto algebraic = enumerate_levels_parallel(p, p_max);
    auto physical = enumerate_physical(p, e_max);
    auto matches = filter_algebraic(algebraic.levels, p, e_max);
    attach_levels(report, algebraic, physical, matches);
    return report;
}

} // namespace

TEST_CASE("report skeleton carries the schema and all required blocks") {
    ReportConfig cfg;
    cfg.command = "spectrum";
    cfg.e_max = 8.0;
    auto report = make_report(cfg);
    CHECK(report.at("schema").get<int>() == 1);
    CHECK(report.at("config").at("model").get<std::string>() == "dunkl");
    CHECK(report.at("config").at("e_max").get<double>() == 8.0);
    for (const char* key : {"algebraic", "physical", "matches", "diagnostics"})
        CHECK(report.contains(key));
    for (const char* key : {"matched", "physical_only", "algebraic_only"})
        CHECK(report.at("matches").at(key).is_array());
    CHECK(report.at("diagnostics").at("residuals").is_array());
    CHECK(report.at("diagnostics").at("convergence").is_null());
}

TEST_CASE("two independently built reports serialize byte-identically") {
    ModelParams p;
    p.m = 2;
    p.n = 1;
    p.mu_x = 0.3;
    p.mu_y = 0.7;
    auto a = build_spectrum_report(p, 12.0, 5);
    auto b = build_spectrum_report(p, 12.0, 5);
    CHECK(dump_json(a) == dump_json(b));
    CHECK(dump_csv(a) == dump_csv(b));
    CHECK(dump_json(a).back() == '\n');
}

TEST_CASE("JSON round-trip preserves the level multisets") {
    ModelParams p;
    p.model = Model::singular;
    p.m = 1;
    p.n = 1;
    p.alpha_x = 1.0;
    p.beta_x = 0.5;
    auto report = build_spectrum_report(p, 10.0, 7);
    auto parsed = Json::parse(dump_json(report));
    CHECK(parsed == report);
    REQUIRE(parsed.at("physical").size() == enumerate_physical(p, 10.0).size());
    auto algebraic = enumerate_levels(p, 7);
    REQUIRE(parsed.at("algebraic").size() == algebraic.levels.size());
    for (std::size_t i = 0; i < algebraic.levels.size(); ++i) {
        const auto& j = parsed.at("algebraic")[i];
        CHECK(j.at("energy").get<double>() == algebraic.levels[i].energy);
        CHECK(j.at("p").get<int>() == algebraic.levels[i].p);
        CHECK(j.at("sector").at("s_x").get<int>() == algebraic.levels[i].sector.s_x);
        REQUIRE(j.at("phi").size() == algebraic.levels[i].phi_samples.size());
    }
    CHECK(parsed.at("diagnostics").at("rejected_sectors").is_array());
}

TEST_CASE("CSV projection: header and row shapes") {
    ModelParams p;
    p.m = 1;
    p.n = 1;
    auto report = build_spectrum_report(p, 3.0, 3);
    auto csv = dump_csv(report);
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "kind,energy,s_x,s_y,eps1,eps2,k1,k2,p,u,n1x,n1y");
    int n_alg = 0, n_phys = 0;
    while (std::getline(is, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 11);
        if (line.rfind("algebraic,", 0) == 0) ++n_alg;
        if (line.rfind("physical,", 0) == 0) ++n_phys;
        CHECK(line.find("-0,") == std::string::npos); // no negative zeros
    }
    CHECK(n_alg == static_cast<int>(report.at("algebraic").size()));
    CHECK(n_phys == static_cast<int>(report.at("physical").size()));
    CHECK(n_phys == static_cast<int>(enumerate_physical(p, 3.0).size()));
}

TEST_CASE("identity residuals and oracle diagnostics attach in place") {
    ModelParams p;
    p.m = 1;
    p.n = 1;
    p.mu_x = 0.3;
    ReportConfig cfg;
    cfg.command = "compare";
    cfg.params = p;
    cfg.e_max = 8.0;
    cfg.basis_size = 40;
    cfg.tol = 1e-8;
    auto report = make_report(cfg);
    attach_identity_suites(report, {run_identity_suite(p, 16)});
    const auto& residuals = report.at("diagnostics").at("residuals");
    REQUIRE(!residuals.empty());
    for (const auto& r : residuals) {
        CHECK(r.at("pass").get<bool>());
        CHECK(r.at("basis_size").get<int>() == 16);
        CHECK(!r.at("identity").get<std::string>().empty());
    }
    auto oracle = spectrum_2d(p, 8.0, 40);
    auto physical = enumerate_physical(p, 8.0);
    attach_oracle(report, oracle, compare_spectra(oracle, physical, 1e-8));
    const auto& diag = report.at("diagnostics");
    CHECK(diag.at("convergence").get<double>() <= 1e-10);
    CHECK(diag.at("oracle").size() == oracle.levels.size());
    CHECK(diag.at("compare").at("matched").get<int>() == static_cast<int>(physical.size()));
    CHECK(diag.at("compare").at("unmatched_physical").empty());
}
