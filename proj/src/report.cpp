#include "dunklosc/report.hpp"

#include <cstdio>

namespace dunkl {

namespace {

std::string model_name(Model m) { return m == Model::dunkl ? "dunkl" : "singular"; }

double norm_zero(double v) { return v == 0.0 ? 0.0 : v; } // avoid "-0" in reports

// fixed-format float for the CSV projection (JSON uses the library's
// shortest-round-trip encoder)
std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Json to_json(const ReportConfig& cfg) {
    const ModelParams& p = cfg.params;
    return Json{{"command", cfg.command},
                {"model", model_name(p.model)},
                {"m", p.m},
                {"n", p.n},
                {"mu_x", p.mu_x},
                {"mu_y", p.mu_y},
                {"alpha_x", p.alpha_x},
                {"beta_x", p.beta_x},
                {"alpha_y", p.alpha_y},
                {"beta_y", p.beta_y},
                {"e_max", cfg.e_max},
                {"p_max", cfg.p_max},
                {"basis_size", cfg.basis_size},
                {"tol", cfg.tol}};
}

Json to_json(const Sector& s) {
    return Json{{"s_x", s.s_x}, {"s_y", s.s_y}, {"eps1", s.eps1},
                {"eps2", s.eps2}, {"k1", s.k1}, {"k2", s.k2}};
}

Json to_json(const AlgebraicLevel& lv) {
    Json phi = Json::array();
    for (double v : lv.phi_samples) phi.push_back(norm_zero(v));
    return Json{{"energy", norm_zero(lv.energy)},
                {"p", lv.p},
                {"sector", to_json(lv.sector)},
                {"u", norm_zero(lv.u)},
                {"phi", std::move(phi)}};
}

Json to_json(const PhysicalLevel& lv) {
    return Json{{"energy", lv.energy},
                {"n1x", lv.n1x},
                {"n1y", lv.n1y},
                {"s_x", lv.s_x},
                {"s_y", lv.s_y}};
}

Json to_json(const OracleLevel& lv) {
    return Json{{"energy", lv.energy},
                {"s_x", lv.s_x},
                {"s_y", lv.s_y},
                {"convergence", lv.convergence}};
}

Json to_json(const IdentityResult& r) {
    return Json{{"identity", r.name}, {"residual", r.residual}, {"exact", r.exact},
                {"pass", r.pass}};
}

Json make_report(const ReportConfig& cfg) {
    Json report;
    report["schema"] = 1;
    report["config"] = to_json(cfg);
    report["algebraic"] = Json::array();
    report["physical"] = Json::array();
    report["matches"] = Json{{"matched", Json::array()},
                             {"physical_only", Json::array()},
                             {"algebraic_only", Json::array()}};
    report["diagnostics"] = Json{{"residuals", Json::array()}, {"convergence", nullptr}};
    return report;
}

void attach_levels(Json& report, const EnumerationResult& algebraic,
                   const std::vector<PhysicalLevel>& physical, const MatchReport& matches) {
    for (const auto& lv : algebraic.levels) report["algebraic"].push_back(to_json(lv));
    for (const auto& lv : physical) report["physical"].push_back(to_json(lv));
    auto& m = report["matches"];
    for (const auto& pair : matches.matched)
        m["matched"].push_back(Json{{"physical", to_json(pair.physical)},
                                    {"algebraic", to_json(pair.algebraic)},
                                    {"label_exact", pair.label_exact}});
    for (const auto& lv : matches.physical_only) m["physical_only"].push_back(to_json(lv));
    for (const auto& lv : matches.algebraic_only) m["algebraic_only"].push_back(to_json(lv));
    Json rejected = Json::array();
    for (const auto& s : algebraic.rejected_sectors) rejected.push_back(to_json(s));
    report["diagnostics"]["rejected_sectors"] = std::move(rejected);
}

void attach_identity_suites(Json& report, const std::vector<IdentitySuiteReport>& suites) {
    auto& residuals = report["diagnostics"]["residuals"];
    for (const auto& suite : suites)
        for (const auto& r : suite.results) {
            Json j = to_json(r);
            j["basis_size"] = suite.basis_size;
            residuals.push_back(std::move(j));
        }
}

void attach_oracle(Json& report, const SpectrumReport& oracle, const CompareReport& compare) {
    Json levels = Json::array();
    for (const auto& lv : oracle.levels) levels.push_back(to_json(lv));
    report["diagnostics"]["oracle"] = std::move(levels);
    report["diagnostics"]["convergence"] = oracle.max_convergence;
    Json cmp{{"max_deviation", compare.max_deviation}, {"matched", compare.matched}};
    Json um_o = Json::array(), um_p = Json::array();
    for (const auto& lv : compare.unmatched_oracle) um_o.push_back(to_json(lv));
    for (const auto& lv : compare.unmatched_physical) um_p.push_back(to_json(lv));
    cmp["unmatched_oracle"] = std::move(um_o);
    cmp["unmatched_physical"] = std::move(um_p);
    report["diagnostics"]["compare"] = std::move(cmp);
}

std::string dump_json(const Json& report) { return report.dump(2) + "\n"; }

std::string dump_csv(const Json& report) {
    std::string out =
        "kind,energy,s_x,s_y,eps1,eps2,k1,k2,p,u,n1x,n1y\n";
    for (const auto& lv : report.at("algebraic")) {
        const auto& sec = lv.at("sector");
        out += "algebraic," + csv_num(lv.at("energy").get<double>()) + ',' +
               std::to_string(sec.at("s_x").get<int>()) + ',' +
               std::to_string(sec.at("s_y").get<int>()) + ',' +
               std::to_string(sec.at("eps1").get<int>()) + ',' +
               std::to_string(sec.at("eps2").get<int>()) + ',' +
               std::to_string(sec.at("k1").get<int>()) + ',' +
               std::to_string(sec.at("k2").get<int>()) + ',' +
               std::to_string(lv.at("p").get<int>()) + ',' +
               csv_num(lv.at("u").get<double>()) + ",,\n";
    }
    for (const auto& lv : report.at("physical")) {
        out += "physical," + csv_num(lv.at("energy").get<double>()) + ',' +
               std::to_string(lv.at("s_x").get<int>()) + ',' +
               std::to_string(lv.at("s_y").get<int>()) + ",,,,,,," +
               std::to_string(lv.at("n1x").get<int>()) + ',' +
               std::to_string(lv.at("n1y").get<int>()) + '\n';
    }
    return out;
}

} // namespace dunkl
