#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dunklosc/identity_suite.hpp"
#include "dunklosc/oracle.hpp"
#include "dunklosc/spectra_algebraic.hpp"
#include "dunklosc/spectra_physical.hpp"

namespace dunkl {

using Json = nlohmann::json; // std::map-backed: keys serialize sorted

// Shared config block of every report.
struct ReportConfig {
    std::string command;
    ModelParams params;
    double e_max = 0.0;
    int p_max = 0;
    int basis_size = 0;
    double tol = 0.0;
};

Json to_json(const ReportConfig& cfg);
Json to_json(const Sector& s);
Json to_json(const AlgebraicLevel& lv);
Json to_json(const PhysicalLevel& lv);
Json to_json(const OracleLevel& lv);
Json to_json(const IdentityResult& r);

// schema-1 report: {schema, config, algebraic, physical,
// matches{matched, physical_only, algebraic_only}, diagnostics{residuals, convergence}}
Json make_report(const ReportConfig& cfg);

void attach_levels(Json& report, const EnumerationResult& algebraic,
                   const std::vector<PhysicalLevel>& physical, const MatchReport& matches);
void attach_identity_suites(Json& report, const std::vector<IdentitySuiteReport>& suites);
void attach_oracle(Json& report, const SpectrumReport& oracle, const CompareReport& compare);

// deterministic serializations
std::string dump_json(const Json& report);
std::string dump_csv(const Json& report); // flat projection of the level arrays

} // namespace dunkl
