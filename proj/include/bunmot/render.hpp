#pragma once

#include <bunmot/motive.hpp>
#include <bunmot/parabolic.hpp>
#include <bunmot/series.hpp>
#include <bunmot/weightcx.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace bunmot {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Unbounded integers travel as decimal strings in JSON; structurally small
// quantities (ranks, dims, degrees, bounds) as numbers.
json int_str(const Int& v);

json roots_json(const RootSystem& rs);
std::string roots_text(const RootSystem& rs);
std::string roots_latex(const RootSystem& rs);

json degrees_json(const RootSystem& rs, const InvariantDegrees& deg);
std::string degrees_text(const RootSystem& rs, const InvariantDegrees& deg);
std::string degrees_latex(const RootSystem& rs, const InvariantDegrees& deg);

json parabolics_json(const RootSystem& rs);
std::string parabolics_text(const RootSystem& rs);
std::string parabolics_latex(const RootSystem& rs);

json dmin_json(const RootSystem& rs, const StabilityBound& brute, const StabilityBound& closed);
std::string dmin_text(const RootSystem& rs, const StabilityBound& brute,
                      const StabilityBound& closed);
std::string dmin_latex(const RootSystem& rs, const StabilityBound& brute,
                       const StabilityBound& closed);

json range_json(const RootSystem& rs, const StabilityBound& brute, long long dim_stack);
std::string range_text(const RootSystem& rs, const StabilityBound& brute, long long dim_stack);
std::string range_latex(const RootSystem& rs, const StabilityBound& brute, long long dim_stack);

json series_json(const TruncatedSeries& s, const std::string& kind, const json& meta);
std::string series_text(const TruncatedSeries& s);
// Per-t-degree listing, one line per degree present.
std::string series_text_by_degree(const TruncatedSeries& s);
std::string series_latex(const TruncatedSeries& s);

json motive_json(const MotiveClass& mc, const std::string& group, const std::string& isogeny);
std::string motive_text(const MotiveClass& mc);
std::string motive_latex(const MotiveClass& mc);

json coarse_json(const CoarseMotive& cm, const std::string& group, const std::string& isogeny);
std::string coarse_text(const CoarseMotive& cm);
std::string coarse_latex(const CoarseMotive& cm);

json audit_json(const AuditReport& report);
std::string audit_text(const AuditReport& report);
// Printed-table layout: one column per family, a closed-form row and a
// brute-force row. Rows are symbolic when the audited cells fit
// c(n)*(g-1) with c affine in n; otherwise the cell reads "irregular".
std::string render_latex_table(const AuditReport& report);

LogPairDatum log_pair_from_json(const json& j);
SimplicialLogDatum simplicial_from_json(const json& j);
// Accepts either shape; dispatches on the presence of "pairs".
bool json_is_simplicial(const json& j);
json log_pair_to_json(const LogPairDatum& datum);

json weightcx_json(const GrWTable& table, const std::vector<CohomologyEntry>* cohom);
std::string weightcx_text(const GrWTable& table, const std::vector<CohomologyEntry>* cohom);
std::string weightcx_latex(const GrWTable& table);

}  // namespace bunmot
