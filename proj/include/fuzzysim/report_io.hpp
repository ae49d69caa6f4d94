#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"
#include "fuzzysim/measures.hpp"
#include "fuzzysim/traffic_model.hpp"
#include "fuzzysim/workzone.hpp"

namespace fuzzysim {

inline constexpr const char* kTraceSchema = "# fuzzysim trace v1";
inline constexpr const char* kSweepSchema = "# fuzzysim sweep v1";
inline constexpr const char* kReportSchema = "# fuzzysim report v1";
inline constexpr const char* kCompareSchema = "fuzzysim.compare/1";

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// Columns t,vehicle,X,V,A,G; OFN cells are quoted "(a1,a2,a3,a4)".
void write_trace_csv(std::ostream& os, std::span<const TraceRow> rows);

/// Columns measure,value,raw followed by N and T rows.
void write_report_csv(std::ostream& os, const PerformanceReport& r);

nlohmann::ordered_json to_json(const PerformanceReport& r);
nlohmann::ordered_json to_json(const ScenarioConfig& c);
nlohmann::ordered_json to_json(const StrategyComparison& c);

/// Columns n_a,n_b,precision_unit,seed,d1_1..d1_4,d2_1..d2_4,p12,p21,unc,status.
/// Failed cells leave the numeric columns empty.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace fuzzysim
