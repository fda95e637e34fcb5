#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hyperlink/channel_sim.hpp"
#include "hyperlink/link_model.hpp"
#include "hyperlink/scenarios.hpp"
#include "hyperlink/techmatrix.hpp"

namespace hyperlink::cli {

enum class OutputFormat { CSV, JSON };

/// 9 significant digits; "inf" for infinities.
std::string fmt9(double v);

void emit_analyze(const ThroughputResult& res, OutputFormat f, std::ostream& out);
void emit_simulate(const TrialStats& stats, OutputFormat f, std::ostream& out);
void emit_sweep(const std::vector<SweepPoint>& points, const std::string& variable,
                OutputFormat f, std::ostream& out);
void emit_table1(const Table1Report& report, OutputFormat f, std::ostream& out);
void emit_feasibility(const FeasibilityReport& report, OutputFormat f, std::ostream& out);
void emit_presets(const std::vector<Preset>& presets, OutputFormat f, std::ostream& out);

}  // namespace hyperlink::cli
