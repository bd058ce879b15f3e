#pragma once

#include <string>

#include "pnc/bounds.hpp"

namespace pnc {

enum class ReportFormat { json, csv, text };

ReportFormat parse_report_format(const std::string& name);

// Serializes with 17 significant digits so every double round-trips exactly;
// the byte layout is deterministic for identical reports.
std::string report_serialize(const BoundsReport& report, ReportFormat format);

BoundsReport report_parse(const std::string& text, ReportFormat format);

}  // namespace pnc
