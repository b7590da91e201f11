#pragma once

#include <json.hpp>

#include "agr/agr.hpp"

namespace agr {

using Json = nlohmann::ordered_json;

std::string to_dot(const Program& p);
Json trace_json(const Trace& t);
Json program_summary(const Program& p, bool is_property = false);
Json config_json(const AgrConfig& cfg);

struct ReportNames {
  std::string m1, m2, property;
};

Json report_json(const AgrOutcome& out, const AgrConfig& cfg, const ReportNames& names);
// Drops wall-clock fields so two reports of the same run compare equal.
Json strip_timing(Json j);

}  // namespace agr
