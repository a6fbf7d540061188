#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace hatecode {

using UtcSeconds = std::chrono::sys_seconds;
using UtcDay = std::chrono::sys_days;

// Parses an ISO-8601 timestamp ("2016-10-04T12:00:00Z"). Fractional seconds
// are truncated; a "+hh:mm"/"-hh:mm" offset is folded into UTC; a missing
// designator means UTC. Returns nullopt on anything malformed, including
// out-of-range calendar dates.
std::optional<UtcSeconds> parse_iso8601(const std::string& text);

// Canonical form: "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(UtcSeconds tp);

// "YYYY-MM-DD" for a UTC calendar day.
std::string format_date(UtcDay day);

}  // namespace hatecode
