#pragma once

#include <cstdint>
#include <string>

namespace cleansched {

// Unix seconds, UTC. All file formats carry ISO 8601 "YYYY-MM-DDTHH:MM:SSZ".
using UnixTime = std::int64_t;

// Parses "YYYY-MM-DDTHH:MM:SSZ" (a space instead of 'T' and a missing 'Z'
// are tolerated). Throws std::invalid_argument on malformed input.
UnixTime parse_iso8601(const std::string& s);

std::string format_iso8601(UnixTime t);

// Month 1..12 of a UTC timestamp.
int utc_month(UnixTime t);

inline double hours_between(UnixTime a, UnixTime b) {
    return static_cast<double>(b - a) / 3600.0;
}

inline double days_between(UnixTime a, UnixTime b) {
    return static_cast<double>(b - a) / 86400.0;
}

} // namespace cleansched
