#pragma once
// UTC timestamps at second precision.
//
// Everything downstream assumes UTC; conversion from platform-local time
// happens before data enters the pipeline. The civil-date arithmetic is
// self-contained so results do not depend on the host timezone database.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "sitrep/errors.hpp"

namespace sitrep {

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kSecondsPerDay = 86400;

namespace detail {

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct CivilDate {
  std::int64_t year;
  unsigned month, day;
};

constexpr CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {y + (m <= 2), m, d};
}

constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline int parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t n) {
  int v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    char c = s[pos + i];
    if (!is_digit(c)) return -1;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

// Parses "YYYY-MM-DDTHH:MM:SSZ" (strict; this is the only on-disk form).
inline Timestamp parse_iso8601(std::string_view s) {
  auto fail = [&] { return error(errc::bad_timestamp, std::string(s)); };
  if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' ||
      s[13] != ':' || s[16] != ':' || s[19] != 'Z')
    throw fail();
  const int year = detail::parse_fixed_uint(s, 0, 4);
  const int month = detail::parse_fixed_uint(s, 5, 2);
  const int day = detail::parse_fixed_uint(s, 8, 2);
  const int hour = detail::parse_fixed_uint(s, 11, 2);
  const int minute = detail::parse_fixed_uint(s, 14, 2);
  const int second = detail::parse_fixed_uint(s, 17, 2);
  if (year < 0 || month < 1 || month > 12 || day < 1 || day > 31 ||
      hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 ||
      second > 59)
    throw fail();
  // Reject days that do not exist in the given month.
  const std::int64_t days = detail::days_from_civil(year, month, day);
  const auto back = detail::civil_from_days(days);
  if (back.year != year || back.month != static_cast<unsigned>(month) ||
      back.day != static_cast<unsigned>(day))
    throw fail();
  return days * kSecondsPerDay + hour * 3600 + minute * 60 + second;
}

inline std::string format_iso8601(Timestamp t) {
  std::int64_t days = t / kSecondsPerDay;
  std::int64_t rem = t % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    days -= 1;
  }
  const auto cd = detail::civil_from_days(days);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(cd.year), cd.month, cd.day,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

// Closed interval [start, end]; both bounds are part of the window.
struct TimeWindow {
  Timestamp start = 0;
  Timestamp end = 0;

  bool contains(Timestamp t) const { return t >= start && t <= end; }
  bool operator==(const TimeWindow&) const = default;
};

}  // namespace sitrep
