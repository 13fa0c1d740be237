#include "core/dates.hpp"

#include <chrono>
#include <cstdio>

#include "core/errors.hpp"

namespace gnop {

namespace chr = std::chrono;

Date parse_date(const std::string& iso) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(iso.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3) {
    throw ParseError("invalid date '" + iso + "' (expected YYYY-MM-DD)");
  }
  const chr::year_month_day ymd{chr::year{y}, chr::month{static_cast<unsigned>(m)},
                                chr::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) throw ParseError("invalid calendar date '" + iso + "'");
  return Date{static_cast<std::int32_t>(chr::sys_days(ymd).time_since_epoch().count())};
}

std::string format_date(Date d) {
  const chr::year_month_day ymd{chr::sys_days{chr::days{d.days_since_epoch}}};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

Date add_days(Date d, int n) { return Date{d.days_since_epoch + n}; }

}  // namespace gnop
