#pragma once

#include <cstdint>
#include <string>

namespace gnop {

// Calendar date as days since 1970-01-01. All the library needs from dates
// is ordering, differences and ISO round-trips.
struct Date {
  std::int32_t days_since_epoch = 0;

  auto operator<=>(const Date&) const = default;
};

Date parse_date(const std::string& iso);      // "YYYY-MM-DD"
std::string format_date(Date d);
inline int days_between(Date from, Date to) { return to.days_since_epoch - from.days_since_epoch; }
Date add_days(Date d, int n);

}  // namespace gnop
