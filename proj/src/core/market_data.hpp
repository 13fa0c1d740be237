#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/dates.hpp"
#include "core/spline.hpp"

namespace gnop::data {

enum class OptionType { call, put };

// One raw market observation, as quoted by the vendor feed.
struct OptionQuote {
  Date quote_date;
  Date expiry_date;
  OptionType type = OptionType::call;
  double strike = 0.0;
  double bid = 0.0;
  double ask = 0.0;
  double underlying_close = 0.0;
  std::optional<double> rate;  // vendor rate, if the feed carries one
  double dividend_yield = 0.0;
};

// Normalized training record. moneyness m = K / S_t and the transformed
// target y* = e^{r tau} c / S_t are what the pricing models consume.
struct CallRecord {
  Date quote_date;
  int tau_days = 0;        // >= 2
  double tau_years = 0.0;  // tau_days / 365 (ACT/365 fixed)
  double strike = 0.0;     // K
  double spot = 0.0;       // S_t
  double rate = 0.0;       // r, annualized decimal
  double moneyness = 0.0;  // m
  double call_price = 0.0; // c, dollar mid
  double target = 0.0;     // y*
};

constexpr double kDaysPerYear = 365.0;

// Risk-free curve: (days, rate) knots joined by a natural cubic spline.
class RateCurve {
 public:
  RateCurve(std::vector<double> tenor_days, std::vector<double> rates);
  static RateCurve from_csv(const std::string& path);

  // Natural-spline value at tau_days; exact at knots. Queries outside the
  // knot range clamp to the boundary knot and set *clamped.
  double rate_at(double tau_days, bool* clamped = nullptr) const;

 private:
  CubicSpline spline_;
};

double midpoint_price(const OptionQuote& q);

// Put-call parity: c = p + S e^{-q tau} - K e^{-r tau}, and its inverse.
double put_to_call(double put, double spot, double strike, double rate, double div_yield,
                   double tau_years);
double call_to_put(double call, double spot, double strike, double rate, double div_yield,
                   double tau_years);

// Mapping from the canonical column names to the names used by a particular
// feed. Keys: quote_date, expiry_date, type, strike, bid, ask,
// underlying_close, rate, dividend_yield.
using ColumnMap = std::map<std::string, std::string>;
ColumnMap default_columns();

struct IngestResult {
  std::vector<OptionQuote> quotes;        // file order preserved
  std::vector<std::string> diagnostics;   // one line per rejected/suspect row
  long rows_seen = 0;
  long rows_rejected = 0;
};

// Reads an option-chain CSV. Rows missing mandatory fields or violating
// basic invariants (bid > ask, spot <= 0, expiry < quote date) are rejected
// with a row-level diagnostic. If more than max_bad_fraction of the data
// rows are malformed (and at least 5 rows), ingestion aborts with a summary.
IngestResult ingest_chain(const std::string& path, const ColumnMap& schema = default_columns(),
                          double max_bad_fraction = 0.25);

struct FilterResult {
  std::vector<CallRecord> records;
  std::vector<std::string> diagnostics;
  long dropped_itm = 0;
  long dropped_short_tau = 0;
  long dropped_parity = 0;   // negative implied call price
  long dropped_other = 0;
};

// The full preprocessing step for one quote date: discards raw in-the-money
// quotes, converts surviving puts to calls via parity, drops tau < 2 days,
// and attaches (m, tau_years, y*). Rates come from the curve when one is
// given, falling back to the per-quote vendor rate.
FilterResult filter_and_normalize(const std::vector<OptionQuote>& quotes,
                                  const RateCurve* curve = nullptr);

// Record-level invariant filter (tau >= 2, m > 0, c >= 0). Used to show
// filter_and_normalize is idempotent on its own output.
std::vector<CallRecord> filter_records(const std::vector<CallRecord>& records);

// A set of normalized records plus by-date access.
struct Dataset {
  std::vector<CallRecord> records;

  std::vector<Date> dates() const;  // sorted unique
  std::vector<CallRecord> for_date(Date d) const;
  bool empty() const { return records.empty(); }
};

// Normalized-record CSV: date, tau_days, tau_years, K, S_t, r, m, c, y_target.
void write_records(const std::string& path, const std::vector<CallRecord>& records,
                   const std::vector<std::string>& config_header);
Dataset read_records(const std::string& path);

}  // namespace gnop::data
