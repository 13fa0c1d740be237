#include "core/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "core/csv.hpp"
#include "core/errors.hpp"

namespace gnop::data {

namespace {

bool parse_double(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

bool parse_type(std::string s, OptionType* out) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "c" || s == "call") {
    *out = OptionType::call;
    return true;
  }
  if (s == "p" || s == "put") {
    *out = OptionType::put;
    return true;
  }
  return false;
}

}  // namespace

RateCurve::RateCurve(std::vector<double> tenor_days, std::vector<double> rates)
    : spline_(std::move(tenor_days), std::move(rates)) {}

RateCurve RateCurve::from_csv(const std::string& path) {
  const auto t = csv::read_file(path);
  const int c_days = t.column("days");
  const int c_rate = t.column("rate");
  if (c_days < 0 || c_rate < 0) throw ParseError("rate curve CSV needs columns: days, rate");
  std::vector<std::pair<double, double>> knots;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    double d = 0, r = 0;
    if (!parse_double(t.rows[i][static_cast<size_t>(c_days)], &d) ||
        !parse_double(t.rows[i][static_cast<size_t>(c_rate)], &r)) {
      throw ParseError("rate curve line " + std::to_string(t.line_numbers[i]) + ": bad number");
    }
    knots.emplace_back(d, r);
  }
  std::sort(knots.begin(), knots.end());
  std::vector<double> xs, ys;
  for (auto& [d, r] : knots) {
    xs.push_back(d);
    ys.push_back(r);
  }
  return RateCurve(std::move(xs), std::move(ys));
}

double RateCurve::rate_at(double tau_days, bool* clamped) const {
  return spline_.eval(tau_days, clamped);
}

double midpoint_price(const OptionQuote& q) {
  if (q.ask < q.bid) throw InvalidArgument("midpoint: ask < bid");
  return 0.5 * (q.bid + q.ask);
}

double put_to_call(double put, double spot, double strike, double rate, double div_yield,
                   double tau_years) {
  if (!(spot > 0.0) || !std::isfinite(put) || !std::isfinite(strike) || !std::isfinite(rate) ||
      !std::isfinite(div_yield) || !std::isfinite(tau_years)) {
    throw InvalidArgument("put_to_call: non-finite input or spot <= 0");
  }
  return put + spot * std::exp(-div_yield * tau_years) - strike * std::exp(-rate * tau_years);
}

double call_to_put(double call, double spot, double strike, double rate, double div_yield,
                   double tau_years) {
  return call - spot * std::exp(-div_yield * tau_years) + strike * std::exp(-rate * tau_years);
}

ColumnMap default_columns() {
  return {{"quote_date", "quote_date"},   {"expiry_date", "expiry_date"},
          {"type", "type"},               {"strike", "strike"},
          {"bid", "bid"},                 {"ask", "ask"},
          {"underlying_close", "underlying_close"},
          {"rate", "rate"},               {"dividend_yield", "dividend_yield"}};
}

IngestResult ingest_chain(const std::string& path, const ColumnMap& schema,
                          double max_bad_fraction) {
  const auto table = csv::read_file(path);
  IngestResult out;

  auto col_name = [&](const std::string& canonical) {
    auto it = schema.find(canonical);
    return it == schema.end() ? canonical : it->second;
  };
  const char* mandatory[] = {"quote_date", "expiry_date", "type",
                             "strike",     "bid",         "ask",
                             "underlying_close"};

  if (table.header.empty() && table.rows.empty()) {
    out.diagnostics.push_back("warning: empty input file " + path);
    return out;
  }
  std::map<std::string, int> idx;
  for (const char* c : mandatory) {
    const int i = table.column(col_name(c));
    if (i < 0) throw ParseError("chain CSV missing required column '" + col_name(c) + "'");
    idx[c] = i;
  }
  const int i_rate = table.column(col_name("rate"));
  const int i_div = table.column(col_name("dividend_yield"));

  auto field = [&](const std::vector<std::string>& row, const char* canonical) -> const std::string& {
    return row[static_cast<size_t>(idx.at(canonical))];
  };

  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    ++out.rows_seen;
    const std::string where = "row at line " + std::to_string(table.line_numbers[r]);
    const size_t needed = static_cast<size_t>(
        std::max({idx.at("quote_date"), idx.at("expiry_date"), idx.at("type"), idx.at("strike"),
                  idx.at("bid"), idx.at("ask"), idx.at("underlying_close"), i_rate, i_div}));
    if (row.size() <= needed) {
      out.diagnostics.push_back(where + ": too few fields");
      ++out.rows_rejected;
      continue;
    }

    OptionQuote q;
    try {
      q.quote_date = parse_date(field(row, "quote_date"));
      q.expiry_date = parse_date(field(row, "expiry_date"));
    } catch (const ParseError& e) {
      out.diagnostics.push_back(where + ": " + e.what());
      ++out.rows_rejected;
      continue;
    }
    if (!parse_type(field(row, "type"), &q.type)) {
      out.diagnostics.push_back(where + ": bad option type '" + field(row, "type") + "'");
      ++out.rows_rejected;
      continue;
    }
    if (!parse_double(field(row, "strike"), &q.strike) || q.strike < 0.0 ||
        !parse_double(field(row, "bid"), &q.bid) || !parse_double(field(row, "ask"), &q.ask) ||
        !parse_double(field(row, "underlying_close"), &q.underlying_close)) {
      out.diagnostics.push_back(where + ": missing or malformed numeric field");
      ++out.rows_rejected;
      continue;
    }
    if (q.bid < 0.0 || q.ask < q.bid) {
      out.diagnostics.push_back(where + ": bid/ask violate 0 <= bid <= ask");
      ++out.rows_rejected;
      continue;
    }
    if (!(q.underlying_close > 0.0)) {
      out.diagnostics.push_back(where + ": underlying_close must be > 0");
      ++out.rows_rejected;
      continue;
    }
    if (q.expiry_date < q.quote_date) {
      out.diagnostics.push_back(where + ": expiry before quote date");
      ++out.rows_rejected;
      continue;
    }
    if (i_rate >= 0) {
      double v = 0.0;
      const std::string& s = row[static_cast<size_t>(i_rate)];
      if (!s.empty()) {
        if (!parse_double(s, &v)) {
          out.diagnostics.push_back(where + ": malformed rate");
          ++out.rows_rejected;
          continue;
        }
        q.rate = v;
      }
    }
    if (i_div >= 0) {
      const std::string& s = row[static_cast<size_t>(i_div)];
      if (!s.empty() && !parse_double(s, &q.dividend_yield)) {
        out.diagnostics.push_back(where + ": malformed dividend_yield");
        ++out.rows_rejected;
        continue;
      }
    }
    out.quotes.push_back(q);
  }

  if (out.rows_seen == 0) {
    out.diagnostics.push_back("warning: no data rows in " + path);
  } else if (out.rows_rejected >= 5 &&
             static_cast<double>(out.rows_rejected) >
                 max_bad_fraction * static_cast<double>(out.rows_seen)) {
    throw ParseError("too many malformed rows in " + path + ": " +
                     std::to_string(out.rows_rejected) + " of " + std::to_string(out.rows_seen) +
                     " rejected; first: " + (out.diagnostics.empty() ? "?" : out.diagnostics[0]));
  }
  return out;
}

FilterResult filter_and_normalize(const std::vector<OptionQuote>& quotes, const RateCurve* curve) {
  FilterResult out;
  if (quotes.empty()) throw InvalidArgument("filter_and_normalize: no usable quotes (empty input)");
  const Date day = quotes.front().quote_date;
  for (const auto& q : quotes) {
    if (q.quote_date != day) {
      throw InvalidArgument("filter_and_normalize expects quotes from a single quote date");
    }
  }

  for (size_t i = 0; i < quotes.size(); ++i) {
    const auto& q = quotes[i];
    const std::string where = "quote " + std::to_string(i);

    const int tau_days = days_between(q.quote_date, q.expiry_date);
    if (tau_days < 2) {
      ++out.dropped_short_tau;
      continue;
    }
    // Raw in-the-money quotes are unreliable (thin trading); the ITM call
    // side is re-created below from converted puts.
    const bool itm = (q.type == OptionType::call) ? (q.strike < q.underlying_close)
                                                  : (q.strike > q.underlying_close);
    if (itm) {
      ++out.dropped_itm;
      continue;
    }
    if (!(q.strike > 0.0)) {
      out.diagnostics.push_back(where + ": zero strike dropped (moneyness undefined)");
      ++out.dropped_other;
      continue;
    }

    const double tau_years = static_cast<double>(tau_days) / kDaysPerYear;
    double rate = 0.0;
    if (curve != nullptr) {
      rate = curve->rate_at(tau_days);  // interpolated rate preferred over vendor field
    } else if (q.rate.has_value()) {
      rate = *q.rate;
    } else {
      out.diagnostics.push_back(where + ": no rate available (no curve, no rate column)");
      ++out.dropped_other;
      continue;
    }

    const double mid = midpoint_price(q);
    double call = mid;
    if (q.type == OptionType::put) {
      call = put_to_call(mid, q.underlying_close, q.strike, rate, q.dividend_yield, tau_years);
      if (call < 0.0) {
        out.diagnostics.push_back(where + ": parity gives negative call price, dropped");
        ++out.dropped_parity;
        continue;
      }
    }

    CallRecord rec;
    rec.quote_date = q.quote_date;
    rec.tau_days = tau_days;
    rec.tau_years = tau_years;
    rec.strike = q.strike;
    rec.spot = q.underlying_close;
    rec.rate = rate;
    rec.moneyness = q.strike / q.underlying_close;
    rec.call_price = call;
    rec.target = std::exp(rate * tau_years) * call / q.underlying_close;
    out.records.push_back(rec);
  }

  if (out.records.empty()) {
    throw Error("filter_and_normalize: no usable quotes after filtering");
  }
  return out;
}

std::vector<CallRecord> filter_records(const std::vector<CallRecord>& records) {
  std::vector<CallRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (r.tau_days < 2) continue;
    if (!(r.moneyness > 0.0)) continue;
    if (r.call_price < 0.0) continue;
    out.push_back(r);
  }
  return out;
}

std::vector<Date> Dataset::dates() const {
  std::set<Date> s;
  for (const auto& r : records) s.insert(r.quote_date);
  return {s.begin(), s.end()};
}

std::vector<CallRecord> Dataset::for_date(Date d) const {
  std::vector<CallRecord> out;
  for (const auto& r : records) {
    if (r.quote_date == d) out.push_back(r);
  }
  return out;
}

void write_records(const std::string& path, const std::vector<CallRecord>& records,
                   const std::vector<std::string>& config_header) {
  csv::Writer w(path);
  for (const auto& line : config_header) w.comment(line);
  w.row({"date", "tau_days", "tau_years", "K", "S_t", "r", "m", "c", "y_target"});
  for (const auto& r : records) {
    w.row({format_date(r.quote_date), std::to_string(r.tau_days), csv::fmt(r.tau_years),
           csv::fmt(r.strike), csv::fmt(r.spot), csv::fmt(r.rate), csv::fmt(r.moneyness),
           csv::fmt(r.call_price), csv::fmt(r.target)});
  }
  w.flush();
}

Dataset read_records(const std::string& path) {
  const auto t = csv::read_file(path);
  const char* cols[] = {"date", "tau_days", "tau_years", "K", "S_t", "r", "m", "c", "y_target"};
  int idx[9];
  for (int i = 0; i < 9; ++i) {
    idx[i] = t.column(cols[i]);
    if (idx[i] < 0) throw ParseError("records CSV missing column '" + std::string(cols[i]) + "'");
  }
  Dataset ds;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    CallRecord rec;
    rec.quote_date = parse_date(row[static_cast<size_t>(idx[0])]);
    rec.tau_days = static_cast<int>(std::strtol(row[static_cast<size_t>(idx[1])].c_str(), nullptr, 10));
    double vals[7];
    for (int i = 2; i < 9; ++i) {
      if (!parse_double(row[static_cast<size_t>(idx[i])], &vals[i - 2])) {
        throw ParseError("records CSV line " + std::to_string(t.line_numbers[r]) + ": bad number");
      }
    }
    rec.tau_years = vals[0];
    rec.strike = vals[1];
    rec.spot = vals[2];
    rec.rate = vals[3];
    rec.moneyness = vals[4];
    rec.call_price = vals[5];
    rec.target = vals[6];
    ds.records.push_back(rec);
  }
  return ds;
}

}  // namespace gnop::data
