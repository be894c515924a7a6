#include "tcat/series.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tcat/error.hpp"

namespace tcat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

// YYYY-MM-DD, validated against the calendar.
bool parse_iso_date(std::string_view s, std::chrono::sys_days& out) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  int y = 0, m = 0, d = 0;
  if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m) ||
      !parse_int(s.substr(8, 2), d))
    return false;
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{static_cast<unsigned>(m)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return false;
  out = std::chrono::sys_days{ymd};
  return true;
}

// Plain decimal: optional sign, digits, optional fraction and exponent.
// std::from_chars also accepts "inf"/"nan", which are rejected separately.
bool parse_decimal(std::string_view s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out,
                                   std::chars_format::general);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

UniformSeries::UniformSeries(std::vector<double> values, double dt,
                             std::vector<std::string> labels)
    : values_(std::move(values)), dt_(dt), labels_(std::move(labels)) {
  if (values_.size() < 2)
    throw InvalidArgument("a series needs at least 2 samples, got " +
                          std::to_string(values_.size()));
  if (!(dt_ > 0.0) || !std::isfinite(dt_))
    throw InvalidArgument("time step must be positive and finite");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw InvalidArgument("non-finite value at index " + std::to_string(i));
  }
  if (!labels_.empty() && labels_.size() != values_.size())
    throw InvalidArgument("label count does not match value count");
}

std::string_view UniformSeries::label(std::size_t i) const {
  if (labels_.empty()) return {};
  return labels_.at(i);
}

UniformSeries parse_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header, skipping leading blank lines and a UTF-8 byte-order mark.
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || trim(view.substr(0, comma)) != "date" ||
        trim(view.substr(comma + 1)) != "close")
      throw ParseError(line_no, "expected header 'date,close'");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "empty input, expected header 'date,close'");

  std::vector<double> values;
  std::vector<std::string> labels;
  std::chrono::sys_days previous{};
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos)
      throw ParseError(line_no, "expected 2 fields 'date,close'");
    const std::string_view date = trim(view.substr(0, comma));
    const std::string_view close = trim(view.substr(comma + 1));
    if (close.find(',') != std::string_view::npos)
      throw ParseError(line_no, "expected 2 fields 'date,close'");

    std::chrono::sys_days day;
    if (!parse_iso_date(date, day))
      throw ParseError(line_no, "invalid ISO-8601 date '" + std::string(date) + "'");
    double value = 0.0;
    if (!parse_decimal(close, value))
      throw ParseError(line_no, "invalid decimal '" + std::string(close) + "'");
    if (!std::isfinite(value))
      throw ParseError(line_no, "non-finite value '" + std::string(close) + "'");
    if (!labels.empty() && day <= previous)
      throw ParseError(line_no, "dates must be strictly ascending ('" + std::string(date) +
                                    "' follows '" + labels.back() + "')");

    previous = day;
    values.push_back(value);
    labels.emplace_back(date);
  }
  if (values.size() < 2)
    throw ParseError(line_no, "need at least 2 data rows, got " + std::to_string(values.size()));
  return UniformSeries(std::move(values), 1.0, std::move(labels));
}

UniformSeries parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

UniformSeries read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return parse_csv(in);
}

std::string synthetic_date(std::size_t week) {
  using namespace std::chrono;
  const sys_days day = sys_days{year{2000} / January / 2} + days{7 * static_cast<long>(week)};
  const year_month_day ymd{day};
  std::array<char, 16> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf.data();
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& out, const UniformSeries& series) {
  out << "date,close\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.has_labels())
      out << series.label(i);
    else
      out << synthetic_date(i);
    out << ',' << format_double(series[i]) << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path, const UniformSeries& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(out, series);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_derived_csv(std::ostream& out, const DerivedSeries& series) {
  out << "index,value\n";
  for (std::size_t k = 0; k < series.values.size(); ++k)
    out << series.parent_index(k) << ',' << format_double(series.values[k]) << '\n';
}

DerivedSeries velocity(const UniformSeries& series) {
  // The constructor already guarantees two samples.
  const auto x = series.values();
  DerivedSeries v{std::vector<double>(x.size() - 1), 1};
  for (std::size_t k = 0; k + 1 < x.size(); ++k) v.values[k] = (x[k + 1] - x[k]) / series.dt();
  return v;
}

DerivedSeries acceleration(const UniformSeries& series) {
  if (series.size() < 3)
    throw DataError("acceleration needs at least 3 samples, got " +
                    std::to_string(series.size()));
  const DerivedSeries v = velocity(series);
  DerivedSeries a{std::vector<double>(v.values.size() - 1), 2};
  for (std::size_t k = 0; k + 1 < v.values.size(); ++k)
    a.values[k] = (v.values[k + 1] - v.values[k]) / series.dt();
  return a;
}

}  // namespace tcat
