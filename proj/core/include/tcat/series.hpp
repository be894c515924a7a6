#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcat {

/// Uniformly sampled scalar series x_i at t_i = i * dt.
///
/// Calendar dates, when present, are labels only: any strictly increasing
/// date sequence counts as uniform (weekly closes with holiday gaps are
/// treated as one sample per week). Immutable after construction.
class UniformSeries {
 public:
  /// Throws InvalidArgument unless values.size() >= 2, dt > 0, every value is
  /// finite and labels is empty or has one entry per value.
  explicit UniformSeries(std::vector<double> values, double dt = 1.0,
                         std::vector<std::string> labels = {});

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  double dt() const noexcept { return dt_; }
  double time(std::size_t i) const noexcept { return static_cast<double>(i) * dt_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  /// Label of sample i, or an empty string when the series is unlabelled.
  std::string_view label(std::size_t i) const;
  /// Timestamp of the first sample (its label).
  std::string_view epoch() const { return label(0); }

 private:
  std::vector<double> values_;
  double dt_;
  std::vector<std::string> labels_;
};

/// A finite-difference quantity of a parent series; values[k] belongs to the
/// parent index start_offset + k.
struct DerivedSeries {
  std::vector<double> values;
  std::size_t start_offset = 0;

  std::size_t parent_index(std::size_t k) const noexcept { return start_offset + k; }
};

/// Parses `date,close` CSV with ISO-8601 dates in strictly ascending order.
/// The resulting series has dt = 1 and carries the dates as labels.
UniformSeries parse_csv(std::istream& in);
UniformSeries parse_csv(std::string_view text);
UniformSeries read_csv_file(const std::filesystem::path& path);

/// Writes `date,close` rows using the shortest representation that parses
/// back to the same double. Unlabelled series get synthetic weekly dates.
void write_csv(std::ostream& out, const UniformSeries& series);
void write_csv_file(const std::filesystem::path& path, const UniformSeries& series);

/// `index,value` rows, index being the parent-series index.
void write_derived_csv(std::ostream& out, const DerivedSeries& series);

/// v_k = (x_{k+1} - x_k) / dt, start_offset 1.
DerivedSeries velocity(const UniformSeries& series);
/// First difference of velocity, start_offset 2. Needs at least 3 samples.
DerivedSeries acceleration(const UniformSeries& series);

/// ISO date of week `week` counted from Sunday 2000-01-02; labels for
/// synthetic paths.
std::string synthetic_date(std::size_t week);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace tcat
