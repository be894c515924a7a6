#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tcat/error.hpp"
#include "tcat/series.hpp"

namespace {

using tcat::UniformSeries;

std::vector<double> vals(const tcat::DerivedSeries& d) { return d.values; }

TEST(UniformSeries, RejectsInvalidConstruction) {
  EXPECT_THROW(UniformSeries({1.0}), tcat::InvalidArgument);
  EXPECT_THROW(UniformSeries({1.0, 2.0}, 0.0), tcat::InvalidArgument);
  EXPECT_THROW(UniformSeries({1.0, NAN}), tcat::InvalidArgument);
  EXPECT_THROW(UniformSeries({1.0, 2.0}, 1.0, {"2000-01-02"}), tcat::InvalidArgument);
}

TEST(UniformSeries, Accessors) {
  UniformSeries s({1.0, 2.0, 4.0}, 0.5);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s.time(2), 1.0);
  EXPECT_FALSE(s.has_labels());
  EXPECT_EQ(s.label(1), "");
}

TEST(ParseCsv, MinimalInput) {
  auto s = tcat::parse_csv("date,close\n2006-07-16,10739.35\n2006-07-23,11090.67");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.dt(), 1.0);
  EXPECT_EQ(s[0], 10739.35);
  EXPECT_EQ(s.epoch(), "2006-07-16");
  EXPECT_EQ(s.label(1), "2006-07-23");
}

TEST(ParseCsv, RejectsNonMonotoneDates) {
  try {
    tcat::parse_csv("date,close\n2006-07-23,1\n2006-07-16,2");
    FAIL() << "expected a parse error";
  } catch (const tcat::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseCsv, RejectsMalformedRows) {
  EXPECT_THROW(tcat::parse_csv("time,value\n2006-07-16,1\n2006-07-23,2"), tcat::ParseError);
  EXPECT_THROW(tcat::parse_csv("date,close\n2006-07-16,1,2\n2006-07-23,2"), tcat::ParseError);
  EXPECT_THROW(tcat::parse_csv("date,close\n2006-02-30,1\n2006-07-23,2"), tcat::ParseError);
  EXPECT_THROW(tcat::parse_csv("date,close\n2006-07-16,1\n2006-07-23,1e999"), tcat::ParseError);
  EXPECT_THROW(tcat::parse_csv("date,close\n2006-07-16,1\n2006-07-23,1,5"), tcat::ParseError);
  EXPECT_THROW(tcat::parse_csv("date,close\n2006-07-16,1"), tcat::DataError);
  EXPECT_THROW(tcat::parse_csv("date,close\n2006-07-16,1\n2006-07-23,"), tcat::ParseError);
}

TEST(ParseCsv, AcceptsCrlfAndTrailingNewline) {
  auto s = tcat::parse_csv("date,close\r\n2006-07-16,1.5\r\n2006-07-23,2\r\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], 1.5);
}

TEST(ParseCsv, BundledDjiFixture) {
  auto s = tcat::read_csv_file(std::filesystem::path(TCAT_DATA_DIR) / "dji_weekly.csv");
  EXPECT_EQ(s.size(), 189u);
  EXPECT_EQ(s.label(0), "2006-07-16");
  EXPECT_EQ(s.label(188), "2010-02-21");
}

TEST(ReadCsvFile, MissingFileIsIoError) {
  EXPECT_THROW(tcat::read_csv_file("/nonexistent/dir/x.csv"), tcat::IoError);
}

TEST(CsvRoundTrip, ParsedSeriesSurvivesWriteAndReparse) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1e3);
  std::vector<double> v(300);
  for (auto& x : v) x = gauss(rng);
  UniformSeries original(v);

  std::ostringstream first;
  tcat::write_csv(first, original);
  auto parsed = tcat::parse_csv(first.str());
  std::ostringstream second;
  tcat::write_csv(second, parsed);
  auto reparsed = tcat::parse_csv(second.str());

  ASSERT_EQ(reparsed.size(), original.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(reparsed[i], v[i]);
    EXPECT_EQ(reparsed.label(i), parsed.label(i));
  }
  EXPECT_EQ(first.str(), second.str());
}

TEST(Velocity, Examples) {
  EXPECT_EQ(vals(tcat::velocity(UniformSeries({0, 1, 2}))), (std::vector<double>{1, 1}));
  EXPECT_EQ(vals(tcat::velocity(UniformSeries({1, 0, 0.5}))), (std::vector<double>{-1, 0.5}));
  EXPECT_EQ(vals(tcat::velocity(UniformSeries({5, 5, 5}))), (std::vector<double>{0, 0}));
  EXPECT_EQ(tcat::velocity(UniformSeries({0, 1, 2})).start_offset, 1u);
}

TEST(Acceleration, Examples) {
  EXPECT_EQ(vals(tcat::acceleration(UniformSeries({0, 1, 2}))), (std::vector<double>{0}));
  EXPECT_EQ(vals(tcat::acceleration(UniformSeries({1, 0, 0.5}))), (std::vector<double>{1.5}));
  EXPECT_EQ(vals(tcat::acceleration(UniformSeries({0, 1, 4, 9}))), (std::vector<double>{2, 2}));
  EXPECT_EQ(tcat::acceleration(UniformSeries({0, 1, 4})).start_offset, 2u);
  EXPECT_THROW(tcat::acceleration(UniformSeries({0, 1})), tcat::DataError);
}

TEST(Kinematics, LengthMatchesOffset) {
  UniformSeries s({3, 1, 4, 1, 5, 9, 2, 6});
  EXPECT_EQ(tcat::velocity(s).values.size(), s.size() - 1);
  EXPECT_EQ(tcat::acceleration(s).values.size(), s.size() - 2);
}

TEST(Kinematics, AffineSeriesHasConstantVelocityAndZeroAcceleration) {
  const double a = -3.25, b = 0.75, dt = 0.5;
  std::vector<double> x(50);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = a + b * static_cast<double>(i);
  UniformSeries s(x, dt);
  for (double v : tcat::velocity(s).values) EXPECT_EQ(v, b / dt);
  for (double acc : tcat::acceleration(s).values) EXPECT_EQ(acc, 0.0);
}

TEST(Kinematics, VelocityIgnoresConstantShift) {
  std::mt19937_64 rng(11);
  auto x = oracle::integer_walk(rng, 100);
  auto shifted = x;
  for (auto& v : shifted) v += 37.0;
  EXPECT_EQ(tcat::velocity(UniformSeries(x)).values,
            tcat::velocity(UniformSeries(shifted)).values);
}

TEST(WriteDerivedCsv, UsesParentIndices) {
  std::ostringstream out;
  tcat::write_derived_csv(out, tcat::acceleration(UniformSeries({0, 1, 4, 9})));
  EXPECT_EQ(out.str(), "index,value\n2,2\n3,2\n");
}

TEST(SyntheticDate, CountsWeeksFromEpoch) {
  EXPECT_EQ(tcat::synthetic_date(0), "2000-01-02");
  EXPECT_EQ(tcat::synthetic_date(1), "2000-01-09");
  EXPECT_EQ(tcat::synthetic_date(52), "2000-12-31");
}

}  // namespace
