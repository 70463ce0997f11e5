#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "ginient/errors.hpp"
#include "ginient/sample.hpp"

using namespace ginient;
namespace fs = std::filesystem;

namespace {

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ginient-sample-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path dir_;
};

std::vector<double> as_vector(const Sample& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST(Builtin, ExactValuesAndSummaries) {
  const Sample s = builtin_dataset();
  const std::vector<double> expected = {17.4, 0.0, 0.6,  3.4,  0.0,  0.0,   0.7,  1.5,  2.2,  9.2,  0.9,  0.0,
                                        2.9,  5.0, 1.3, 9.3, 22.8, 11.5, 129.8, 47.0, 17.2, 12.8, 3.2, 2272.7};
  EXPECT_EQ(as_vector(s), expected);
  EXPECT_EQ(s.name(), "ca-earthquake-1971-1994");
  EXPECT_TRUE(s.is_builtin());
  EXPECT_EQ(s.size(), 24u);
  EXPECT_NEAR(s.sum(), 2571.4, 1e-9);
  EXPECT_NEAR(s.mean(), 2571.4 / 24, 1e-12);
  EXPECT_EQ(std::count(expected.begin(), expected.end(), 0.0), 4);
}

TEST(SampleType, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Sample({}, "x", BuiltinSource{}), DataError);
  EXPECT_THROW(Sample({1.0, NAN}, "x", BuiltinSource{}), DataError);
  EXPECT_THROW((void)Sample({INFINITY}, "x", BuiltinSource{}), DataError);
}

TEST(SampleType, NegativeValuesAllowedAtConstruction) {
  const Sample s({-1.0, 2.0}, "x", BuiltinSource{});
  EXPECT_FALSE(s.all_non_negative());
}

TEST_F(TempDir, SingleColumn) {
  const Sample s = load_csv(write("a.csv", "1.0\n2.5\n"));
  EXPECT_EQ(as_vector(s), (std::vector<double>{1.0, 2.5}));
  EXPECT_FALSE(s.is_builtin());
}

TEST_F(TempDir, HeaderAutoDetected) {
  const Sample s = load_csv(write("b.csv", "loss\n17.4\n0.0\n"));
  EXPECT_EQ(as_vector(s), (std::vector<double>{17.4, 0.0}));
}

TEST_F(TempDir, ParseErrorNamesLine) {
  const fs::path p = write("c.csv", "1.0\n2.0\nabc\n4.0\n");
  try {
    load_csv(p);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST_F(TempDir, BlankLinesCrlfAndBom) {
  const Sample s = load_csv(write("d.csv", "\xEF\xBB\xBFvalue\r\n1\r\n\r\n2e1\r\n  \n3.5\n"));
  EXPECT_EQ(as_vector(s), (std::vector<double>{1.0, 20.0, 3.5}));
}

TEST_F(TempDir, NamedAndDefaultColumns) {
  const fs::path p = write("e.csv", "year,\"loss, ratio\",premium\n1971,17.4,3\n1972,0.0,4\n");
  EXPECT_EQ(as_vector(load_csv(p, "loss, ratio")), (std::vector<double>{17.4, 0.0}));
  EXPECT_EQ(as_vector(load_csv(p, "premium")), (std::vector<double>{3.0, 4.0}));
  EXPECT_EQ(as_vector(load_csv(p)), (std::vector<double>{1971.0, 1972.0}));
  EXPECT_THROW(load_csv(p, "nope"), DataError);
}

TEST_F(TempDir, DefaultColumnSkipsTextColumns) {
  const fs::path p = write("f.csv", "region,loss\nnorth,1.5\nsouth,2.5\n");
  EXPECT_EQ(as_vector(load_csv(p)), (std::vector<double>{1.5, 2.5}));
}

TEST_F(TempDir, MissingFileAndEmptyResult) {
  EXPECT_THROW(load_csv(dir_ / "missing.csv"), DataError);
  EXPECT_THROW(load_csv(write("g.csv", "loss\n\n")), DataError);
}

TEST_F(TempDir, RoundTripIsValueIdentical) {
  std::mt19937_64 rng(7);
  std::lognormal_distribution<double> draw(0.0, 3.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> v(1 + rep * 7);
    for (double& x : v) x = draw(rng);
    v[0] = 0.1 + 0.2;  // not representable in short decimal form
    const Sample s(v, "r", BuiltinSource{});
    const fs::path p = dir_ / "round.csv";
    write_csv(s, p);
    EXPECT_EQ(as_vector(load_csv(p)), v);
  }
}

TEST(Csv, SplitRecordHandlesQuotes) {
  EXPECT_EQ(split_csv_record("a,\"b,c\",\"d\"\"e\""), (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(split_csv_record(""), (std::vector<std::string>{""}));
  EXPECT_EQ(split_csv_record("1,,2"), (std::vector<std::string>{"1", "", "2"}));
}

TEST(Csv, ParseNumber) {
  EXPECT_EQ(parse_number(" 2.5 "), 2.5);
  EXPECT_EQ(parse_number("+3"), 3.0);
  EXPECT_EQ(parse_number("-1e-3"), -1e-3);
  EXPECT_FALSE(parse_number("abc"));
  EXPECT_FALSE(parse_number("1.0x"));
  EXPECT_FALSE(parse_number(""));
}
