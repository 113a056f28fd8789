#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<const char*> args) {
  args.insert(args.begin(), "vmwin");
  std::ostringstream out;
  std::ostringstream err;
  const int code = vmwin::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

}  // namespace

TEST(CliWindow, VonMises) {
  const auto r = run({"window", "--family", "vonmises", "--beta", "5", "--n", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 18u);
  EXPECT_EQ(lines[0], "index,value");
  EXPECT_EQ(lines[9], "0,1");
  EXPECT_EQ(r.out.rfind("# generated-by vmwin 0.1.0: vmwin window --family vonmises --beta 5 --n 16\n", 0), 0u);
}

TEST(CliWindow, CausalRect) {
  const auto r = run({"window", "--family", "rect", "--n", "8", "--causal"});
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 10u);
  for (int i = 0; i <= 8; ++i) EXPECT_EQ(lines[i + 1], std::to_string(i) + ",1");
}

TEST(CliWindow, RoundTrip) {
  const auto r = run({"window", "--family", "kaiser", "--beta", "4.2", "--n", "12"});
  std::istringstream is(r.out);
  EXPECT_EQ(vmwin::io::read_window_csv(is), vmwin::sample({vmwin::Kaiser{4.2}, 12, false}));
}

TEST(CliWindow, UsageErrors) {
  auto r = run({"window", "--family", "vonmises", "--beta", "-1", "--n", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("beta must be >= 0"), std::string::npos);
  EXPECT_EQ(run({"window", "--family", "vonmises", "--n", "8"}).code, 2);
  EXPECT_EQ(run({"window", "--n", "7"}).code, 2);
  EXPECT_EQ(run({"window", "--n", "8", "--bogus"}).code, 2);
  EXPECT_EQ(run({"window", "--family", "triangle", "--n", "8"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"window", "--n", "8", "--format", "xml"}).code, 2);
}

TEST(CliWindow, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(CliWindow, Deterministic) {
  const std::vector<const char*> args{"spectrum", "--family", "vonmises", "--beta", "3", "--n", "16", "--points", "65"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliSpectrum, AnalyticRows) {
  const auto r = run({"spectrum", "--family", "vonmises", "--beta", "5", "--n", "16", "--method", "analytic", "--points", "1025"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 1026u);
  EXPECT_EQ(lines[0], "omega,re,im,abs,db");
}

TEST(CliSpectrum, KaiserAnalyticRejected) {
  const auto r = run({"spectrum", "--family", "kaiser", "--beta", "5", "--n", "16", "--method", "analytic", "--domain", "dtft"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliSpectrum, MethodDomainMismatch) {
  EXPECT_EQ(run({"spectrum", "--family", "vonmises", "--beta", "1", "--n", "8", "--method", "series", "--domain", "dtft"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--family", "hann", "--n", "8", "--method", "series"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--family", "hann", "--n", "8", "--method", "closed-form"}).code, 2);
}

TEST(CliSpectrum, NumericVersusSeries) {
  auto parse = [](const std::string& text) {
    std::vector<std::pair<double, double>> v;
    const auto lines = data_lines(text);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      double om, re, im, a, db;
      std::sscanf(lines[i].c_str(), "%lf,%lf,%lf,%lf,%lf", &om, &re, &im, &a, &db);
      v.emplace_back(re, im);
    }
    return v;
  };
  const auto numeric = parse(run({"spectrum", "--family", "vonmises", "--beta", "5", "--n", "8", "--method", "numeric",
                                  "--domain", "continuous", "--points", "129"}).out);
  const auto series = parse(run({"spectrum", "--family", "vonmises", "--beta", "5", "--n", "8", "--method", "series",
                                 "--points", "129"}).out);
  ASSERT_EQ(numeric.size(), 129u);
  ASSERT_EQ(series.size(), 129u);
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    EXPECT_NEAR(numeric[i].first, series[i].first, 1e-8);
    EXPECT_NEAR(numeric[i].second, series[i].second, 1e-8);
  }
}

TEST(CliValidate, DefaultRunPasses) {
  const auto r = run({"validate", "--points", "129"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("vonmises continuous closed form"), std::string::npos);
  EXPECT_NE(r.out.find("INFO"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliValidate, StrictFailsOnInfo) {
  EXPECT_EQ(run({"validate", "--strict", "--points", "65"}).code, 1);
}

TEST(CliCompare, FiveRows) {
  const auto r = run({"compare", "--specs", "rect:64", "hann:64", "hamming:64", "kaiser:5:64", "vonmises:5:64"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "family,params,N,coherent_gain,enbw_bins,hsl_db,w3db_bins,scallop_db");
  EXPECT_EQ(lines[1].rfind("rect,,64,1,1,", 0), 0u);
}

TEST(CliCompare, BadSpecs) {
  EXPECT_EQ(run({"compare", "--specs", "kaiser:64"}).code, 2);
  EXPECT_EQ(run({"compare", "--specs", "rect:5:64"}).code, 2);
  EXPECT_EQ(run({"compare", "--specs", "rect:6x"}).code, 2);
  EXPECT_EQ(run({"compare", "--specs", "rect:64", "--oversample", "4"}).code, 2);
}

TEST(CliFir, TapsAndReport) {
  const auto r = run({"fir", "--wc", "1.5707963", "--n", "32", "--family", "vonmises", "--beta", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  // header + 33 taps + report header + report row
  ASSERT_EQ(lines.size(), 36u);
  EXPECT_EQ(lines[34], "passband_ripple_db,stopband_attenuation_db,transition_width,passband_edge,stopband_edge");
}

TEST(CliFir, RectAttenuation) {
  const auto r = run({"fir", "--wc", "1.5707963", "--n", "32", "--family", "rect", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["taps"].size(), 33u);
  EXPECT_NEAR(doc["report"]["stopband_attenuation_db"].get<double>(), 21.0, 1.0);
}

TEST(CliFir, ResponseFile) {
  const auto path = std::filesystem::temp_directory_path() / "vmwin_cli_test_response.csv";
  const auto p = path.string();
  const auto r = run({"fir", "--wc", "1", "--n", "16", "--family", "hann", "--response", p.c_str()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(data_lines(ss.str()).size(), 4098u);
  std::filesystem::remove(path);
}

TEST(CliFir, Errors) {
  EXPECT_EQ(run({"fir", "--wc", "4", "--n", "32"}).code, 2);
  EXPECT_EQ(run({"fir", "--wc", "1", "--n", "32", "--points", "100"}).code, 2);
}

TEST(CliDist, Density) {
  const auto r = run({"dist", "--kappa", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"].size(), 361u);
  EXPECT_EQ(doc["circular_variance"], "1");
  EXPECT_NEAR(doc["rows"][0]["pdf"].get<double>(), 1.0 / (2.0 * std::numbers::pi), 1e-15);
  EXPECT_EQ(run({"dist", "--kappa", "-2"}).code, 2);
}

TEST(CliOutput, FileOutput) {
  const auto path = std::filesystem::temp_directory_path() / "vmwin_cli_test_window.json";
  const auto p = path.string();
  ASSERT_EQ(run({"window", "--n", "4", "--format", "json", "-o", p.c_str()}).code, 0);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["rows"].size(), 5u);
  std::filesystem::remove(path);
}
