#include <gtest/gtest.h>

#include <sstream>

#include "skewmori/chambers.hpp"
#include "skewmori/cli/commands.hpp"
#include "skewmori/cli/serialize.hpp"
#include "skewmori/geometry.hpp"
#include "skewmori/pfaffian.hpp"
#include "test_util.hpp"

using namespace skewmori;
using namespace skewmori::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "skewmori");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PfaffianMinor) {
  auto r = invoke({"pfaffian", "--size", "4", "--minor", "0,1,2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("z01*z23 - z02*z13 + z03*z12"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"classes", "--n", "banana"}).code, 2);
  EXPECT_EQ(invoke({"pfaffian", "--size", "4", "--minor", "0,1,2"}).code, 3);
  EXPECT_EQ(invoke({"gkz", "--n", "12"}).code, 3);
  EXPECT_EQ(invoke({"verify", "--only", "nosuchsuite"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, JsonOutputsParse) {
  for (std::vector<std::string> args : {std::vector<std::string>{"classes", "--n", "6"},
                                        {"cones", "--n", "7", "--cone", "mov"},
                                        {"gkz", "--n", "6"},
                                        {"sbl", "--n", "7"},
                                        {"blowup", "--n", "6"},
                                        {"sample", "--n", "5", "--secant", "2"}}) {
    args.push_back("--json");
    auto r = invoke(args);
    ASSERT_EQ(r.code, 0) << args[0] << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["command"], args[0]);
  }
}

TEST(Cli, GkzJsonIsADecomposition) {
  auto r = invoke({"gkz", "--n", "7", "--json"});
  ASSERT_EQ(r.code, 0);
  auto d = decomposition_from_json(Json::parse(r.out));
  EXPECT_EQ(d.chambers.size(), 9u);
}

TEST(Cli, Reproducible) {
  auto a = invoke({"sample", "--n", "6", "--secant", "2", "--seed", "17", "--json"});
  auto b = invoke({"sample", "--n", "6", "--secant", "2", "--seed", "17", "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = invoke({"verify", "--only", "multiplicity", "--seed", "3", "--json"});
  auto d = invoke({"verify", "--only", "multiplicity", "--seed", "3", "--json"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, VerifyOnly) {
  auto r = invoke({"verify", "--only", "fano", "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = Json::parse(r.out);
  EXPECT_GT(j["passed"].get<int>(), 0);
  EXPECT_EQ(j["failed"].get<int>(), 0);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["suite"], "fano");
}

TEST(Cli, VerifyAllSuitesPass) {
  RunConfig config;
  for (const auto& c : run_verify(config)) EXPECT_TRUE(c.pass) << c.suite << " " << c.name << " " << c.detail;
}

TEST(Serialize, ScalarRoundTrip) {
  mpz_class big("123456789012345678901234567890");
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_EQ(rational_from_json(to_json(mpq_class(-3, 7))), mpq_class(-3, 7));
  EXPECT_EQ(to_json(mpq_class(4)).dump(), "4");
  EXPECT_EQ(to_json(mpq_class(1, 2)).dump(), "\"1/2\"");
}

TEST(Serialize, ConeRoundTrip) {
  for (int n = 4; n <= 9; ++n) {
    for (const auto& c : {nef_cone(n), eff_cone(n), movable_cone(n), mori_cone(n)}) {
      EXPECT_EQ(cone_from_json(Json::parse(to_json(c).dump())), c);
    }
  }
  auto flat = Cone::from_generators(3, {testutil::v({1, 0, 0}), testutil::v({-1, 0, 0}), testutil::v({0, 1, 0})});
  EXPECT_EQ(cone_from_json(to_json(flat)), flat);
}

TEST(Serialize, PolynomialRoundTrip) {
  for (std::size_t m : {2u, 4u, 6u}) {
    auto p = sub_pfaffian(m, IndexSet::range(0, m));
    EXPECT_EQ(polynomial_from_json(Json::parse(to_json(p).dump())), p);
  }
}

TEST(Serialize, SkewRoundTrip) {
  IntSampler rng(5);
  for (int t = 0; t < 20; ++t) {
    auto z = testutil::random_skew(rng, 2 + t % 6, 50);
    EXPECT_EQ(skew_from_json(Json::parse(to_json(z).dump())), z);
  }
}

TEST(Serialize, DecompositionRoundTrip) {
  for (int n : {5, 6, 8}) {
    auto d = gkz_chambers(VectorConfiguration::cox(n));
    auto back = decomposition_from_json(Json::parse(to_json(d).dump()));
    ASSERT_EQ(back.chambers.size(), d.chambers.size());
    for (std::size_t i = 0; i < d.chambers.size(); ++i) {
      EXPECT_EQ(back.chambers[i].cone, d.chambers[i].cone);
      EXPECT_EQ(back.chambers[i].forced, d.chambers[i].forced);
    }
    EXPECT_EQ(back.regions.size(), d.regions.size());
    EXPECT_EQ(back.walls.size(), d.walls.size());
    EXPECT_EQ(to_json(back).dump(), to_json(d).dump());
  }
  EXPECT_EQ(label_from_json(to_json(ForcedLabel{{"S1", "S3"}, {"S2"}})), (ForcedLabel{{"S1", "S3"}, {"S2"}}));
}
