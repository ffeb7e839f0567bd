#include "relk/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace relk;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "relk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"pic", "--example", "no-such-thing"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, cli::kInputError);
  const Outcome r = run({"negk", "--example", "z12"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("local"), std::string::npos) << r.err;
}

TEST(Cli, FailedCheckExitsOne) {
  const Outcome r = run({"excision", "--example", "f2-f4", "--ideal", "1"});
  EXPECT_EQ(r.code, cli::kFail) << r.out << r.err;
  EXPECT_NE(r.out.find("ideal_shared: false"), std::string::npos) << r.out;
}

TEST(Cli, JsonGroupsRoundTrip) {
  const Outcome r = run({"pic", "--example", "f3-mixed", "--format", "json-like"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(group_from_json(j.at("pic")).to_string(), "Z/24");
  for (const auto& g : groups_in(j)) EXPECT_EQ(group_from_json(group_json(g)), g);
  EXPECT_GE(groups_in(j).size(), 3u);
}

TEST(Cli, NPicDualNumbers) {
  const Outcome r = run({"npic", "--example", "dual-f3", "--D", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(group_from_json(Json::parse(r.out).at("npic")), AbGroup(std::vector<Integer>(4, 3)));
  const Outcome q = run({"npic", "--example", "dual-q", "--D", "5"});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_NE(q.out.find("Q^5"), std::string::npos) << q.out;
}

TEST(Cli, WittOperations) {
  Outcome r = run({"witt", "--ring", "Z/4", "--N", "6", "--op", "basic", "--a", "3", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("result: 1 + t^2"), std::string::npos) << r.out;  // -3 = 1 in Z/4
  r = run({"witt", "--ring", "Q", "--N", "4", "--op", "show", "--a", "1,0,0,0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("ghost"), "(-1, 1, -1, 1)");  // -t d/dt log(1 + t) = -t + t^2 - ...
  EXPECT_EQ(run({"witt", "--ring", "Z/4", "--op", "frobenius", "--a", "1,2", "--n", "x"}).code, cli::kInputError);
}

TEST(Cli, CechFromElementList) {
  const Outcome r = run({"cech", "--example", "z12", "--cover", "4,9", "--functor", "nu", "--degree", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("exact: true"), std::string::npos) << r.out;
  EXPECT_EQ(run({"cech", "--example", "z12", "--cover", "2,4"}).code, cli::kInputError);
}

TEST(Cli, NegKTable) {
  const Outcome r = run({"negk", "--example", "split3-f2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(group_from_json(j.at("table").at("K_-1")).to_string(), "Z^2");
  EXPECT_FALSE(j.at("anodal").get<bool>());
}

TEST(Cli, VerifyWittSuite) {
  const Outcome r = run({"verify", "--suite", "witt", "--N", "10"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS witt-identities :: ghost-homomorphism"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ALL PASSED 5/5"), std::string::npos) << r.out;
}

TEST(Cli, VerifyCechWithCover) {
  const Outcome r = run({"verify", "--suite", "cech", "--example", "z12", "--cover", "4,9"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("ALL PASSED"), std::string::npos) << r.out;
}

TEST(Cli, VerifyIsDeterministic) {
  auto strip = [](Json j) {
    for (auto& c : j.at("checks")) c.erase("seconds");
    return j;
  };
  const std::vector<std::string> args = {"verify", "--suite", "k0", "--seed", "11", "--example", "z4-dual", "--format", "json"};
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(strip(Json::parse(a.out)), strip(Json::parse(b.out)));
}

TEST(Input, ErrorsCarryLineNumbers) {
  const std::string bad = write_temp("relk_bad.relk", "[ring R]\nkind = dual\nmodulus = 4\nthis is not a key\n");
  const Outcome r = run({"pic", "--input", bad, "--example", "x"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  try {
    parse_input("[ring R]\nkind = dual\nmodulus = 1\n");
    FAIL() << "modulus 1 accepted";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Input, NonAssociativeTableNamesTriple) {
  const std::string text =
      "[ring Bad]\nkind = algebra\nmodulus = 2\nbasis = 1, a, b\nmul a a = b\nmul a b = 1\nmul b b = 0\n";
  try {
    parse_input(text);
    FAIL() << "non-associative table accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("basis triple"), std::string::npos) << e.what();
  }
}

TEST(Input, NonInjectiveMapRejected) {
  const std::string text = "[extension squash]\nsource = Z/4\ntarget = Z/2\n";
  try {
    parse_input(text);
    FAIL() << "non-injective map accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("injective"), std::string::npos) << e.what();
  }
}

TEST(Input, UserExtensionThroughCli) {
  const std::string doc = write_temp("relk_user.relk",
                                     "[ring F5e]\nkind = dual\nmodulus = 5\n\n[extension mine]\nsource = F5\ntarget = F5e\n");
  const Outcome r = run({"pic", "--input", doc, "--example", "mine", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(group_from_json(Json::parse(r.out).at("pic")).to_string(), "Z/5");
  const Outcome v = run({"verify", "--input", doc, "--example", "mine", "--suite", "negk"});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
}

TEST(Samples, AllParseAndVerify) {
  std::size_t n = 0;
  for (const auto& f : std::filesystem::directory_iterator(RELK_SAMPLES_DIR)) {
    if (f.path().extension() != ".relk") continue;
    ++n;
    const Document doc = parse_input_file(f.path().string());
    EXPECT_FALSE(doc.extension_order.empty()) << f.path();
    for (const auto& name : doc.extension_order) {
      if (doc.extensions.at(name).index() != 0) continue;
      const Outcome r = run({"verify", "--input", f.path().string(), "--example", name, "--suite", "pic", "--suite", "negk"});
      EXPECT_EQ(r.code, 0) << name << "\n" << r.out << r.err;
    }
  }
  EXPECT_GE(n, 3u);
}
