#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sopq_cli/cli.hpp"

using sopq::cli::run;

namespace {
const std::string kData = SOPQ_TEST_DATA;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}
}  // namespace

TEST(Cli, VdExample) {
  const auto r = run({"sopq", "vd", "--parts", "1,1", "--flavor", "orthogonal"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"raw\":[\"0\"],\"canonical\":{\"magnitudes\":[\"0\"],\"class\":\"merged\"}}\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DominateExample) {
  const auto r = run({"sopq", "dominate", "--mu", "1,0", "--lambda", "2,0", "--strict"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"result\":true}\n");
}

TEST(Cli, NegativeValuesParse) {
  EXPECT_EQ(run({"sopq", "rearrange", "--v", "-1/2,3/2"}).out, "{\"result\":[\"3/2\",\"-1/2\"]}\n");
  EXPECT_EQ(run({"sopq", "abs", "--v=-1/2,-3/2"}).out, "{\"result\":[\"1/2\",\"3/2\"]}\n");
}

TEST(Cli, InvalidInputExitsOneWithErrorObject) {
  const auto r = run({"sopq", "so-weight", "--p", "3", "--xi", "-1"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(r.out.empty());
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j.at("error").at("kind"), "invalidInput");

  const auto bad = run({"sopq", "certify", "--input", "-"}, "{not json");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NO_THROW(nlohmann::json::parse(bad.err));

  EXPECT_EQ(run({"sopq", "no-such-command"}).exit_code, 1);
  EXPECT_EQ(run({"sopq", "vd", "--parts"}).exit_code, 1);
}

TEST(Cli, CertifyVerifyExplain) {
  const auto c = run({"sopq", "certify", "--input", kData + "/so33_k2_13.json"});
  ASSERT_EQ(c.exit_code, 0) << c.err;
  const auto cert = nlohmann::json::parse(c.out);
  EXPECT_EQ(cert.at("verdict"), "certifiedUnitary");
  EXPECT_EQ(cert.at("steps").at(1).at("kind"), "quantumInduction");

  const auto v = run({"sopq", "verify", "--cert", "-"}, c.out);
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(v.out, "{\"verified\":true}\n");

  auto tampered = cert;
  tampered["steps"][1]["dHigh"] = 5;
  const auto vt = run({"sopq", "verify", "--cert", "-"}, tampered.dump());
  EXPECT_EQ(vt.exit_code, 2);

  const auto e = run({"sopq", "explain", "--cert", "-"}, c.out);
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_NE(e.out.find("quantum induction"), std::string::npos);
}

TEST(Cli, NotCoveredExitsTwo) {
  auto in = nlohmann::json::parse(slurp(kData + "/so33_k2_13.json"));
  in["sigmaTempered"] = false;
  const auto r = run({"sopq", "certify", "--input", "-"}, in.dump());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("verdict"), "notCovered");
}

TEST(Cli, OutputIsDeterministicAndMetaWraps) {
  const std::vector<std::string> args{"sopq", "certify", "--input", kData + "/so23_k1_2.json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto m = run({"sopq", "--meta", "rho", "--p", "2", "--q", "3"});
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_EQ(j.at("tool"), "sopq");
  EXPECT_EQ(j.at("result").at("result"), nlohmann::json::array({"3/2", "1/2"}));
}

TEST(Cli, BatchCertifyOrderAndFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "sopq_cli_batch_test";
  std::filesystem::remove_all(dir);
  const auto one = run({"sopq", "batch-certify", "--max-size", "6", "--sig", "4,5", "--jobs", "1"});
  const auto many = run({"sopq", "batch-certify", "--max-size", "6", "--sig", "4,5", "--jobs", "4", "--out", dir.string()});
  EXPECT_EQ(one.exit_code, 0) << one.err;
  EXPECT_EQ(one.out, many.out);
  std::size_t lines = 0;
  std::istringstream in(one.out);
  for (std::string line; std::getline(in, line); ++lines)
    EXPECT_EQ(nlohmann::json::parse(line).at("verdict"), "certifiedUnitary");
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    (void)f;
    ++files;
  }
  EXPECT_EQ(files, lines);
  EXPECT_TRUE(std::filesystem::exists(dir / "p4_q5_k2_symp_2_2.json"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, DpsQueries) {
  const auto list = run({"sopq", "dps", "--n", "4", "--s", "1/2", "--list-constituents"});
  EXPECT_EQ(list.exit_code, 0);
  EXPECT_EQ(list.out,
            "{\"n\":4,\"s\":\"1/2\",\"constituents\":[{\"constituent\":{\"index\":1},\"unitary\":true},"
            "{\"constituent\":{\"large\":\"+\"},\"unitary\":true},{\"constituent\":{\"large\":\"-\"},\"unitary\":true}]}\n");
  const auto q = run({"sopq", "dps", "--input", "-"}, R"({"n":4,"s":"1/2","constituent":{"large":"-"}})");
  EXPECT_EQ(q.out, "{\"n\":4,\"s\":\"1/2\",\"constituent\":{\"large\":\"-\"},\"exists\":true,\"unitary\":true}\n");
}
