#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pcw/cli.hpp"

using namespace pcw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("words") {
  CHECK(run({"bw", "acab"}).out == "cbaa\n");
  CHECK(run({"bw", "44443322"}).out == "32344442\n");
  CHECK(run({"bw-inverse", "ccccbbbaaa"}).out == "acacacbbbc\n");
  CHECK(run({"pcw", "acab", "--method", "both"}).out == "true\n");
  CHECK(run({"pcw", "acba"}).out == "false\n");
  CHECK(run({"phi-inverse", "[[2,1,1,1,3],[2],[3,2]]"}).out == "2,1,1,3,2,3,1,2\n");

  const auto j = nlohmann::json::parse(run({"bw", "acab", "--json"}).out);
  CHECK(j["bw"] == nlohmann::json({3, 2, 1, 1}));
}

TEST_CASE("g-vectors") {
  const Run r = run({"gvec", "words", "-3,-1,3,-2,3", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("[[1,3,1,5,4,5,4,5],[1,3,2,3]]"));
  CHECK(run({"gvec", "check", "-1,-1,2"}).out == "true\n");
  CHECK(run({"gvec", "check", "1,-1"}).out == "false\n");
  CHECK(run({"gvec", "dyck", "-1,-1,2"}).out.rfind("uudd\n", 0) == 0);
  CHECK(run({"euler", "-1,-2,-2,5", "-3,0,-4,7"}).out == "0\n");
}

TEST_CASE("bricks and compatibility") {
  CHECK(run({"fan", "brick4", "-2,-1,-3,6"}).out == "true\n");
  CHECK(run({"fan", "compatible", "-1,-2,-2,5", "-3,0,-4,7"}).out == "false\n");
  const Run mc = run({"fan", "maxcompat", "--n", "4", "--box", "2"});
  CHECK(mc.code == 0);
  CHECK(mc.out.rfind("2\n", 0) == 0);
  CHECK(run({"band", "walk", "23223", "--n", "3"}).out ==
        "a1 b1- a1 a2 b2- b1- a1 b1- a1 b1- a1 a2 b2- b1-\n");
  CHECK(run({"band", "brick", "2233", "--n", "3"}).out == "false\n");
  CHECK(run({"band", "hom", "2", "3", "--n", "3"}).out == "dim Hom(X,Y) = 1\ndim Hom(Y,X) = 0\n");
}

TEST_CASE("exit codes") {
  const Run domain = run({"bw-inverse", "ab"});
  CHECK(domain.code == kExitDomain);
  CHECK(domain.err.find("MultipleCycles") != std::string::npos);
  CHECK(run({"fan", "brick4", "-2,-1,-3"}).code == kExitDomain);
  CHECK(run({"phi-inverse", "[[1,2,1,2]]"}).code == kExitDomain);
  CHECK(run({"bw"}).code == kExitUsage);
  CHECK(run({"bw", "a1b"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"gvec", "check", "x,y"}).code == kExitUsage);
  CHECK(run({"verify", "nonsense"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("JSON by environment") {
  setenv("PCW_FORMAT", "json", 1);
  const Run r = run({"bw", "acab"});
  unsetenv("PCW_FORMAT");
  CHECK(nlohmann::json::parse(r.out)["bw"] == nlohmann::json({3, 2, 1, 1}));
  CHECK(run({"bw", "acab"}).out == "cbaa\n");
}

TEST_CASE("render to a file") {
  const auto path = std::filesystem::temp_directory_path() / "pcw_cli_render_test.svg";
  std::filesystem::remove(path);
  CHECK(run({"render", "-1,1", "-o", path.string()}).code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("<line class=\"chord\"") != std::string::npos);
  CHECK(buf.str() == run({"render", "-1,1"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("verify suite") {
  const Run r = run({"verify", "golden"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS criterion 1", 0) == 0);
}
