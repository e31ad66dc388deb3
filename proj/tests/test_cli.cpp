#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rhoc");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = rhoc::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "rhoc_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kDuplicatePlane =
    R"({"field": "q", "ambient_dim": 3, "subspaces": [[[1,0,0],[0,1,0]], [[0,2,0],[3,0,0]]]})";
const char* kK3 = R"({"n": 3, "edges": [[0,1],[0,2],[1,2]]})";
const char* kSingleRow = R"({"field": "q", "ambient_dim": 2, "rows": [{"u": [1,0], "v": [0,1]}]})";
const char* kRk = R"({"field": "q", "ambient_dim": 4, "k": 3, "tensors": [[[1,0,0,0],[0,1,0,0],[0,0,1,0]]]})";

}  // namespace

TEST_CASE("rho on the duplicate-plane family") {
  auto r = invoke({"rho", write_file("dup.json", kDuplicatePlane), "--c", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"value\":\"1\",\"partition\":[[0,1]]}\n");
  auto half = invoke({"rho", write_file("dup.json", kDuplicatePlane), "--c", "5/2", "--sfm", "mnp"});
  CHECK(half.code == 0);
  CHECK(half.out == "{\"value\":\"-1\",\"partition\":[[0],[1]]}\n");
}

TEST_CASE("rigidity on K3") {
  auto r = invoke({"rigidity", write_file("k3.json", kK3)});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 3);
  CHECK(j["rigid"] == true);
  CHECK(j["dof"] == 0);
  CHECK(j["method"] == "deterministic");
  auto t = invoke({"rigidity", write_file("k3.json", kK3), "--dim", "2", "--randomized", "--output", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("method: randomized") != std::string::npos);
}

TEST_CASE("pit commands") {
  auto r2 = invoke({"pit-r2", write_file("row.json", kSingleRow)});
  CHECK(r2.code == 0);
  CHECK(r2.out == "{\"rank\":1,\"dropped_rows\":[]}\n");
  auto rk = invoke({"pit-rk", write_file("rk.json", kRk)});
  CHECK(rk.code == 0);
  CHECK(rk.out == "{\"rank\":1,\"dropped_rows\":[]}\n");
  auto over_fp = invoke({"pit-r2", write_file("row.json", kSingleRow), "--field", "fp:10007"});
  CHECK(over_fp.out == r2.out);
}

TEST_CASE("rand-rank detects the input kind") {
  auto g = invoke({"rand-rank", write_file("k3.json", kK3)});
  CHECK(g.code == 0);
  CHECK(g.out == "{\"rank\":3,\"trials\":5,\"prime\":2305843009213693951}\n");
  auto r2 = invoke({"rand-rank", write_file("row.json", kSingleRow), "--trials", "2", "--prime", "10007"});
  CHECK(r2.out == "{\"rank\":1,\"trials\":2,\"prime\":10007}\n");
  auto rk = invoke({"rand-rank", write_file("rk.json", kRk)});
  CHECK(nlohmann::json::parse(rk.out)["rank"] == 1);
  auto fam = invoke({"rand-rank", write_file("dup.json", kDuplicatePlane)});
  CHECK(fam.code == 1);
}

TEST_CASE("reruns are byte-identical and reports re-parse") {
  std::vector<std::vector<std::string>> configs{
      {"rho", write_file("dup.json", kDuplicatePlane), "--c", "1/2"},
      {"rigidity", write_file("k3.json", kK3), "--randomized", "--seed", "17"},
      {"rand-rank", write_file("k3.json", kK3), "--seed", "3"},
      {"pit-r2", write_file("row.json", kSingleRow)},
      {"verify", "--suite", "partitions", "--seed", "4"},
  };
  for (const auto& c : configs) {
    auto a = invoke(c), b = invoke(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
}

TEST_CASE("input errors exit with 1 and name the problem") {
  auto zero = invoke({"rho", write_file("zero.json",
                                        R"({"field": "q", "ambient_dim": 2, "subspaces": [[[1,0]], [[0,0]]]})")});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("ZeroSubspace") != std::string::npos);
  CHECK(zero.err.find("subspaces[1]") != std::string::npos);

  auto loop = invoke({"rigidity", write_file("loop.json", R"({"n": 3, "edges": [[2,2]]})")});
  CHECK(loop.code == 1);
  CHECK(loop.err.find("LoopEdge") != std::string::npos);

  auto dup = invoke({"rigidity", write_file("dupedge.json", R"({"n": 3, "edges": [[0,1],[1,0]]})")});
  CHECK(dup.err.find("DuplicateEdge") != std::string::npos);

  auto prime = invoke({"rho", write_file("fp.json", R"({"field": {"fp": 15}, "ambient_dim": 1, "subspaces": [[[1]]]})")});
  CHECK(prime.code == 1);
  CHECK(prime.err.find("BadPrime") != std::string::npos);

  auto unknown = invoke({"rho", write_file("extra.json",
                                           R"({"field": "q", "ambient_dim": 1, "subspaces": [], "colour": 1})")});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("UnknownField") != std::string::npos);
  CHECK(unknown.err.find("colour") != std::string::npos);

  auto scalar = invoke({"rho", write_file("scalar.json",
                                          R"({"field": "q", "ambient_dim": 2, "subspaces": [[[1, "x/2"]]]})")});
  CHECK(scalar.code == 1);
  CHECK(scalar.err.find("BadScalar") != std::string::npos);
  CHECK(scalar.err.find("subspaces[0][0][1]") != std::string::npos);

  auto bad_c = invoke({"rho", write_file("dup.json", kDuplicatePlane), "--c", "0.5"});
  CHECK(bad_c.code == 1);
  CHECK(bad_c.err.find("BadScalar") != std::string::npos);

  CHECK(invoke({"rho", "/nonexistent/file.json"}).code == 1);
  CHECK(invoke({"rho", write_file("broken.json", "{not json")}).code == 1);
  CHECK(invoke({"rho", write_file("dup.json", kDuplicatePlane), "--sfm", "magic"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"verify", "--suite", "nope"}).code == 1);
  CHECK(invoke({"rigidity", write_file("k3.json", kK3), "--dim", "3"}).code == 1);
}

TEST_CASE("verify emits a pass/fail per suite") {
  auto r = invoke({"verify", "--suite", "exact_linalg"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "exact_linalg");
  CHECK(j["suites"][0]["passed"] == true);
}
