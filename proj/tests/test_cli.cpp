#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"
#include "qcube/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qcube::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QCUBE_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qcube_cli_" + name)).string();
}

/// Writes `content` to a scratch file and returns its path.
std::string scratch_file(const std::string& name, const std::string& content) {
  const auto path = temp_path(name);
  qcube::write_text_file(path, content);
  return path;
}

void check_error(const Result& r, const std::string& code) {
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error[" + code + "] ", 0) == 0);
  CHECK(r.err.find('\n') == r.err.size() - 1);
}

}  // namespace

TEST_CASE("mindist reports") {
  auto r = run({"mindist", data("quaternion.grp"), "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d_K"] == 4);
  CHECK(j["order"] == 8);
  CHECK(j["even"] == true);
  CHECK(j["semiregular"] == true);

  r = run({"mindist", data("trivial6.grp"), "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["d_K"] == "inf");

  r = run({"mindist", data("folded7.grp")});
  CHECK(r.code == 0);
  CHECK(r.out.find("d_K=7\n") != std::string::npos);
  CHECK(r.out.find("even=false\n") != std::string::npos);
}

TEST_CASE("quotient export") {
  auto r = run({"quotient", data("trivial3.grp")});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n_vertices"] == 8);
  CHECK(j["edges"].size() == 12);
  CHECK(j["labels"][0] == "000");
  CHECK(j["labels"][7] == "111");

  j = nlohmann::json::parse(run({"quotient", data("folded8.grp")}).out);
  CHECK(j["n_vertices"] == 128);
  CHECK(j["edges"].size() == 512);

  j = nlohmann::json::parse(run({"quotient", data("quaternion.grp")}).out);
  CHECK(j["n_vertices"] == 32);

  const auto dot = run({"quotient", data("trivial3.grp"), "--format", "dot"}).out;
  CHECK(dot.rfind("graph \"G\" {", 0) == 0);
}

TEST_CASE("quotient files are byte-identical across runs") {
  const auto a = temp_path("a.json");
  const auto b = temp_path("b.json");
  REQUIRE(run({"quotient", data("quaternion.grp"), "--out", a}).code == 0);
  REQUIRE(run({"quotient", data("quaternion.grp"), "--out", b}).code == 0);
  CHECK(qcube::read_text_file(a) == qcube::read_text_file(b));
  CHECK_FALSE(qcube::read_text_file(a).empty());
}

TEST_CASE("halves verdicts and files") {
  const auto prefix = temp_path("quat");
  auto r = run({"halves", data("quaternion.grp"), "--out", prefix});
  REQUIRE(r.code == 0);
  CHECK(r.out == "NOT_ISOMORPHIC\n");
  const auto h0 = nlohmann::json::parse(qcube::read_text_file(prefix + "_half0.json"));
  const auto h1 = nlohmann::json::parse(qcube::read_text_file(prefix + "_half1.json"));
  CHECK(h0["n_vertices"] == 16);
  CHECK(h1["n_vertices"] == 16);

  r = run({"halves", data("folded8.grp"), "--out", temp_path("f8"), "--format", "dot"});
  CHECK(r.out == "ISOMORPHIC\n");
  CHECK(std::filesystem::exists(temp_path("f8") + "_half1.dot"));

  check_error(run({"halves", data("folded7.grp"), "--out", temp_path("f7")}), "NotBipartite");
  check_error(run({"halves", data("folded8.grp")}), "InvalidArgument");
}

TEST_CASE("params and aut") {
  auto j = nlohmann::json::parse(run({"params", data("folded8.grp"), "--format", "json"}).out);
  CHECK(j["regular_valency"] == 8);
  CHECK(j["rectagraph"] == true);
  CHECK(j["levels"][3]["c"] == 3);

  j = nlohmann::json::parse(run({"params", data("quaternion.grp"), "--format", "json"}).out);
  CHECK(j["rectagraph"] == false);
  CHECK(j["levels"][2]["c"] == "undefined");

  j = nlohmann::json::parse(run({"aut", data("folded8.grp"), "--format", "json"}).out);
  CHECK(j["order"] == "5160960");
  CHECK(j["vertex_transitive"] == true);

  j = nlohmann::json::parse(run({"aut", data("transposition8.grp"), "--format", "json"}).out);
  CHECK(j["vertex_transitive"] == false);
  CHECK(j["vertex_orbits"].get<int>() > 1);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--claims", "ex-exp-halved", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "HOLDS");
  CHECK(j[0]["witnesses"]["sphere2_of_0"] == 13);
  CHECK(j[0]["witnesses"]["sphere2_of_e1"] == 14);
  CHECK_FALSE(j[0].contains("runtime_ms"));

  r = run({"verify", "--claims", "thm-class-dist", "--seed", "7", "--per-dimension", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("thm-class-dist") != std::string::npos);
  CHECK(r.out.find("summary: 1 HOLDS, 0 FAILS, 0 SKIPPED") != std::string::npos);

  const auto a = run({"verify", "--claims", "lem-covering,lem-nbd", "--seed", "3",
                      "--per-dimension", "3", "--format", "json"});
  const auto b = run({"verify", "--claims", "lem-covering,lem-nbd", "--seed", "3",
                      "--per-dimension", "3", "--format", "json"});
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).size() == 2);

  check_error(run({"verify", "--claims", "nonsense"}), "UnknownClaim");
}

TEST_CASE("example subcommand") {
  const auto r = run({"example", "K2", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ex-k2") != std::string::npos);
  check_error(run({"example", "nonsense"}), "UnknownExample");
}

TEST_CASE("error paths") {
  check_error(run({"mindist", scratch_file("bad.grp", "n=4\nx=1111 perm=(1 5)\n")}), "ParseError");
  const auto bad_header = run({"mindist", scratch_file("bad2.grp", "dimension 4\n")});
  check_error(bad_header, "ParseError");
  CHECK(bad_header.err.find("line 1") != std::string::npos);
  check_error(run({"mindist", data("quaternion.grp"), "--cap-group", "4"}), "GroupTooLarge");
  check_error(run({"quotient", scratch_file("big.grp", "n=21\n")}), "DimensionTooLarge");
  check_error(run({"mindist", temp_path("missing.grp")}), "InvalidArgument");
  check_error(run({"mindist", data("quaternion.grp"), "--bogus"}), "InvalidArgument");
  check_error(run({"mindist", data("quaternion.grp"), "--format", "json", "--format", "text"}),
              "InvalidArgument");
  check_error(run({"mindist", data("quaternion.grp"), "--format", "xml"}), "InvalidArgument");
  check_error(run({"mindist", data("quaternion.grp"), "--format", "dot"}), "InvalidArgument");
  check_error(run({}), "InvalidArgument");
  check_error(run({"frobnicate"}), "InvalidArgument");
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mindist") != std::string::npos);
  CHECK(run({"verify", "--help"}).code == 0);
}
