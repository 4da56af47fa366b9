#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RAAGCTL) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "raagctl_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("embed exit codes") {
  auto r = run("embed --source cycle:6 --target cycle:5 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdict") == "yes");
  CHECK(j.at("certificate").at("assignment").size() == 6);
  r = run("embed --source cycle:7 --target cycle:6 --json");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out).at("obstruction").at("kind") ==
        "CycleArithmetic");
  r = run("embed --source cycle:5 --target complement:cycle:6 --radius 0");
  CHECK(r.code == 2);
  r = run("embed --source cycle:6");
  CHECK(r.code == 4);
  r = run("embed --source nothing:3 --target cycle:5");
  CHECK(r.code == 4);
  r = run("ext grow --graph cycle:7 --radius 4 --budget 50");
  CHECK(r.code == 3);
}

TEST_CASE("output is deterministic") {
  const auto a = run("embed --source path:9 --target path:4 --json --seed 1");
  const auto b = run("embed --source path:9 --target path:4 --json --seed 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify certificates and approximations") {
  const auto cert = scratch("cert.json");
  auto r = run("embed --source cycle:6 --target cycle:5 --json");
  auto j = nlohmann::json::parse(r.out).at("certificate");
  write(cert, j.dump());
  CHECK(run("verify " + cert.string()).code == 0);
  j["assignment"][0]["rep_word"] = j["assignment"][2]["rep_word"];
  j["assignment"][0]["base"] = j["assignment"][2]["base"];
  const auto tampered = scratch("tampered.json");
  write(tampered, j.dump());
  CHECK(run("verify " + tampered.string()).code == 1);

  const auto approx = scratch("approx.json");
  const auto dot = scratch("approx.dot");
  r = run("ext grow --graph path:4 --radius 2 --json --dot " + dot.string());
  CHECK(r.code == 0);
  write(approx, r.out);
  CHECK(run("verify " + approx.string()).code == 0);
  std::ifstream dot_in(dot);
  std::stringstream dot_text;
  dot_text << dot_in.rdbuf();
  CHECK(dot_text.str().find("\"v0^(v2)\"") != std::string::npos);
  auto aj = nlohmann::json::parse(r.out);
  aj["edges"].erase(0);
  write(approx, aj.dump());
  CHECK(run("verify " + approx.string()).code == 1);
  CHECK(run("verify " + scratch("missing.json").string()).code == 4);
}

TEST_CASE("word and graph commands") {
  auto r = run("word normalize --graph path:4 \"v1 v0 v1^-1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "v0\n");
  r = run("word pure-factors --graph cycle:5 \"v0 v2 v0 v2\" --json");
  CHECK(nlohmann::json::parse(r.out).at("factors")[0].at("exponent") == 2);
  r = run("word centralizer --graph path:4 v0");
  CHECK(r.out == "v0\nv1\n");
  r = run("word normalize --graph path:4 \"v9\"");
  CHECK(r.code == 4);
  r = run("graph classify --graph cycle:5 --json");
  CHECK(nlohmann::json::parse(r.out).at("chromatic_number") == 3);
  r = run("graph transform --graph cycle:6 --op complement");
  CHECK(r.out.rfind("vertices: v0 v1 v2 v3 v4 v5", 0) == 0);
  const auto file = scratch("p4.txt");
  write(file, "vertices: a b c d\na b\nb c\nc d\n");
  r = run("graph classify --graph " + file.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("forest yes") != std::string::npos);
  r = run("ext diagnose --graph cycle:5 --radius 2 --json");
  CHECK(nlohmann::json::parse(r.out).at("chromatic_number") == 3);
  r = run("ext grow --graph cycle:5 --doubling v0,v2 --json");
  CHECK(nlohmann::json::parse(r.out).at("provenance").at("chosen").size() == 2);
}
