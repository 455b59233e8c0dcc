#include <doctest.h>

#include "support.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

using namespace flatkern;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FLATKERN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("presets lists every id") {
  auto r = run("presets");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == kSchema);
  for (const auto& id : preset_ids()) CHECK(r.out.find(id) != std::string::npos);
}

TEST_CASE("enumerate reproduces the five classes with byte-identical output") {
  auto a = run("enumerate --base prym1111-base --fixed-cylinders 2");
  auto b = run("enumerate --base prym1111-base --fixed-cylinders 2");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out)["classification"];
  std::set<std::string> got;
  for (const auto& s : j["survivors"]) got.insert(s["matching"].get<std::string>());
  CHECK(got == std::set<std::string>{"cafbed", "cdefab", "cefbda", "fabced", "faecdb"});
  CHECK(j["counts"]["candidates"] == 720);
}

TEST_CASE("check, prym-scan, homology and property-p on presets") {
  auto c = run("check prym1111-s1");
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["validation"]["ok"] == true);

  auto h = run("homology prym1111-s1");
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["homology"]["betti"] == json::array({1, 6, 1}));

  auto s = run("prym-scan genus2");
  REQUIRE(s.code == 0);
  CHECK(s.out.find("\"fixed_counts\"") != std::string::npos);

  auto p = run("property-p genus2 --metric golden-irrational");
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["property_p"]["holds"] == true);
  auto q = run("property-p genus2 --metric unit-rational");
  REQUIRE(q.code == 0);
  CHECK(json::parse(q.out)["property_p"]["holds"] == false);
}

TEST_CASE("summary output is plain text") {
  auto r = run("property-p genus2 --metric golden-irrational --summary");
  CHECK(r.code == 0);
  CHECK(r.out.find("property P: holds") != std::string::npos);
}

TEST_CASE("surface files are accepted") {
  auto path = fixtures::source_dir() + "/tests/fixtures/hyp-staircase4.json";
  auto r = run("check " + path);
  CHECK(r.code == 0);
  auto p = run("property-p " + path + " --locus full");
  CHECK(p.code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("check no-such-preset").code == 2);
  CHECK(run("check /nonexistent/file.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("property-p genus2 --locus sideways").code == 2);
  CHECK(run("property-p genus2 --metric no-such-metric").code == 2);
  auto garbage = write_temp("flatkern-garbage.json", "{ not json");
  CHECK(run("check " + garbage).code == 2);
  // parses, but theta is not a section of tau
  auto d = to_json(load_preset("genus2").diagram);
  d["positive"] = {0, 1, 2, 3};
  auto broken = write_temp("flatkern-broken.json", d.dump());
  CHECK(run("property-p " + broken).code == 1);
}
