#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(NCODE_TOOL) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(NCODE_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("analyze") {
  const Run r = run("--json analyze " + fixture("three_maximal.code"));
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "analyze");
  CHECK(j["results"]["max_intersection_complete"] == false);
  CHECK(j["results"]["doublet_maximal"] == false);
  CHECK(j["results"]["obstructions"].empty());

  const Run text = run("analyze " + fixture("doublet.code"));
  CHECK(text.status == 0);
  CHECK(text.out.find("max_intersection_complete: true") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
  const Run dup = run("analyze " + fixture("duplicate.code"));
  CHECK(dup.status == 2);
  CHECK(dup.out.find("line 3") != std::string::npos);
  CHECK(run("analyze " + fixture("missing.code")).status == 2);
  CHECK(run("realize --mode sideways " + fixture("convex_only.code")).status == 2);
  CHECK(run("realize --mode open " + fixture("three_maximal.code")).status == 2);
  CHECK(run("convert --to closed " + fixture("three_maximal.realization.json")).status == 0);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("verify nothing").status == 2);
  CHECK(run("census --n 12 --p 5").status == 2);
}

TEST_CASE("realize") {
  const Run convex = run("--json realize --mode convex " + fixture("convex_only.code"));
  CHECK(convex.status == 0);
  CHECK(nlohmann::json::parse(convex.out)["results"]["found"] == true);

  const Run open = run("--json realize --mode open " + fixture("convex_only.code"));
  CHECK(open.status == 0);
  CHECK(nlohmann::json::parse(open.out)["results"]["verdict"] == "none (exhaustive)");

  const Run figmip = run("--json realize --mode open --cap 5 " + fixture("three_maximal.code"));
  CHECK(figmip.status == 0);
  CHECK(nlohmann::json::parse(figmip.out)["results"]["found"] == true);
}

TEST_CASE("atoms and convert") {
  const Run atoms = run("--json atoms " + fixture("doublet.realization.json"));
  CHECK(atoms.status == 0);
  CHECK(atoms.out.find("[7/2, 7/2]") != std::string::npos);

  const Run closed = run("--json convert --to closed " + fixture("three_maximal.realization.json"));
  CHECK(closed.status == 0);
  const auto j = nlohmann::json::parse(closed.out);
  CHECK(j["results"]["code_before"] == j["results"]["code_after"]);

  const auto path = std::filesystem::temp_directory_path() / "ncode_cli_closed.json";
  std::ofstream(path) << j["results"]["realization"].dump();
  CHECK(run("convert --to open " + path.string()).status == 0);
  CHECK(run("convert --to closed " + path.string()).status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("map apply") {
  const Run r = run("--json map apply --spec " + fixture("project_3.map.json") + " " + fixture("six_words.code"));
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["results"]["image"] == "{10, 01, 00, 11}");
}

TEST_CASE("census") {
  const Run c42 = run("--json census --n 4 --p 2");
  CHECK(c42.status == 0);
  const auto j = nlohmann::json::parse(c42.out);
  CHECK(j["results"]["census"]["nrh_total"] == 36);
  CHECK(j["results"]["census"]["other_nrh"] == 24);

  CHECK(run("census --code " + fixture("circulant_4_2.json")).status == 0);
  CHECK(run("--workers 2 census --n 5 --p 2 --prune").status == 0);
  // Brute force gives 180 here against the listed 270, so the row fails.
  CHECK(run("census --n 6 --p 3").status == 1);
}

TEST_CASE("verify writes markdown and JSON sidecars") {
  const auto prefix = std::filesystem::temp_directory_path() / "ncode_cli_verify";
  const Run r = run("verify circulant --n-min 3 --n-max 4 --out " + prefix.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("| p | n | formula |") != std::string::npos);
  const auto json_path = prefix.string() + ".json";
  const auto md_path = prefix.string() + ".md";
  REQUIRE(std::filesystem::exists(json_path));
  REQUIRE(std::filesystem::exists(md_path));
  std::ifstream in(json_path);
  CHECK(nlohmann::json::parse(in)["command"] == "verify circulant");
  std::filesystem::remove(json_path);
  std::filesystem::remove(md_path);
}

TEST_CASE("identical seeds give identical reports") {
  const Run a = run("--json --seed 9 verify ring --trials 10");
  const Run b = run("--json --seed 9 verify ring --trials 10");
  CHECK(a.status == 0);
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    for (auto& c : j["checks"]) c.erase("elapsed_ms");
    return j.dump();
  };
  CHECK(strip(nlohmann::json::parse(a.out)) == strip(nlohmann::json::parse(b.out)));
}
