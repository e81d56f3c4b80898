#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(GSB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const char* name) { return std::string(GSB_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("check reports a nontrivial composition with exit code 2") {
  auto r = run("check " + fixture("aab.pres"));
  CHECK(r.code == 2);
  CHECK(r.out.find("NotGSB") != std::string::npos);
  auto ok = run("check --json " + fixture("aab_complete.pres"));
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "GSB");
  CHECK(j["nontrivial"].empty());
  auto partial = run("check --json --max-deg 2 " + fixture("aab.pres"));
  CHECK(partial.code == 2);
  CHECK(nlohmann::json::parse(partial.out)["status"] == "Partial");
}

TEST_CASE("complete emits JSON and writes the basis") {
  auto dir = std::filesystem::temp_directory_path() / "gsb_cli_test";
  std::filesystem::create_directories(dir);
  auto out = (dir / "done.pres").string();
  auto r = run("complete --json " + fixture("aab.pres") + " -o " + out);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "CertifiedGSB");
  REQUIRE(j["added"].size() == 1);
  CHECK(j["added"][0] == "a*b - b*a");
  CHECK(j["inputs_reduce_to_zero"] == true);
  CHECK(run("check " + out).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("complete exits 2 when the basis is not certified") {
  auto dir = std::filesystem::temp_directory_path() / "gsb_cli_braid";
  std::filesystem::create_directories(dir);
  auto in = (dir / "braid.pres").string();
  FILE* f = std::fopen(in.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs("alphabet: a > b\nrelations:\na*b*a - b*a*b\n", f);
  std::fclose(f);
  auto r = run("complete --json --max-deg 6 " + in);
  CHECK(r.code == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] != "CertifiedGSB");
  std::filesystem::remove_all(dir);
}

TEST_CASE("normal forms, irreducible words and dimensions") {
  auto nf = run("nf " + fixture("aab_complete.pres") + " --poly \"a*a*a\"");
  CHECK(nf.code == 0);
  CHECK(nf.out == "b*a\n");
  auto irr = run("irr " + fixture("aab_complete.pres") + " --max-deg 3 --count-only");
  CHECK(irr.out == "7\n");
  auto dim = run("dim " + fixture("aab_complete.pres") + " --max-deg 3");
  CHECK(dim.code == 0);
  CHECK(dim.out == "7\n");
  auto mod = run("nf " + fixture("free_module.pres") + " --poly \"b*a*y1\"");
  CHECK(mod.code == 0);
  CHECK(mod.out == "b*a*y1\n");
}

TEST_CASE("lyndon words") {
  auto r = run("lyndon --alphabet \"a > b\" --max-len 3 --bracket");
  CHECK(r.code == 0);
  CHECK(r.out == "a  a\nb  b\na*b  [a,b]\na*a*b  [a,[a,b]]\na*b*b  [[a,b],b]\n");
  auto c = run("lyndon --alphabet \"a > b\" --max-len 4 --count-only");
  CHECK(c.out == "1 2\n2 1\n3 2\n4 3\n");
}

TEST_CASE("constructions write a certificate") {
  auto dir = std::filesystem::temp_directory_path() / "gsb_cli_construct";
  std::filesystem::create_directories(dir);
  auto out = (dir / "hnn.pres").string();
  auto r = run("construct hnn " + fixture("z3.group") + " --index-bound 2 -o " + out);
  REQUIRE(r.code == 0);
  REQUIRE(std::filesystem::exists(out + ".cert.json"));
  std::FILE* f = std::fopen((out + ".cert.json").c_str(), "r");
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, f)) text.append(buf, n);
  std::fclose(f);
  auto cert = nlohmann::json::parse(text);
  CHECK(cert["status"] == "GSB");
  CHECK(cert["embedding_witness"] == true);
  CHECK(run("check " + out).code == 0);

  CHECK(run("construct malcev " + fixture("commuting.pres") + " -n 2").code == 0);
  CHECK(run("construct simple " + fixture("left_zero.table") + " --m-bound 2").code == 0);
  CHECK(run("construct module-cyclic " + fixture("free_module.pres") + " -n 3").code == 0);
  CHECK(run("construct module-cyclic " + fixture("module_single.pres") + " -n 1").code == 1);
  CHECK(run("construct hnn --cyclic 2 --index-bound 1").code == 0);
  auto lie = run("construct lie-words -n 1");
  CHECK(lie.out == "a*a*b*a*b  [[a,[a,b]],[a,b]]\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage and input errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("check").code == 1);
  CHECK(run("check /nonexistent/file.pres").code == 1);
  CHECK(run("nf " + fixture("aab.pres") + " --poly \"a*c\"").code == 1);
  CHECK(run("construct hnn").code == 1);
  CHECK(run("check --module " + fixture("aab.pres")).code == 1);
  CHECK(run("--help").code == 0);
}
