#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "resdet/report_io.hpp"

using namespace resdet;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RESDET_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& claim, const std::string& status) {
  std::size_t pos = 0;
  while ((pos = out.find(claim, pos)) != std::string::npos) {
    const std::size_t eol = out.find('\n', pos);
    const std::string line = out.substr(pos, eol - pos);
    if (line.find(" " + status + " ") != std::string::npos) return true;
    pos = eol;
  }
  return false;
}

}  // namespace

TEST_CASE("verify --p 13 --k 3") {
  const Run r = run("verify --p 13 --k 3");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "THM_B_I", "PASS"));
  CHECK(r.out.find("z=1") != std::string::npos);
  CHECK(has_line(r.out, "COR_1_I ", "PASS"));
  CHECK(has_line(r.out, "COR_1_II", "PASS"));
}

TEST_CASE("verify rejects bad input with exit 2") {
  Run r = run("verify --p 12 --k 2");
  CHECK(r.code == 2);
  CHECK(r.out.find("12 is not prime") != std::string::npos);
  r = run("verify --p 11 --k 4");
  CHECK(r.code == 2);
  r = run("verify --p 7 --claims NOPE");
  CHECK(r.code == 2);
  r = run("verify");
  CHECK(r.code == 2);
  r = run("frobnicate");
  CHECK(r.code == 2);
  r = run("sweep --p-min 50 --p-max 10");
  CHECK(r.code == 2);
  r = run("sweep --format xml");
  CHECK(r.code == 2);
}

TEST_CASE("verify --p 7 --k 2 --claims THM_C") {
  const Run r = run("verify --p 7 --k 2 --claims THM_C");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "THM_C", "PASS"));
  CHECK(r.out.find("THM_A") == std::string::npos);
}

TEST_CASE("--skip-primality-check accepts a composite") {
  // 9 passes the parity screen; the result is meaningless but must not crash
  const Run r = run("verify --p 9 --k 2 --claims THM_C --skip-primality-check");
  CHECK(r.code != 2);
}

TEST_CASE("counts") {
  Run r = run("counts --p 13 --k 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("a_p(k) = 1 ") != std::string::npos);
  CHECK(r.out.find("b_p(k) = -6 ") != std::string::npos);
  r = run("counts --p 13 --k 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("c_p(k) = 6 ") != std::string::npos);
  CHECK(r.out.find("d_p(k) = -12 ") != std::string::npos);
  CHECK(r.out.find("g = 2") != std::string::npos);
  r = run("counts --p 7 --k 2");
  CHECK(r.out.find("a_p(k) = 1 ") != std::string::npos);
  CHECK(r.out.find("DISAGREE") == std::string::npos);
}

TEST_CASE("sweep, jobs from the environment, and export") {
  const auto dir = std::filesystem::temp_directory_path() / "resdet_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.jsonl").string();
  const std::string b = (dir / "b.jsonl").string();
  const std::string csv = (dir / "a.csv").string();

  Run r = run("sweep --p-min 3 --p-max 60 --jobs 1 --lemma-trials 50 --out " + a);
  CHECK(r.code == 0);
  CHECK(r.out.find("worst status: PASS") != std::string::npos);
  r = run("sweep --p-min 3 --p-max 60 --jobs 4 --lemma-trials 50 --out " + b);
  CHECK(r.code == 0);
  const std::string env_cmd = std::string("RESIDUE_DET_JOBS=3 ") + RESDET_CLI_PATH + " sweep --p-max 20 > /dev/null";
  CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
  const std::string bad_env = std::string("RESIDUE_DET_JOBS=0 ") + RESDET_CLI_PATH + " sweep --p-max 20 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(bad_env.c_str())) == 2);

  std::ifstream fa(a), fb(b);
  auto ra = read_jsonl(fa), rb = read_jsonl(fb);
  sort_canonical(ra);
  sort_canonical(rb);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(canonical_line(ra[i]) == canonical_line(rb[i]));

  r = run("export --in " + a + " --format csv --out " + csv);
  CHECK(r.code == 0);
  std::ifstream fc(csv);
  std::string header;
  std::getline(fc, header);
  CHECK(header.rfind("p,k,claim,status", 0) == 0);

  r = run("export --in " + a);
  CHECK(r.code == 0);
  CHECK(r.out.find("\"claim\":\"THM_A_I\"") != std::string::npos);

  r = run("export --in " + (dir / "missing.jsonl").string());
  CHECK(r.code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").code == 0);
  CHECK(run("sweep --help").code == 0);
}
