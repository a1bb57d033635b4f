#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(CGT_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("cgt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, InfoSymmetricThree) {
  const CliRun r = cli("info 'sym(3)'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "N(G) = {1,2,3}")) << r.out;
  EXPECT_TRUE(has(r.out, "|G|| = 6")) << r.out;
  EXPECT_TRUE(has(r.out, "A-group: yes")) << r.out;
  EXPECT_TRUE(has(r.out, "|Z(G)| = 1")) << r.out;
  EXPECT_TRUE(has(r.out, "|F(G)| = 3")) << r.out;
}

TEST(Cli, VerifyBingoOnA4) {
  const CliRun r = cli("verify --lemma bingo 'alt(4)'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "PASS  bingo1  H={0}")) << r.out;
  EXPECT_TRUE(has(r.out, "PASS  bingo2  H={0}")) << r.out;
  EXPECT_TRUE(has(r.out, "PASS  bingo1  H={0,3,8,11}")) << r.out;
  EXPECT_FALSE(has(r.out, "FAIL")) << r.out;
}

TEST(Cli, VerifyAllWritesReport) {
  Scratch s;
  const CliRun r = cli("verify --lemma all --report " + s.path("r.jsonl") + " 'frobenius(7,3)'");
  EXPECT_EQ(r.code, 0) << r.out;
  const std::string rep = slurp(s.path("r.jsonl"));
  EXPECT_TRUE(has(rep, "\"lemma\":\"theorem\"")) << rep;
  EXPECT_FALSE(has(rep, "\"FAIL\""));
}

TEST(Cli, ScanMaxOrderOne) {
  Scratch s;
  const CliRun r = cli("scan --max-order 1 --report " + s.path("scan.jsonl"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "groups scanned: 1")) << r.out;
  EXPECT_TRUE(has(r.out, "counterexamples: 0")) << r.out;
  const std::string rep = slurp(s.path("scan.jsonl"));
  EXPECT_TRUE(has(rep, "\"groups\":1")) << rep;
  EXPECT_FALSE(has(rep, "\"status\":\"FAIL\""));
}

TEST(Cli, ScanIsByteStable) {
  Scratch s;
  const CliRun a = cli("scan --max-order 20 --seed 3 --report " + s.path("a.jsonl"));
  const CliRun b = cli("scan --max-order 20 --seed 3 --jobs 2 --report " + s.path("b.jsonl"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(slurp(s.path("a.jsonl")), slurp(s.path("b.jsonl")));
}

TEST(Cli, ConstructAndReload) {
  Scratch s;
  for (const char* fmt : {"cayley", "perm", "recipe"}) {
    const std::string out = s.path(std::string("g.") + fmt);
    const CliRun c = cli("construct 'dp(sym(3),cyclic(2))' -o " + out + " --format " + fmt);
    ASSERT_EQ(c.code, 0) << c.out;
    const CliRun i = cli("info " + out);
    EXPECT_EQ(i.code, 0) << i.out;
    EXPECT_TRUE(has(i.out, "order: 12")) << i.out;
    EXPECT_TRUE(has(i.out, "N(G) = {1,2,3}")) << i.out;
  }
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("bogus").code, 2);
  EXPECT_EQ(cli("scan --max-order 5 --no-such-flag").code, 2);
  EXPECT_EQ(cli("verify --lemma perfect 'sym(3)'").code, 2);
  EXPECT_EQ(cli("info 'frobenius(7,4)'").code, 2);
  EXPECT_EQ(cli("scan --max-order 5 --families nonsense").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, CorruptTableIsAnInputError) {
  Scratch s;
  std::ofstream(s.path("bad.txt")) << "2\n0 1\n1 1\n";
  const CliRun r = cli("info " + s.path("bad.txt"));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "inverses")) << r.out;
}

TEST(Cli, CapOverride) {
  EXPECT_EQ(cli("info 'dp(sym(5),cyclic(20))'").code, 2);
  EXPECT_EQ(cli("--cap 2400 info 'dp(sym(5),cyclic(20))'").code, 0);
}
