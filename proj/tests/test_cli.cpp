#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef NCERGO_BIN
#error "NCERGO_BIN must point at the built CLI"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string command = std::string(NCERGO_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* kDisjointConfig = R"([system]
kind = qtorus_pair
theta1 = 1/5
theta2 = 1/3
p = 1
q = 1
c = sqrt(2)
d = sqrt(3)
group = r2

[folner]
shape = box
sizes = 1,10,100,1000

[observable]
c = u^0 v^1 w^0 z^-1

[functional]
kind = kappa_D
)";

const char* kGroupConfig = R"([system]
kind = group_dual
t_s1_cycles = (s1 s2)(s3 s4 s5)(s6 s7 s8 s9)
t_s2 = shift
k_s2 = identity

[folner]
shape = range
sizes = 1,10,100

[observable]
a = t0
b = t0^-1
)";

const char* kAverageConfig = R"([system]
kind = qtorus
theta = 1/5
p = 1
q = 1
group = r

[folner]
shape = interval
sizes = 10,100,1000

[observable]
a = u^1 v^0
)";

}  // namespace

TEST_CASE("verify runs a suite and reports PASS lines") {
  const RunResult result = run("verify --suite folner --seed 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("PASS folner translation_identity") != std::string::npos);
  CHECK(result.output.find("FAIL") == std::string::npos);
}

TEST_CASE("unknown suite name is an error") {
  const RunResult result = run("verify --suite nonsense");
  CHECK(result.exit_code == 2);
}

TEST_CASE("disjoint emits the coupling table with the product-trace limit") {
  const std::string cfg = temp_path("disjoint.cfg");
  const std::string out = temp_path("disjoint.csv");
  write_file(cfg, kDisjointConfig);

  const RunResult result = run("disjoint --config " + cfg + " --out " + out);
  REQUIRE(result.exit_code == 0);

  const std::string csv = read_file(out);
  CHECK(csv.rfind("size,re_value,im_value,re_limit,im_limit,abs_error\n", 0) == 0);
  // four rows, limit column all zero
  int rows = 0;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string field;
    std::getline(fields, field, ',');  // size
    std::getline(fields, field, ',');  // re_value
    std::getline(fields, field, ',');  // im_value
    std::getline(fields, field, ',');
    CHECK(field == "0");  // re_limit
    std::getline(fields, field, ',');
    CHECK(field == "0");  // im_limit
  }
  CHECK(rows == 4);

  // byte-identical on a rerun
  const std::string out2 = temp_path("disjoint2.csv");
  REQUIRE(run("disjoint --config " + cfg + " --out " + out2).exit_code == 0);
  CHECK(read_file(out2) == csv);

  std::remove(cfg.c_str());
  std::remove(out.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("group emits the correlation table with zero error") {
  const std::string cfg = temp_path("group.cfg");
  const std::string out = temp_path("group.csv");
  write_file(cfg, kGroupConfig);

  const RunResult result = run("group --config " + cfg + " --out " + out);
  REQUIRE(result.exit_code == 0);
  const std::string csv = read_file(out);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind(",0") == line.size() - 2);  // abs_error column is exactly 0
    CHECK(line.find(",0,0,0,0,0") != std::string::npos);  // value and limit both zero
  }
  CHECK(rows == 3);

  std::remove(cfg.c_str());
  std::remove(out.c_str());
}

TEST_CASE("average emits the expectation-limit table") {
  const std::string cfg = temp_path("average.cfg");
  const std::string out = temp_path("average.csv");
  write_file(cfg, kAverageConfig);

  const RunResult result = run("average --config " + cfg + " --out " + out);
  REQUIRE(result.exit_code == 0);
  const std::string csv = read_file(out);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  double previous = 2.0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto last_comma = line.rfind(',');
    const double err = std::stod(line.substr(last_comma + 1));
    CHECK(err <= previous);  // integer sizes: |value| = 0 exactly here
    previous = err;
  }
  CHECK(rows == 3);

  std::remove(cfg.c_str());
  std::remove(out.c_str());
}

TEST_CASE("oracle subcommand passes at modest truncation") {
  const RunResult result = run("oracle --theta 1/5 --truncation 8 --samples 10 --seed 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.rfind("PASS oracle", 0) == 0);
}

TEST_CASE("malformed config gives a nonzero exit naming the position") {
  const std::string cfg = temp_path("broken.cfg");
  write_file(cfg, "[system]\nkind qtorus\n");
  const RunResult result = run("disjoint --config " + cfg + " --out /dev/null");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find(":2:") != std::string::npos);
  std::remove(cfg.c_str());
}

TEST_CASE("incompatible parameters give a nonzero exit naming the constraint") {
  const std::string cfg = temp_path("mirror.cfg");
  write_file(cfg, "[system]\nkind = qtorus_mirror\ntheta1 = 1/5\ntheta2 = 1/5\ngroup = r\n"
                  "[folner]\nshape = interval\nsizes = 10\n"
                  "[observable]\nc = u^1 v^0 w^-1 z^0\n[functional]\nkind = kappa_diag\n");
  const RunResult result = run("disjoint --config " + cfg + " --out /dev/null");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("theta2") != std::string::npos);
  std::remove(cfg.c_str());
}

TEST_CASE("missing subcommand is an error") {
  CHECK(run("").exit_code != 0);
}
