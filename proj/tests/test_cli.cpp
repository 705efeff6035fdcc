#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CommandResult {
  std::string output;
  int status = -1;
};

CommandResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  int rc = pclose(pipe);
  return {output, WIFEXITED(rc) ? WEXITSTATUS(rc) : -1};
}

const std::string kCli = ABELRUNS_CLI_PATH;

}  // namespace

TEST_CASE("fixed period record for the worked example") {
  auto r = run_command("echo abaababaabbb | " + kCli + " run --period 2,2");
  CHECK(r.status == 0);
  CHECK(r.output == "0\t3\t1\t11\t2,2\t3\t2\t4\n");
}

TEST_CASE("fixed period record for abab") {
  auto r = run_command("echo abab | " + kCli + " run --period 1,1");
  CHECK(r.status == 0);
  CHECK(r.output == "0\t0\t0\t3\t1,1\t0\t2\t2\n");
}

TEST_CASE("header flag") {
  auto r = run_command("echo abab | " + kCli + " run --period 1,1 --header");
  CHECK(r.output ==
        "start\thead\ttail\tend\tperiod\tanchor\tcores\tnorm\n"
        "0\t0\t0\t3\t1,1\t0\t2\t2\n");
}

TEST_CASE("empty input gives no records and exit 0") {
  auto r = run_command("printf '' | " + kCli + " run --period 1,1 --alphabet ab");
  CHECK(r.status == 0);
  CHECK(r.output.empty());
}

TEST_CASE("fixed norm record") {
  auto r = run_command("echo abaababaabbb | " + kCli + " run --norm 4");
  CHECK(r.status == 0);
  CHECK(r.output == "0\t3\t1\t11\t2,2\t3\t2\t4\n");

  auto empty = run_command("echo ab | " + kCli + " run --norm 5");
  CHECK(empty.status == 0);
  CHECK(empty.output.empty());

  auto unary = run_command("echo aaaa | " + kCli + " run --norm 1");
  CHECK(unary.output == "0\t0\t0\t3\t1\t0\t4\t1\n");
}

TEST_CASE("run-all includes the paper record and stays sorted") {
  auto r = run_command("echo ababaaa | " + kCli + " run-all");
  CHECK(r.status == 0);
  CHECK(r.output.find("0\t1\t1\t5\t1,1\t1\t2\t2\n") != std::string::npos);
}

TEST_CASE("oracle engine output is byte-identical") {
  auto main_engine = run_command("echo ababaaa | " + kCli + " run-all");
  auto oracle_engine =
      run_command("echo ababaaa | " + kCli + " run-all --engine oracle");
  CHECK(main_engine.status == 0);
  CHECK(oracle_engine.status == 0);
  CHECK(main_engine.output == oracle_engine.output);
}

TEST_CASE("seeded randomized mode is reproducible") {
  const std::string cmd =
      "echo abaababaabbbaabab | " + kCli + " run-all --seed 12345";
  auto first = run_command(cmd);
  auto second = run_command(cmd);
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
  auto deterministic = run_command("echo abaababaabbbaabab | " + kCli +
                                   " run-all --mode deterministic");
  CHECK(deterministic.output == first.output);
}

TEST_CASE("json format emits one document per line") {
  auto r = run_command("echo abab | " + kCli + " run --period 1,1 --format json");
  CHECK(r.status == 0);
  CHECK(r.output ==
        "{\"start\":0,\"head\":0,\"tail\":0,\"end\":3,\"period\":\"1,1\","
        "\"anchor\":0,\"cores\":2,\"norm\":2}\n");
}

TEST_CASE("trace mirrors the worked example") {
  auto r = run_command("echo abaababaabbb | " + kCli +
                       " run --period 2,2 --trace 2>&1 1>/dev/null");
  CHECK(r.status == 0);
  CHECK(r.output.find("k=0 B=[0,inf,inf,inf] L=(0)\n") == 0);
  CHECK(r.output.find("i=5 k=3 B=[1,0,3,0] L=(1,3,0,2)\n") !=
        std::string::npos);
  CHECK(r.output.find("i=12 k=13 B=[inf,inf,inf,inf] L=()\n") !=
        std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_command("echo ab | " + kCli + " run --period 0,0 2>/dev/null")
            .status == 2);
  CHECK(run_command("echo ab | " + kCli + " run --period x,y 2>/dev/null")
            .status == 2);
  CHECK(run_command("echo ab | " + kCli + " run 2>/dev/null").status == 2);
  CHECK(run_command("echo ab | " + kCli + " run --norm 0 2>/dev/null")
            .status == 2);
  CHECK(run_command("echo ab | " + kCli +
                    " run --period 1,1 --alphabet abc 2>/dev/null")
            .status == 2);
  CHECK(run_command("echo aaaa | " + kCli + " run --period 2,2 2>/dev/null")
            .status == 2);
  CHECK(run_command(kCli + " nonsense < /dev/null 2>/dev/null").status == 2);
}

TEST_CASE("output is deterministic given input and flags") {
  const std::string cmd = "echo abaababaabbba | " + kCli + " run --norm 3";
  auto first = run_command(cmd);
  auto second = run_command(cmd);
  CHECK(first.output == second.output);
}
