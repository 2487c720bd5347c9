#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

  struct Run {
    int         code;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd  = std::string(SRW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string          out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

}  // namespace

TEST_CASE("cli normalize and equal", "[cli]") {
  auto r = run("--catalog M2 normalize dab");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run("--catalog M2 normalize aab").out == "0\n");
  CHECK(run("--catalog M2 equal ac 1").code == 0);
  CHECK(run("--catalog M2 equal a b").code == 1);
  auto j = nlohmann::json::parse(run("--catalog M2 --format json normalize dab").out);
  CHECK(j["normalForm"] == "1");
  CHECK(j["steps"] == 1);
}

TEST_CASE("cli confluence, completion and growth", "[cli]") {
  CHECK(run("--catalog dehn-example confluence").out ==
        "locally confluent: true, terminating: true, critical pairs: 0\n");
  auto j = nlohmann::json::parse(run("--catalog M3 --format json confluence").out);
  CHECK(j["locallyConfluent"] == true);
  CHECK(run("--catalog M3 complete").code == 0);
  CHECK(run("--catalog M1 --format csv growth --max-len 4").out ==
        "length,count\n0,1\n1,4\n2,12\n3,32\n4,80\n");
}

TEST_CASE("cli witnesses and areas", "[cli]") {
  CHECK(run("--catalog M2 witness ada").out == "x = 1, y = cabc\n");
  CHECK(run("--catalog dehn-example witness c").out == "x = 1, y = d\n");
  CHECK(run("--catalog M2 witness aab").code == 3);
  auto r = run("--catalog dehn-example dehn aabb bbaa");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("area: 4\n", 0) == 0);
  CHECK(run("--catalog dehn-example dehn a b").code == 1);
  auto j = nlohmann::json::parse(run("--catalog dehn-example --format json dehn ab ba").out);
  CHECK(j["steps"] == 1);
  CHECK(j["derivation"].size() == 2);
}

TEST_CASE("cli probes", "[cli]") {
  auto j = nlohmann::json::parse(
      run("--catalog M2 --format json probe a b --radius 6 --trace").out);
  CHECK(j["status"] == "collapsed");
  CHECK(j["replayed"] == true);
  auto csv = run("--catalog M1 --format csv probe-all --seed-len 1 --radius 6");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("seed_u,seed_v,status,trace_len,truncated\n", 0) == 0);
}

TEST_CASE("cli profile and identities", "[cli]") {
  auto r = run("--catalog M1 --format csv dehn-profile --n-max 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,D,limited_pairs\n0,0,0\n", 0) == 0);
  CHECK(run("verify-paper --n 3").code == 0);
  CHECK(run("verify-paper --n 0").code == 3);
}

TEST_CASE("cli input errors", "[cli]") {
  CHECK(run("--catalog M2 normalize xyz").code == 3);
  CHECK(run("--catalog nope normalize a").code == 3);
  CHECK(run("--catalog M2 --file x.txt normalize a").code == 3);
  CHECK(run("--catalog M2 --format csv normalize a").code == 3);
  CHECK(run("--catalog M2 bogus").code == 3);
  CHECK(run("--file /nonexistent/presentation.txt normalize a").code == 3);
}

TEST_CASE("cli reads presentation files", "[cli]") {
  std::string path = "srw_cli_test_presentation.txt";
  {
    std::ofstream f(path);
    f << "# toy\ngenerators: a b\nrelations:\nab = ba\naaa = 0\n";
  }
  CHECK(run("--file " + path + " normalize baba").out == "aabb\n");
  CHECK(run("--file " + path + " --order ba normalize aabb").out == "bbaa\n");
  CHECK(run("--file " + path + " normalize abab").out == run("--file " + path + " normalize baab").out);
  CHECK(run("--file " + path + " normalize aaab").out == "0\n");
  std::remove(path.c_str());
}

TEST_CASE("cli output is deterministic", "[cli]") {
  for (char const* args : {"--catalog dehn-example --format json dehn-profile --n-max 6",
                           "--catalog M2 --format json probe-all --seed-len 1 --radius 6 --jobs 2",
                           "--catalog M3 --format json complete"}) {
    CHECK(run(args).out == run(args).out);
  }
}
