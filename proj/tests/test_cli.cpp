// Drives the installed binary end to end through popen. SFSCOUNT_BIN is
// injected by the build.

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, bool drop_stderr = false) {
  std::string cmd = std::string(SFSCOUNT_BIN) + " " + args;
  if (drop_stderr) cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("slope subcommands") {
  RunResult r = run("slope act --matrix 1,0,0,1 --slope 3/7");
  CHECK(r.code == 0);
  CHECK(r.out == "3/7\n");

  r = run("slope act --matrix 3,-1,1,0 --slope -1/7");
  CHECK(r.code == 0);
  CHECK(r.out == "7/22\n");

  r = run("slope inv --matrix 3,-1,1,0 --slope 7/22");
  CHECK(r.code == 0);
  CHECK(r.out == "-1/7\n");
}

TEST_CASE("cf subcommands") {
  RunResult r = run("cf count --slope -5/1");
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");

  r = run("cf expand --slope -7/4");
  CHECK(r.code == 0);
  CHECK(r.out == "[-2,-4]\n");

  r = run("cf eval --digits -2,-4");
  CHECK(r.code == 0);
  CHECK(r.out == "-7/4\n");

  r = run("cf count --slope -1/2", true);
  CHECK(r.code == 2);
}

TEST_CASE("seifert subcommands") {
  RunResult r = run("seifert normalize --seifert 'M(0; 1/2, -1/3, -1/7)'");
  CHECK(r.code == 0);
  CHECK(r.out == "M(-2; 1/2, 2/3, 6/7)\n");

  r = run("seifert eq --a 'M(0; 2/3, -1/3, -1/7)' --b 'M(-2; 2/3, 2/3, 6/7)'");
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");

  r = run("seifert euler --seifert 'M(0; 1/2, -1/3, -1/7)'");
  CHECK(r.code == 0);
  CHECK(r.out == "1/42\n");

  r = run("seifert slamdunk --seifert 'M(0; 1/2, -1/3, -1/7)' --leg 1 --framing -2");
  CHECK(r.code == 0);
  CHECK(r.out == "M(-2; 2/3, 2/3, 6/7)\n");

  r = run("seifert slamdunk --seifert 'M(0; 1/2, -1/3, -1/7)' --leg 1 --framing inf");
  CHECK(r.code == 0);
  CHECK(r.out == "M(0; 1/2, -1/3, -1/7)\n");

  r = run("seifert slamdunk --seifert 'M(0; 1/2)' --leg 3 --framing -2", true);
  CHECK(r.code == 2);
}

TEST_CASE("family count") {
  RunResult r = run("family count --m 2 --n 1 --fiber F1 --bound all");
  CHECK(r.code == 0);
  CHECK(r.out.find("lower  = 9") != std::string::npos);
  CHECK(r.out.find("upper  = 9") != std::string::npos);
  CHECK(r.out.find("closed = 9") != std::string::npos);
  CHECK(r.out.find("agrees: yes") != std::string::npos);

  r = run("family count --m 2 --n 1 --fiber F1 --bound lower");
  CHECK(r.out == "9\n");
  r = run("family count --m 2 --n 1 --fiber F2 --bound closed");
  CHECK(r.out == "7\n");  // 1*1 + 3*2

  r = run("family count --m 2 --n 1 --fiber F1 --bound all --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "m,n,fiber,in_range,lower,upper,closed,agrees\n"
        "2,1,F1,true,9,9,9,true\n");
}

TEST_CASE("family table") {
  RunResult r = run("family table --m 2 --n 1 --fiber F1 --which upper --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "l,tw,n1,slope_V3,slope_V2,count\n"
        "0,-7,-2,-1/1,-1/1,1\n"
        "1,-1,0,-4/1,-2/1,8\n");

  r = run("family table --m 2 --n 1 --fiber F1 --which triangle --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "a,structures,reg_twist,fiber_twist,contact_coeff,choices\n"
        "1,1,-7,-4,-1,1\n"
        "2,2,-1,-1,-4,4\n");
}

TEST_CASE("csv outputs for the remaining subcommands") {
  RunResult r = run("family maxtwist --m 1 --n 1 --kmax 1 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k,t,verdict,slope_V3,witness,twist_bound\n"
        "0,-1,admissible,,,\n"
        "1,-22,contradiction,inf,-1/2,-2\n");

  r = run("seifert normalize --seifert 'M(0; 1/2, -1/3, -1/7)' --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "e0,ratios\n-2,1/2;2/3;6/7\n");

  r = run("family target --m 1 --n 1 --fiber F1 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "m,n,fiber,e0_surgered,ratios_surgered,e0_stated,ratios_stated,equivalent\n"
        "1,1,F1,-2,2/3;2/3;6/7,-2,2/3;2/3;6/7,true\n");

  r = run("cf expand --slope -7/4 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "digits\n-2;-4\n");

  r = run("slope act --matrix 1,0,0,1 --slope 3/7 --format json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"result\": \"3/7\"\n}\n");
}

TEST_CASE("family maxtwist and target") {
  RunResult r = run("family maxtwist --m 1 --n 1 --kmax 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("k=0 (t=-1): admissible") != std::string::npos);
  CHECK(r.out.find("k=1 (t=-22): contradiction") != std::string::npos);
  CHECK(r.out.find("k=2 (t=-43): contradiction") != std::string::npos);

  r = run("family target --m 1 --n 1 --fiber F2");
  CHECK(r.code == 0);
  CHECK(r.out.find("stated:   M(-2; 1/2, 3/4, 6/7)") != std::string::npos);
  CHECK(r.out.find("equivalent: yes") != std::string::npos);
}

TEST_CASE("json output round-trips byte-identically and is deterministic") {
  for (const std::string& args :
       {std::string("family count --m 3 --n 2 --fiber F1 --bound all --format json"),
        std::string("family table --m 3 --n 2 --fiber F2 --which upper --format json"),
        std::string("family maxtwist --m 2 --n 3 --kmax 3 --format json"),
        std::string("family target --m 2 --n 3 --fiber F1 --format json"),
        std::string("seifert normalize --seifert 'M(0; 1/2, -1/3, -1/7)' --format json")}) {
    RunResult first = run(args);
    CHECK(first.code == 0);
    auto parsed = nlohmann::ordered_json::parse(first.out);
    CHECK(parsed.dump(2) + "\n" == first.out);
    RunResult second = run(args);
    CHECK(second.out == first.out);
  }
}

TEST_CASE("invalid input exits with code 2") {
  CHECK(run("bogus", true).code == 2);
  CHECK(run("slope act --matrix 1,0,0,2 --slope 1/2", true).code == 2);  // det != 1
  CHECK(run("slope act --matrix 1,0,0,1 --slope 0/0", true).code == 2);
  CHECK(run("family count --m 0 --n 1 --fiber F1", true).code == 2);
  CHECK(run("family count --m 1 --n 1 --fiber F7", true).code == 2);
  CHECK(run("cf eval --digits -1,-2", true).code == 2);
  CHECK(run("", true).code == 2);  // missing subcommand
}

TEST_CASE("out-of-range n warns but still computes") {
  RunResult r = run("family count --m 1 --n 22 --fiber F1 --bound all", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("note: n is outside the theorem range") != std::string::npos);
  CHECK(r.out.find("agrees: yes") != std::string::npos);
}
