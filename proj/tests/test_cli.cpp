#include <sys/wait.h>

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "qseries/complex_literal.hpp"
#include "qseries/hyperseries.hpp"
#include "qseries/identities.hpp"
#include "qseries/qfactorial.hpp"

#ifndef QSERIES_CLI
#error "QSERIES_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into out.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + QSERIES_CLI + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval examples") {
    auto r = run("eval qpoch --a 0.5 --q 0.5 --n 3");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0.328125");
    CHECK(r.out.find("terms: 3") != std::string::npos);

    // Infinite products report how many factors were taken.
    r = run("eval qpoch --a 0.5 --q 0.5");
    CHECK(r.code == 0);
    CHECK(r.out.find("terms: 0") == std::string::npos);
    r = run("eval theta --x 0.7 --q 0.5");
    CHECK(r.out.find("terms: 0") == std::string::npos);

    r = run("eval theta --x -1 --q 0.5");
    CHECK(r.code == 0);
    CHECK(std::abs(qseries::parse_complex(first_line(r.out))) < 1e-14);

    r = run("eval phi --upper 0.3 --lower \"\" --q 0.4 --z 0.5");
    CHECK(r.code == 0);
    const auto want = qseries::qpoch_infinite(0.15, 0.4) / qseries::qpoch_infinite(0.5, 0.4);
    CHECK(oracle::rel(qseries::parse_complex(first_line(r.out)), want) < 1e-13);
  }

  TEST_CASE("eval output re-parses") {
    for (const char* args :
         {"eval qpoch --a 0.3+0.2i --q 0.4", "eval theta --x 0.7-0.1i --q 0.3",
          "eval psi --upper 0.6 --lower 0.1 --q 0.4 --z 0.5", "eval eb --y 0.2i --q 0.5 --b 3",
          "eval kinf --y -2 --q 0.3", "eval eop --func power --n 2 --x 0.8 --y 0.1 --q 0.45 --b 2"}) {
      INFO(args);
      const auto r = run(args);
      CHECK(r.code == 0);
      CHECK_NOTHROW(qseries::parse_complex(first_line(r.out)));
    }
  }

  TEST_CASE("eval errors map to exit codes") {
    auto r = run("eval qpoch --a 0.5x --q 0.5");
    CHECK(r.code == 2);
    CHECK(r.out.find("--a") != std::string::npos);
    r = run("eval qpoch --a 0.5 --q 0.5 --n -1");
    CHECK(r.code == 3);
    r = run("eval psi --upper 0.5 --lower 0.3 --q 0.5 --z 2");
    CHECK(r.code == 3);
    r = run("eval qpoch --a 0.5 --q 1.5");
    CHECK(r.code == 3);
    r = run("eval eop --func theta --a 0.5 --x 0.7 --y 0.1 --q 0.4 --b 2");
    CHECK(r.code == 4);
    r = run("eval nosuchkind --q 0.5");
    CHECK(r.code == 2);
  }

  TEST_CASE("term budget from flag and environment") {
    const std::string args = "eval phi --upper 0.3 --lower \"\" --q 0.4 --z 0.9";
    CHECK(run(args).code == 0);
    CHECK(run(args, "QSERIES_MAX_TERMS=5").code == 4);
    CHECK(run("--max-terms 10000 " + args, "QSERIES_MAX_TERMS=5").code == 0);
    CHECK(run("--max-terms 5 " + args).code == 4);
    CHECK(run("--eps 0 " + args).code == 2);
  }

  TEST_CASE("list") {
    auto r = run("list --group A");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    r = run("list");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line, prev_key;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      const auto t1 = line.find('\t');
      const auto t2 = line.find('\t', t1 + 1);
      const std::string key = line.substr(t1 + 1, t2 - t1 - 1) + "/" + line.substr(0, t1);
      CHECK(prev_key < key);
      prev_key = key;
      ++rows;
    }
    CHECK(rows == qseries::registry().size());
    r = run("list --group Z");
    CHECK(r.code == 2);
  }

  TEST_CASE("verify exit codes") {
    auto r = run("verify --id ramanujan-1psi1 --samples 50 --seed 42 --tol 1e-8 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"case_id\": \"ramanujan-1psi1\"") != std::string::npos);
    CHECK(run("verify --id nope").code == 2);
    // A flagged case that mismatches does not fail the run.
    CHECK(run("verify --id psi-0psi1").code == 0);
    // An impossible tolerance fails an expected-pass case.
    CHECK(run("verify --id q-binomial --tol 1e-30").code == 1);
  }

  TEST_CASE("verify writes identical JSON across runs and job counts") {
    const auto dir = std::filesystem::temp_directory_path() / "qseries_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.json", b = dir / "b.json";
    CHECK(run("verify --all --seed 42 --format json --jobs 1 --out " + a.string()).code == 0);
    CHECK(run("verify --all --seed 42 --format json --jobs 4 --out " + b.string()).code == 0);
    const std::string ja = slurp(a);
    CHECK(ja.size() > 1000);
    CHECK(ja == slurp(b));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("csv output") {
    const auto r = run("verify --id q-binomial --samples 4 --format csv");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  }
}
