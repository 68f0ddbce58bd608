#include <doctest.h>

#include <fstream>
#include <sstream>

#include "eah_cli/cli.hpp"

using eah::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"verify", "--a", "-2", "--x", "-1", "--y", "1"}).code == 0);
  CHECK(call({"height", "--a", "3", "--x", "1", "--y", "2"}).code == 0);
  CHECK(call({"height", "--a", "3", "--x", "1", "--y", "3"}).code == 4);
  CHECK(call({"height", "--a", "0", "--x", "1", "--y", "3"}).code == 2);
  CHECK(call({"height", "--a", "3", "--x", "1/0", "--y", "3"}).code == 2);
  CHECK(call({"classify", "--a", "32", "--strict-minimal"}).code == 3);
  CHECK(call({"classify", "--a", "6", "--prime", "4"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"extremal", "--family", "lang-pos-1", "--param", "1"}).code == 7);
  CHECK(call({"extremal", "--family", "lang-neg-4", "--param", "1"}).code == 8);
  CHECK(call({"extremal", "--family", "lang-pos-4", "--param", "1"}).code == 0);
  CHECK(call({"extremal", "--family", "lang-pos-4", "--param", "1", "--certify"}).code == 0);
  CHECK(call({"oracle", "--a", "3", "--x", "1", "--y", "2", "--depth", "20"}).code == 2);
  CHECK(call({"oracle", "--a", "3", "--x", "1", "--y", "2"}).code == 0);
  CHECK(call({"oracle", "--a", "3", "--x", "1", "--y", "2", "--tol", "1e-12"}).code == 9);
}

TEST_CASE("torsion points are rejected by the oracle") {
  const Result r = call({"oracle", "--a", "-1", "--x", "0", "--y", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("json output is byte-identical across runs") {
  const std::vector<std::string> args = {"verify", "--a", "56628", "--x", "198", "--y", "4356", "--json"};
  const Result a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(a.out.find("timing_ms") == std::string::npos);
  const Result t = call({"--timing", "verify", "--a", "56628", "--x", "198", "--y", "4356", "--json"});
  CHECK(t.out.find("timing_ms") != std::string::npos);
}

TEST_CASE("classify") {
  const Result r = call({"classify", "--a", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p=2") != std::string::npos);
  const Result m = call({"classify", "--a", "32"});
  CHECK(m.code == 0);
  CHECK(m.err.find("warning") != std::string::npos);
  CHECK(m.out.find("a = 2") == 0);
  const Result j = call({"classify", "--a", "6", "--prime", "3", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"rows\"") != std::string::npos);
}

TEST_CASE("help carries normalization note and exit codes") {
  const Result r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("one-half of the value returned by ellheight") != std::string::npos);
  CHECK(r.out.find("9 oracle disagreement") != std::string::npos);
}

TEST_CASE("sweep csv") {
  const Result r = call({"sweep", "--amin", "-3", "--amax", "3", "--search-bound", "20", "--workers", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("a,x,y,torsion,class,naive,canonical,difference,error_bound,", 0) == 0);
  CHECK(!r.err.empty());
  const Result again = call({"sweep", "--amin", "-3", "--amax", "3", "--search-bound", "20", "--workers", "2"});
  CHECK(r.out == again.out);
  CHECK(call({"sweep", "--amin", "3", "--amax", "-3"}).code == 2);
  CHECK(call({"sweep", "--amin", "1", "--amax", "2", "--format", "xml"}).code == 2);
}

TEST_CASE("config file") {
  const std::string good = std::string(EAH_BINARY_DIR) + "/cli_good.json";
  const std::string bad = std::string(EAH_BINARY_DIR) + "/cli_bad.json";
  std::ofstream(good) << R"({"terms": 60, "precision": "extended", "oracle_max_depth": 8})";
  std::ofstream(bad) << R"({"terms": 60, "colour": "blue"})";
  CHECK(call({"--config", good, "height", "--a", "3", "--x", "1", "--y", "2"}).code == 0);
  CHECK(call({"--config", good, "oracle", "--a", "3", "--x", "1", "--y", "2", "--depth", "9"}).code == 2);
  CHECK(call({"--config", bad, "height", "--a", "3", "--x", "1", "--y", "2"}).code == 2);
  CHECK(call({"--config", "/nonexistent/x.json", "height", "--a", "3", "--x", "1", "--y", "2"}).code == 2);
}
