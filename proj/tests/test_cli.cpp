#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "enclave/cli.hpp"
#include "enclave/families.hpp"
#include "enclave/io.hpp"

using namespace enclave;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct EnvGuard {
  std::string name;
  EnvGuard(std::string n, const std::string& value) : name(std::move(n)) {
    setenv(name.c_str(), value.c_str(), 1);
  }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"game"}).code == cli::kUsage);
  CHECK(run({"game", "--g6", "Bg", "--family", "path 3"}).code == cli::kUsage);
  CHECK(run({"game", "--g6", "Bg", "--starter", "sideways"}).code == cli::kUsage);
  CHECK(run({"game", "--g6", "B\x01"}).code == cli::kUsage);
  CHECK(run({"invariants", "--g6", "Bg", "--cap-n", "65"}).code == cli::kUsage);
  CHECK(run({"sweep", "--exhaustive", "3", "--checks", "no-such-check"}).code == cli::kUsage);
  CHECK(run({"family", "nonsense", "3"}).code == cli::kUsage);
  CHECK(run({"family", "cycle", "2"}).code == cli::kUsage);
  CHECK_FALSE(run({"bogus"}).err.empty());
}

TEST_CASE("caps exit 3") {
  CHECK(run({"sweep", "--exhaustive", "9"}).code == cli::kCapExceeded);
  CHECK(run({"game", "--family", "path 30"}).code == cli::kCapExceeded);
  CHECK(run({"invariants", "--family", "path 8", "--cap-n", "7"}).code == cli::kCapExceeded);
  CHECK(run({"invariants", "--g6", "~?AA"}).code == cli::kCapExceeded);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "sweep"));
}

TEST_CASE("game on P5") {
  const Run r = run({"game", "--g6", write_graph6(path(5))});
  REQUIRE(r.code == cli::kOk);
  CHECK(contains(r.out, "value    3\n"));
  CHECK(contains(r.out, "Maximizer starts"));
  CHECK(contains(r.out, "  1. Maximizer "));

  const Run rec = run({"game", "--family", "path 5", "--starter", "min", "--out", "records"});
  REQUIRE(rec.code == cli::kOk);
  CHECK(contains(rec.out, "\"value\":3"));
  CHECK(contains(rec.out, "\"starter\":\"Minimizer\""));
}

TEST_CASE("domination game from the command line") {
  const Run r = run({"game", "--family", "double-star 3", "--kind", "domination", "--starter", "staller"});
  REQUIRE(r.code == cli::kOk);
  CHECK(contains(r.out, "value    4\n"));
  CHECK(contains(r.out, "Staller starts"));
}

TEST_CASE("invariants from an edge list on stdin") {
  const Run r = run({"invariants", "--input", "-", "--format", "edges"}, "n 3\n0 1\n1 2\n");
  REQUIRE(r.code == cli::kOk);
  CHECK(contains(r.out, "gamma           1\n"));
  CHECK(contains(r.out, "Psi             2\n"));
  const Run bad = run({"invariants", "--input", "-", "--format", "edges"}, "n 3\n0 x\n");
  CHECK(bad.code == cli::kUsage);
  CHECK(contains(bad.err, "line 2"));
}

TEST_CASE("family output") {
  const Run ring = run({"family", "connector-ring", "2", "4"});
  REQUIRE(ring.code == cli::kOk);
  const Graph g = parse_graph6(ring.out);
  CHECK(g.order() == 10);
  CHECK(degree_profile(g).k == 4);
  CHECK(run({"family", "connector_ring", "2", "4"}).out == ring.out);

  const Run edges = run({"family", "path", "3", "--format", "edges"});
  CHECK(edges.out == "n 3\n0 1\n1 2\n");

  const Run trees = run({"family", "labeled-trees", "4"});
  CHECK(std::count(trees.out.begin(), trees.out.end(), '\n') == 16);
}

TEST_CASE("sweep runs clean and is deterministic") {
  const Run a = run({"sweep", "--exhaustive", "4", "--connected", "--threads", "1"});
  const Run b = run({"sweep", "--exhaustive", "4", "--connected", "--threads", "3"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "graphs checked: 43\n"));
  CHECK(contains(a.out, "violations:     0\n"));

  const Run r1 = run({"sweep", "--random", "30", "--random-max", "8", "--seed", "5", "--out", "records"});
  const Run r2 = run({"sweep", "--random", "30", "--random-max", "8", "--seed", "5", "--out", "records"});
  REQUIRE(r1.code == cli::kOk);
  CHECK(r1.out == r2.out);
  CHECK(contains(r1.out, "\"graphs_checked\":30"));
}

TEST_CASE("environment variables fill flags") {
  {
    EnvGuard out("ENCLAVE_OUT", "records");
    const Run r = run({"game", "--g6", "Bg"});
    CHECK(r.out.rfind("{", 0) == 0);
  }
  {
    EnvGuard starter("ENCLAVE_STARTER", "min");
    const Run r = run({"game", "--g6", "Bg"});
    CHECK(contains(r.out, "Minimizer starts"));
    CHECK(contains(r.out, "value    1\n"));
    // the command line wins over the environment
    CHECK(contains(run({"game", "--g6", "Bg", "--starter", "max"}).out, "Maximizer starts"));
  }
  {
    EnvGuard cap("ENCLAVE_CAP_N", "4");
    CHECK(run({"invariants", "--family", "path 5"}).code == cli::kCapExceeded);
  }
  {
    EnvGuard checks("ENCLAVE_CHECKS", "regular-half");
    const Run r = run({"sweep", "--exhaustive", "3"});
    CHECK(contains(r.out, "regular-half"));
    CHECK_FALSE(contains(r.out, "complement-identity"));
  }
}

TEST_CASE("playing on the claw") {
  // human is Minimizer and takes the hub: the game ends at once
  const Run hub = run({"play", "--family", "star 3", "--human", "min", "--starter", "min"}, "0\n");
  REQUIRE(hub.code == cli::kOk);
  CHECK(contains(hub.out, "you play 0\n"));
  CHECK(contains(hub.out, "game over: 1 vertices played {0}"));
  CHECK(contains(hub.out, "final set is maximal enclaveless"));

  // illegal input re-prompts
  const Run retry =
      run({"play", "--family", "star 3", "--human", "min", "--starter", "min"}, "7\nbanana\n0\n");
  REQUIRE(retry.code == cli::kOk);
  CHECK(contains(retry.out, "'7' is not a legal move"));
  CHECK(contains(retry.out, "'banana' is not a legal move"));
  CHECK(contains(retry.out, "game over: 1 vertices played {0}"));

  // human is Maximizer, the engine answers
  const Run leaf = run({"play", "--family", "star 3", "--human", "max"}, "1\n2\n3\n0\n");
  REQUIRE(leaf.code == cli::kOk);
  CHECK(contains(leaf.out, "engine (Minimizer) plays"));
  CHECK(contains(leaf.out, "game over"));

  CHECK(run({"play", "--family", "star 3", "--human", "min", "--starter", "min"}, "quit\n").code ==
        cli::kOk);
  CHECK(run({"play", "--family", "star 3", "--human", "min", "--starter", "min"}, "").code ==
        cli::kUsage);
}

TEST_CASE("simulation from the command line") {
  const Run r = run({"simulate", "--family", "connector-ring 2 4", "--strategy", "connector", "--side", "min"});
  REQUIRE(r.code == cli::kOk);
  CHECK(contains(r.out, "value"));
  CHECK(contains(r.out, "8"));
}

TEST_CASE("reproduce and checks") {
  const Run table = run({"reproduce"});
  REQUIRE(table.code == cli::kOk);
  CHECK(contains(table.out, " 0 mismatches"));
  const Run list = run({"checks"});
  CHECK(contains(list.out, "claw-free-min-start-half"));
}

TEST_CASE("repeated runs are byte identical") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"game", "--family", "cycle 7"},
        std::vector<std::string>{"invariants", "--family", "corona-path 4", "--out", "records"},
        std::vector<std::string>{"family", "double-star", "3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
