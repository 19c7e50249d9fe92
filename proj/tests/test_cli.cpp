#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "evord/cli.hpp"
#include "evord/spacetime.hpp"
#include "evord/text_io.hpp"
#include "sign_obstruction_reps.hpp"

using namespace evord;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

const char* kQ0 = "{(1,2,3,4,5),(2,3,4,5,1),(3,4,5,1,2),(4,5,1,2,3),(5,1,2,3,4)}";

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "invariant-sets", "-n", "5", "-k", "5"}).out == "2751\n");
  CHECK(run({"count", "invariant-sets", "-n", "6", "-k", "5"}).out == "597861\n");
  CHECK(run({"count", "classes", "-n", "5"}).out == "1588155\n");
  CHECK(run({"count", "classes", "-n", "6"}).out == "2208534929\n");
  CHECK(run({"count", "centralizer", "-n", "6"}).out == "48\n");
  CHECK(run({"count", "five-cycles", "-n", "6"}).out == "five_cycles 144\nsubgroups 36\n");
  const auto d = run({"count", "diophantine", "--n-max", "100", "--m-max", "14"}).out;
  CHECK(d.find("(3,3)\n") != std::string::npos);
  CHECK(d.find("(6,5)\n") != std::string::npos);
  CHECK(d.find("(91,13)\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"--format", "structured", "count", "classes", "-n", "5"}).out);
  CHECK(j.at("value") == "1588155");
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "{(1,2,3),(3,1,2)}"}).status == kRealizable);
  const auto q0 = run({"check", kQ0});
  CHECK(q0.status == kUnrealizableCertified);
  CHECK(q0.out.rfind("UNREALIZABLE-CERTIFIED\n", 0) == 0);
  const auto sign = run({"check", "--signs", kSignObstructionReps[3]});
  CHECK(sign.status == kUnrealizableCertified);
  CHECK(sign.out.find("patterns not eliminated: 0") != std::string::npos);
  const auto many = run({"check", "{(1,2,3),(2,1,3),(1,3,2),(3,2,1),(2,3,1),(3,1,2)}"});
  CHECK(many.status == kInconclusive);
  const auto s = nlohmann::json::parse(run({"--format", "structured", "check", kQ0}).out);
  CHECK(s.at("verdict") == "UNREALIZABLE-CERTIFIED");
  CHECK(run({"check", "{(1,2,3),(1,2)}"}).status == 2);
}

TEST_CASE("realize then verify through a file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto set_file = dir / "evord_cli_set.txt";
  {
    std::ofstream f(set_file);
    f << "(1,2,3,4,5);(2,1,3,4,5);(1,3,2,4,5);(5,4,3,2,1);(2,3,1,5,4)\n";
  }
  const auto r = run({"--format", "structured", "realize", "@" + set_file.string()});
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("verdict") == "REALIZED");
  const auto witness_file = dir / "evord_cli_witness.json";
  {
    std::ofstream f(witness_file);
    f << doc.at("witness").dump(2);
  }
  const auto v = run({"verify", witness_file.string()});
  CHECK(v.status == 0);
  CHECK(v.out == "OK\n");

  // Tamper with the claim: the first member no longer matches.
  auto bad = doc.at("witness");
  auto w = witness_from_json(bad.dump());
  auto members = w.claim.members();
  members[0] = Permutation{5, 4, 3, 1, 2};
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) == members.end()) {
    w.claim = PermSet(members);
    {
      std::ofstream f(witness_file);
      f << witness_to_json(w);
    }
    const auto f = run({"verify", witness_file.string()});
    CHECK(f.status == 1);
    CHECK(f.out.rfind("FAILED", 0) == 0);
  }
  std::filesystem::remove(set_file);
  std::filesystem::remove(witness_file);
}

TEST_CASE("certify-q0") {
  const auto r = run({"certify-q0"});
  CHECK(r.status == 0);
  CHECK(r.out.find("D1: 125 terms, all-negative") != std::string::npos);
  CHECK(r.out.find("D4: 125 terms, all-positive") != std::string::npos);
  CHECK(r.out.find("beta*D4: 125 terms, all-negative") != std::string::npos);
  const auto d = run({"certify-q0", "--dump-polynomials"});
  CHECK(d.out.size() > r.out.size());
  const auto j = nlohmann::json::parse(run({"--format", "structured", "certify-q0"}).out);
  CHECK(j.at("conclusion") == true);
}

TEST_CASE("search and classes") {
  const auto s = run({"search", "s5", "--shard", "0..500", "--jobs", "1"});
  CHECK(s.status == 0);
  CHECK(s.out.find("#kind=s5\n#total_enumerated=500\n") != std::string::npos);
  CHECK(run({"search", "s5", "--shard", "5..1"}).status == 2);
  CHECK(run({"search", "s7"}).status != 0);

  const auto dir = std::filesystem::temp_directory_path();
  const auto reps = dir / "evord_cli_reps.txt";
  {
    std::ofstream f(reps);
    for (const char* x : kSignObstructionReps) f << x << "\n";
  }
  const auto c = run({"classes", "--expand", reps.string()});
  CHECK(c.out.find("classes 62\n") != std::string::npos);
  CHECK(c.out.find("sets 294\n") != std::string::npos);
  std::filesystem::remove(reps);
}

TEST_CASE("argument errors") {
  CHECK(run({}).status != 0);
  CHECK(run({"frobnicate"}).status != 0);
  CHECK(run({"check", "--bogus", kQ0}).status != 0);
  CHECK(run({"--format", "yaml", "certify-q0"}).status != 0);
  CHECK(run({"verify", "/nonexistent/witness.json"}).status == 1);
  const auto h = run({"--help"});
  CHECK(h.status == 0);
  CHECK(h.out.find("certify-q0") != std::string::npos);
}
