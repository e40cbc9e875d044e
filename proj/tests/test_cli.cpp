#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "stw/canonical.hpp"
#include "stw/io.hpp"
#include "stw/report.hpp"
#include "stw/segments.hpp"
#include "stw/steiner.hpp"

using namespace stw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stw");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("stw_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("gen") {
  Run r = run({"gen", "starlike", "--segments", "3,2,2"});
  CHECK(r.code == cli::kExitConfirmed);
  CHECK(segment_sequence(parse_edge_list(r.out)) == SegmentSequence({3, 2, 2}));
  r = run({"gen", "starlike", "--segments", "1,1,1", "--format", "dot"});
  CHECK(r.out.rfind("graph T {", 0) == 0);
  const std::string out = temp_path("gen.txt");
  r = run({"gen", "balanced", "--n", "8", "--m", "3", "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(segment_sequence(load_edge_list(out)) == SegmentSequence({3, 2, 2}));
  r = run({"gen", "family", "--n", "8", "--m", "5", "--which", "ii"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# closed-form t=6, order-consistent t=5\n", 0) == 0);
  const Tree fam = parse_edge_list(r.out);
  CHECK(fam.order() == 8);
  CHECK(segment_count(fam) == 5);
  CHECK(run({"gen", "family", "--n", "8", "--m", "5", "--which", "v"}).code == cli::kExitUsage);
  CHECK(run({"gen", "family", "--n", "8", "--m", "5", "--which", "iii"}).code == cli::kExitUsage);
  CHECK(run({"gen", "starlike", "--segments", "2,1"}).code == cli::kExitUsage);
  CHECK(run({"gen", "starlike"}).code == cli::kExitUsage);
}

TEST_CASE("sw") {
  const std::string p4 = write_temp("p4.txt", "0 1\n1 2\n2 3\n");
  Run r = run({"sw", "--k", "2", "--in", p4});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  r = run({"sw", "--profile", "--in", p4});
  CHECK(r.out == "1 0\n2 10\n3 10\n4 3\n");
  CHECK(run({"sw", "--in", p4}).code == cli::kExitUsage);
  CHECK(run({"sw", "--k", "5", "--in", p4}).code == cli::kExitUsage);
  CHECK(run({"sw", "--k", "2", "--in", temp_path("missing.txt")}).code == cli::kExitUsage);
  const std::string bad = write_temp("bad.txt", "0 1\n2 3\n");
  r = run({"sw", "--k", "2", "--in", bad});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("InvalidTree") != std::string::npos);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--n", "7", "--count-only"}).out == "11\n");
  CHECK(run({"enumerate", "--n", "6", "--segments", "1,1,1,1,1", "--count-only"}).out == "2\n");
  CHECK(run({"enumerate", "--n", "6", "--num-segments", "3", "--count-only"}).out == "2\n");
  CHECK(run({"enumerate", "--n", "5", "--num-segments", "2", "--count-only"}).out == "0\n");
  Run r = run({"enumerate", "--n", "4"});
  CHECK(r.out == canonical_code(Tree::path(4)).code + "\n" +
                     canonical_code(fixture::star(3)).code + "\n");
  r = run({"enumerate", "--n", "4", "--format", "edgelist"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  CHECK(r.out.find("0 1;") != std::string::npos);
  CHECK(run({"enumerate", "--n", "17"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--n", "6", "--segments", "3,1"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--n", "7"}).out == run({"enumerate", "--n", "7"}).out);
}

TEST_CASE("verify") {
  const std::string report = temp_path("report.json");
  Run r = run({"verify", "theorem1", "--max-n", "8", "--k", "2,3,4", "--report", report});
  CHECK(r.code == cli::kExitConfirmed);
  CHECK(r.out.find("0 violated") != std::string::npos);
  const auto reports = reports_from_json(slurp(report));
  CHECK(!reports.empty());
  CHECK(reports.front().theorem == "theorem1");
  for (const char* th : {"theorem2", "structure", "theorem5min", "theorem5max"}) {
    CHECK(run({"verify", th, "--max-n", "7", "--k", "2,3"}).code == cli::kExitConfirmed);
  }
  r = run({"verify", "lemma31", "--samples", "50", "--seed", "42", "--k", "2,3,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lemma31: 1 instances, 1 confirmed") != std::string::npos);
  CHECK(run({"verify", "theorem1", "--k", "2"}).code == cli::kExitUsage);
  CHECK(run({"verify", "theorem1", "--max-n", "13"}).code == cli::kExitUsage);
  CHECK(run({"verify", "theorem9", "--max-n", "5"}).code == cli::kExitUsage);
}

TEST_CASE("optimize") {
  const std::string fig = write_temp("fig.txt", to_edge_list(fixture::quasi_cat15()));
  Run r = run({"optimize", "--in", fig, "--k", "2", "--direction", "min", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# step 1: ") != std::string::npos);
  const Tree end = parse_edge_list(r.out);
  CHECK(is_starlike(end));
  CHECK(r.out.find("# final SW_2 = " + sw_k(end, 2).to_string()) != std::string::npos);
  r = run({"optimize", "--in", fig, "--k", "3", "--direction", "max"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# step") == std::string::npos);
  CHECK(sw_k(parse_edge_list(r.out), 3) >= sw_k(fixture::quasi_cat15(), 3));
  CHECK(run({"optimize", "--in", fig, "--k", "3", "--direction", "up"}).code == cli::kExitUsage);
}

TEST_CASE("usage") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
  CHECK(run({"verify", "--help"}).code == 0);
}
