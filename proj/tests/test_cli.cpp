#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dyckm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dyckm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }
}  // namespace

TEST_CASE("dims") {
  const auto r = run({"dims", "--m", "2", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "  3            12            12            12  MATCH"));
  const auto c = run({"dims", "--m", "1", "--max-n", "4"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "  4            14            14            14  MATCH"));
  CHECK_FALSE(contains(c.out, "MISMATCH"));
  CHECK(run({"dims", "--m", "0"}).code == 2);
  CHECK(run({"dims", "--m", "x"}).code == 2);
}

TEST_CASE("mul") {
  const auto p = run({"mul", "--model", "paths", "--m", "2", "--i", "0", "1,3", "0,2,4,2"});
  CHECK(p.code == 0);
  CHECK(p.out == "+1*[1,0,0,2,7,2] +1*[1,1,0,2,6,2] +1*[1,2,0,2,5,2] +1*[1,3,0,2,4,2]\n");
  const auto t = run({"mul", "--model", "trees", "--m", "1", "--i", "1", "(1 | |)", "|"});
  CHECK(t.code == 0);
  CHECK(t.out == "+1*[(1 | (0 | |))] +1*[(1 | (1 | |))]\n");
  const auto o = run({"mul", "--model", "ordm", "--m", "2", "--i", "1", "--family", "binary-trees", "(|,|);(|,|)",
                      "(|,|);(|,|)"});
  CHECK(o.code == 0);
  CHECK(o.out == "+1*[((|,|),|);(|,(|,|))]\n");
  CHECK(run({"mul", "--model", "paths", "--m", "2", "1,2", "0,4"}).code == 2);
  CHECK(run({"mul", "--model", "paths", "--m", "2", "--i", "3", "1,3", "1,3"}).code == 2);
  CHECK(run({"mul", "--model", "cubes", "1", "1"}).code == 2);
  CHECK(run({"mul", "--model", "ordm", "--m", "2", "(|,|)", "(|,|)"}).code == 2);
  // Byte-stable output.
  CHECK(run({"mul", "--model", "paths", "--m", "2", "1,3", "0,2,4,2"}).out == p.out);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "--suite", "axioms", "--m", "2", "--max-degree", "5"}).code == 0);
  const auto n = run({"verify", "--suite", "negative", "--m", "1"});
  CHECK(n.code == 0);
  CHECK(contains(n.out, "((x *1 y) *1 z) = (x *1 (y *1 z))"));
  CHECK(run({"verify", "--suite", "tamari-interval", "--m", "2", "--max-size", "6"}).code == 0);
  CHECK(run({"verify", "--suite", "series", "--m", "4", "--order", "10"}).code == 0);
  CHECK(run({"verify", "--suite", "ordm", "--m", "2", "--max-degree", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "simplicial", "--m", "2", "--max-degree", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "freeness", "--m", "2", "--max-degree", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("poset suite reports each condition") {
  const auto all = run({"verify", "--suite", "poset", "--family", "binary-trees", "--max-degree", "4"});
  CHECK(all.code == 1);
  CHECK(contains(all.out, "FAIL binary-trees (1) order preservation"));
  for (const char* c : {"PASS binary-trees (2) interval splitting", "PASS binary-trees (3) associativity",
                        "PASS binary-trees (4) factor comparison", "PASS binary-trees (5) non-comparability"})
    CHECK(contains(all.out, c));
  const auto some = run({"verify", "--suite", "poset", "--family", "binary-trees", "--max-degree", "4",
                         "--conditions", "2,3,4,5"});
  CHECK(some.code == 0);
  CHECK(contains(some.out, "(not counted) binary-trees (1) order preservation"));
  CHECK(contains(all.out, "monotone perp in argument 2: no (9/11 violations)"));
  CHECK(run({"verify", "--suite", "poset", "--family", "nothing"}).code == 2);
}

TEST_CASE("family files") {
  const auto f = run({"family", "--family", "permutations", "--max-degree", "3"});
  CHECK(f.code == 0);
  CHECK(contains(f.out, "degree 3"));
  const std::string path = "dyckm_cli_family_test.txt";
  {
    std::ofstream out(path);
    out << f.out;
  }
  const auto v = run({"verify", "--suite", "poset", "--file", path, "--max-degree", "3", "--conditions", "2,3,4,5"});
  CHECK(v.code == 0);
  {
    std::ofstream out(path);
    out << "degree 1\nelement a\nfrob\n";
  }
  CHECK(run({"verify", "--suite", "poset", "--file", path}).code == 2);
  std::remove(path.c_str());
  CHECK(run({"verify", "--suite", "poset", "--file", "no/such/file"}).code == 2);
}

TEST_CASE("hasse") {
  const auto two = run({"hasse", "--m", "2", "--n", "2", "--format", "dot"});
  CHECK(two.code == 0);
  CHECK(contains(two.out, "\"2,2\" -> \"1,3\""));
  CHECK(contains(two.out, "\"1,3\" -> \"0,4\""));
  const auto one = run({"hasse", "--m", "2", "--n", "1"});
  CHECK(one.code == 0);
  CHECK_FALSE(contains(one.out, "->"));
  const auto five = run({"hasse", "--m", "1", "--n", "3"});
  std::size_t nodes = 0;
  std::istringstream lines(five.out);
  for (std::string line; std::getline(lines, line);)
    if (contains(line, "\"") && !contains(line, "->")) ++nodes;
  CHECK(nodes == 5);
  CHECK(run({"hasse", "--m", "3", "--n", "7", "--cap", "100"}).code == 2);
  CHECK(run({"hasse", "--format", "svg"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
}
