#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "omalg/cli.hpp"

using omalg::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "cli_test_tmp_" + std::to_string(counter++) + ".txt";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("free series table") {
  Result r = invoke({"series", "free", "--sig", "binary", "--trunc", "6"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == "degree,numerator,denominator\n1,1,1\n2,1,1\n3,2,1\n4,5,1\n5,14,1\n6,42,1\n");

  Result j = invoke({"series", "free", "--sig", "omega", "--trunc", "5", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out == "{\"coeffs\":[\"0\",\"1\",\"1\",\"3\",\"11\",\"45\"],\"trunc\":5}\n");
}

TEST_CASE("exit codes") {
  Result usage = invoke({"series", "free", "--sig", "binary"});
  CHECK(usage.code == 1);
  CHECK(usage.err.rfind("error:", 0) == 0);

  Result unknown_flag = invoke({"series", "free", "--sig", "binary", "--trunc", "5", "--bogus"});
  CHECK(unknown_flag.code == 1);

  Result unknown_sub = invoke({"series", "wat"});
  CHECK(unknown_sub.code == 1);

  Result domain = invoke({"series", "free", "--sig", "custom:1=1", "--trunc", "3"});
  CHECK(domain.code == 2);
  CHECK(domain.err == "error: arity must be >= 2\n");
  CHECK(domain.out.empty());

  Result nofile = invoke({"gb", "compute", "--ord", "lex", "--in", "no_such_file.txt"});
  CHECK(nofile.code == 2);
  CHECK(nofile.err.rfind("error:", 0) == 0);
}

TEST_CASE("exponent and lagrange") {
  Result e = invoke({"series", "exponent", "--sig", "binary", "--trunc", "150", "--method", "ratio"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("estimate,spread\n3.9", 0) == 0);

  Result l = invoke({"series", "lagrange", "--f", "1,-1", "--trunc", "5"});
  CHECK(l.code == 0);
  CHECK(l.out == "degree,numerator,denominator\n1,1,1\n2,1,1\n3,2,1\n4,5,1\n5,14,1\n");
}

TEST_CASE("groebner subcommands") {
  TempFile gens(
      "# one-generator relations\n"
      "1*(nu 2 1 x1 (nu 2 1 x1 x1)) + -1*(nu 2 1 (nu 2 1 x1 x1) x1)\n"
      "1*(nu 2 1 (nu 2 1 x1 (nu 2 1 x1 x1)) x1) + -1*(nu 2 1 (nu 2 1 (nu 2 1 x1 x1) x1) x1)\n");
  Result c = invoke({"gb", "compute", "--ord", "rlex", "--in", gens.path});
  CHECK(c.code == 0);
  CHECK(c.out == "1*(nu 2 1 x1 (nu 2 1 x1 x1)) + -1*(nu 2 1 (nu 2 1 x1 x1) x1)\n");

  Result h = invoke({"gb", "hilbert", "--in", gens.path, "--trunc", "5", "--ord", "rlex"});
  CHECK(h.code == 0);
  CHECK(h.out == "degree,numerator,denominator\n1,1,1\n2,1,1\n3,1,1\n4,3,1\n5,8,1\n");

  TempFile member("1*(nu 2 1 x1 (nu 2 1 (nu 2 1 x1 x1) x1)) + -1*(nu 2 1 x1 (nu 2 1 x1 (nu 2 1 x1 x1)))\n");
  Result m = invoke({"gb", "member", "--in", gens.path, "--poly", member.path, "--ord", "rlex"});
  CHECK(m.code == 0);
  CHECK(m.out == "member\ntrue\n");

  TempFile nonmember("1*(nu 2 1 x1 x1)\n");
  Result n = invoke({"gb", "member", "--in", gens.path, "--poly", nonmember.path});
  CHECK(n.out == "member\nfalse\n");
}

TEST_CASE("subalgebra subcommands") {
  TempFile gens("1*(nu 2 1 x1 x1)\n1*(nu 2 1 (nu 2 1 x1 x1) (nu 2 1 x1 x1))\n");
  Result r = invoke({"sub", "nielsen", "--in", gens.path});
  CHECK(r.code == 0);
  CHECK(r.out == "1*(nu 2 1 x1 x1)\n");

  TempFile hilbert("degree,numerator,denominator\n1,1,1\n2,1,1\n3,2,1\n4,5,1\n5,14,1\n6,42,1\n7,132,1\n");
  Result g = invoke({"sub", "gens-series", "--hilbert", hilbert.path, "--sig", "binary"});
  CHECK(g.code == 0);
  CHECK(g.out == "degree,numerator,denominator\n1,1,1\n2,0,1\n3,0,1\n4,0,1\n5,0,1\n6,0,1\n7,0,1\n");
}

TEST_CASE("invariant subcommands") {
  TempFile action(R"({"d": 1, "generators": [[["-1"]]]})");
  Result g = invoke({"inv", "group", "--action", action.path, "--sig", "binary", "--trunc", "8"});
  CHECK(g.code == 0);
  CHECK(g.out ==
        "degree,numerator,denominator\n1,0,1\n2,1,1\n3,0,1\n4,5,1\n5,0,1\n6,42,1\n7,0,1\n8,429,1\n");

  Result w = invoke({"inv", "weitz", "--sig", "binary", "--cells", "2", "--trunc", "7", "--free-gens"});
  CHECK(w.out ==
        "degree,numerator,denominator\n1,1,1\n2,1,1\n3,2,1\n4,14,1\n5,56,1\n6,404,1\n7,2020,1\n");

  Result s = invoke({"inv", "sl2", "--sig", "binary", "--weights", "1:0", "--trunc", "6"});
  CHECK(s.out == "degree,numerator,denominator\n1,0,1\n2,1,1\n3,0,1\n4,10,1\n5,0,1\n6,210,1\n");

  Result o = invoke({"inv", "odd-ratio", "--k", "2"});
  CHECK(o.out == "k,numerator,denominator\n2,4,5\n");
  Result oj = invoke({"inv", "odd-ratio", "--k", "2", "--format", "json"});
  CHECK(oj.out == "{\"k\":2,\"value\":\"4/5\"}\n");
}

TEST_CASE("determinism") {
  std::vector<std::string> args{"inv", "weitz", "--sig", "omega", "--cells", "3", "--trunc", "7"};
  Result a = invoke(args);
  Result b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
