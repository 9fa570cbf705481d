#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "goldman/cli.hpp"

using goldman::run_cli;

namespace {

struct TempSurface {
  std::filesystem::path path;
  explicit TempSurface(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
  }
  ~TempSurface() { std::error_code ec; std::filesystem::remove(path, ec); }
  std::string str() const { return path.string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

const char* kTorus = "# one-holed torus\nrank 2\norder a b A B\n";
const char* kPants = "rank 2\norder a A b B\n";

}  // namespace

TEST_CASE("cli info") {
  const TempSurface torus("goldman_cli_torus.surface", kTorus);
  const Run r = cli({"info", torus.str()});
  CHECK(r.code == 0);
  CHECK(r.out == "rank 2\nchi -1\ngenus 1\nboundary 1\nC0: aBAb\n");

  const TempSurface dup("goldman_cli_dup.surface", "rank 2\norder a b A a\n");
  CHECK(cli({"info", dup.str()}).code == 2);
  CHECK(cli({"info", "/nonexistent/file.surface"}).code == 2);
}

TEST_CASE("cli bracket") {
  const TempSurface torus("goldman_cli_torus2.surface", kTorus);
  const TempSurface pants("goldman_cli_pants.surface", kPants);

  CHECK(cli({"bracket", torus.str(), "a", "b"}).out == "+1*(ab)\n");
  CHECK(cli({"bracket", torus.str(), "abAB", "ab"}).out == "0\n");
  CHECK(cli({"bracket", pants.str(), "a", "b"}).out == "0\n");
  CHECK(cli({"bracket", torus.str(), "a", "x"}).code == 2);
  CHECK(cli({"bracket", torus.str(), "a"}).code == 1);  // usage
}

TEST_CASE("cli peripheral") {
  const TempSurface torus("goldman_cli_torus3.surface", kTorus);
  const TempSurface pants("goldman_cli_pants2.surface", kPants);

  const Run yes = cli({"peripheral", torus.str(), "aBAb"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "peripheral component 0 exponent 1\n");

  const Run no = cli({"peripheral", torus.str(), "a"});
  CHECK(no.code == 5);
  CHECK(no.out == "not peripheral\n");

  const Run pow = cli({"peripheral", pants.str(), "BABA"});
  CHECK(pow.code == 0);
  CHECK(pow.out == "peripheral component 0 exponent -2\n");
}

TEST_CASE("cli mapcheck") {
  const TempSurface torus("goldman_cli_torus4.surface", kTorus);
  const TempSurface pants("goldman_cli_pants3.surface", kPants);

  const Run twist = cli({"mapcheck", torus.str(), torus.str(), "a->a,b->ba"});
  CHECK(twist.code == 0);
  CHECK(twist.out ==
        "geometric: yes\norientation: +1\nreason: ok\nC0 -> C'0 (exponent 1)\n");

  const Run exotic = cli({"mapcheck", pants.str(), torus.str(), "a->a,b->b"});
  CHECK(exotic.code == 4);
  CHECK(exotic.out.find("geometric: no") == 0);
  CHECK(exotic.out.find("reason: boundary-class-not-peripheral(0)") != std::string::npos);
  CHECK(exotic.out.find("witness: (a, b)") != std::string::npos);

  const Run notiso = cli({"mapcheck", torus.str(), torus.str(), "a->a,b->a"});
  CHECK(notiso.code == 3);
  CHECK(notiso.out.find("reason: not-isomorphism") != std::string::npos);

  const Run strict = cli({"mapcheck", torus.str(), torus.str(), "a->b,b->a", "--strict"});
  CHECK(strict.code == 4);
  CHECK(strict.out.find("orientation: -1") != std::string::npos);
  CHECK(strict.out.find("strict: not bracket-commuting") != std::string::npos);
}

TEST_CASE("cli witness") {
  const TempSurface torus("goldman_cli_torus5.surface", kTorus);
  const TempSurface pants("goldman_cli_pants4.surface", kPants);

  const Run found = cli({"witness", pants.str(), torus.str(), "a->a,b->b"});
  CHECK(found.code == 0);
  CHECK(found.out == "witness: (a, b)\n");

  const Run absent = cli({"witness", torus.str(), torus.str(), "a->a,b->ba", "--maxlen", "4"});
  CHECK(absent.code == 4);
  CHECK(absent.out == "witness: absent\n");

  CHECK(cli({"witness", torus.str(), torus.str(), "a->a,b->a"}).code == 3);
}

TEST_CASE("cli selftest is deterministic") {
  const Run a = cli({"selftest", "--trials", "20", "--len-max", "3", "--seed", "99"});
  const Run b = cli({"selftest", "--trials", "20", "--len-max", "3", "--seed", "99"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed 99") == 0);
  CHECK(a.out.find("selftest: PASS") != std::string::npos);

  // exhaustive suite parts grow strictly with the length bound
  const Run larger = cli({"selftest", "--trials", "20", "--len-max", "5", "--seed", "99"});
  const auto cases_of = [](const std::string& text, const std::string& suite) {
    const auto at = text.find(suite + ": ");
    REQUIRE(at != std::string::npos);
    return std::stoll(text.substr(at + suite.size() + 2));
  };
  CHECK(cases_of(a.out, "skew-symmetry") < cases_of(larger.out, "skew-symmetry"));
  CHECK(cases_of(a.out, "peripheral-annihilation") < cases_of(larger.out, "peripheral-annihilation"));
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}
