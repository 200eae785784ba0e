#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "polyharm/catalog.hpp"
#include "polyharm/cli.hpp"
#include "polyharm/phm_io.hpp"

namespace fs = std::filesystem;
using namespace phm;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs every test from a scratch directory holding f1, f2, h2, identity and g.
struct Workdir {
  fs::path old, dir;
  Workdir() : old(fs::current_path()) {
    dir = fs::temp_directory_path() / ("phm_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::current_path(dir);
    write_map_file("f1.phm", example_f1());
    write_map_file("f2.phm", example_f2());
    write_map_file("h2.phm", half_plane_map(2));
    write_map_file("id.phm", PolyharmonicMap::identity());
    std::ofstream("g.phm") << "p 1\na 1 1 1 0\na 2 1 1/5 0\nb 2 1 1/5 0\n";
    std::ofstream("bad.phm") << "p 1\na 1 1 1 0\na 2 1 1/x 0\n";
  }
  ~Workdir() {
    fs::current_path(old);
    fs::remove_all(dir);
  }
};

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("check") {
  Workdir w;
  auto r = run({"check", "--class", "hs-lambda", "--lambda", "2/3", "f1.phm"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "row1_margin=0"));
  CHECK(has_line(r.out, "exact=true"));
  CHECK(run({"check", "--class", "hc", "f1.phm"}).code == 1);
  CHECK(run({"check", "--class", "hs", "missing.phm"}).code == 2);
  CHECK(run({"check", "--class", "hs", "bad.phm"}).code == 2);
  CHECK(run({"check", "--class", "hs-lambda", "f1.phm"}).code == 2);
  CHECK(run({"check", "--class", "hs-lambda", "--lambda", "3/2", "f1.phm"}).code == 2);
  CHECK(run({"check", "--class", "nope", "f1.phm"}).code == 2);
  r = run({"check", "--class", "hs-lambda", "--lambda", "0.5", "f2.phm"});
  CHECK(r.code == 1);
  r = run({"check", "--class", "hs-lambda", "--lambda", "0.01", "f2.phm"});
  CHECK(has_line(r.out, "exact=false"));
  CHECK(run({"check", "--class", "hs-lambda", "--lambda", "2/3", "--normalized", "f1.phm"}).code == 0);
}

TEST_CASE("convolve and iconvolve") {
  Workdir w;
  CHECK(run({"convolve", "f1.phm", "h2.phm", "-o", "out.phm"}).code == 0);
  const auto c = read_map_file("out.phm");
  CHECK(c.a(2, 1) == Coefficient(Rational(3) / 20, 0));
  CHECK(c.b(2, 1) == Coefficient(Rational(-1) / 10, 0));
  CHECK(run({"convolve", "f1.phm", "id.phm"}).out == "p 1\na 1 1 1 0\n");
  CHECK(run({"iconvolve", "f1.phm", "h2.phm"}).out == "p 1\na 1 1 1 0\na 2 1 3/40 0\nb 2 1 -1/20 0\n");
  CHECK(run({"convolve", "f1.phm"}).code == 2);
}

TEST_CASE("neighborhood") {
  Workdir w;
  auto r = run({"neighborhood", "f1.phm", "f1.phm", "--lambda", "2/3"});
  CHECK(r.code == 0);
  CHECK(r.out == "distance=0\ndelta_bound=2/5\ninside=true\nexact=true\n");
  r = run({"neighborhood", "f1.phm", "g.phm", "--lambda", "2/3"});
  CHECK(has_line(r.out, "distance=1/5"));
  r = run({"neighborhood", "f2.phm", "g.phm", "--lambda", "2/3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotMember") != std::string::npos);
}

TEST_CASE("verify") {
  Workdir w;
  auto r = run({"verify", "f1.phm", "--suite", "starlike"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "injectivity_evidence=sampled") == false);
  CHECK(run({"verify", "f1.phm", "--suite", "convex", "--r", "2/3"}).code == 0);
  r = run({"verify", "f2.phm", "--suite", "convex", "--r", "0.51"});
  CHECK((r.code == 0 || r.code == 1));
  CHECK(r.out.find("min_convexity_indicator=") != std::string::npos);
  r = run({"verify", "f1.phm", "--suite", "injective", "--grid", "16x64"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "injectivity_evidence=sampled"));
  r = run({"verify", "f1.phm", "--suite", "distortion", "--lambda", "2/3", "--grid", "8x32"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "distortion_violations=0"));
  CHECK(run({"verify", "f1.phm", "--suite", "distortion"}).code == 2);
  CHECK(run({"verify", "f2.phm", "--suite", "distortion", "--lambda", "2/3"}).code == 1);
  CHECK(run({"verify", "f1.phm", "--grid", "300x300"}).code == 2);
  CHECK(run({"verify", "f1.phm", "--grid", "8by8"}).code == 2);
  CHECK(run({"verify", "f1.phm", "--r", "1"}).code == 2);
}

TEST_CASE("render") {
  Workdir w;
  CHECK(run({"render", "f1.phm", "-o", "a.svg", "--csv", "a.csv"}).code == 0);
  CHECK(run({"render", "f1.phm", "-o", "b.svg"}).code == 0);
  CHECK(slurp("a.svg") == slurp("b.svg"));
  CHECK(slurp("a.csv").rfind("curve_id,theta_or_r,re,im\n", 0) == 0);
  CHECK(run({"render", "f1.phm", "-o", "c.svg", "--samples", "10"}).code == 2);
  CHECK(run({"render", "f1.phm", "-o", "no_such_dir/c.svg"}).code == 2);
}

TEST_CASE("extremal and catalog") {
  Workdir w;
  CHECK(run({"extremal", "--n", "2", "--k", "1", "--lambda", "2/3", "--kind", "a"}).out ==
        "p 1\na 1 1 1 0\na 2 1 3/10 0\n");
  CHECK(run({"extremal", "--n", "2", "--k", "1", "--lambda", "1", "--kind", "a"}).out ==
        "p 1\na 1 1 1 0\na 2 1 1/4 0\n");
  CHECK(run({"extremal", "--n", "2", "--k", "2", "--lambda", "0", "--kind", "b", "-p", "2"}).out ==
        "p 2\na 1 1 1 0\nb 2 2 1/4 0\n");
  CHECK(run({"extremal", "--n", "1", "--k", "1", "--lambda", "0", "--kind", "a"}).code == 2);
  CHECK(run({"catalog", "f1"}).out == serialize_map(example_f1()));
  CHECK(run({"catalog", "half-plane", "--degree", "2"}).out == "p 1\na 1 1 1 0\na 2 1 3/2 0\nb 2 1 -1/2 0\n");
  CHECK(run({"catalog", "nothing"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("golden transcript") {
  Workdir w;
  const std::vector<std::vector<std::string>> commands{
      {"check", "--class", "hs-lambda", "--lambda", "2/3", "f1.phm"},
      {"check", "--class", "hs-lambda", "--lambda", "1/100", "f2.phm"},
      {"check", "--class", "hc", "f1.phm"},
      {"check", "--class", "hs", "--normalized", "h2.phm"},
      {"convolve", "f1.phm", "h2.phm"},
      {"iconvolve", "f1.phm", "h2.phm"},
      {"neighborhood", "f1.phm", "g.phm", "--lambda", "2/3"},
      {"verify", "id.phm", "--grid", "4x16"},
      {"verify", "f1.phm", "--suite", "convex", "--r", "2/3", "--grid", "4x16"},
      {"verify", "f2.phm", "--suite", "all", "--lambda", "1/100", "--grid", "4x16"},
      {"extremal", "--n", "3", "--k", "1", "--lambda", "1/2", "--kind", "b"},
      {"catalog", "half-plane", "--degree", "4"},
      {"search", "--trials", "3", "--seed", "7", "--grid", "4x16"},
      {"check", "--class", "hs", "missing.phm"},
  };
  std::string transcript;
  for (const auto& args : commands) {
    const auto r = run(args);
    transcript += "$ phm";
    for (const auto& a : args) transcript += " " + a;
    transcript += "\n" + r.out + "[exit " + std::to_string(r.code) + "]\n";
  }
  const fs::path golden = fs::path(GOLDEN_DIR) / "cli_transcript.txt";
  if (std::getenv("PHM_UPDATE_GOLDEN")) std::ofstream(golden, std::ios::binary) << transcript;
  CHECK(transcript == slurp(golden));
}
