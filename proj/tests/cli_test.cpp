#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "fipkit/text_format.hpp"
#include "support/random_modules.hpp"

namespace fipkit {
namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(FIPKIT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("fipkit_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (dir_ / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

TEST(CliPresent, TwoParameterExample) {
  const Result r = run({"present", data("two_parameter.mod")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data("presentation.mat")));
}

TEST(CliPresent, EmptyModule) {
  const Result r = run({"present", data("zero.mod")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "field Q\nvars 3\nrows 0\ncols 0\n");
}

TEST(CliPresent, ParseAndValidationFailures) {
  const Result bad = run({"present", data("bad_component.mod")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 4"), std::string::npos) << bad.err;
  const Result noncomm = run({"present", data("noncommuting.mod")});
  EXPECT_EQ(noncomm.code, 2);
  EXPECT_NE(noncomm.err.find("do not commute at (1,0)"), std::string::npos) << noncomm.err;
  EXPECT_EQ(run({"present", data("does_not_exist.mod")}).code, 1);
}

TEST(CliReduce, FullAndGeneratorsOnly) {
  const Result full = run({"reduce", data("presentation.mat")});
  EXPECT_EQ(full.code, 0);
  EXPECT_EQ(full.out, slurp(data("minimal.mat")));
  EXPECT_NE(full.err.find("shape 6x6 -> 2x2"), std::string::npos);
  EXPECT_NE(full.err.find("removed row"), std::string::npos);

  const Result gens = run({"reduce", "--generators-only", data("presentation.mat")});
  EXPECT_EQ(gens.code, 0);
  EXPECT_EQ(gens.out, slurp(data("generator_minimal.mat")));
  EXPECT_EQ(gens.err.find("removed row"), std::string::npos);

  const Result fix = run({"reduce", data("minimal.mat")});
  EXPECT_EQ(fix.out, slurp(data("minimal.mat")));
}

TEST(CliReduce, SupportViolationIsAValidationError) {
  EXPECT_EQ(run({"reduce", data("support_violation.mat")}).code, 2);
}

TEST(CliDual, ReferenceDualEmptyAndInvolution) {
  Scratch s;
  const Result d = run({"dual", data("generator_minimal.mat")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, slurp(data("generator_minimal_dual.mat")));
  EXPECT_EQ(run({"dual", data("empty.mat")}).out, slurp(data("empty.mat")));
  const std::string once = s.write("once.mat", d.out);
  EXPECT_EQ(run({"dual", once}).out, slurp(data("generator_minimal.mat")));
}

TEST(CliCheck, Matrices) {
  const Result a = run({"check", data("presentation.mat")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "valid, not generator-minimal\n");
  EXPECT_EQ(run({"check", data("generator_minimal.mat")}).out,
            "valid, generator-minimal, not minimal\n");
  EXPECT_EQ(run({"check", data("minimal.mat")}).out, "valid, minimal\n");
  const Result bad = run({"check", data("support_violation.mat")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("support violation at (0,0)"), std::string::npos) << bad.err;
}

TEST(CliCheck, Modules) {
  EXPECT_EQ(run({"check", data("two_parameter.mod")}).out, "valid module\n");
  EXPECT_EQ(run({"check", data("zero.mod")}).out, "valid module\n");
  EXPECT_EQ(run({"check", data("noncommuting.mod")}).code, 2);
  EXPECT_EQ(run({"check", data("bad_component.mod")}).code, 1);
}

TEST(CliHilbert, DefaultAndExplicitBox) {
  const std::string expected = slurp(data("hilbert_minimal.txt"));
  EXPECT_EQ(run({"hilbert", data("minimal.mat")}).out, expected);
  EXPECT_EQ(run({"hilbert", "--box", "0", "0", "2", "1", data("minimal.mat")}).out, expected);
  EXPECT_EQ(run({"hilbert", data("minimal.mat"), "--box", "1", "1", "2", "1"}).out,
            "1 1 2\n2 1 1\n");
  EXPECT_EQ(run({"hilbert", data("empty.mat")}).out, "");
  EXPECT_EQ(run({"hilbert", "--box", "0", "0", "2", data("minimal.mat")}).code, 2);
}

TEST(CliHilbert, DualGivesMirroredTable) {
  Scratch s;
  const std::string dual = s.write("dual.mat", run({"dual", data("minimal.mat")}).out);
  const Result r = run({"hilbert", "--box", "-2", "-1", "0", "0", dual});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-2 -1 1\n-2 0 1\n-1 -1 2\n-1 0 1\n0 -1 1\n");
  EXPECT_EQ(run({"hilbert", dual}).out, r.out);
}

TEST(CliBetti, Examples) {
  EXPECT_EQ(run({"betti", data("two_parameter.mod")}).out,
            "gen 0 1 1\ngen 1 0 1\ncogen 1 1 1\ncogen 2 1 1\n");
  EXPECT_EQ(run({"betti", data("zero.mod")}).out, "");
  EXPECT_EQ(run({"betti", data("one_parameter.mod")}).out, "gen 0 2\ncogen 0 1\ncogen 1 1\n");
}

TEST(CliOptions, FieldOverrideOutputFileAndUsage) {
  Scratch s;
  EXPECT_EQ(run({"--field", "F2", "betti", data("two_parameter.mod")}).code, 0);
  const Result wrong = run({"--field", "Q", "betti", data("two_parameter.mod")});
  EXPECT_EQ(wrong.code, 2);
  EXPECT_NE(wrong.err.find("does not match"), std::string::npos);

  const std::string out = s.path("out.mat");
  const Result r = run({"present", data("two_parameter.mod"), "-o", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(slurp(out), slurp(data("presentation.mat")));

  EXPECT_NE(run({"frobnicate", data("two_parameter.mod")}).code, 0);
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"present"}).code, 0);
  EXPECT_NE(run({"betti", "--box", "0", "1", data("two_parameter.mod")}).code, 0);
}

TEST(CliPipeline, PresentThenReduceMatchesBetti) {
  Scratch s;
  const auto corpus = testing::random_corpus(testing::corpus_seed() + 500, {.count = 30});
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const std::string mod = s.write("m" + std::to_string(k) + ".mod", serialize(corpus[k]));
    const Result present = run({"present", mod});
    ASSERT_EQ(present.code, 0) << present.err;
    const std::string mat = s.write("m" + std::to_string(k) + ".mat", present.out);
    const Result reduced = run({"reduce", mat});
    ASSERT_EQ(reduced.code, 0) << reduced.err;
    EXPECT_EQ(run({"reduce", mat}).out, reduced.out);  // deterministic
    EXPECT_EQ(run({"present", mod}).out, present.out);

    const MonomialMatrix m = parse_matrix(reduced.out);
    std::ostringstream table;
    for (const auto& [g, c] : testing::degree_counts(m.col_degrees)) {
      table << "gen";
      for (auto x : g.coords()) table << ' ' << x;
      table << ' ' << c << "\n";
    }
    for (const auto& [g, c] : testing::degree_counts(m.row_degrees)) {
      table << "cogen";
      for (auto x : g.coords()) table << ' ' << x;
      table << ' ' << c << "\n";
    }
    EXPECT_EQ(run({"betti", mod}).out, table.str());
  }
}

}  // namespace
}  // namespace fipkit
