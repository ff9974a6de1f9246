#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cycshift/cli.hpp"
#include "cycshift/decomposition.hpp"
#include "cycshift/io.hpp"
#include "cycshift/oracle.hpp"
#include "cycshift/parabolic.hpp"
#include "cycshift/shift_graph.hpp"
#include "test_support.hpp"

using namespace cycshift;
using cycshift::testing::all_elements;
using cycshift::testing::el;
using cycshift::testing::flip;
using cycshift::testing::identity;
using ::testing::HasSubstr;

namespace {

std::string parse_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST(Parse, Words) {
  EXPECT_EQ(io::parse_word("1,2,1"), (Word{1, 2, 1}));
  EXPECT_EQ(io::parse_word(" 3 , 2 "), (Word{3, 2}));
  EXPECT_TRUE(io::parse_word("").empty());
  EXPECT_TRUE(io::parse_word("e").empty());
  EXPECT_EQ(io::format_word({1, 2, 3}), "1,2,3");
  EXPECT_THAT(parse_message([] { io::parse_word("1,,2"); }), HasSubstr("position 2"));
  EXPECT_THAT(parse_message([] { io::parse_word("1,x"); }), HasSubstr("'x' at position 2"));
  EXPECT_THAT(parse_message([] { io::parse_word("0"); }), HasSubstr("at least 1"));
}

TEST(Parse, Subsets) {
  EXPECT_EQ(io::parse_subset("1,3", 3), (SimpleSubset{1, 3}));
  for (const char* empty : {"", "∅", "empty", "none", "{}"}) {
    EXPECT_EQ(io::parse_subset(empty, 3), SimpleSubset{}) << empty;
  }
  EXPECT_EQ(io::parse_subset("S", 3), SimpleSubset::full(3));
  EXPECT_EQ(io::parse_subset("all", 2), SimpleSubset::full(2));
  EXPECT_THAT(parse_message([] { io::parse_subset("1,4", 3); }), HasSubstr("outside 1..3"));
}

TEST(Parse, Automorphisms) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_TRUE(io::parse_automorphism("id", g).is_identity());
  EXPECT_EQ(io::parse_automorphism("1:3,3:1", g), flip(g));
  EXPECT_EQ(io::parse_automorphism("1:3,2:2,3:1", g), flip(g));
  EXPECT_EQ(io::parse_automorphism(io::format_automorphism(flip(g)), g), flip(g));
  EXPECT_THAT(parse_message([&] { io::parse_automorphism("1:2,2:1", g); }),
              HasSubstr("does not preserve"));
  EXPECT_THAT(parse_message([&] { io::parse_automorphism("1-3", g); }), HasSubstr("lacks ':'"));
  EXPECT_THAT(parse_message([&] { io::parse_automorphism("1:3,1:1", g); }), HasSubstr("twice"));
  EXPECT_THAT(parse_message([&] { io::parse_automorphism("1:4", g); }),
              HasSubstr("out of range"));
}

TEST(Format, SubscriptLabels) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_EQ(io::subscript_label(g, g.identity()), "1");
  EXPECT_EQ(io::subscript_label(g, el(g, "1,2,1,3,2")), "s_{12132}");
  EXPECT_EQ(io::format_element(g, el(g, "2,1,2")), "1,2,1");
}

TEST(Json, RoundTrips) {
  const auto g = CoxeterGroup::of_type("A3");
  for (const auto& delta : g.automorphisms()) {
    for (SimpleSubset J : all_subsets(g.rank())) {
      const PartialDecomposition d = decompose(g, J, delta);
      EXPECT_EQ(io::decomposition_from_json(io::to_json(g, d), g), d);
      for (Element w : minimal_reps(g, J, delta, RepKind::RightCosets)) {
        if (!is_min_length_in_orbit(g, w, J, delta)) continue;
        const CycCertificate c = theorem_cyc(g, J, delta, {w, SimpleSubset{}});
        EXPECT_EQ(io::certificate_from_json(io::to_json(g, c), g), c);
        const InductionDatum datum = induction_datum(g, J, g.all_generators(), delta, w);
        EXPECT_EQ(io::datum_from_json(io::to_json(g, datum), g), datum);
      }
    }
  }
  const CombinatorialPiece p{el(g, "2,1,3,2"), SimpleSubset{1, 3}};
  EXPECT_EQ(io::piece_from_json(io::to_json(g, p), g), p);
  const auto step = shift_step(g, {el(g, "1,2,3"), SimpleSubset{}}, el(g, "1"), identity(g));
  ASSERT_TRUE(step.has_value());
  EXPECT_EQ(io::step_from_json(io::to_json(g, *step), g), *step);
}

TEST(Dot, GraphAndHasse) {
  const auto g = CoxeterGroup::of_type("A3");
  const ShiftGraph graph = build_shift_graph(g, identity(g), g.all_generators());
  const std::string dot =
      io::graph_dot(graph, connected_component(graph, el(g, "1,2,3")));
  EXPECT_THAT(dot, HasSubstr("digraph conjugacy {"));
  EXPECT_THAT(dot, HasSubstr("s_{12132}"));
  EXPECT_THAT(dot, ::testing::Not(HasSubstr("s_{1213}")));

  const std::string hasse = io::hasse_dot(g, cycshift::hasse(g, SimpleSubset{3}, identity(g)));
  EXPECT_THAT(hasse, HasSubstr("graph hasse {"));
  EXPECT_EQ(count_of(hasse, "style=dashed"), 1u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"graph", "A3", "--w", "1,2,3", "--component"}).code, cli::kPass);
  EXPECT_EQ(run_cli({"verify", "--types", "A2", "--suite", "prop-w"}).code, cli::kPass);

  const CliResult bad_type = run_cli({"decompose", "Q3"});
  EXPECT_EQ(bad_type.code, cli::kUsageError);
  EXPECT_THAT(bad_type.err, HasSubstr("error:"));
  EXPECT_EQ(run_cli({"decompose", "A3", "--J", "7"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"iota", "A3", "--J", "1", "--w", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"verify", "--suite", "nonexistent", "--types", "A2"}).code,
            cli::kUsageError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kPass);
}

TEST(Cli, IotaJson) {
  const CliResult r =
      run_cli({"iota", "A4", "--J", "1,3", "--w", "1,2,1,3,2,4", "--format", "json"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j["iota"], "2,1,3,2,4,3");
  EXPECT_EQ(j["w"], "1,2,1,3,2,4");
}

TEST(Cli, DecomposeCountsBlocks) {
  const CliResult r = run_cli({"decompose", "A3", "--J", "∅", "--format", "json"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_EQ(io::Json::parse(r.out)["blocks"].size(), 24u);
  const CliResult full = run_cli({"decompose", "A3", "--J", "S", "--format", "json"});
  EXPECT_EQ(io::Json::parse(full.out)["blocks"].size(), 1u);
}

TEST(Cli, HasseDashedEdgesMatchOrderOracle) {
  const auto g = CoxeterGroup::of_type("B2");
  const SimpleSubset J{1};
  // Expected non-Bruhat covers, from the subword oracles alone.
  const auto reps = minimal_reps(g, J, identity(g), RepKind::RightCosets);
  std::size_t expected = 0;
  for (Element a : reps) {
    for (Element b : reps) {
      if (a == b || !oracle::partial_leq(g, a, b, J, identity(g))) continue;
      bool cover = true;
      for (Element c : reps) {
        if (c != a && c != b && oracle::partial_leq(g, a, c, J, identity(g)) &&
            oracle::partial_leq(g, c, b, J, identity(g))) {
          cover = false;
        }
      }
      if (cover && !oracle::bruhat_leq(g, a, b)) ++expected;
    }
  }
  const CliResult r = run_cli({"hasse", "B2", "--J", "1"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_EQ(count_of(r.out, "style=dashed"), expected);
}

TEST(Cli, OutputIsDeterministicAndCanGoToFile) {
  const std::vector<std::string> args = {"graph", "B3", "--delta", "id", "--format", "json"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  ASSERT_EQ(a.code, cli::kPass);
  EXPECT_EQ(a.out, b.out);

  const auto path = std::filesystem::temp_directory_path() / "cycshift_cli_out.json";
  std::vector<std::string> with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const CliResult c = run_cli(with_out);
  ASSERT_EQ(c.code, cli::kPass) << c.err;
  EXPECT_TRUE(c.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), a.out);
  std::filesystem::remove(path);
}

TEST(Cli, TwistedDeltaAccepted) {
  const CliResult r = run_cli({"graph", "A3", "--delta", "1:3,3:1", "--w", "1,2,3",
                               "--component", "--format", "table"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_THAT(r.out, HasSubstr("class"));
  EXPECT_EQ(run_cli({"graph", "A3", "--delta", "1:2,2:1"}).code, cli::kUsageError);
}
