#include <gtest/gtest.h>

#include "propb/cnf.hpp"
#include "propb/hg_io.hpp"
#include "propb/seeds.hpp"

using namespace propb;

TEST(HgFormat, RoundTrip) {
  const Hypergraph f = seed(SeedName::Fano);
  const std::string text = to_hg_string(f);
  EXPECT_EQ(text.substr(0, 9), "hg 3 7 7\n");
  EXPECT_EQ(read_hg_string(text), f);
  EXPECT_EQ(read_hg_string("# comment\n" + text), f);
}

TEST(HgFormat, StrictErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      read_hg_string(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("graph 2 3 1\n0 1\n"), 1u);
  EXPECT_EQ(line_of("hg 2 3 1 9\n0 1\n"), 1u);
  EXPECT_EQ(line_of("hg 2 3 1\n0 1 2\n"), 2u);        // arity
  EXPECT_EQ(line_of("hg 2 3 2\n0 1\n0 3\n"), 3u);     // range
  EXPECT_EQ(line_of("hg 2 3 1\n1 0\n"), 2u);          // ascending
  EXPECT_EQ(line_of("hg 2 3 2\n0 2\n0 1\n"), 3u);     // order
  EXPECT_EQ(line_of("hg 2 3 2\n0 1\n0 1\n"), 3u);     // duplicate
  EXPECT_EQ(line_of("hg 2 3 2\n0 1\n"), 2u);          // count
  EXPECT_EQ(line_of("hg 2 3 1\n0 x\n"), 2u);
  EXPECT_THROW(read_hg_string(""), FormatError);
  EXPECT_THROW(read_hg_file("/nonexistent/file.hg"), std::runtime_error);
}

TEST(Cnf, FanoEncoding) {
  const Hypergraph f = seed(SeedName::Fano);
  const std::string text = export_nae_cnf(f);
  EXPECT_NE(text.find("\np cnf 7 14\n"), std::string::npos);
  EXPECT_NE(text.find("\n1 2 4 0\n-1 -2 -4 0\n"), std::string::npos);
  const DimacsCnf cnf = parse_dimacs(text);
  EXPECT_EQ(cnf.num_vars, 7u);
  EXPECT_EQ(cnf.clauses.size(), 14u);
}

TEST(Cnf, SatisfactionMatchesColoring) {
  const Hypergraph f = seed(SeedName::Fano).without_edge(6);
  const DimacsCnf cnf = parse_dimacs(export_nae_cnf(f));
  Coloring c(7, Color::Red);
  EXPECT_FALSE(satisfies(cnf, to_assignment(c)));
  // {3, 4, 6} is the removed edge; colouring it blue meets every remaining edge.
  c[3] = c[4] = c[6] = Color::Blue;
  EXPECT_FALSE(has_monochromatic_edge(f, c).has_value());
  EXPECT_TRUE(satisfies(cnf, to_assignment(c)));
  EXPECT_THROW(satisfies(cnf, std::vector<bool>(3)), std::invalid_argument);
}

TEST(Cnf, StrictParser) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\nc late\n1 2 0\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1x 0\n"), std::runtime_error);
  const DimacsCnf ok = parse_dimacs("c hi\np cnf 3 2\n1 -2 0 3\n0\n");
  EXPECT_EQ(ok.clauses.size(), 2u);
  EXPECT_EQ(ok.clauses[1], (std::vector<long>{3}));
}
