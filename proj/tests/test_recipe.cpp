#include <gtest/gtest.h>

#include "propb/bounds.hpp"
#include "propb/build.hpp"

using namespace propb;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    predict(parse_recipe(text));
  } catch (const RecipeError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

}  // namespace

TEST(RecipeParser, Canonical) {
  EXPECT_EQ(canonical_recipe("aht( fano )"), "aht(fano)");
  EXPECT_EQ(canonical_recipe("mc(5,fano,aht(fano),fano)"), "mc(5, fano, aht(fano), fano)");
  EXPECT_EQ(canonical_recipe(" block(fano ,[ fano,fano ,fano],3) "), "block(fano, [fano, fano, fano], 3)");
  EXPECT_EQ(canonical_recipe("preset(m5)"), "preset(m5)");
}

TEST(RecipeParser, Structure) {
  const Recipe r = parse_recipe("gaht(am(fano, fano), 2)");
  ASSERT_TRUE(r.is_call());
  EXPECT_EQ(r.name, "gaht");
  ASSERT_EQ(r.args.size(), 2u);
  EXPECT_EQ(r.args[0].name, "am");
  EXPECT_EQ(r.args[0].offset, 5u);
  EXPECT_TRUE(r.args[1].is_int());
  EXPECT_EQ(r.args[1].value, 2);
  EXPECT_EQ(r.args[1].offset, 21u);
}

TEST(RecipeParser, SyntaxErrorOffsets) {
  auto offset = [](std::string_view s) -> std::size_t {
    try {
      parse_recipe(s);
    } catch (const RecipeError& e) {
      return e.offset();
    }
    return 999;
  };
  EXPECT_EQ(offset("aht(triangle,"), 13u);
  EXPECT_EQ(offset("aht(triangle"), 12u);
  EXPECT_EQ(offset(""), 0u);
  EXPECT_EQ(offset("aht(fano))"), 9u);
  EXPECT_EQ(offset("aht(#)"), 4u);
  EXPECT_EQ(offset("[fano"), 5u);
  EXPECT_EQ(offset("am(fano fano)"), 8u);
  EXPECT_EQ(offset("mc(99999999999, fano, fano)"), 3u);
}

TEST(RecipeValidation, Errors) {
  EXPECT_EQ(error_offset("aht(squares)"), 4u);
  EXPECT_EQ(error_offset("aht(fano, fano)"), 0u);
  EXPECT_EQ(error_offset("am(3, fano)"), 3u);
  EXPECT_EQ(error_offset("gaht(fano, fano)"), 11u);
  EXPECT_EQ(error_offset("gaht(fano, 0)"), 11u);
  EXPECT_EQ(error_offset("mc(5, fano, fano, fano)"), 12u);
  EXPECT_EQ(error_offset("mc(5, fano, aht(fano))"), 0u);
  EXPECT_EQ(error_offset("mc(3, fano, fano, k1)"), 18u);
  EXPECT_EQ(error_offset("m8first(fano, fano, fano)"), 20u);
  EXPECT_EQ(error_offset("m8first(fano, aht(k1), aht(fano))"), 14u);
  EXPECT_EQ(error_offset("preset(m18)"), 7u);
  EXPECT_EQ(error_offset("preset(3)"), 0u);
  EXPECT_EQ(error_offset("block(fano, fano, 3)"), 12u);
  EXPECT_EQ(error_offset("block(fano, [triangle, fano], 3)"), 13u);
  EXPECT_EQ(error_offset("block(fano, [fano, fano], 3)"), 12u);
  EXPECT_EQ(error_offset("mblock(4, fano, fano, aht(fano), aht(triangle))"), 10u);
  EXPECT_EQ(error_offset("complete(3, 4)"), 12u);
  EXPECT_EQ(error_offset("[fano]"), 0u);
  EXPECT_EQ(error_offset("fano(1)"), 0u);
}

TEST(Presets, MatchTheBoundTable) {
  const BoundTable t = build_paper_table();
  for (std::int64_t n = 1; n <= 17; ++n) {
    const Prediction p = predicted_count("preset(m" + std::to_string(n) + ")");
    EXPECT_EQ(p.uniformity, static_cast<std::size_t>(n));
    EXPECT_EQ(p.count, t.m(n)) << "n=" << n;
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(canonical_recipe(t.row(n).recipe), presets().at("m" + std::to_string(n)));
  }
}

TEST(Presets, LegacyRecipesPredictLegacyBounds) {
  const BoundTable t = legacy_table();
  for (std::int64_t n = 1; n <= 17; ++n) {
    EXPECT_EQ(predicted_count(t.row(n).recipe).count, t.m(n)) << "n=" << n;
  }
}

TEST(Prediction, IntermediateValues) {
  EXPECT_EQ(predicted_count("gaht(am(fano, fano), 2)").count, 275835);
  EXPECT_EQ(predicted_count("mc(5, preset(m8), aht(fano), fano)").count, 203139);
  EXPECT_EQ(predicted_count("m8first(fano, fano, aht(fano))").count, 1269);
  EXPECT_EQ(predicted_count("aht(aht(triangle))").count, 180);
  EXPECT_FALSE(predicted_count("block(fano, [fano, fano, fano], 3)").exact);
}

TEST(Build, SmallRecipesMatchPrediction) {
  for (const char* s :
       {"k1", "complete(6, 3)", "aht(k1)", "maht2(triangle)", "maht3(triangle)", "maht2(fano)", "maht3(fano)",
        "gaht(k1, 2)", "gaht(triangle, 2)", "mc(2, triangle, triangle)", "mc(3, fano, fano)",
        "mc(5, fano, aht(fano), fano)", "m8first(fano, fano, aht(fano))", "mblock(2, fano, k1, fano, triangle)",
        "block(triangle, [fano, fano], 2)", "am(complete(3, 2), fano)", "preset(m12)"}) {
    const Prediction p = predicted_count(s);
    const Hypergraph h = build_recipe(s);
    EXPECT_EQ(h.uniformity(), p.uniformity) << s;
    EXPECT_EQ(BigInt(h.num_vertices()), p.vertices) << s;
    if (p.exact) {
      EXPECT_EQ(BigInt(h.num_edges()), p.count) << s;
    } else {
      EXPECT_LE(BigInt(h.num_edges()), p.count) << s;
    }
  }
}

TEST(Build, MemoizesRepeatedSubexpressions) {
  HypergraphCache cache;
  const auto h = build_recipe(parse_recipe("am(preset(m2), triangle)"), cache);
  EXPECT_EQ(h->num_edges(), 27u);
  ASSERT_TRUE(cache.count("triangle"));
  EXPECT_EQ(cache.at("triangle").get(), cache.at("preset(m2)").get());
}

TEST(Build, PresetEqualsItsRecipe) {
  EXPECT_EQ(build_recipe("preset(m8)"), build_recipe("mc(5, fano, aht(fano), fano)"));
}
