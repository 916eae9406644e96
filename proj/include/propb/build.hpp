#pragma once

// Recipe evaluation. Subexpressions are memoized by canonical text, so a
// preset used several times in one recipe is generated once.

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "propb/constructions.hpp"
#include "propb/prediction.hpp"
#include "propb/recipe.hpp"
#include "propb/seeds.hpp"

namespace propb {

using HypergraphCache = std::map<std::string, std::shared_ptr<Hypergraph>>;

namespace build_detail {

inline std::size_t as_size(std::int64_t v) { return static_cast<std::size_t>(v); }

inline std::shared_ptr<Hypergraph> build(const Recipe& r, HypergraphCache& cache) {
  const std::string key = to_string(r);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const std::string& f = r.name;
  if (f == "preset") {
    auto ptr = build(expand_preset(r), cache);
    cache.emplace(key, ptr);
    return ptr;
  }
  auto sub = [&](std::size_t i) { return build(r.args[i], cache); };
  Hypergraph h = [&]() -> Hypergraph {
    if (f == "k1" || f == "triangle" || f == "fano") return seed(f);
    if (f == "complete") return complete_hypergraph(as_size(r.args[0].value), as_size(r.args[1].value));
    if (f == "am") return abbott_moser(*sub(0), *sub(1));
    if (f == "aht") return abbott_hanson_toft(*sub(0));
    if (f == "maht2") return mathews_second(*sub(0));
    if (f == "maht3") return mathews_third(*sub(0));
    if (f == "gaht") return generalized_aht(*sub(0), as_size(r.args[1].value));
    if (f == "m8first") return mathews_first(*sub(0), *sub(1), *sub(2));
    if (f == "mc") {
      std::optional<Hypergraph> hx;
      if (r.args.size() == 4) hx = *sub(3);
      return multi_core(*sub(1), *sub(2), hx, as_size(r.args[0].value));
    }
    if (f == "block") {
      BlockSpec spec{*sub(0), {}, as_size(r.args[2].value)};
      for (const Recipe& item : r.args[1].args) spec.blocks.push_back(*build(item, cache));
      return block(spec);
    }
    if (f == "mblock") return modified_block(as_size(r.args[0].value), *sub(1), *sub(2), *sub(3), *sub(4));
    throw RecipeError(r.offset, "unknown constructor '" + f + "'");
  }();
  auto ptr = std::make_shared<Hypergraph>(std::move(h));
  cache.emplace(key, ptr);
  return ptr;
}

}  // namespace build_detail

/// Validates the recipe statically, then generates it.
inline std::shared_ptr<const Hypergraph> build_recipe(const Recipe& r, HypergraphCache& cache) {
  predict(r);
  return build_detail::build(r, cache);
}

inline Hypergraph build_recipe(std::string_view text) {
  HypergraphCache cache;
  const Recipe r = parse_recipe(text);
  predict(r);
  std::shared_ptr<Hypergraph> h = build_detail::build(r, cache);
  cache.clear();
  return std::move(*h);
}

}  // namespace propb
