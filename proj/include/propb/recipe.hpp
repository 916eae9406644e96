#pragma once

// Construction recipes: a small expression language naming seeds and
// constructions, e.g. "mc(5, fano, aht(fano), fano)".
//
//   expr := INT | '[' expr (',' expr)* ']' | IDENT | IDENT '(' expr (',' expr)* ')'

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace propb {

class RecipeError : public std::runtime_error {
 public:
  RecipeError(std::size_t offset, const std::string& what)
      : std::runtime_error("recipe offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Recipe {
  enum class Kind { Integer, Call, List };
  Kind kind = Kind::Call;
  std::int64_t value = 0;     // Integer
  std::string name;           // Call
  std::vector<Recipe> args;   // Call arguments or List items
  std::size_t offset = 0;     // byte offset of the first character in the source

  bool is_int() const { return kind == Kind::Integer; }
  bool is_call() const { return kind == Kind::Call; }
  bool is_list() const { return kind == Kind::List; }
};

namespace recipe_detail {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Recipe parse_all() {
    Recipe r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw RecipeError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size()) throw RecipeError(pos_, std::string("expected '") + c + "', got end of input");
    if (s_[pos_] != c) throw RecipeError(pos_, std::string("expected '") + c + "', got '" + s_[pos_] + "'");
    ++pos_;
  }

  std::vector<Recipe> items(char close) {
    std::vector<Recipe> out;
    out.push_back(expr());
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        out.push_back(expr());
        continue;
      }
      expect(close);
      return out;
    }
  }

  Recipe expr() {
    skip_ws();
    if (pos_ >= s_.size()) throw RecipeError(pos_, "expected an expression, got end of input");
    Recipe r;
    r.offset = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      r.kind = Recipe::Kind::Integer;
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        if (v > 1'000'000'000) throw RecipeError(r.offset, "integer too large");
        ++pos_;
      }
      r.value = v;
      return r;
    }
    if (c == '[') {
      ++pos_;
      r.kind = Recipe::Kind::List;
      r.args = items(']');
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      r.kind = Recipe::Kind::Call;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        r.name.push_back(s_[pos_++]);
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        r.args = items(')');
      }
      return r;
    }
    throw RecipeError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace recipe_detail

inline Recipe parse_recipe(std::string_view text) { return recipe_detail::Parser(text).parse_all(); }

/// Canonical form: no whitespace except a single space after each comma.
inline std::string to_string(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::Integer: return std::to_string(r.value);
    case Recipe::Kind::List:
    case Recipe::Kind::Call: {
      std::string s = r.is_list() ? "[" : r.name;
      if (r.is_call() && r.args.empty()) return s;
      if (r.is_call()) s += "(";
      for (std::size_t i = 0; i < r.args.size(); ++i) {
        if (i) s += ", ";
        s += to_string(r.args[i]);
      }
      return s + (r.is_list() ? "]" : ")");
    }
  }
  return {};
}

inline std::string canonical_recipe(std::string_view text) { return to_string(parse_recipe(text)); }

/// Named recipes m1..m17 realizing the best upper bound for each uniformity.
inline const std::map<std::string, std::string, std::less<>>& presets() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"m1", "k1"},
      {"m2", "triangle"},
      {"m3", "fano"},
      {"m4", "aht(triangle)"},
      {"m5", "aht(fano)"},
      {"m6", "am(triangle, fano)"},
      {"m7", "aht(preset(m5))"},
      {"m8", "mc(5, fano, aht(fano), fano)"},
      {"m9", "am(fano, fano)"},
      {"m10", "am(triangle, preset(m5))"},
      {"m11", "maht3(preset(m9))"},
      {"m12", "am(preset(m4), fano)"},
      {"m13", "mblock(4, preset(m5), fano, preset(m5), preset(m4))"},
      {"m14", "mc(5, preset(m9), preset(m5), preset(m4))"},
      {"m15", "am(preset(m5), fano)"},
      {"m16", "mblock(5, preset(m6), preset(m4), preset(m6), preset(m5))"},
      {"m17", "mc(7, preset(m10), preset(m7), preset(m3))"},
  };
  return table;
}

/// Resolves the argument of preset(...) to its recipe, or throws at the argument's offset.
inline Recipe expand_preset(const Recipe& call) {
  if (call.args.size() != 1 || !call.args[0].is_call() || !call.args[0].args.empty()) {
    throw RecipeError(call.offset, "preset takes one name, e.g. preset(m5)");
  }
  const auto it = presets().find(call.args[0].name);
  if (it == presets().end()) throw RecipeError(call.args[0].offset, "unknown preset '" + call.args[0].name + "'");
  return parse_recipe(it->second);
}

}  // namespace propb
