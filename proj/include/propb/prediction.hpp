#pragma once

// Static analysis of recipes: uniformity checking and closed-form edge and
// vertex counts, computed without generating anything.

#include <string>

#include "propb/exact.hpp"
#include "propb/recipe.hpp"

namespace propb {

struct Prediction {
  std::size_t uniformity = 0;
  BigInt vertices = 0;
  BigInt count = 0;
  bool exact = true;  // false when `count` is only an upper bound
};

namespace prediction_detail {

inline BigInt pow2(std::int64_t e) { return ipow(2, static_cast<std::uint64_t>(e)); }

/// 2^(n-1), plus C(n, n/2)/2 for even n.
inline BigInt frame(std::int64_t n) {
  BigInt c = pow2(n - 1);
  if (n % 2 == 0) c += binomial(n, n / 2) / 2;
  return c;
}

inline void arity(const Recipe& r, std::size_t lo, std::size_t hi) {
  if (r.args.size() < lo || r.args.size() > hi) {
    const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
    throw RecipeError(r.offset, r.name + " takes " + want + " argument(s), got " + std::to_string(r.args.size()));
  }
}

inline std::int64_t int_arg(const Recipe& r, std::size_t i, std::int64_t min) {
  const Recipe& a = r.args[i];
  if (!a.is_int()) throw RecipeError(a.offset, r.name + ": argument " + std::to_string(i + 1) + " must be an integer");
  if (a.value < min) throw RecipeError(a.offset, r.name + ": argument must be at least " + std::to_string(min));
  return a.value;
}

inline const Recipe& hg_arg(const Recipe& r, std::size_t i) {
  const Recipe& a = r.args[i];
  if (!a.is_call()) throw RecipeError(a.offset, r.name + ": argument " + std::to_string(i + 1) + " must be a hypergraph");
  return a;
}

inline void want_uniformity(const Recipe& at, const Prediction& p, std::size_t n, const char* role) {
  if (p.uniformity != n) {
    throw RecipeError(at.offset, std::string(role) + " must be " + std::to_string(n) + "-uniform, got " +
                                     std::to_string(p.uniformity) + "-uniform");
  }
}

}  // namespace prediction_detail

/// Uniformity, vertex count and edge count of the hypergraph a recipe builds.
/// Throws RecipeError (with the offending offset) on any static violation.
inline Prediction predict(const Recipe& r) {
  using namespace prediction_detail;
  if (!r.is_call()) throw RecipeError(r.offset, "expected a hypergraph expression");
  const std::string& f = r.name;
  auto sub = [&](std::size_t i) { return predict(hg_arg(r, i)); };
  Prediction out;

  if (f == "k1" || f == "triangle" || f == "fano") {
    arity(r, 0, 0);
    if (f == "k1") return {1, 1, 1, true};
    if (f == "triangle") return {2, 3, 3, true};
    return {3, 7, 7, true};
  }
  if (f == "complete") {
    arity(r, 2, 2);
    const std::int64_t v = int_arg(r, 0, 1), n = int_arg(r, 1, 1);
    if (n > v) throw RecipeError(r.args[1].offset, "complete: need n <= v");
    return {static_cast<std::size_t>(n), v, binomial(v, n), true};
  }
  if (f == "preset") {
    return predict(expand_preset(r));
  }
  if (f == "am") {
    arity(r, 2, 2);
    const Prediction a = sub(0), b = sub(1);
    return {a.uniformity * b.uniformity, a.vertices * b.vertices, a.count * ipow(b.count, a.uniformity),
            a.exact && b.exact};
  }
  if (f == "aht" || f == "maht2" || f == "maht3") {
    arity(r, 1, 1);
    const Prediction c = sub(0);
    const std::int64_t n = static_cast<std::int64_t>(c.uniformity) + 2;
    out.uniformity = static_cast<std::size_t>(n);
    out.exact = c.exact;
    if (f == "aht") {
      out.vertices = c.vertices + 2 * n;
      out.count = n * c.count + frame(n);
    } else if (f == "maht2") {
      out.vertices = c.vertices + 2 * n;
      out.count = (n + 1) * pow2(n - 2) + (n - 1) * c.count;
      if (n % 2 == 0) out.count += binomial(n, n / 2) / 2 + (n - 1) * binomial(n - 2, (n - 2) / 2);
    } else {
      out.vertices = c.vertices + 2 * n + 2 * (n - 2);
      out.count = (n + 4) * pow2(n - 3) + (n - 2) * c.count;
      if (n % 2 == 0) out.count += n * binomial(n - 2, (n - 2) / 2) / 2 + binomial(n, n / 2) / 2;
    }
    return out;
  }
  if (f == "gaht") {
    arity(r, 2, 2);
    const Prediction c = sub(0);
    const std::int64_t k = int_arg(r, 1, 1);
    const std::int64_t n = static_cast<std::int64_t>(c.uniformity) + 2 * k;
    const std::int64_t big_n = n + k - 1;
    return {static_cast<std::size_t>(n), c.vertices + 2 * big_n,
            binomial(big_n, k) * c.count + binomial(big_n, k - 1) * frame(n), c.exact};
  }
  if (f == "m8first") {
    arity(r, 3, 3);
    const Prediction a = sub(0), b = sub(1), c = sub(2);
    want_uniformity(r.args[0], a, 3, "m8first: first component");
    want_uniformity(r.args[1], b, 3, "m8first: second component");
    want_uniformity(r.args[2], c, 5, "m8first: third component");
    if (to_string(r.args[0]) != to_string(r.args[1])) {
      throw RecipeError(r.args[1].offset, "m8first: the two 3-uniform components must be the same recipe");
    }
    return {8, 16 + a.vertices + b.vertices + c.vertices,
            a.count * c.count + b.count * c.count + 8 * a.count * b.count + frame(8), a.exact && b.exact && c.exact};
  }
  if (f == "mc") {
    arity(r, 3, 4);
    const std::int64_t k = int_arg(r, 0, 1);
    const Prediction c = sub(1), hk = sub(2);
    const std::int64_t n = static_cast<std::int64_t>(c.uniformity) + k;
    const std::int64_t w = n / k, x = n % k;
    want_uniformity(r.args[2], hk, static_cast<std::size_t>(k), "mc: k-component");
    out.uniformity = static_cast<std::size_t>(n);
    out.exact = c.exact && hk.exact;
    const BigInt mkw = ipow(hk.count, static_cast<std::uint64_t>(w));
    out.count = w * c.count * hk.count;
    out.vertices = c.vertices + w * hk.vertices;
    if (x == 0) {
      if (r.args.size() == 4) throw RecipeError(r.args[3].offset, "mc: k divides n, no x-component expected");
      out.count += mkw;
      return out;
    }
    if (r.args.size() != 4) throw RecipeError(r.offset, "mc: n mod k = " + std::to_string(x) + " requires the x-component");
    const Prediction hx = sub(3);
    want_uniformity(r.args[3], hx, static_cast<std::size_t>(x), "mc: x-component");
    out.exact = out.exact && hx.exact;
    const std::int64_t y = k / x, z = k % x;
    out.vertices += y * hx.vertices;
    out.count += y * hx.count * mkw;
    const BigInt mxy = ipow(hx.count, static_cast<std::uint64_t>(y));
    if (z == 0) {
      out.count += c.count * mxy;
    } else {
      out.vertices += x + z - 1;
      out.count += binomial(x + z - 1, z) * c.count * mxy + binomial(x + z - 1, x) * mkw;
    }
    return out;
  }
  if (f == "block") {
    arity(r, 3, 3);
    const Prediction c = sub(0);
    const Recipe& list = r.args[1];
    if (!list.is_list()) throw RecipeError(list.offset, "block: second argument must be a list of hypergraphs");
    const std::int64_t k = int_arg(r, 2, 1);
    const std::int64_t n = static_cast<std::int64_t>(c.uniformity) + 2 * k;
    out.uniformity = static_cast<std::size_t>(n);
    out.exact = false;
    BigInt squares = 0, prod = 1;
    std::int64_t sum = 0;
    out.vertices = c.vertices;
    for (const Recipe& item : list.args) {
      if (!item.is_call()) throw RecipeError(item.offset, "block: list items must be hypergraphs");
      const Prediction b = predict(item);
      if (static_cast<std::int64_t>(b.uniformity) < k) {
        throw RecipeError(item.offset, "block: block uniformity " + std::to_string(b.uniformity) + " below k = " +
                                           std::to_string(k));
      }
      sum += static_cast<std::int64_t>(b.uniformity);
      squares += b.count * b.count;
      prod *= b.count;
      out.vertices += 2 * b.vertices;
    }
    if (sum < n) {
      throw RecipeError(list.offset, "block: block uniformities sum to " + std::to_string(sum) + ", need at least " +
                                         std::to_string(n));
    }
    out.count = c.count * squares + frame(static_cast<std::int64_t>(list.args.size())) * prod;
    return out;
  }
  if (f == "mblock") {
    arity(r, 5, 5);
    const std::int64_t k = int_arg(r, 0, 2);
    const Prediction hc = sub(1), h1c = sub(2), h1p = sub(3), hkk = sub(4);
    const auto uk = static_cast<std::size_t>(k);
    want_uniformity(r.args[1], hc, uk + 1, "mblock: core");
    want_uniformity(r.args[2], h1c, uk - 1, "mblock: first-block core");
    want_uniformity(r.args[3], h1p, uk + 1, "mblock: first-block partner");
    want_uniformity(r.args[4], hkk, uk, "mblock: k-block");
    const BigInt m1 = (k + 1) * h1c.count + frame(k + 1);
    const BigInt mk2 = hkk.count * hkk.count;
    out.uniformity = static_cast<std::size_t>(3 * k + 1);
    out.vertices = hc.vertices + h1c.vertices + 2 * (k + 1) + h1p.vertices + 4 * hkk.vertices;
    out.count = (h1c.count + pow2(k - 1)) * hc.count * h1p.count + 2 * hc.count * mk2 + 2 * m1 * mk2 +
                2 * h1p.count * mk2;
    out.exact = hc.exact && h1c.exact && h1p.exact && hkk.exact;
    return out;
  }
  throw RecipeError(r.offset, "unknown constructor '" + f + "'");
}

inline Prediction predicted_count(std::string_view recipe) { return predict(parse_recipe(recipe)); }

}  // namespace propb
