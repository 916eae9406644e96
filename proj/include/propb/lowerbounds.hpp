#pragma once

// Lower-bound machinery for m(n): covering bounds, balanced-coloring
// blocking, the min-max scan, the pair-intersection inequality and the
// case analysis behind m(5) >= 29.

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "propb/exact.hpp"

namespace propb {

struct SchonheimParams {
  std::int64_t l = 0;  // vertices
  std::int64_t n = 0;  // uniformity
  std::int64_t t = 2;
  std::int64_t lambda = 1;

  void validate() const {
    if (!(l >= n && n >= t && t >= 1 && lambda >= 1)) {
      throw std::invalid_argument("schonheim: need l >= n >= t >= 1 and lambda >= 1");
    }
  }
};

/// Nested ceilings, evaluated from the innermost term outward.
inline BigInt schonheim(const SchonheimParams& p) {
  p.validate();
  BigInt v = ceil_div(BigInt(p.lambda) * (p.l - p.t + 1), BigInt(p.n - p.t + 1));
  for (std::int64_t i = p.t - 2; i >= 0; --i) v = ceil_div(BigInt(p.l - i) * v, BigInt(p.n - i));
  return v;
}

inline BigInt schonheim(std::int64_t l, std::int64_t n, std::int64_t t = 2, std::int64_t lambda = 1) {
  return schonheim(SchonheimParams{l, n, t, lambda});
}

/**
 * Edges needed to block every balanced coloring of v vertices: each
 * monochromatic n-set kills C(v-n, floor(v/2)-n) + C(v-n, ceil(v/2)-n) of the
 * C(v, floor(v/2)) balanced colorings.
 */
inline BigInt blocked_bound(std::int64_t v, std::int64_t n) {
  if (n < 1 || v < n) throw std::invalid_argument("blocked_bound: need v >= n >= 1");
  const std::int64_t lo = v / 2, hi = v - v / 2;
  const BigInt den = binomial(v - n, lo - n) + binomial(v - n, hi - n);
  if (den == 0) throw std::invalid_argument("blocked_bound: no balanced coloring has a monochromatic n-set");
  return ceil_div(binomial(v, lo), den);
}

struct CertificateCase {
  std::string name;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> values;
  bool ok = true;
};

struct Certificate {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<CertificateCase> cases;
  BigInt bound = 0;
  bool valid = true;
};

inline std::string render_text(const Certificate& c) {
  std::ostringstream os;
  os << "claim: " << c.claim << '\n';
  for (const auto& [k, v] : c.inputs) os << "  input " << k << " = " << v << '\n';
  for (const auto& cs : c.cases) {
    os << '[' << (cs.ok ? "ok" : "FAILED") << "] " << cs.name << ": " << cs.summary << '\n';
    for (const auto& [k, v] : cs.values) os << "    " << k << " = " << v << '\n';
  }
  if (!c.valid) os << "certificate INVALID\n";
  os << c.claim << '\n';
  return os.str();
}

/// One row per value: case, key, value, status.
inline std::string render_tsv(const Certificate& c) {
  std::ostringstream os;
  os << "case\tkey\tvalue\tstatus\n";
  for (const auto& [k, v] : c.inputs) os << "input\t" << k << '\t' << v << "\tok\n";
  for (const auto& cs : c.cases) {
    for (const auto& [k, v] : cs.values) os << cs.name << '\t' << k << '\t' << v << '\t' << (cs.ok ? "ok" : "failed") << '\n';
  }
  os << "result\tbound\t" << c.bound << '\t' << (c.valid ? "ok" : "failed") << '\n';
  return os.str();
}

struct GoldbergResult {
  std::int64_t x = 0;
  BigInt bound = 0;
  Certificate certificate;
};

/**
 * min over x > 2n of max(blocked_bound(x, n), schonheim(x, n, 2, 1)).
 *
 * blocked_bound is non-increasing and schonheim non-decreasing in x, so the
 * scan stops once the covering term alone reaches the running minimum.
 */
inline GoldbergResult goldberg_lower(std::int64_t n, std::int64_t x_max = 1000) {
  if (n < 4) throw std::invalid_argument("goldberg_lower: need n >= 4");
  if (x_max <= 2 * n + 1) throw std::invalid_argument("goldberg_lower: x_max must exceed 2n+1");
  GoldbergResult best;
  bool bracketed = false;
  std::int64_t scanned = 0;
  for (std::int64_t x = 2 * n + 1; x <= x_max; ++x) {
    const BigInt f = blocked_bound(x, n);
    const BigInt g = schonheim(x, n);
    ++scanned;
    if (best.x != 0 && g >= best.bound) {
      bracketed = true;
      break;
    }
    const BigInt v = std::max(f, g);
    if (best.x == 0 || v < best.bound) {
      best.x = x;
      best.bound = v;
    }
  }
  if (!bracketed) throw std::runtime_error("goldberg_lower: x_max too small to bracket the crossover");
  Certificate& c = best.certificate;
  c.claim = "m(" + std::to_string(n) + ") >= " + best.bound.str();
  c.inputs = {{"n", std::to_string(n)}, {"x_max", std::to_string(x_max)}};
  CertificateCase cs{"minmax", "min over x > 2n of max(blocked_bound, schonheim)", {}, true};
  cs.values = {{"argmin_x", std::to_string(best.x)},
               {"blocked_bound(x)", blocked_bound(best.x, n).str()},
               {"schonheim(x)", schonheim(best.x, n).str()},
               {"x_scanned", std::to_string(scanned)}};
  c.cases.push_back(std::move(cs));
  c.bound = best.bound;
  return best;
}

/// Integral over [0,1] of (1 - (xp)^2)^(n-1), expanded term by term.
inline Rational rs_integral(std::int64_t n, const Rational& p) {
  if (n < 1) throw std::invalid_argument("rs_integral: n >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("rs_integral: p in [0,1]");
  Rational sum = 0;
  Rational term = 1;  // (-p^2)^j
  for (std::int64_t j = 0; j < n; ++j) {
    sum += Rational(binomial(n - 1, j)) * term / (2 * j + 1);
    term *= -p * p;
  }
  return sum;
}

struct RsParams {
  std::int64_t n = 0;
  BigInt m = 0;
  BigInt gamma = 0;
  Rational p = 0;
};

struct RsResult {
  Rational value;
  bool colorable_guaranteed = false;
};

/// 2^(1-n)(1-p)^n m + 4 gamma 2^(1-2n) p I(n, p), compared with 1 exactly.
inline RsResult rs_check(const RsParams& q) {
  if (q.n < 1 || q.p < 0 || q.p > 1 || q.gamma < 0 || q.m < 0) throw std::invalid_argument("rs_check: bad parameters");
  Rational one_minus_p_n = 1;
  for (std::int64_t i = 0; i < q.n; ++i) one_minus_p_n *= 1 - q.p;
  const Rational first = one_minus_p_n * Rational(q.m) / Rational(ipow(2, static_cast<std::uint64_t>(q.n - 1)));
  const Rational second =
      Rational(4 * q.gamma) * q.p * rs_integral(q.n, q.p) / Rational(ipow(2, static_cast<std::uint64_t>(2 * q.n - 1)));
  RsResult r;
  r.value = first + second;
  r.colorable_guaranteed = r.value < 1;
  return r;
}

/// Sum over vertices of C(d, 2) - 1.
inline BigInt pair_intersection_cap(const std::vector<std::int64_t>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("pair_intersection_cap: empty degree sequence");
  BigInt s = 0;
  for (std::int64_t d : degrees) {
    if (d < 1) throw std::invalid_argument("pair_intersection_cap: degrees must be >= 1");
    s += binomial(d, 2) - 1;
  }
  return s;
}

/// Non-increasing sequences of length v, every entry >= min_degree, summing to degree_sum.
inline std::vector<std::vector<std::int64_t>> admissible_degree_sequences(std::int64_t v, std::int64_t degree_sum,
                                                                           std::int64_t min_degree) {
  if (v < 1) throw std::invalid_argument("admissible_degree_sequences: v >= 1");
  std::vector<std::vector<std::int64_t>> out;
  const std::int64_t excess = degree_sum - v * min_degree;
  if (excess < 0) return out;
  // Partitions of `excess` into at most v parts, largest first.
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t cap) {
    if (left == 0) {
      std::vector<std::int64_t> seq(static_cast<std::size_t>(v), min_degree);
      for (std::size_t i = 0; i < parts.size(); ++i) seq[i] += parts[i];
      out.push_back(std::move(seq));
      return;
    }
    if (static_cast<std::int64_t>(parts.size()) == v) return;
    for (std::int64_t x = std::min(left, cap); x >= 1; --x) {
      parts.push_back(x);
      rec(left - x, x);
      parts.pop_back();
    }
  };
  rec(excess, excess);
  return out;
}

namespace lower_detail {

inline std::string seq_str(const std::vector<std::int64_t>& s) {
  std::string out = "<";
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (i) out += ",";
    out += std::to_string(s[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ">";
}

}  // namespace lower_detail

/// Case analysis over the vertex count v of a minimal non-2-colorable 5-uniform hypergraph.
inline Certificate m5_certificate(std::int64_t case5_cap = 500) {
  constexpr std::int64_t n = 5;
  const BigInt target = 29;
  Certificate c;
  c.claim = "m(5) >= 29";
  c.inputs = {{"n", "5"}, {"target", "29"}, {"case5_cap", std::to_string(case5_cap)}};

  {
    CertificateCase cs{"case1", "5 <= v <= 8: a balanced coloring has at most 4 vertices per class", {}, true};
    for (std::int64_t v = 5; v <= 8; ++v) {
      const std::int64_t larger = v - v / 2;
      cs.values.push_back({"v=" + std::to_string(v) + " larger_class", std::to_string(larger)});
      cs.ok = cs.ok && larger < n;
    }
    c.cases.push_back(std::move(cs));
  }
  {
    CertificateCase cs{"case2", "v in {9, 10}: m_9(5) = m_10(5) = C(9,5)", {}, true};
    const BigInt b = binomial(2 * n - 1, n);
    cs.values = {{"C(9,5)", b.str()}};
    cs.ok = b == 126 && b >= target;
    c.cases.push_back(std::move(cs));
  }
  {
    CertificateCase cs{"case3", "11 <= v <= 22: blocking every balanced coloring", {}, true};
    BigInt lo = -1;
    for (std::int64_t v = 11; v <= 22; ++v) {
      const BigInt f = blocked_bound(v, n);
      cs.values.push_back({"blocked_bound(" + std::to_string(v) + ")", f.str()});
      if (lo < 0 || f < lo) lo = f;
    }
    cs.values.push_back({"min", lo.str()});
    cs.ok = lo >= target;
    c.cases.push_back(std::move(cs));
  }
  {
    CertificateCase cs{"case4", "v = 23: pair covering forces 28 edges, and 28 edges are 2-colorable", {}, true};
    const BigInt s = schonheim(23, n);
    cs.values.push_back({"schonheim(23,5,2,1)", s.str()});
    // Vertex u lies in 22 pairs and each edge through u covers 4 of them.
    const BigInt min_deg = ceil_div(BigInt(22), BigInt(4));
    cs.values.push_back({"min_degree", min_deg.str()});
    const std::int64_t edges = static_cast<std::int64_t>(s);
    const auto seqs = admissible_degree_sequences(23, n * edges, static_cast<std::int64_t>(min_deg));
    BigInt gamma = 0;
    for (const auto& seq : seqs) {
      const BigInt cap = pair_intersection_cap(seq);
      cs.values.push_back({"gamma" + lower_detail::seq_str(seq), cap.str()});
      gamma = std::max(gamma, cap);
    }
    cs.values.push_back({"gamma_max", gamma.str()});
    const RsResult rs = rs_check(RsParams{n, s, gamma, Rational(3, 10)});
    cs.values.push_back({"rs_value", to_decimal(rs.value, 6)});
    cs.values.push_back({"rs_value_exact", rs.value.str()});
    cs.values.push_back({"rs_below_one", rs.colorable_guaranteed ? "yes" : "no"});
    cs.ok = s == 28 && min_deg == 6 && seqs.size() == 2 && rs.colorable_guaranteed;
    c.cases.push_back(std::move(cs));
  }
  {
    CertificateCase cs{"case5", "v >= 24: pair covering alone forces 29 edges", {}, true};
    BigInt lo = -1;
    BigInt prev = 0;
    bool monotone = true;
    for (std::int64_t v = 24; v <= case5_cap; ++v) {
      const BigInt s = schonheim(v, n);
      if (lo < 0 || s < lo) lo = s;
      if (s < prev) monotone = false;
      prev = s;
    }
    cs.values = {{"schonheim(24,5,2,1)", schonheim(24, n).str()},
                 {"min_over_24.." + std::to_string(case5_cap), lo.str()},
                 {"non_decreasing_in_v", monotone ? "yes" : "no"}};
    cs.ok = lo >= target && monotone;
    c.cases.push_back(std::move(cs));
  }
  c.valid = std::all_of(c.cases.begin(), c.cases.end(), [](const CertificateCase& cs) { return cs.ok; });
  c.bound = c.valid ? target : BigInt(0);
  return c;
}

}  // namespace propb
