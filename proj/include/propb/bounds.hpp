#pragma once

// Exact evaluation of the upper-bound recurrences for m(n), n <= 17.

#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "propb/exact.hpp"

namespace propb {

class BoundTable;

/// Expression over integer literals, binomials, m(n) references, +, * and powers.
class BoundExpr {
 public:
  enum class Kind { Literal, Binomial, MBest, Add, Mul, Pow };

  static BoundExpr lit(BigInt v) {
    if (v < 0) throw std::invalid_argument("bound literals are non-negative");
    return BoundExpr(Node{Kind::Literal, std::move(v), 0, 0, {}});
  }
  static BoundExpr binom(std::int64_t n, std::int64_t k) { return BoundExpr(Node{Kind::Binomial, 0, n, k, {}}); }
  static BoundExpr m(std::int64_t n) { return BoundExpr(Node{Kind::MBest, 0, n, 0, {}}); }

  friend BoundExpr operator+(const BoundExpr& a, const BoundExpr& b) {
    return BoundExpr(Node{Kind::Add, 0, 0, 0, {a, b}});
  }
  friend BoundExpr operator*(const BoundExpr& a, const BoundExpr& b) {
    return BoundExpr(Node{Kind::Mul, 0, 0, 0, {a, b}});
  }
  friend BoundExpr pow(const BoundExpr& a, std::int64_t e) {
    return BoundExpr(Node{Kind::Pow, 0, e, 0, {a}});
  }

  Kind kind() const { return node_->kind; }

  BigInt eval(const BoundTable& table) const;

  std::string str() const { return render(0); }

 private:
  struct Node {
    Kind kind;
    BigInt value;
    std::int64_t a;
    std::int64_t b;
    std::vector<BoundExpr> children;
  };
  explicit BoundExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  int precedence() const {
    switch (kind()) {
      case Kind::Add: return 1;
      case Kind::Mul: return 2;
      case Kind::Pow: return 3;
      default: return 4;
    }
  }

  std::string render(int parent) const {
    std::string s;
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::Literal: s = n.value.str(); break;
      case Kind::Binomial: s = "C(" + std::to_string(n.a) + "," + std::to_string(n.b) + ")"; break;
      case Kind::MBest: s = "m(" + std::to_string(n.a) + ")"; break;
      case Kind::Add: s = n.children[0].render(1) + " + " + n.children[1].render(1); break;
      case Kind::Mul: s = n.children[0].render(2) + "*" + n.children[1].render(2); break;
      case Kind::Pow: s = n.children[0].render(4) + "^" + std::to_string(n.a); break;
    }
    return precedence() < parent ? "(" + s + ")" : s;
  }

  std::shared_ptr<const Node> node_;
};

struct BoundRow {
  std::int64_t n = 0;
  BigInt value;
  std::string recipe;  // construction recipe realizing the bound
  BoundExpr expr;
};

class BoundTable {
 public:
  bool contains(std::int64_t n) const { return rows_.count(n) != 0; }

  const BoundRow& row(std::int64_t n) const {
    auto it = rows_.find(n);
    if (it == rows_.end()) throw std::out_of_range("no bound for m(" + std::to_string(n) + ")");
    return it->second;
  }

  const BigInt& m(std::int64_t n) const { return row(n).value; }

  /// Evaluates `expr` against the rows present so far and appends the result.
  const BoundRow& add(std::int64_t n, std::string recipe, BoundExpr expr) {
    if (contains(n)) throw std::invalid_argument("duplicate row " + std::to_string(n));
    BigInt v = expr.eval(*this);
    return rows_.emplace(n, BoundRow{n, std::move(v), std::move(recipe), std::move(expr)}).first->second;
  }

  std::vector<const BoundRow*> rows() const {
    std::vector<const BoundRow*> out;
    for (const auto& [n, r] : rows_) out.push_back(&r);
    return out;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::int64_t, BoundRow> rows_;
};

inline BigInt BoundExpr::eval(const BoundTable& table) const {
  const Node& n = *node_;
  BigInt r;
  switch (n.kind) {
    case Kind::Literal: r = n.value; break;
    case Kind::Binomial: r = binomial(n.a, n.b); break;
    case Kind::MBest:
      if (!table.contains(n.a)) throw std::out_of_range("unresolved reference m(" + std::to_string(n.a) + ")");
      r = table.m(n.a);
      break;
    case Kind::Add: r = n.children[0].eval(table) + n.children[1].eval(table); break;
    case Kind::Mul: r = n.children[0].eval(table) * n.children[1].eval(table); break;
    case Kind::Pow:
      if (n.a < 0) throw std::logic_error("negative exponent");
      r = ipow(n.children[0].eval(table), static_cast<std::uint64_t>(n.a));
      break;
  }
  if (r < 0) throw std::logic_error("negative intermediate in bound expression");
  return r;
}

inline BigInt eval(const BoundExpr& e, const BoundTable& t) { return e.eval(t); }

namespace bounds_detail {

using E = BoundExpr;
inline E L(std::int64_t v) { return E::lit(v); }
inline E M(std::int64_t n) { return E::m(n); }
inline E C(std::int64_t n, std::int64_t k) { return E::binom(n, k); }

// Rows shared by both tables (n = 1..7, 9..12, 15). C(n, n/2)/2 is written as C(n-1, n/2-1).
inline void add_common_prefix(BoundTable& t) {
  t.add(1, "k1", L(1));
  t.add(2, "triangle", L(3));
  t.add(3, "fano", L(7));
  t.add(4, "aht(triangle)", pow(L(2), 3) + L(4) * M(2) + C(3, 1));
  t.add(5, "aht(fano)", pow(L(2), 4) + L(5) * M(3));
  t.add(6, "am(triangle, fano)", M(2) * pow(M(3), 2));
  t.add(7, "aht(preset(m5))", pow(L(2), 6) + L(7) * M(5));
}

inline void add_middle(BoundTable& t) {
  t.add(9, "am(fano, fano)", pow(M(3), 4));
  t.add(10, "am(triangle, preset(m5))", M(2) * pow(M(5), 2));
  t.add(11, "maht3(preset(m9))", L(15) * pow(L(2), 8) + L(9) * M(9));
  t.add(12, "am(preset(m4), fano)", M(4) * pow(M(3), 4));
}

}  // namespace bounds_detail

/// Upper bounds after the multi-core and modified block constructions.
inline BoundTable build_paper_table() {
  using namespace bounds_detail;
  BoundTable t;
  add_common_prefix(t);
  t.add(8, "mc(5, fano, aht(fano), fano)",
        M(3) * M(5) + M(3) * M(5) + C(4, 2) * M(3) * M(3) + C(4, 3) * M(5));
  add_middle(t);
  // m_A(5): AHT over the Fano plane, 2^4 + 5 m(3)
  const E m_a5 = pow(L(2), 4) + L(5) * M(3);
  t.add(13, "mblock(4, preset(m5), fano, preset(m5), preset(m4))",
        (M(3) + pow(L(2), 3)) * pow(M(5), 2) + L(2) * m_a5 * pow(M(4), 2) + L(4) * M(5) * pow(M(4), 2));
  t.add(14, "mc(5, preset(m9), preset(m5), preset(m4))",
        L(2) * M(9) * M(5) + pow(M(5), 2) * M(4) + C(4, 1) * M(9) * M(4) + C(4, 4) * pow(M(5), 2));
  t.add(15, "am(preset(m5), fano)", pow(M(3), 5) * M(5));
  // m_A(6): AHT over the 23-edge 4-uniform hypergraph, 2^5 + 6 m(4) + C(6,3)/2
  const E m_a6 = pow(L(2), 5) + L(6) * M(4) + C(5, 2);
  t.add(16, "mblock(5, preset(m6), preset(m4), preset(m6), preset(m5))",
        (M(4) + pow(L(2), 4)) * pow(M(6), 2) + L(2) * m_a6 * pow(M(5), 2) + L(4) * M(6) * pow(M(5), 2));
  t.add(17, "mc(7, preset(m10), preset(m7), preset(m3))",
        L(2) * M(7) * M(10) + L(2) * M(3) * pow(M(7), 2) + C(3, 1) * pow(M(3), 2) * M(10) + C(3, 3) * pow(M(7), 2));
  return t;
}

/// Best-known bounds before the multi-core and modified block constructions.
inline BoundTable legacy_table() {
  using namespace bounds_detail;
  BoundTable t;
  add_common_prefix(t);
  t.add(8, "m8first(fano, fano, aht(fano))", L(2) * M(3) * M(5) + L(8) * pow(M(3), 2) + pow(L(2), 7) + C(7, 3));
  add_middle(t);
  t.add(13, "maht3(maht3(am(fano, fano)))", L(17) * pow(L(2), 10) + L(11) * M(11));
  t.add(14, "am(triangle, aht(preset(m5)))", M(2) * pow(M(7), 2));
  t.add(15, "am(preset(m5), fano)", pow(M(3), 5) * M(5));
  t.add(16, "am(triangle, m8first(fano, fano, aht(fano)))", M(2) * pow(M(8), 2));
  t.add(17, "maht3(am(preset(m5), fano))", L(21) * pow(L(2), 14) + L(15) * M(15));
  return t;
}

inline std::string format_table(const BoundTable& t) {
  std::size_t wv = 5, we = 10;
  for (const BoundRow* r : t.rows()) {
    wv = std::max(wv, r->value.str().size());
    we = std::max(we, r->expr.str().size());
  }
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(static_cast<int>(wv) + 2) << "bound"
     << std::setw(static_cast<int>(we) + 2) << "recurrence"
     << "recipe\n";
  for (const BoundRow* r : t.rows()) {
    os << std::left << std::setw(4) << r->n << std::setw(static_cast<int>(wv) + 2) << r->value.str()
       << std::setw(static_cast<int>(we) + 2) << r->expr.str() << r->recipe << '\n';
  }
  return os.str();
}

/// Columns: n, bound, recipe.
inline std::string format_table_tsv(const BoundTable& t) {
  std::ostringstream os;
  os << "n\tbound\trecipe\n";
  for (const BoundRow* r : t.rows()) os << r->n << '\t' << r->value.str() << '\t' << r->recipe << '\n';
  return os.str();
}

}  // namespace propb
