#pragma once

// Property B as NAE-SAT in DIMACS CNF: variable i+1 is true iff vertex i is
// Blue; each edge contributes (v_1 or ... or v_n) and (-v_1 or ... or -v_n).

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

inline void write_nae_cnf(std::ostream& os, const Hypergraph& h) {
  os << "c property-B instance: " << h.uniformity() << "-uniform, " << h.num_vertices() << " vertices, "
     << h.num_edges() << " edges\n";
  os << "p cnf " << h.num_vertices() << ' ' << 2 * h.num_edges() << '\n';
  std::string line;
  for (EdgeView e : h) {
    for (int sign = 0; sign < 2; ++sign) {
      line.clear();
      for (VertexId v : e) {
        if (sign) line.push_back('-');
        line += std::to_string(v + 1);
        line.push_back(' ');
      }
      line += "0\n";
      os << line;
    }
  }
}

inline std::string export_nae_cnf(const Hypergraph& h) {
  std::ostringstream os;
  write_nae_cnf(os, h);
  return os.str();
}

struct DimacsCnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<long>> clauses;
};

/// Strict DIMACS reader: comments only before the header, every clause
/// zero-terminated, literals within range, clause count matching the header.
inline DimacsCnf parse_dimacs(std::string_view text) {
  DimacsCnf out;
  bool header = false;
  std::size_t declared = 0;
  std::size_t line_no = 0;
  std::vector<long> current;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("dimacs line " + std::to_string(line_no) + ": " + what);
  };
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == 'c') {
      if (header) fail("comment after header");
      continue;
    }
    if (line.front() == 'p') {
      if (header) fail("second header");
      std::istringstream is{std::string(line)};
      std::string p, fmt;
      long long v = -1, c = -1;
      if (!(is >> p >> fmt >> v >> c) || p != "p" || fmt != "cnf" || v < 0 || c < 0) fail("malformed header");
      std::string rest;
      if (is >> rest) fail("trailing tokens in header");
      out.num_vars = static_cast<std::size_t>(v);
      declared = static_cast<std::size_t>(c);
      header = true;
      continue;
    }
    if (!header) fail("clause before header");
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      long lit = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), lit);
      if (ec != std::errc()) fail("bad literal");
      i = static_cast<std::size_t>(p - line.data());
      if (i < line.size() && line[i] != ' ' && line[i] != '\t') fail("bad literal");
      if (lit == 0) {
        out.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > out.num_vars) fail("literal out of range");
        current.push_back(lit);
      }
    }
  }
  if (!header) throw std::runtime_error("dimacs: missing header");
  if (!current.empty()) throw std::runtime_error("dimacs: unterminated clause");
  if (out.clauses.size() != declared) {
    throw std::runtime_error("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                             std::to_string(out.clauses.size()));
  }
  return out;
}

/// assignment[i] is the value of variable i+1.
inline bool satisfies(const DimacsCnf& cnf, const std::vector<bool>& assignment) {
  if (assignment.size() != cnf.num_vars) throw std::invalid_argument("assignment size mismatch");
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (long lit : clause) {
      const bool value = assignment[static_cast<std::size_t>(std::labs(lit)) - 1];
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

inline std::vector<bool> to_assignment(const Coloring& c) {
  std::vector<bool> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = c[i] == Color::Blue;
  return a;
}

}  // namespace propb
