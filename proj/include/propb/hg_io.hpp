#pragma once

// Text format (".hg"):
//   hg <uniformity> <num_vertices> <num_edges>
//   one edge per line, ascending 0-based vertex ids, edges in lexicographic order
// Lines starting with '#' are comments.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void write_hg(std::ostream& os, const Hypergraph& h) {
  os << "hg " << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
  std::string line;
  char buf[16];
  for (EdgeView e : h) {
    line.clear();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) line.push_back(' ');
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, e[i]);
      line.append(buf, p);
    }
    line.push_back('\n');
    os << line;
  }
}

inline std::string to_hg_string(const Hypergraph& h) {
  std::ostringstream os;
  write_hg(os, h);
  return os.str();
}

namespace detail {

inline std::vector<std::size_t> parse_numbers(std::string_view s, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || (p != s.data() + s.size() && *p != ' ' && *p != '\t' && *p != '\r')) {
      throw FormatError(line_no, "expected a non-negative integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(p - s.data());
  }
  return out;
}

}  // namespace detail

/// Strict reader: rejects wrong arity, unsorted or repeated vertices,
/// out-of-range ids, and edges out of lexicographic order (which covers duplicates).
inline Hypergraph read_hg(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, v = 0, m = 0;
  std::vector<VertexId> flat;
  std::vector<VertexId> prev;
  std::size_t edges = 0;

  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (!have_header) {
      std::string_view sv(line);
      if (sv.substr(0, 3) != "hg ") throw FormatError(line_no, "expected header 'hg <uniformity> <vertices> <edges>'");
      auto nums = detail::parse_numbers(sv.substr(3), line_no);
      if (nums.size() != 3) throw FormatError(line_no, "header needs exactly three integers");
      n = nums[0];
      v = nums[1];
      m = nums[2];
      if (n == 0 || v == 0) throw FormatError(line_no, "uniformity and vertex count must be positive");
      flat.reserve(n * m);
      have_header = true;
      continue;
    }
    if (line.empty()) throw FormatError(line_no, "empty line");
    auto nums = detail::parse_numbers(line, line_no);
    if (nums.size() != n) {
      throw FormatError(line_no, "edge has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(n));
    }
    std::vector<VertexId> cur(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (nums[i] >= v) throw FormatError(line_no, "vertex " + std::to_string(nums[i]) + " out of range");
      if (i > 0 && nums[i] <= nums[i - 1]) throw FormatError(line_no, "edge vertices not strictly ascending");
      cur[i] = static_cast<VertexId>(nums[i]);
    }
    if (edges > 0 && !std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end())) {
      throw FormatError(line_no, cur == prev ? "duplicate edge" : "edges not in lexicographic order");
    }
    flat.insert(flat.end(), cur.begin(), cur.end());
    prev = std::move(cur);
    ++edges;
  }
  if (!have_header) throw FormatError(line_no, "missing header");
  if (edges != m) {
    throw FormatError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges));
  }
  EdgeSetBuilder b(n, v);
  b.reserve(edges);
  for (std::size_t r = 0; r < edges; ++r) b.add(std::span<const VertexId>(flat.data() + r * n, n));
  return std::move(b).build();
}

inline Hypergraph read_hg_string(const std::string& text) {
  std::istringstream is(text);
  return read_hg(is);
}

inline Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hg(in);
}

}  // namespace propb
