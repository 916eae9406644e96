// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "propb/propb.hpp"
#include "property_suites.hpp"

using namespace propb;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Peak resident set size in bytes, 0 if unavailable.
std::uint64_t peak_rss_bytes() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream is(line.substr(6));
      std::uint64_t kb = 0;
      is >> kb;
      return kb * 1024;
    }
  }
  return 0;
}

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "  mismatch: " << what << '\n';
    }
  }
};

struct Outcome {
  bool pass;
  std::string summary;
  std::string details;
};

Outcome ac1() {
  const auto t0 = Clock::now();
  const std::vector<std::string> want = {"1",     "3",     "7",     "23",     "51",     "147",
                                         "421",   "1212",  "2401",  "7803",   "25449",  "55223",
                                         "200889", "528218", "857157", "3308499", "10375782"};
  Check c;
  const BoundTable t = build_paper_table();
  c.expect(t.size() == 17, "table has 17 rows");
  for (std::int64_t n = 1; n <= 17; ++n) {
    const std::string got = t.m(n).str();
    c.expect(got == want[n - 1], "m(" + std::to_string(n) + ") = " + got + ", want " + want[n - 1]);
  }
  const std::string tsv = format_table_tsv(t);
  c.expect(tsv.find("\n17\t10375782\t") != std::string::npos, "tsv output lists row 17");
  const double s = seconds_since(t0);
  c.expect(s < 1.0, "runtime below 1 s");
  std::ostringstream sum;
  sum << "table values n=1..17 exact (" << s << " s)";
  return {c.ok, sum.str(), c.log.str()};
}

Outcome ac2() {
  Check c;
  double slowest = 0;
  std::string slowest_name;
  for (int n = 1; n <= 17; ++n) {
    const std::string recipe = "preset(m" + std::to_string(n) + ")";
    const auto t0 = Clock::now();
    const Prediction p = predicted_count(recipe);
    std::size_t edges = 0;
    {
      const Hypergraph h = build_recipe(recipe);
      edges = h.num_edges();
      c.expect(h.uniformity() == static_cast<std::size_t>(n), recipe + " uniformity");
      c.expect(BigInt(h.num_vertices()) == p.vertices, recipe + " vertex count");
    }
    const double s = seconds_since(t0);
    if (s > slowest) slowest = s, slowest_name = recipe;
    c.expect(p.exact && BigInt(edges) == p.count,
             recipe + ": generated " + std::to_string(edges) + ", predicted " + p.count.str());
    if (n <= 14) c.expect(s < 60.0, recipe + " within 60 s (took " + std::to_string(s) + " s)");
  }
  const BoundTable t = build_paper_table();
  c.expect(t.m(13) == 200889 && t.m(14) == 528218, "m13/m14 table values");
  c.expect(t.m(15) == 857157 && t.m(16) == 3308499 && t.m(17) == 10375782, "m15..m17 table values");
  const std::uint64_t peak = peak_rss_bytes();
  c.expect(peak < (std::uint64_t{4} << 30), "peak memory below 4 GB");
  std::ostringstream sum;
  sum << "m1..m17 generated counts equal predictions (slowest " << slowest_name << " " << slowest
      << " s, peak RSS " << peak / (1 << 20) << " MiB)";
  return {c.ok, sum.str(), c.log.str()};
}

Outcome ac3() {
  Check c;
  const std::pair<const char*, std::size_t> cases[] = {
      {"gaht(am(fano, fano), 2)", 275835},
      {"mc(5, preset(m8), aht(fano), fano)", 203139},
      {"m8first(fano, fano, aht(fano))", 1269},
      {"aht(aht(triangle))", 180},
  };
  for (const auto& [recipe, want] : cases) {
    const std::size_t got = build_recipe(recipe).num_edges();
    c.expect(got == want, std::string(recipe) + " = " + std::to_string(got) + ", want " + std::to_string(want));
    c.expect(predicted_count(recipe).count == want, std::string(recipe) + " prediction");
  }
  return {c.ok, "intermediate counts 275835, 203139, 1269, 180", c.log.str()};
}

Outcome ac4() {
  const auto t0 = Clock::now();
  Check c;
  for (const char* recipe : {"fano", "aht(triangle)", "aht(fano)", "am(triangle, fano)", "complete(5, 3)"}) {
    const ColorabilityVerdict v = decide(build_recipe(recipe), {}, Engine::Exhaustive);
    c.expect(v.kind == VerdictKind::NonColorable, std::string(recipe) + " is " + to_string(v.kind));
  }
  const double s = seconds_since(t0);
  c.expect(s < 60.0, "runtime below 60 s");
  std::ostringstream sum;
  sum << "exhaustive search finds all five cores non-colorable (" << s << " s)";
  return {c.ok, sum.str(), c.log.str()};
}

Outcome ac5() {
  const auto t0 = Clock::now();
  Check c;
  std::size_t checked = 0;
  for (const char* recipe : {"fano", "aht(triangle)"}) {
    const Hypergraph h = build_recipe(recipe);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const Hypergraph g = h.without_edge(e);
      const ColorabilityVerdict v = decide(g);
      const bool good = v.kind == VerdictKind::Colorable && v.witness && verify_witness(g, *v.witness);
      c.expect(good, std::string(recipe) + " minus edge " + std::to_string(e));
      ++checked;
    }
  }
  c.expect(checked == 30, "7 + 23 deletions checked");
  const double s = seconds_since(t0);
  c.expect(s < 300.0, "runtime below 5 min");
  std::ostringstream sum;
  sum << checked << " one-edge deletions colorable with verified witnesses (" << s << " s)";
  return {c.ok, sum.str(), c.log.str()};
}

Outcome ac6() {
  Check c;
  std::ostringstream sum;
  for (const char* recipe : {"preset(m7)", "preset(m8)"}) {
    const Hypergraph h = build_recipe(recipe);
    SolveBudget budget;
    budget.max_seconds = std::chrono::minutes(30);
    const ColorabilityVerdict v = decide(h, budget, Engine::Backtracking);
    c.expect(v.kind != VerdictKind::Colorable, std::string(recipe) + " reported colorable");
    const DimacsCnf cnf = parse_dimacs(export_nae_cnf(h));
    c.expect(cnf.num_vars == h.num_vertices() && cnf.clauses.size() == 2 * h.num_edges(),
             std::string(recipe) + " CNF header");
    sum << recipe << ' ' << to_string(v.kind) << " in " << v.stats.elapsed.count() << " s, " << v.stats.nodes
        << " nodes, CNF " << cnf.clauses.size() << " clauses; ";
  }
  std::string s = sum.str();
  s.resize(s.size() - 2);
  return {c.ok, s, c.log.str()};
}

Outcome ac7() {
  const auto t0 = Clock::now();
  Check c;
  for (std::int64_t v = 11; v <= 22; ++v) c.expect(blocked_bound(v, 5) >= 29, "blocked_bound(" + std::to_string(v) + ",5)");
  c.expect(schonheim(23, 5, 2, 1) == 28, "schonheim(23,5,2,1) = 28");
  c.expect(schonheim(24, 5, 2, 1) == 29, "schonheim(24,5,2,1) = 29");
  const auto seqs = admissible_degree_sequences(23, 140, 6);
  c.expect(seqs.size() == 2, "exactly two degree sequences");
  if (seqs.size() == 2) {
    c.expect(pair_intersection_cap(seqs[0]) == 335, "cap of <8,6^22> = 335");
    c.expect(pair_intersection_cap(seqs[1]) == 334, "cap of <7^2,6^21> = 334");
  }
  const RsResult rs = rs_check({5, 28, 335, Rational(3, 10)});
  c.expect(rs.value > Rational(99, 100) && rs.value < 1, "rs value in (0.99, 1)");
  c.expect(rs.colorable_guaranteed, "rs value strictly below 1");
  const GoldbergResult g = goldberg_lower(5);
  c.expect(g.bound == 28, "goldberg_lower(5) = 28");
  const Certificate cert = m5_certificate();
  c.expect(cert.valid && cert.bound == 29, "certificate concludes m(5) >= 29");
  const std::string text = render_text(cert);
  c.expect(text.size() >= 11 && text.substr(text.size() - 11) == "m(5) >= 29\n", "rendered claim line");
  const double s = seconds_since(t0);
  c.expect(s < 10.0, "runtime below 10 s");
  std::ostringstream sum;
  sum << "m(5) >= 29 certified, rs value " << to_decimal(rs.value) << ", goldberg 28 at x = " << g.x << " (" << s
      << " s)";
  return {c.ok, sum.str(), c.log.str()};
}

Outcome ac8() {
  const auto t0 = Clock::now();
  Check c;
  std::ostringstream sum;
  const std::pair<const char*, std::function<testing::SuiteResult()>> suites[] = {
      {"canonicalize", [] { return testing::canonicalize_idempotence(); }},
      {"cnf", [] { return testing::cnf_round_trip(); }},
      {"relabel", [] { return testing::relabeling_invariance(); }},
      {"engines", [] { return testing::engine_agreement(); }},
  };
  for (const auto& [name, run] : suites) {
    const testing::SuiteResult r = run();
    c.expect(r.ok(), std::string(name) + ": " + r.failure);
    sum << (sum.tellp() > 0 ? ", " : "") << name << ' ' << r.cases;
    if (std::string(name) == "relabel") c.expect(r.cases >= 1000, "at least 1000 relabeling cases");
  }
  const double s = seconds_since(t0);
  c.expect(s < 600.0, "runtime below 10 min");
  sum << " cases (" << s << " s)";
  return {c.ok, sum.str(), c.log.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), ""};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ' ' << o.summary << '\n' << o.details << std::flush;
    if (!o.pass) ++failures;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 8 - failures << "/8\n";
  return failures ? 1 : 0;
}
