// Acceptance checks 1-11. Prints one PASS/FAIL/SKIP line per check and
// exits nonzero if any check fails. Check 11 needs nauty's geng and shortg
// (GTOOLS_DIR or PATH) and is skipped without them.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gsearch/canon.hpp"
#include "gsearch/enumerate.hpp"
#include "gsearch/graph6.hpp"
#include "gsearch/ramsey.hpp"
#include "gsearch/sat.hpp"
#include "gsearch/tool_bridge.hpp"
#include "oracle.hpp"

using namespace gsearch;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

Outcome pass(std::string detail) { return {Verdict::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Verdict::fail, std::move(detail)}; }

struct Check {
  int id;
  const char* title;
  double budget_seconds;  // 0: no limit
  std::function<Outcome()> body;
};

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Edge-by-edge check of target[p(u)][p(v)] == source[u][v].
bool maps_onto(const Graph& source, const Permutation& p, const Graph& target) {
  for (int u = 0; u < source.order(); ++u)
    for (int v = 0; v < source.order(); ++v)
      if (source.has_edge(u, v) != target.has_edge(p[u], p[v])) return false;
  return true;
}

std::vector<std::string> graph6_lines(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  for (const Graph& g : graphs) out.push_back(encode_graph6(g));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome graph6_fidelity() {
  if (decode_graph6("DqK").to_matrix() != fixtures::kDqK) return fail("decode(DqK) differs from the matrix");
  if (encode_graph6(Graph::from_matrix(fixtures::kDqK)) != "DqK") return fail("encode(matrix) != DqK");
  std::size_t checked = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      if (decode_graph6(encode_graph6(g)) != g) return fail("round trip failed for " + encode_graph6(g));
      ++checked;
    }
  }
  return pass(std::to_string(checked) + " graphs on 0..5 vertices round-trip");
}

Outcome canon_oracle() {
  std::set<Graph> forms;
  for (const Graph& g : oracle::all_labeled_graphs(5)) forms.insert(canonical_form(g));
  if (forms.size() != 34) return fail(std::to_string(forms.size()) + " classes on 5 vertices, expected 34");
  std::mt19937_64 rng(2024);
  int agree = 0, positives = 0;
  for (int k = 0; k < 1000; ++k) {
    const Graph a = oracle::random_graph(6, 0.5, rng);
    const Graph b = (k % 2) ? oracle::permuted(a, shuffled(6, rng)) : oracle::random_graph(6, 0.5, rng);
    const bool brute = oracle::find_isomorphism(a, b).has_value();
    positives += brute;
    if ((canonical_form(a) == canonical_form(b)) == brute) ++agree;
  }
  if (agree != 1000) return fail(std::to_string(1000 - agree) + " of 1000 pairs disagree with brute force");
  return pass("34 classes; 1000/1000 pairs at n=6 agree (" + std::to_string(positives) + " isomorphic)");
}

Outcome worked_example() {
  const Graph g = Graph::from_matrix(fixtures::kCanonInput);
  const Graph published = Graph::from_matrix(fixtures::kCanonOutput);
  const CanonicalResult r = densenauty(g);
  if (canonical_form(published) != r.canonic) return fail("published canonic form is in a different class");
  if (!maps_onto(g, r.permutation, r.canonic)) return fail("permutation does not carry the input onto canonic");
  return pass("canonic " + encode_graph6(r.canonic) + ", permutation " + to_string(r.permutation, 1) +
              (r.canonic == published ? " (matches the published form)" : ""));
}

Outcome iso_examples() {
  const Graph a = Graph::from_matrix(fixtures::kIsoA);
  const Graph b = Graph::from_matrix(fixtures::kIsoB);
  const auto w = isomorphic(5, a, b);
  if (!w) return fail("positive pair reported non-isomorphic");
  if (!maps_onto(a, w->perm, b)) return fail("witness does not map Graph1 onto Graph2");
  if (isomorphic(5, Graph::from_matrix(fixtures::kNonIsoA), Graph::from_matrix(fixtures::kNonIsoB)))
    return fail("negative pair reported isomorphic");
  return pass("witness " + to_string(w->perm, 1) + "; negative pair absent");
}

Outcome party_problem() {
  const auto five = gen_ramsey_gt({3, 3, 5});
  if (five.size() != 1 || five.front() != canonical_form(decode_graph6("DqK")))
    return fail("(3,3,5) gave " + std::to_string(five.size()) + " classes, expected the 5-cycle alone");
  if (!gen_ramsey_gt({3, 3, 6}).empty()) return fail("(3,3,6) is not empty");
  GenerateOptions labeled, unfiltered, neither;
  labeled.canonize = false;
  unfiltered.filter = false;
  neither.canonize = neither.filter = false;
  const auto a = run_ramsey_gt({3, 3, 5}, labeled).graphs.size();
  const auto b = run_ramsey_gt({3, 3, 5}, unfiltered).graphs.size();
  const auto c = run_ramsey_gt({3, 3, 5}, neither).graphs.size();
  const std::string counts = std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c);
  if (a != 12 || b != 34 || c != 1024) return fail("variant counts " + counts + ", expected 12/34/1024");
  return pass("1 class at n=5, none at n=6; variants " + counts);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::vector<std::size_t> expected_row(int upto) {
  return {fixtures::kRamsey35Counts.begin(), fixtures::kRamsey35Counts.begin() + upto};
}

Outcome table1() {
  const RamseyResult r = run_ramsey_gt({3, 5, 14});
  std::vector<std::size_t> got;
  for (const auto& l : r.levels) got.push_back(l.count);
  if (got != expected_row(14)) return fail("counts " + join(got));
  return pass("counts " + join(got));
}

Outcome table2() {
  std::vector<std::size_t> got;
  for (int n = 1; n <= 11; ++n) got.push_back(gen_ramsey_cg({3, 5, n}).size());
  if (got != expected_row(11)) return fail("counts " + join(got));
  return pass("counts " + join(got));
}

Outcome pipelines() {
  int compared = 0;
  for (auto [t, upto] : {std::pair{3, 6}, std::pair{5, 9}}) {
    for (int n = 0; n <= upto; ++n) {
      if (graph6_lines(gen_ramsey_gt({3, t, n})) != graph6_lines(gen_ramsey_cg({3, t, n})))
        return fail("gt and cg differ at (3," + std::to_string(t) + "," + std::to_string(n) + ")");
      ++compared;
    }
  }
  return pass(std::to_string(compared) + " instances identical");
}

Outcome sat_completeness() {
  std::mt19937_64 rng(4242);
  int sat = 0;
  std::uint64_t models = 0;
  for (int k = 0; k < 200; ++k) {
    const int vars = 1 + static_cast<int>(rng() % 12);
    const int clauses = static_cast<int>(rng() % (5 * vars + 1));
    const auto f = oracle::random_cnf(vars, clauses, 1 + static_cast<int>(rng() % 3), rng);
    std::vector<int> projection;
    for (int v = 1; v <= vars; ++v)
      if (rng() % 3) projection.push_back(v);
    const auto m = sat::solve(f);
    if (m.has_value() != oracle::satisfiable(f)) return fail("status mismatch on formula " + std::to_string(k));
    if (m && !m->satisfies(f)) return fail("model does not satisfy formula " + std::to_string(k));
    const auto all = sat::solve_all(f, projection);
    const auto expected = oracle::projected_model_count(f, projection);
    if (all.size() != expected) {
      return fail("formula " + std::to_string(k) + ": " + std::to_string(all.size()) + " projected models, expected " +
                  std::to_string(expected));
    }
    for (const auto& model : all)
      if (!model.satisfies(f)) return fail("enumerated model does not satisfy formula " + std::to_string(k));
    sat += m.has_value();
    models += expected;
  }
  return pass("200 formulas (" + std::to_string(sat) + " satisfiable, " + std::to_string(models) +
              " projected models) agree");
}

Outcome dedup() {
  std::vector<Graph> graphs;
  for (const auto& atom : fixtures::kCycleAtoms) graphs.push_back(decode_graph6(atom));
  const auto out = dedup_canonical(graphs);
  if (out.size() != 1) return fail(std::to_string(out.size()) + " classes, expected 1");
  if (out.front() != canonical_form(decode_graph6("DqK"))) return fail("class representative differs");
  return pass("12 atoms -> " + encode_graph6(out.front()));
}

Outcome cross_validation() {
  using tools::ToolSpec;
  const auto geng = tools::find_tool({{}, "geng", {}});
  const auto shortg = tools::find_tool({{}, "shortg", {}});
  if (!geng || !shortg) return {Verdict::skip, "geng/shortg not found via GTOOLS_DIR or PATH"};

  std::string counts;
  for (int n = 1; n <= 8; ++n) {
    const auto lines = tools::exec_stream({{}, "geng", {"-q", std::to_string(n)}});
    const auto ours = all_nonisomorphic(n);
    if (lines.size() != ours.size())
      return fail("geng -q " + std::to_string(n) + ": " + std::to_string(lines.size()) + " vs " +
                  std::to_string(ours.size()));
    std::vector<Graph> theirs;
    for (const auto& l : lines) theirs.push_back(decode_graph6(l));
    if (dedup_canonical(theirs) != ours) return fail("geng -q " + std::to_string(n) + " lists different classes");
    counts += (n > 1 ? "," : "") + std::to_string(lines.size());
  }

  std::mt19937_64 rng(99);
  for (int list = 0; list < 30; ++list) {
    const int n = 4 + list % 6;
    std::vector<Graph> graphs;
    for (int k = 0; k < 60; ++k) graphs.push_back(oracle::random_graph(n, 0.2 + 0.02 * list, rng));
    for (int k = 0; k < 30; ++k) graphs.push_back(oracle::permuted(graphs[k], shuffled(n, rng)));
    std::vector<std::string> input;
    for (const Graph& g : graphs) input.push_back(encode_graph6(g));
    const auto reduced = tools::exec_bidi({{}, "shortg", {"-q"}}, input);
    const auto ours = dedup_canonical(graphs);
    if (reduced.size() != ours.size())
      return fail("shortg list " + std::to_string(list) + ": " + std::to_string(reduced.size()) + " vs " +
                  std::to_string(ours.size()) + " classes");
  }
  return pass("geng counts " + counts + "; 30 shortg lists agree (" + geng->parent_path().string() + ")");
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {1, "graph6 fidelity", 1, graph6_fidelity},
      {2, "canonization vs brute force", 30, canon_oracle},
      {3, "worked canonization example", 1, worked_example},
      {4, "isomorphism examples", 1, iso_examples},
      {5, "party problem", 10, party_problem},
      {6, "Ramsey(3,5) generate-and-test counts, n=1..14", 600, table1},
      {7, "Ramsey(3,5) constrain-and-generate counts, n=1..11", 900, table2},
      {8, "gt and cg pipelines agree", 0, pipelines},
      {9, "SAT completeness vs truth tables", 30, sat_completeness},
      {10, "dedup of twelve 5-cycle labelings", 1, dedup},
      {11, "cross-validation against geng/shortg", 0, cross_validation},
  };
  int failures = 0;
  for (const Check& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.verdict == Verdict::pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      std::ostringstream os;
      os << o.detail << "; over the " << c.budget_seconds << " s budget";
      o = fail(os.str());
    }
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "SKIP";
    std::printf("[%s] %2d %s: %s (%.3f s)\n", tag, c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.verdict == Verdict::fail;
  }
  return failures == 0 ? 0 : 1;
}
