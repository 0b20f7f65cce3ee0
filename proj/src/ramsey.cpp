#include "gsearch/ramsey.hpp"

#include <bit>
#include <chrono>

#include "gsearch/canon.hpp"
#include "gsearch/enumerate.hpp"
#include "gsearch/error.hpp"

namespace gsearch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// No two vertices of `set` adjacent.
bool independent(const Graph& g, VertexMask set) {
  for (VertexMask m = set; m != 0; m &= m - 1) {
    if (g.row(std::countr_zero(m)) & set) return false;
  }
  return true;
}

// Every two vertices of `set` adjacent.
bool clique(const Graph& g, VertexMask set) {
  for (VertexMask m = set; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    if ((g.row(v) | (VertexMask{1} << v) | ~set) != ~VertexMask{0}) return false;
  }
  return true;
}

// row_i <=lex row_j over the columns other than i and j, using one
// "equal so far" variable per position.
void add_lex_chain(sat::CnfFormula& f, const EdgeVarMap& edges, int i, int j) {
  using sat::neg;
  using sat::pos;
  const int n = edges.vertex_count();
  std::vector<int> cols;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) cols.push_back(k);
  int eq = 0;  // 0: the empty prefix, which is trivially equal
  for (std::size_t p = 0; p < cols.size(); ++p) {
    const int a = edges.var(i, cols[p]);
    const int b = edges.var(j, cols[p]);
    auto guarded = [&](std::vector<sat::Literal> lits) {
      if (eq != 0) lits.insert(lits.begin(), neg(eq));
      f.add_clause(std::move(lits));
    };
    guarded({neg(a), pos(b)});
    if (p + 1 == cols.size()) break;
    const int next = f.new_var();
    if (eq != 0) f.add_clause({neg(next), pos(eq)});
    f.add_clause({neg(next), neg(a), pos(b)});
    f.add_clause({neg(next), pos(a), neg(b)});
    guarded({pos(a), pos(b), pos(next)});
    guarded({neg(a), neg(b), pos(next)});
    eq = next;
  }
}

void add_unsatisfiable(sat::CnfFormula& f) {
  const int z = f.new_var();
  f.add_clause({sat::pos(z)});
  f.add_clause({sat::neg(z)});
}

// Each k-subset must contain at least one pair whose edge literal is true
// when `edge_color` is set (for s: an edge) or false otherwise (for t: a
// non-edge).
void add_no_monochromatic(sat::CnfFormula& f, const EdgeVarMap& edges, int k, bool edge_color) {
  const int n = edges.vertex_count();
  bool impossible = false;
  for_each_k_subset(n, k, [&](VertexMask set) {
    std::vector<int> vs;
    for (VertexMask m = set; m != 0; m &= m - 1) vs.push_back(std::countr_zero(m));
    std::vector<sat::Literal> lits;
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = x + 1; y < vs.size(); ++y) lits.push_back({edges.var(vs[x], vs[y]), edge_color});
    if (lits.empty()) {
      impossible = true;
      return false;
    }
    f.add_clause(std::move(lits));
    return true;
  });
  if (impossible) add_unsatisfiable(f);
}

}  // namespace

void RamseyInstance::validate() const {
  if (s < 1 || t < 1) throw Error("Ramsey bounds must be at least 1");
  if (n < 0) throw SizeMismatchError("negative vertex count");
  if (n > Graph::kMaxVertices) throw CapacityError("vertex count beyond the cap");
}

bool is_ramsey(const RamseyInstance& inst, const Graph& g) {
  if (g.order() != inst.n) {
    throw SizeMismatchError("graph has " + std::to_string(g.order()) + " vertices, instance has " +
                            std::to_string(inst.n));
  }
  const bool no_independent = for_each_k_subset(inst.n, inst.s, [&](VertexMask set) { return !independent(g, set); });
  if (!no_independent) return false;
  return for_each_k_subset(inst.n, inst.t, [&](VertexMask set) { return !clique(g, set); });
}

RamseyResult run_ramsey_gt(const RamseyInstance& inst, const GenerateOptions& opts) {
  inst.validate();
  RamseyResult result;
  std::vector<Graph> level{Graph(0)};
  if (opts.filter && !is_ramsey({inst.s, inst.t, 0}, level.front())) level.clear();
  for (int size = 1; size <= inst.n; ++size) {
    const auto start = Clock::now();
    const RamseyInstance sub{inst.s, inst.t, size};
    GraphPredicate keep = [](const Graph&) { return true; };
    if (opts.filter) keep = [sub](const Graph& h) { return is_ramsey(sub, h); };
    ExtendOptions extend;
    extend.canonize = opts.canonize;
    extend.strict = false;  // each level comes out of the previous reduce step
    extend.jobs = opts.jobs;
    ExtendStats stats;
    level = extend_and_reduce(level, keep, extend, &stats);
    result.levels.push_back({size, level.size(), seconds_since(start), stats.canon_seconds, 0});
  }
  result.graphs = std::move(level);
  return result;
}

std::vector<Graph> gen_ramsey_gt(const RamseyInstance& inst) { return run_ramsey_gt(inst).graphs; }

EdgeVarMap::EdgeVarMap(int n) : n_(n) {
  if (n < 0) throw SizeMismatchError("negative vertex count");
}

int EdgeVarMap::var(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u == v || u < 0 || v >= n_) throw Error("no edge variable for pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  // Pairs in rows before u, then the offset within row u.
  return u * n_ - u * (u + 1) / 2 + (v - u);
}

std::pair<int, int> EdgeVarMap::pair_of(int var) const {
  if (var < 1 || var > num_edge_vars()) throw Error("variable " + std::to_string(var) + " is not an edge variable");
  int u = 0;
  int remaining = var;
  while (remaining > n_ - 1 - u) {
    remaining -= n_ - 1 - u;
    ++u;
  }
  return {u, u + remaining};
}

std::vector<int> EdgeVarMap::projection() const {
  std::vector<int> vars(static_cast<std::size_t>(num_edge_vars()));
  for (int v = 1; v <= num_edge_vars(); ++v) vars[v - 1] = v;
  return vars;
}

RamseyEncoding encode_ramsey(const RamseyInstance& inst) {
  inst.validate();
  if (inst.n < 1) throw Error("encoding needs at least one vertex");
  EdgeVarMap edges(inst.n);
  sat::CnfFormula f(edges.num_edge_vars());
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j) add_lex_chain(f, edges, i, j);
  add_no_monochromatic(f, edges, inst.s, true);
  add_no_monochromatic(f, edges, inst.t, false);
  return {edges, std::move(f)};
}

Graph decode_model(const EdgeVarMap& edges, const sat::Model& model) {
  Graph g(edges.vertex_count());
  for (int v = 1; v <= edges.num_edge_vars(); ++v) {
    if (model[v]) {
      auto [a, b] = edges.pair_of(v);
      g.set_edge(a, b, true);
    }
  }
  return g;
}

RamseyResult run_ramsey_cg(const RamseyInstance& inst) {
  inst.validate();
  RamseyResult result;
  const auto start = Clock::now();
  if (inst.n == 0) {
    result.graphs.push_back(Graph(0));
    result.levels.push_back({0, 1, seconds_since(start), 0.0, 1});
    return result;
  }
  const RamseyEncoding enc = encode_ramsey(inst);
  const std::vector<int> projection = enc.edges.projection();
  double canon_seconds = 0.0;
  std::size_t models = sat::solve_all(enc.cnf, projection, [&](const sat::Model& m) {
    const Graph g = decode_model(enc.edges, m);
    const auto canon_start = Clock::now();
    result.graphs.push_back(canonical_form(g));
    canon_seconds += seconds_since(canon_start);
    return true;
  });
  sort_unique(result.graphs);
  result.levels.push_back({inst.n, result.graphs.size(), seconds_since(start), canon_seconds, models});
  return result;
}

std::vector<Graph> gen_ramsey_cg(const RamseyInstance& inst) { return run_ramsey_cg(inst).graphs; }

}  // namespace gsearch
