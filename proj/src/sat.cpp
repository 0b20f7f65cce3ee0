#include "gsearch/sat.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gsearch/error.hpp"

namespace gsearch::sat {

Literal Literal::from_dimacs(int lit) {
  if (lit == 0) throw FormatError("literal 0 is the clause terminator, not a literal");
  return {lit > 0 ? lit : -lit, lit > 0};
}

std::optional<Clause> Clause::make(std::vector<Literal> literals) {
  if (literals.empty()) throw FormatError("empty clause");
  std::vector<Literal> kept;
  kept.reserve(literals.size());
  for (const Literal& l : literals) {
    if (l.var < 1) throw FormatError("variable ids start at 1");
    if (std::find(kept.begin(), kept.end(), ~l) != kept.end()) return std::nullopt;
    if (std::find(kept.begin(), kept.end(), l) == kept.end()) kept.push_back(l);
  }
  return Clause(std::move(kept));
}

CnfFormula::CnfFormula(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw FormatError("negative variable count");
}

bool CnfFormula::add_clause(std::vector<Literal> literals) {
  for (const Literal& l : literals) {
    if (l.var > num_vars_) {
      throw FormatError("literal " + std::to_string(l.to_dimacs()) + " exceeds variable count " +
                        std::to_string(num_vars_));
    }
  }
  auto clause = Clause::make(std::move(literals));
  if (!clause) return false;
  clauses_.push_back(std::move(*clause));
  return true;
}

bool Model::satisfies(const Clause& c) const {
  return std::any_of(c.literals().begin(), c.literals().end(),
                     [&](const Literal& l) { return l.var <= num_vars() && values_[l.var] == l.positive; });
}

bool Model::satisfies(const CnfFormula& f) const {
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) { return satisfies(c); });
}

namespace {

// Literal index: 2*var for the positive literal, 2*var+1 for the negative.
int index_of(const Literal& l) { return 2 * l.var + (l.positive ? 0 : 1); }
int negate(int lit) { return lit ^ 1; }
int var_of(int lit) { return lit >> 1; }

// Counter-based DPLL with chronological backtracking. Every clause tracks
// how many of its literals are true and false; every literal tracks how
// many unsatisfied clauses contain it, which drives pure-literal
// elimination.
class Dpll {
 public:
  Dpll(const CnfFormula& f, std::span<const int> projection)
      : num_vars_(f.num_vars()),
        value_(static_cast<std::size_t>(num_vars_) + 1, kUnassigned),
        projected_(static_cast<std::size_t>(num_vars_) + 1, false),
        occ_(2 * (static_cast<std::size_t>(num_vars_) + 1)),
        unsat_occ_(occ_.size(), 0) {
    for (int v : projection) {
      if (v < 1 || v > num_vars_) throw Error("projection variable " + std::to_string(v) + " out of range");
      projected_[v] = true;
    }
    for (int v = 1; v <= num_vars_; ++v)
      if (projected_[v]) order_.push_back(v);
    for (int v = 1; v <= num_vars_; ++v)
      if (!projected_[v]) order_.push_back(v);

    for (const Clause& c : f.clauses()) {
      const int id = static_cast<int>(clauses_.size());
      std::vector<int> lits;
      for (const Literal& l : c.literals()) {
        lits.push_back(index_of(l));
        occ_[index_of(l)].push_back(id);
        ++unsat_occ_[index_of(l)];
      }
      clauses_.push_back(std::move(lits));
    }
    sat_count_.assign(clauses_.size(), 0);
    false_count_.assign(clauses_.size(), 0);
  }

  std::size_t enumerate(const std::function<bool(const Model&)>& on_model) {
    std::size_t found = 0;
    for (const auto& c : clauses_) {
      if (c.size() == 1 && !assign_root_unit(c[0])) return found;
    }
    while (true) {
      if (!propagate()) {
        if (!backtrack()) return found;
        continue;
      }
      if (static_cast<int>(trail_.size()) == num_vars_) {
        ++found;
        if (!on_model(current_model())) return found;
        // Blocking the projected model: every later assignment must differ
        // on some projection variable. Decisions are taken on projection
        // variables first, so resuming at the deepest projection decision
        // is exactly the search that the blocking clause leaves.
        if (!jump_past_model()) return found;
        continue;
      }
      decide();
    }
  }

 private:
  static constexpr signed char kUnassigned = -1;

  struct Decision {
    std::size_t trail_pos;
    int lit;
    bool flipped;
  };

  bool is_true(int lit) const { return value_[var_of(lit)] == ((lit & 1) ? 0 : 1); }
  bool assigned(int var) const { return value_[var] != kUnassigned; }

  void assign(int lit) {
    value_[var_of(lit)] = (lit & 1) ? 0 : 1;
    trail_.push_back(lit);
    for (int c : occ_[lit]) {
      if (sat_count_[c]++ == 0) {
        for (int m : clauses_[c]) --unsat_occ_[m];
      }
    }
    for (int c : occ_[negate(lit)]) ++false_count_[c];
  }

  void unassign(int lit) {
    for (int c : occ_[negate(lit)]) --false_count_[c];
    for (int c : occ_[lit]) {
      if (--sat_count_[c] == 0) {
        for (int m : clauses_[c]) ++unsat_occ_[m];
      }
    }
    value_[var_of(lit)] = kUnassigned;
    trail_.pop_back();
  }

  bool assign_root_unit(int lit) {
    if (assigned(var_of(lit))) return is_true(lit);
    assign(lit);
    return true;
  }

  // Unit propagation to fixpoint, then pure-literal elimination on
  // non-projection variables, repeated until neither applies. Returns false
  // on conflict.
  bool propagate() {
    while (true) {
      while (head_ < trail_.size()) {
        const int falsified = negate(trail_[head_++]);
        for (int c : occ_[falsified]) {
          if (sat_count_[c] != 0) continue;
          const auto size = static_cast<int>(clauses_[c].size());
          if (false_count_[c] == size) return false;
          if (false_count_[c] == size - 1) {
            for (int m : clauses_[c]) {
              if (!assigned(var_of(m))) {
                assign(m);
                break;
              }
            }
          }
        }
      }
      bool changed = false;
      for (int v = 1; v <= num_vars_; ++v) {
        if (assigned(v) || projected_[v]) continue;
        const int p = 2 * v;
        if (unsat_occ_[p] == 0) {
          assign(p + 1);
          changed = true;
        } else if (unsat_occ_[p + 1] == 0) {
          assign(p);
          changed = true;
        }
      }
      if (!changed) return true;
    }
  }

  void decide() {
    int var = 0;
    for (int v : order_) {
      if (!assigned(v)) {
        var = v;
        break;
      }
    }
    decisions_.push_back({trail_.size(), 2 * var + 1, false});
    assign(2 * var + 1);
  }

  void undo_to(std::size_t pos) {
    while (trail_.size() > pos) unassign(trail_.back());
    head_ = std::min(head_, pos);
  }

  // Flips the most recent unflipped decision. False when exhausted.
  bool backtrack() {
    while (!decisions_.empty()) {
      Decision& d = decisions_.back();
      undo_to(d.trail_pos);
      if (!d.flipped) {
        d.flipped = true;
        d.lit = negate(d.lit);
        assign(d.lit);
        return true;
      }
      decisions_.pop_back();
    }
    undo_to(0);
    return false;
  }

  bool jump_past_model() {
    while (!decisions_.empty() && !projected_[var_of(decisions_.back().lit)]) {
      undo_to(decisions_.back().trail_pos);
      decisions_.pop_back();
    }
    return backtrack();
  }

  Model current_model() const {
    std::vector<bool> values(static_cast<std::size_t>(num_vars_) + 1, false);
    for (int v = 1; v <= num_vars_; ++v) values[v] = value_[v] == 1;
    return Model(std::move(values));
  }

  int num_vars_;
  std::vector<signed char> value_;
  std::vector<bool> projected_;
  std::vector<int> order_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> unsat_occ_;
  std::vector<int> sat_count_;
  std::vector<int> false_count_;
  std::vector<int> trail_;
  std::size_t head_ = 0;
  std::vector<Decision> decisions_;
};

}  // namespace

std::optional<Model> solve(const CnfFormula& f) {
  std::optional<Model> result;
  Dpll(f, {}).enumerate([&](const Model& m) {
    result = m;
    return false;
  });
  return result;
}

std::size_t solve_all(const CnfFormula& f, std::span<const int> projection,
                      const std::function<bool(const Model&)>& on_model) {
  std::vector<int> unique(projection.begin(), projection.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return Dpll(f, unique).enumerate(on_model);
}

std::vector<Model> solve_all(const CnfFormula& f, std::span<const int> projection) {
  std::vector<Model> out;
  solve_all(f, projection, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.literals()) os << l.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

CnfFormula from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long declared_clauses = 0;
  long seen_clauses = 0;
  CnfFormula f;
  std::vector<Literal> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first.front() == 'c') continue;
    if (first == "%") break;  // SATLIB end marker
    if (first == "p") {
      if (have_header) throw FormatError("duplicate DIMACS header");
      std::string kind;
      long vars = -1;
      if (!(ls >> kind >> vars >> declared_clauses) || kind != "cnf" || vars < 0 || declared_clauses < 0) {
        throw FormatError("malformed DIMACS header: " + line);
      }
      f = CnfFormula(static_cast<int>(vars));
      have_header = true;
      continue;
    }
    if (!have_header) throw FormatError("clause before the DIMACS header");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      long lit = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw FormatError("bad DIMACS token '" + tok + "'");
      if (lit == 0) {
        ++seen_clauses;
        f.add_clause(std::move(pending));
        pending.clear();
        continue;
      }
      if (std::labs(lit) > f.num_vars()) {
        throw FormatError("literal " + tok + " exceeds declared variable count " + std::to_string(f.num_vars()));
      }
      pending.push_back(Literal::from_dimacs(static_cast<int>(lit)));
    }
  }
  if (!have_header) throw FormatError("missing DIMACS header");
  if (!pending.empty()) throw FormatError("last clause is missing its terminating 0");
  if (seen_clauses != declared_clauses) {
    throw FormatError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(seen_clauses));
  }
  return f;
}

}  // namespace gsearch::sat
