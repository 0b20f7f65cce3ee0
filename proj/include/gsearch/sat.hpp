#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsearch::sat {

struct Literal {
  int var = 1;
  bool positive = true;

  // Throws FormatError for 0.
  static Literal from_dimacs(int lit);
  int to_dimacs() const noexcept { return positive ? var : -var; }
  Literal operator~() const noexcept { return {var, !positive}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

class Clause {
 public:
  // Removes repeated literals. Returns nullopt for a tautology (both
  // polarities of some variable). Throws FormatError when empty.
  static std::optional<Clause> make(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {}
  std::vector<Literal> literals_;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int num_vars);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  int new_var() { return ++num_vars_; }
  // Returns false when the clause was a tautology and was dropped. Throws
  // FormatError if a literal's variable exceeds num_vars().
  bool add_clause(std::vector<Literal> literals);

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// Total assignment over [1, num_vars].
class Model {
 public:
  explicit Model(std::vector<bool> values) : values_(std::move(values)) {}  // values[0] unused
  int num_vars() const noexcept { return static_cast<int>(values_.size()) - 1; }
  bool operator[](int var) const noexcept { return values_[var]; }
  bool satisfies(const Clause& c) const;
  bool satisfies(const CnfFormula& f) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<bool> values_;
};

// Complete DPLL: unit propagation, pure-literal elimination, branching on
// the lowest unassigned variable with false tried first.
std::optional<Model> solve(const CnfFormula& f);

// One model per satisfying assignment of the projection variables. After
// each model the search backjumps to the deepest projection decision and
// flips it, which blocks that projection without growing the clause set. Pure-literal elimination is applied only to variables outside the
// projection. `on_model` returning false stops the enumeration early.
std::vector<Model> solve_all(const CnfFormula& f, std::span<const int> projection);
std::size_t solve_all(const CnfFormula& f, std::span<const int> projection,
                      const std::function<bool(const Model&)>& on_model);

std::string to_dimacs(const CnfFormula& f);
// Skips "c" comment lines. Throws FormatError on a missing or malformed
// header, a literal beyond the declared variable count, a clause count that
// disagrees with the header, or a clause without its terminating 0.
CnfFormula from_dimacs(std::string_view text);

}  // namespace gsearch::sat
