#pragma once

// Exact solution of sparse linear systems over Q.
//
// Rows are scaled to primitive integer vectors and reduced with fraction-free
// pivoting (r <- b*r - a*p, then divided by its content). Pivot columns are
// the leftmost (or rightmost) possible ones, which is independent of the row
// order, so the particular solution (free unknowns set to zero) is
// deterministic.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "twistkit/rational.hpp"

namespace twistkit {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct LinearSolution {
  bool consistent = true;
  std::vector<Rational> particular;             // free unknowns are zero
  std::vector<std::vector<Rational>> nullspace;  // one vector per free unknown, ascending
  std::vector<std::size_t> pivot_columns;       // ascending
  std::vector<std::size_t> free_columns;        // ascending
};

enum class PivotPreference {
  leftmost,   // free unknowns are the last possible ones
  rightmost,  // free unknowns are the first possible ones
};

class ExactLinearSystem {
 public:
  explicit ExactLinearSystem(std::size_t num_unknowns, PivotPreference pref = PivotPreference::leftmost)
      : n_(num_unknowns), pref_(pref) {}

  std::size_t num_unknowns() const { return n_; }
  std::size_t num_equations() const { return equations_; }

  /// sum_i coeffs[i].second * x_{coeffs[i].first} = rhs
  void add_equation(const SparseVector& coeffs, const Rational& rhs);

  LinearSolution solve() const;

 private:
  using IntRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted; column n_ is the rhs

  void insert(IntRow row);

  std::size_t column(std::size_t c) const { return pref_ == PivotPreference::leftmost ? c : n_ - 1 - c; }

  std::size_t n_;
  PivotPreference pref_;
  std::size_t equations_ = 0;
  bool inconsistent_ = false;
  std::map<std::size_t, IntRow> pivots_;  // keyed by leading column
};

}  // namespace twistkit
