#include "twistkit/linear_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistkit {

namespace {

void make_primitive(std::vector<std::pair<std::size_t, Integer>>& row) {
  Integer g(0);
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  // Leading coefficient positive.
  if (!row.empty() && row.front().second < 0) g = -g;
  if (g != 1 && g != 0)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void ExactLinearSystem::add_equation(const SparseVector& coeffs, const Rational& rhs) {
  ++equations_;
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (const auto& [c, v] : coeffs) {
    if (c >= n_) throw std::out_of_range("ExactLinearSystem: unknown index out of range");
    if (sgn(v) != 0) entries.emplace_back(column(c), v);
  }
  if (sgn(rhs) != 0) entries.emplace_back(n_, rhs);
  if (entries.empty()) return;
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge duplicate columns.
  std::vector<std::pair<std::size_t, Rational>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(std::move(e));
  }
  Integer den(1);
  for (const auto& [c, v] : merged) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  IntRow row;
  for (const auto& [c, v] : merged) {
    if (sgn(v) == 0) continue;
    Integer x = v.get_num() * (den / v.get_den());
    row.emplace_back(c, std::move(x));
  }
  if (row.empty()) return;
  make_primitive(row);
  insert(std::move(row));
}

void ExactLinearSystem::insert(IntRow row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead == n_) {
      inconsistent_ = true;  // 0 = nonzero
      return;
    }
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      pivots_.emplace(lead, std::move(row));
      return;
    }
    const IntRow& p = it->second;
    Integer a = row.front().second, b = p.front().second, g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    // row <- b*row - a*p, leading entry cancels
    IntRow out;
    out.reserve(row.size() + p.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < p.size()) {
      if (j >= p.size() || (i < row.size() && row[i].first < p[j].first)) {
        out.emplace_back(row[i].first, b * row[i].second);
        ++i;
      } else if (i >= row.size() || p[j].first < row[i].first) {
        out.emplace_back(p[j].first, -a * p[j].second);
        ++j;
      } else {
        Integer v = b * row[i].second - a * p[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    row = std::move(out);
  }
}

LinearSolution ExactLinearSystem::solve() const {
  LinearSolution sol;
  sol.consistent = !inconsistent_;
  for (const auto& [c, r] : pivots_) sol.pivot_columns.push_back(c);
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (k < sol.pivot_columns.size() && sol.pivot_columns[k] == c) ++k;
      else sol.free_columns.push_back(c);
    }
  }
  if (!sol.consistent) return sol;

  // Back substitution from the rightmost pivot; `seed` fixes the free unknowns.
  auto back_substitute = [&](std::vector<Rational> x, bool homogeneous) {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const IntRow& row = it->second;
      Rational acc(0);
      for (std::size_t i = 1; i < row.size(); ++i) {
        const auto& [c, v] = row[i];
        if (c == n_) {
          if (!homogeneous) acc += Rational(v);
        } else if (sgn(x[c]) != 0) {
          acc -= Rational(v) * x[c];
        }
      }
      x[it->first] = acc / Rational(row.front().second);
    }
    return x;
  };

  sol.particular = back_substitute(std::vector<Rational>(n_), false);
  for (std::size_t f : sol.free_columns) {
    std::vector<Rational> seed(n_);
    seed[f] = 1;
    sol.nullspace.push_back(back_substitute(std::move(seed), true));
  }
  if (pref_ == PivotPreference::rightmost) {
    // Back to caller's column numbering.
    auto unmap = [&](std::vector<Rational>& x) { std::reverse(x.begin(), x.end()); };
    unmap(sol.particular);
    for (auto& v : sol.nullspace) unmap(v);
    std::reverse(sol.nullspace.begin(), sol.nullspace.end());
    for (auto* cols : {&sol.pivot_columns, &sol.free_columns}) {
      for (auto& c : *cols) c = column(c);
      std::reverse(cols->begin(), cols->end());
    }
  }
  return sol;
}

}  // namespace twistkit
