#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistkit/hseries.hpp"
#include "twistkit/rational.hpp"

namespace twistkit {

/// Polynomial with rational coefficients in a fixed number of commuting
/// variables. Used for h-series of q-numbers, for phi in (H, I), and for
/// the ansatz coefficients in (H1, H2, I1, I2).
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;  // zero, arity 0 (adapts on first combination)
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(const Rational& c, std::size_t nvars);
  static Polynomial variable(std::size_t index, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for zero
  std::optional<Rational> scalar_part() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& q);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned n) const;

  /// Substitutes polynomial `values[i]` for variable i (all of equal arity).
  Polynomial compose(std::span<const Polynomial> values) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Renders with the given variable names, highest total degree first.
  std::string render(std::span<const std::string> names) const;

 private:
  void adopt_arity(const Polynomial& o);

  std::size_t nvars_ = 0;
  Terms terms_;
};

template <>
struct coeff_traits<Polynomial> {
  static Polynomial one() { return Polynomial::constant(Rational(1), 0); }
  static std::optional<Rational> scalar_part(const Polynomial& p) { return p.scalar_part(); }
  static bool is_zero(const Polynomial& p) { return p.is_zero(); }
  static std::string render(const Polynomial& p);
  static bool is_atomic(const Polynomial& p) { return p.terms().size() <= 1; }
};

/// Generic evaluation of a polynomial in a (possibly noncommutative) ring
/// whose `values` pairwise commute.
template <Coefficient T>
T evaluate_in(const Polynomial& p, std::span<const T> values) {
  std::vector<std::vector<T>> powers(values.size());
  T result{};
  for (const auto& [exps, c] : p.terms()) {
    T term = coeff_traits<T>::one();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(coeff_traits<T>::one());
      while (cache.size() <= exps[i]) cache.push_back(cache.back() * values[i]);
      if (exps[i] > 0) term = term * cache[exps[i]];
    }
    result += term * c;
  }
  return result;
}

}  // namespace twistkit
