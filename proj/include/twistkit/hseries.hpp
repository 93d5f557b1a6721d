#pragma once

// Truncated formal power series in the deformation parameter h.
//
// An HSeries<T> of order N stores c_0 .. c_N; everything from h^{N+1} on is
// discarded. The order is part of the value: combining series of different
// orders throws TruncationMismatch instead of silently re-truncating.
// Use truncated() / padded() to change the order explicitly.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/errors.hpp"
#include "twistkit/rational.hpp"

namespace twistkit {

// Ring-specific hooks for coefficient types. Specialized next to each type.
template <typename T>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational one() { return Rational(1); }
  static std::optional<Rational> scalar_part(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string render(const Rational& x) { return to_string(x); }
  // A coefficient renders as a single token (no parentheses needed).
  static bool is_atomic(const Rational&) { return true; }
};

template <typename T>
concept Coefficient = requires(const T& a, const T& b, const Rational& q) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a * q } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  requires requires(T& m) { m += a; };
  { coeff_traits<T>::one() } -> std::convertible_to<T>;
  { coeff_traits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Coefficient T>
class HSeries {
 public:
  /// Zero series of the given order.
  explicit HSeries(int order) : coeffs_(checked_size(order)) {}

  explicit HSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("HSeries needs at least one coefficient");
  }

  static HSeries constant(const T& c, int order) {
    HSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static HSeries one(int order) { return constant(coeff_traits<T>::one(), order); }

  /// c * h^k truncated at `order` (zero if k > order).
  static HSeries monomial(const T& c, int k, int order) {
    HSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  /// Drops terms above `order` (must not exceed the current order).
  HSeries truncated(int order) const {
    if (order > this->order()) throw TruncationMismatch("truncated(): target order exceeds series order");
    return HSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// Extends with zero coefficients; valid for series that are polynomials in h.
  HSeries padded(int order) const {
    if (order < this->order()) return truncated(order);
    std::vector<T> c = coeffs_;
    c.resize(static_cast<std::size_t>(order) + 1);
    return HSeries(std::move(c));
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!coeff_traits<T>::is_zero(c)) return false;
    return true;
  }

  /// Lowest k with c_k != 0.
  std::optional<int> valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeff_traits<T>::is_zero(coeffs_[k])) return static_cast<int>(k);
    return std::nullopt;
  }

  friend bool operator==(const HSeries& a, const HSeries& b) { return a.coeffs_ == b.coeffs_; }

  friend HSeries operator+(const HSeries& a, const HSeries& b) {
    check_orders(a, b);
    std::vector<T> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
    return HSeries(std::move(c));
  }

  friend HSeries operator-(const HSeries& a, const HSeries& b) {
    check_orders(a, b);
    std::vector<T> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
    return HSeries(std::move(c));
  }

  friend HSeries operator-(const HSeries& a) { return a * Rational(-1); }

  friend HSeries operator*(const HSeries& a, const Rational& q) {
    std::vector<T> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] * q;
    return HSeries(std::move(c));
  }

  /// Cauchy product truncated at the common order.
  friend HSeries operator*(const HSeries& a, const HSeries& b) {
    check_orders(a, b);
    const int n = a.order();
    std::vector<T> c(a.coeffs_.size());
    for (int i = 0; i <= n; ++i) {
      if (coeff_traits<T>::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (coeff_traits<T>::is_zero(b.coeffs_[j])) continue;
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return HSeries(std::move(c));
  }

  HSeries& operator+=(const HSeries& o) { return *this = *this + o; }
  HSeries& operator-=(const HSeries& o) { return *this = *this - o; }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("HSeries order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  static void check_orders(const HSeries& a, const HSeries& b) {
    if (a.order() != b.order())
      throw TruncationMismatch("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                               std::to_string(b.order()));
  }

  std::vector<T> coeffs_;
};

template <Coefficient T>
HSeries<T> series_mul(const HSeries<T>& a, const HSeries<T>& b) {
  return a * b;
}

/// Applies f to every coefficient.
template <Coefficient T, typename F>
auto series_map(const HSeries<T>& s, F&& f) {
  using U = std::decay_t<decltype(f(s[0]))>;
  std::vector<U> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(f(c));
  return HSeries<U>(std::move(out));
}

/// Product of a scalar series with a series of ring elements.
template <Coefficient T>
HSeries<T> scale(const HSeries<Rational>& s, const HSeries<T>& x) {
  if (s.order() != x.order()) throw TruncationMismatch("scale(): series truncation orders differ");
  const int n = x.order();
  std::vector<T> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (sgn(s[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += x[j] * s[i];
  }
  return HSeries<T>(std::move(c));
}

/// Two-sided inverse. The constant term must be a nonzero scalar multiple of 1.
template <Coefficient T>
HSeries<T> series_inverse(const HSeries<T>& a) {
  auto c0 = coeff_traits<T>::scalar_part(a[0]);
  if (!c0 || sgn(*c0) == 0) throw NotInvertible("series_inverse: constant term is not an invertible scalar");
  const Rational inv0 = 1 / *c0;
  const int n = a.order();
  std::vector<T> b(static_cast<std::size_t>(n) + 1);
  b[0] = coeff_traits<T>::one() * inv0;
  for (int k = 1; k <= n; ++k) {
    T acc{};
    for (int i = 1; i <= k; ++i)
      if (!coeff_traits<T>::is_zero(a[i])) acc += a[i] * b[k - i];
    b[k] = acc * (-inv0);
  }
  return HSeries<T>(std::move(b));
}

/// Square root with constant term 1. Coefficients must commute pairwise.
template <Coefficient T>
HSeries<T> series_sqrt(const HSeries<T>& a) {
  auto c0 = coeff_traits<T>::scalar_part(a[0]);
  if (!c0 || *c0 != 1) throw NotInvertible("series_sqrt: constant term must be 1");
  const int n = a.order();
  std::vector<T> b(static_cast<std::size_t>(n) + 1);
  b[0] = coeff_traits<T>::one();
  for (int k = 1; k <= n; ++k) {
    T acc = a[k];
    for (int i = 1; i < k; ++i) acc = acc - b[i] * b[k - i];
    b[k] = acc * Rational(1, 2);
  }
  return HSeries<T>(std::move(b));
}

/// exp(h x) = sum_k h^k x^k / k!, i.e. q^x with q = e^h.
template <Coefficient T>
HSeries<T> series_exp_h(const T& x, int order) {
  std::vector<T> c(static_cast<std::size_t>(order) + 1);
  T power = coeff_traits<T>::one();
  Rational inv_fact(1);
  c[0] = power;
  for (int k = 1; k <= order; ++k) {
    power = power * x;
    inv_fact /= k;
    c[k] = power * inv_fact;
  }
  return HSeries<T>(std::move(c));
}

/// Canonical text "c0 + c1*h + c2*h^2"; zero coefficients are omitted.
template <Coefficient T>
std::string render(const HSeries<T>& s) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    const T& c = s[k];
    if (coeff_traits<T>::is_zero(c)) continue;
    std::string body = coeff_traits<T>::render(c);
    bool negative = !body.empty() && body[0] == '-' && coeff_traits<T>::is_atomic(c);
    if (negative) body.erase(0, 1);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << '-';
    first = false;
    if (k == 0) {
      out << body;
      continue;
    }
    const std::string hpow = k == 1 ? "h" : "h^" + std::to_string(k);
    if (body == "1") out << hpow;
    else if (coeff_traits<T>::is_atomic(c)) out << body << '*' << hpow;
    else out << '(' << body << ")*" << hpow;
  }
  return first ? "0" : out.str();
}

}  // namespace twistkit
