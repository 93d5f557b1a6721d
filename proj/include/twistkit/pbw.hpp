#pragma once

// Exact arithmetic in U(sl(2)) with generators H, E, F:
//   [H,E] = E,  [H,F] = -F,  [E,F] = H.
// Elements are kept in PBW normal form E^e F^f H^d (E left of F left of H),
// so moving a polynomial in H through E or F is a pure argument shift:
//   phi(H) E^n = E^n phi(H+n),   phi(H) F^n = F^n phi(H-n).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/hseries.hpp"
#include "twistkit/polynomial.hpp"
#include "twistkit/rational.hpp"

namespace twistkit {

struct PBWMonomial {
  std::uint32_t e = 0;
  std::uint32_t f = 0;
  std::uint32_t d = 0;  // exponent of H

  auto operator<=>(const PBWMonomial&) const = default;

  std::uint32_t degree() const { return e + f + d; }
  bool is_unit() const { return e == 0 && f == 0 && d == 0; }
  std::string render() const;  // "E^2*F*H", "1" for the empty word
};

class Element {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  Element() = default;
  explicit Element(const Rational& scalar);
  Element(PBWMonomial m, const Rational& c);

  static Element one() { return Element(Rational(1)); }
  static Element gen_e() { return Element({1, 0, 0}, Rational(1)); }
  static Element gen_f() { return Element({0, 1, 0}, Rational(1)); }
  static Element gen_h() { return Element({0, 0, 1}, Rational(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Filtration degree; -1 for zero.
  int degree() const;
  /// Coefficient when the element is c * 1, nullopt otherwise.
  std::optional<Rational> scalar_part() const;
  Rational coefficient(const PBWMonomial& m) const;

  void add_term(const PBWMonomial& m, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return a * Rational(-1); }
  friend Element operator*(const Element& a, const Rational& q);
  friend Element operator*(const Rational& q, const Element& a) { return a * q; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) = default;

  Element pow(unsigned n) const;

  /// Canonical text, terms sorted by (e, f, d) descending: "2*E*F + H^2 - H".
  std::string render() const;

 private:
  Terms terms_;
};

template <>
struct coeff_traits<Element> {
  static Element one() { return Element::one(); }
  static std::optional<Rational> scalar_part(const Element& x) { return x.scalar_part(); }
  static bool is_zero(const Element& x) { return x.is_zero(); }
  static std::string render(const Element& x) { return x.render(); }
  static bool is_atomic(const Element& x) { return x.size() <= 1; }
};

/// Normal-form product of two PBW monomials.
Element multiply(const PBWMonomial& a, const PBWMonomial& b);
Element multiply(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y);

/// I = 2EF + H^2 - H.
Element casimir();

/// Standard counit: coefficient of the empty monomial.
Rational counit(const Element& x);

/// Element of a polynomial in the commuting pair (H, I); variable 0 is H, 1 is I.
Element from_h_casimir_polynomial(const Polynomial& p);

/// Member of the Casimir-adapted spanning set H^a I^b E^c (side E),
/// H^a I^b F^c (side F) or H^a I^b (pure).
struct CasimirTerm {
  enum class Side { pure, e_side, f_side };
  Side side = Side::pure;
  std::uint32_t a = 0;  // H exponent
  std::uint32_t b = 0;  // I exponent
  std::uint32_t c = 0;  // E or F exponent; 0 iff pure

  auto operator<=>(const CasimirTerm&) const = default;
  std::string render() const;  // "H^2*I*E^3"
};

using CasimirForm = std::vector<std::pair<CasimirTerm, Rational>>;

/// Decomposition over the Casimir-adapted set, eliminating every E^k F^k
/// pair through 2EF = I - H(H-1). Terms sorted, no zeros.
CasimirForm to_casimir_basis(const Element& x);
Element from_casimir_basis(const CasimirForm& terms);
std::string render(const CasimirForm& form);

/// E^k F^k as a polynomial in (H, I).
Polynomial ef_power_polynomial(std::uint32_t k);

}  // namespace twistkit
