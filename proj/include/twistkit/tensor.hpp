#pragma once

// U(sl(2))^{(x)n} for n = 2, 3: finite combinations of tuples of PBW monomials,
// each leg independently in normal form. Products are legwise.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "twistkit/hseries.hpp"
#include "twistkit/pbw.hpp"

namespace twistkit {

template <std::size_t Legs>
class Tensor {
 public:
  using Key = std::array<PBWMonomial, Legs>;
  using Terms = std::map<Key, Rational>;

  Tensor() = default;
  explicit Tensor(const Rational& scalar) {
    if (sgn(scalar) != 0) terms_.emplace(Key{}, scalar);
  }
  Tensor(const Key& k, const Rational& c) {
    if (sgn(c) != 0) terms_.emplace(k, c);
  }

  static Tensor one() { return Tensor(Rational(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::optional<Rational> scalar_part() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == Key{}) return terms_.begin()->second;
    return std::nullopt;
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(const Tensor& a) { return a * Rational(-1); }

  friend Tensor operator*(const Tensor& a, const Rational& q) {
    Tensor out;
    if (sgn(q) == 0) return out;
    for (const auto& [k, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), k, c * q);
    return out;
  }
  friend Tensor operator*(const Rational& q, const Tensor& a) { return a * q; }

  /// Legwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        std::array<Element, Legs> legs;
        for (std::size_t i = 0; i < Legs; ++i) legs[i] = multiply(ka[i], kb[i]);
        out.accumulate_product(legs, ca * cb, 0, Key{});
      }
    }
    return out;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

  /// "c * (m1 (x) m2)" terms, larger keys first, joined with " + " / " - ".
  std::string render() const;

  // Adds coeff * (legs[0] (x) ... (x) legs[Legs-1]).
  template <std::size_t N>
  void accumulate_product(const std::array<Element, N>& legs, const Rational& coeff, std::size_t i, Key key) {
    if (i == Legs) {
      add_term(key, coeff);
      return;
    }
    for (const auto& [m, c] : legs[i].terms()) {
      key[i] = m;
      accumulate_product(legs, coeff * c, i + 1, key);
    }
  }

 private:
  Terms terms_;
};

using TensorElement = Tensor<2>;
using TensorElement3 = Tensor<3>;

template <std::size_t Legs>
struct coeff_traits<Tensor<Legs>> {
  static Tensor<Legs> one() { return Tensor<Legs>::one(); }
  static std::optional<Rational> scalar_part(const Tensor<Legs>& x) { return x.scalar_part(); }
  static bool is_zero(const Tensor<Legs>& x) { return x.is_zero(); }
  static std::string render(const Tensor<Legs>& x) { return x.render(); }
  static bool is_atomic(const Tensor<Legs>& x) { return x.size() <= 1; }
};

TensorElement tensor_product(const Element& x, const Element& y);
TensorElement3 tensor_product(const Element& x, const Element& y, const Element& z);
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);

/// x (x) 1 for leg 1, 1 (x) x for leg 2.
TensorElement leg_embed(const Element& x, int leg);
/// x (x) 1 for leg 1 or 1 (x) x for leg 2 inside the triple product:
/// `first_leg` 1 gives x12 (x) 1, 2 gives 1 (x) x23.
TensorElement3 leg_embed3(const TensorElement& x, int first_leg);

/// Exchange of the two legs.
TensorElement flip(const TensorElement& x);

/// Classical coproduct, primitive on H, E, F and extended multiplicatively.
TensorElement coproduct(const Element& x);

enum class CoproductLeg { first, second };  // (Delta (x) id) or (id (x) Delta)
TensorElement3 coproduct_leg(const TensorElement& x, CoproductLeg which);

/// Total ad(H) weight (e1 - f1) + (e2 - f2).
int weight(const TensorElement::Key& m);

/// Counit applied to one leg: leg 1 gives (eps (x) id), leg 2 gives (id (x) eps).
Element counit_leg(const TensorElement& x, int leg);

/// P = 2(E(x)F + F(x)E + H(x)H).
TensorElement cartan_killing();
/// r = F(x)E - E(x)F.
TensorElement classical_r();

/// Legwise Casimir-adapted form, rendered.
std::string render_casimir(const TensorElement& x);

extern template class Tensor<2>;
extern template class Tensor<3>;

}  // namespace twistkit
