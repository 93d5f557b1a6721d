#include "twistkit/tensor.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace twistkit {

template <std::size_t Legs>
std::string Tensor<Legs>::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const Rational mag = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    out << to_string(mag) << " * (";
    for (std::size_t i = 0; i < Legs; ++i) out << (i ? " ⊗ " : "") << k[i].render();
    out << ')';
  }
  return out.str();
}

template class Tensor<2>;
template class Tensor<3>;

TensorElement tensor_product(const Element& x, const Element& y) {
  TensorElement out;
  out.accumulate_product(std::array<Element, 2>{x, y}, Rational(1), 0, {});
  return out;
}

TensorElement3 tensor_product(const Element& x, const Element& y, const Element& z) {
  TensorElement3 out;
  out.accumulate_product(std::array<Element, 3>{x, y, z}, Rational(1), 0, {});
  return out;
}

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) { return x * y; }

TensorElement leg_embed(const Element& x, int leg) {
  if (leg == 1) return tensor_product(x, Element::one());
  if (leg == 2) return tensor_product(Element::one(), x);
  throw std::invalid_argument("leg_embed: leg must be 1 or 2");
}

TensorElement3 leg_embed3(const TensorElement& x, int first_leg) {
  TensorElement3 out;
  for (const auto& [k, c] : x.terms()) {
    if (first_leg == 1) out.add_term({k[0], k[1], PBWMonomial{}}, c);
    else if (first_leg == 2) out.add_term({PBWMonomial{}, k[0], k[1]}, c);
    else throw std::invalid_argument("leg_embed3: first_leg must be 1 or 2");
  }
  return out;
}

TensorElement flip(const TensorElement& x) {
  TensorElement out;
  for (const auto& [k, c] : x.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

namespace {

const TensorElement& coproduct_monomial(const PBWMonomial& m) {
  thread_local std::unordered_map<std::uint64_t, TensorElement> cache;
  const std::uint64_t key = (std::uint64_t{m.e} << 42) | (std::uint64_t{m.f} << 21) | m.d;
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  TensorElement value;
  if (m.is_unit()) {
    value = TensorElement::one();
  } else {
    // Peel one generator off the right end of E^e F^f H^d.
    PBWMonomial rest = m;
    Element gen;
    if (m.d > 0) {
      --rest.d;
      gen = Element::gen_h();
    } else if (m.f > 0) {
      --rest.f;
      gen = Element::gen_f();
    } else {
      --rest.e;
      gen = Element::gen_e();
    }
    const TensorElement delta_gen = leg_embed(gen, 1) + leg_embed(gen, 2);
    value = coproduct_monomial(rest) * delta_gen;
  }
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

TensorElement coproduct(const Element& x) {
  TensorElement out;
  for (const auto& [m, c] : x.terms()) out += coproduct_monomial(m) * c;
  return out;
}

TensorElement3 coproduct_leg(const TensorElement& x, CoproductLeg which) {
  TensorElement3 out;
  for (const auto& [k, c] : x.terms()) {
    if (which == CoproductLeg::first) {
      for (const auto& [d, dc] : coproduct_monomial(k[0]).terms()) out.add_term({d[0], d[1], k[1]}, c * dc);
    } else {
      for (const auto& [d, dc] : coproduct_monomial(k[1]).terms()) out.add_term({k[0], d[0], d[1]}, c * dc);
    }
  }
  return out;
}

int weight(const TensorElement::Key& m) {
  return static_cast<int>(m[0].e) - static_cast<int>(m[0].f) + static_cast<int>(m[1].e) - static_cast<int>(m[1].f);
}

Element counit_leg(const TensorElement& x, int leg) {
  if (leg != 1 && leg != 2) throw std::invalid_argument("counit_leg: leg must be 1 or 2");
  Element out;
  for (const auto& [k, c] : x.terms()) {
    const auto& killed = leg == 1 ? k[0] : k[1];
    const auto& kept = leg == 1 ? k[1] : k[0];
    if (killed.is_unit()) out.add_term(kept, c);
  }
  return out;
}

TensorElement cartan_killing() {
  const Element e = Element::gen_e(), f = Element::gen_f(), h = Element::gen_h();
  return (tensor_product(e, f) + tensor_product(f, e) + tensor_product(h, h)) * Rational(2);
}

TensorElement classical_r() {
  const Element e = Element::gen_e(), f = Element::gen_f();
  return tensor_product(f, e) - tensor_product(e, f);
}

std::string render_casimir(const TensorElement& x) {
  std::map<std::pair<CasimirTerm, CasimirTerm>, Rational> acc;
  for (const auto& [k, c] : x.terms()) {
    const auto left = to_casimir_basis(Element(k[0], Rational(1)));
    const auto right = to_casimir_basis(Element(k[1], Rational(1)));
    for (const auto& [lt, lc] : left)
      for (const auto& [rt, rc] : right) {
        auto [it, inserted] = acc.try_emplace({lt, rt}, c * lc * rc);
        if (!inserted) {
          it->second += c * lc * rc;
          if (sgn(it->second) == 0) acc.erase(it);
        }
      }
  }
  if (acc.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    const auto& [terms, c] = *it;
    const Rational mag = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    out << to_string(mag) << " * (" << terms.first.render() << " ⊗ " << terms.second.render() << ')';
  }
  return out.str();
}

}  // namespace twistkit
