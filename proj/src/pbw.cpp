#include "twistkit/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace twistkit {

namespace {

// Dense polynomial in H: coefficient i belongs to H^i.
using HPoly = std::vector<Rational>;

HPoly hpoly_mul(const HPoly& a, const HPoly& b) {
  if (a.empty() || b.empty()) return {};
  HPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (H + s)^n by binomial expansion.
HPoly shifted_power(std::uint32_t n, std::int64_t s) {
  HPoly out(n + 1);
  Integer sp(1);
  for (std::uint32_t i = 0; i <= n; ++i) {
    // coefficient of H^{n-i} is C(n,i) s^i
    out[n - i] = binomial(n, i) * Rational(sp);
    sp *= static_cast<long>(s);
  }
  return out;
}

void accumulate(Element::Terms& terms, const PBWMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// x * p(H), appended on the right of every term.
Element right_mul_hpoly(const Element& x, const HPoly& p) {
  Element out;
  for (const auto& [m, c] : x.terms())
    for (std::size_t i = 0; i < p.size(); ++i)
      if (sgn(p[i]) != 0) out.add_term({m.e, m.f, m.d + static_cast<std::uint32_t>(i)}, c * p[i]);
  return out;
}

// x * F using H^g F = F (H-1)^g.
Element right_mul_f(const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    const HPoly shift = shifted_power(m.d, -1);
    for (std::size_t i = 0; i < shift.size(); ++i)
      if (sgn(shift[i]) != 0) out.add_term({m.e, m.f + 1, static_cast<std::uint32_t>(i)}, c * shift[i]);
  }
  return out;
}

std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

// F^b E^x in normal form, from F E^x = E^x F - E^{x-1}(xH + x(x-1)/2).
const Element& f_power_times_e_power(std::uint32_t b, std::uint32_t x) {
  thread_local std::unordered_map<std::uint64_t, Element> cache;
  const auto key = pack(b, x);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Element value;
  if (b == 0 || x == 0) {
    value = Element({x, b, 0}, Rational(1));
  } else {
    const Element lead = right_mul_f(f_power_times_e_power(b - 1, x));
    const HPoly q = {Rational(x * (x - 1) / 2), Rational(x)};
    value = lead - right_mul_hpoly(f_power_times_e_power(b - 1, x - 1), q);
  }
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

std::string PBWMonomial::render() const {
  std::string out;
  auto put = [&](const char* g, std::uint32_t n) {
    if (n == 0) return;
    if (!out.empty()) out += '*';
    out += g;
    if (n > 1) out += "^" + std::to_string(n);
  };
  put("E", e);
  put("F", f);
  put("H", d);
  return out.empty() ? "1" : out;
}

Element::Element(const Rational& scalar) {
  if (sgn(scalar) != 0) terms_.emplace(PBWMonomial{}, scalar);
}

Element::Element(PBWMonomial m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(m, c);
}

int Element::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m.degree()));
  return best;
}

std::optional<Rational> Element::scalar_part() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

Rational Element::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const PBWMonomial& m, const Rational& c) { accumulate(terms_, m, c); }

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

Element operator*(const Element& a, const Rational& q) {
  Element out;
  if (sgn(q) == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * q);
  return out;
}

namespace {

// Cached normal form of a monomial product.
const Element& monomial_product(const PBWMonomial& a, const PBWMonomial& b) {
  thread_local std::unordered_map<std::uint64_t, Element> cache;
  const std::uint64_t key = (std::uint64_t{a.e} << 50) | (std::uint64_t{a.f} << 40) | (std::uint64_t{a.d} << 30) |
                            (std::uint64_t{b.e} << 20) | (std::uint64_t{b.f} << 10) | std::uint64_t{b.d};
  if (a.e >= 1024 || a.f >= 1024 || a.d >= 1024 || b.e >= 1024 || b.f >= 1024 || b.d >= 1024)
    throw std::overflow_error("PBW exponent exceeds supported range");
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (a.is_unit() || b.is_unit() || (a.d == 0 && (a.f == 0 || b.e == 0)))
    return cache.emplace(key, Element({a.e + b.e, a.f + b.f, a.d + b.d}, Rational(1))).first->second;

  // E^a F^b H^c * E^x F^y H^z = E^a (F^b E^x) F^y (H + x - y)^c H^z
  const HPoly tail = hpoly_mul(shifted_power(a.d, static_cast<std::int64_t>(b.e) - static_cast<std::int64_t>(b.f)),
                               [&] {
                                 HPoly hz(b.d + 1);
                                 hz[b.d] = 1;
                                 return hz;
                               }());
  Element out;
  for (const auto& [m, k] : f_power_times_e_power(a.f, b.e).terms()) {
    // E^{a+alpha} F^{beta+y} (H - y)^gamma * tail
    const HPoly coeff = hpoly_mul(shifted_power(m.d, -static_cast<std::int64_t>(b.f)), tail);
    for (std::size_t i = 0; i < coeff.size(); ++i)
      if (sgn(coeff[i]) != 0)
        out.add_term({a.e + m.e, m.f + b.f, static_cast<std::uint32_t>(i)}, k * coeff[i]);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

Element multiply(const PBWMonomial& a, const PBWMonomial& b) { return monomial_product(a, b); }

Element operator*(const Element& x, const Element& y) {
  Element out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      const Rational c = cx * cy;
      for (const auto& [m, k] : monomial_product(mx, my).terms_) accumulate(out.terms_, m, c * k);
    }
  }
  return out;
}

Element multiply(const Element& x, const Element& y) { return x * y; }

Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

Element Element::pow(unsigned n) const {
  Element result = one();
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

std::string Element::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const Rational mag = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (m.is_unit()) out << to_string(mag);
    else if (mag == 1) out << m.render();
    else out << to_string(mag) << '*' << m.render();
  }
  return out.str();
}

Element casimir() {
  Element i({1, 1, 0}, Rational(2));
  i.add_term({0, 0, 2}, Rational(1));
  i.add_term({0, 0, 1}, Rational(-1));
  return i;
}

Rational counit(const Element& x) { return x.coefficient(PBWMonomial{}); }

Element from_h_casimir_polynomial(const Polynomial& p) {
  if (p.nvars() == 0) return Element(p.scalar_part().value_or(Rational(0)));
  if (p.nvars() != 2) throw std::invalid_argument("expected a polynomial in (H, I)");
  const Element vars[] = {Element::gen_h(), casimir()};
  return evaluate_in<Element>(p, vars);
}

// ---------------------------------------------------------------------------
// Casimir-adapted form

namespace {

const Polynomial kH = Polynomial::variable(0, 2);
const Polynomial kI = Polynomial::variable(1, 2);

Polynomial shift_h(const Polynomial& p, std::int64_t s) {
  const Polynomial args[] = {kH + Polynomial::constant(Rational(s), 2), kI};
  return p.compose(args);
}

}  // namespace

Polynomial ef_power_polynomial(std::uint32_t k) {
  thread_local std::vector<Polynomial> cache;
  if (cache.empty()) cache.push_back(Polynomial::constant(Rational(1), 2));
  while (cache.size() <= k) {
    const auto j = static_cast<std::int64_t>(cache.size());
    // EF = (I - H^2 + H)/2, conjugated past E^{j-1}
    const Polynomial ef = (kI - kH * kH + kH) * Rational(1, 2);
    cache.push_back(shift_h(ef, -(j - 1)) * cache.back());
  }
  return cache[k];
}

std::string CasimirTerm::render() const {
  std::string out;
  auto put = [&](const char* g, std::uint32_t n) {
    if (n == 0) return;
    if (!out.empty()) out += '*';
    out += g;
    if (n > 1) out += "^" + std::to_string(n);
  };
  put("H", a);
  put("I", b);
  put(side == Side::f_side ? "F" : "E", c);
  return out.empty() ? "1" : out;
}

CasimirForm to_casimir_basis(const Element& x) {
  std::map<CasimirTerm, Rational> acc;
  for (const auto& [m, coeff] : x.terms()) {
    Polynomial poly;
    CasimirTerm::Side side = CasimirTerm::Side::pure;
    std::uint32_t t = 0;
    Polynomial hpow = Polynomial::constant(Rational(1), 2);
    if (m.e >= m.f) {
      // E^t (E^k F^k) H^d = p_k(H-t, I) (H-t)^d E^t
      t = m.e - m.f;
      const auto s = -static_cast<std::int64_t>(t);
      poly = shift_h(ef_power_polynomial(m.f), s) * (kH + Polynomial::constant(Rational(s), 2)).pow(m.d);
      side = t ? CasimirTerm::Side::e_side : CasimirTerm::Side::pure;
    } else {
      // (E^k F^k) F^t H^d = p_k(H, I) (H+t)^d F^t
      t = m.f - m.e;
      const auto s = static_cast<std::int64_t>(t);
      poly = ef_power_polynomial(m.e) * (kH + Polynomial::constant(Rational(s), 2)).pow(m.d);
      side = CasimirTerm::Side::f_side;
    }
    for (const auto& [exps, c] : poly.terms()) {
      CasimirTerm term{side, exps[0], exps[1], t};
      auto [it, inserted] = acc.try_emplace(term, c * coeff);
      if (!inserted) {
        it->second += c * coeff;
        if (sgn(it->second) == 0) acc.erase(it);
      }
    }
  }
  return CasimirForm(acc.begin(), acc.end());
}

Element from_casimir_basis(const CasimirForm& terms) {
  Element out;
  const Element i = casimir();
  for (const auto& [t, c] : terms) {
    if (t.side == CasimirTerm::Side::pure && t.c != 0)
      throw std::invalid_argument("pure Casimir term must have c = 0");
    if (t.side != CasimirTerm::Side::pure && t.c == 0)
      throw std::invalid_argument("E/F-side Casimir term must have c >= 1");
    Element word = Element({0, 0, t.a}, Rational(1)) * i.pow(t.b);
    if (t.side == CasimirTerm::Side::e_side) word = word * Element({t.c, 0, 0}, Rational(1));
    if (t.side == CasimirTerm::Side::f_side) word = word * Element({0, t.c, 0}, Rational(1));
    out += word * c;
  }
  return out;
}

std::string render(const CasimirForm& form) {
  if (form.empty()) return "0";
  // Same order convention as Element: larger keys first.
  std::ostringstream out;
  bool first = true;
  for (auto it = form.rbegin(); it != form.rend(); ++it) {
    const auto& [t, c] = *it;
    const Rational mag = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const std::string word = t.render();
    if (word == "1") out << to_string(mag);
    else if (mag == 1) out << word;
    else out << to_string(mag) << '*' << word;
  }
  return out.str();
}

}  // namespace twistkit
