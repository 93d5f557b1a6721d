#include "twistkit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistkit {

Polynomial Polynomial::constant(const Rational& c, std::size_t nvars) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) throw std::out_of_range("Polynomial::variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

std::optional<Rational> Polynomial::scalar_part() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (auto x : e)
    if (x != 0) return std::nullopt;
  return c;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (sgn(c) == 0) return;
  if (exps.size() != nvars_) throw std::invalid_argument("Polynomial::add_term arity mismatch");
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

// A zero-arity polynomial is a pure constant and can be widened to any arity.
void Polynomial::adopt_arity(const Polynomial& o) {
  if (nvars_ == o.nvars_ || o.nvars_ == 0) return;
  if (nvars_ != 0) throw std::invalid_argument("Polynomial arity mismatch");
  Terms widened;
  for (auto& [e, c] : terms_) widened.emplace(Exponents(o.nvars_, 0), c);
  terms_ = std::move(widened);
  nvars_ = o.nvars_;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  adopt_arity(o);
  if (o.nvars_ == nvars_) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : o.terms_) add_term(Exponents(nvars_, 0), c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += o * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  if (a.nvars_ != b.nvars_ && a.nvars_ != 0 && b.nvars_ != 0)
    throw std::invalid_argument("Polynomial arity mismatch");
  Polynomial out(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(n, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Rational& q) {
  Polynomial out(a.nvars_);
  if (sgn(q) == 0) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * q);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  // Constants compare equal across arities.
  auto sa = a.scalar_part(), sb = b.scalar_part();
  return sa && sb && *sa == *sb;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(Rational(1), nvars_);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(std::span<const Polynomial> values) const {
  if (nvars_ == 0) return *this;
  if (values.size() != nvars_) throw std::invalid_argument("Polynomial::compose arity mismatch");
  return evaluate_in<Polynomial>(*this, values);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (nvars_ == 0) return scalar_part().value();
  if (point.size() != nvars_) throw std::invalid_argument("Polynomial::evaluate arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= Rational(num, den);
    }
    acc += t;
  }
  return acc;
}

std::string Polynomial::render(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  // Highest total degree first, then lexicographically larger exponents first.
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (auto v : x.first) dx += static_cast<int>(v);
    for (auto v : y.first) dy += static_cast<int>(v);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out << to_string(mag);
    else if (mag == 1) out << mono;
    else out << to_string(mag) << '*' << mono;
  }
  return out.str();
}

std::string coeff_traits<Polynomial>::render(const Polynomial& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i));
  if (p.nvars() == 1) names[0] = "x";
  return p.render(names);
}

}  // namespace twistkit
