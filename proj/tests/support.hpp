#pragma once

#include <random>

#include "twistkit/pbw.hpp"
#include "twistkit/tensor.hpp"

namespace twistkit::testing {

// Fixed seed: every run sees the same cases.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational() {
  int num = uniform(-9, 9);
  if (num == 0) num = 1;
  return make_rational(num, uniform(1, 4));
}

inline PBWMonomial random_monomial(int max_degree) {
  PBWMonomial m;
  const int budget = uniform(0, max_degree);
  for (int i = 0; i < budget; ++i) {
    switch (uniform(0, 2)) {
      case 0: ++m.e; break;
      case 1: ++m.f; break;
      default: ++m.d; break;
    }
  }
  return m;
}

inline Element random_element(int max_degree, int max_terms = 3) {
  Element x;
  const int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) x.add_term(random_monomial(max_degree), random_rational());
  return x;
}

inline TensorElement random_tensor(int max_degree, int max_terms = 3) {
  TensorElement x;
  const int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) x.add_term({random_monomial(max_degree), random_monomial(max_degree)}, random_rational());
  return x;
}

inline HSeries<Rational> random_series(int order, bool unit_constant = false) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = uniform(0, 3) == 0 ? Rational(0) : random_rational();
  c[0] = unit_constant ? Rational(1) : random_rational();
  return HSeries<Rational>(std::move(c));
}

inline Element e() { return Element::gen_e(); }
inline Element f() { return Element::gen_f(); }
inline Element h() { return Element::gen_h(); }
inline Element one() { return Element::one(); }
inline Element c(const Rational& q) { return Element(q); }

inline TensorElement tp(const Element& a, const Element& b) { return tensor_product(a, b); }

}  // namespace twistkit::testing
