#include "twistkit/qcalc.hpp"

namespace twistkit {

HSeries<Polynomial> sinh_ratio_series(int order) {
  // sinh(hx)/(hx) = sum_k (hx)^{2k}/(2k+1)!,  sinh(h)/h = sum_k h^{2k}/(2k+1)!
  std::vector<Polynomial> num(static_cast<std::size_t>(order) + 1, Polynomial(1));
  std::vector<Polynomial> den(static_cast<std::size_t>(order) + 1, Polynomial(1));
  for (int k = 0; 2 * k <= order; ++k) {
    const Rational c = 1 / factorial(static_cast<unsigned>(2 * k + 1));
    num[2 * k].add_term({static_cast<std::uint32_t>(2 * k)}, c);
    den[2 * k].add_term({0}, c);
  }
  return HSeries<Polynomial>(std::move(num)) * series_inverse(HSeries<Polynomial>(std::move(den)));
}

HSeries<Polynomial> q_analog(const Polynomial& p, int order) {
  const auto s = sinh_ratio_series(order);
  const Polynomial args[] = {p};
  return series_map(s, [&](const Polynomial& c) {
    Polynomial composed = c.compose(args);
    return composed * p;
  });
}

HSeries<Rational> q_number(const Rational& n, int order) {
  const auto s = q_analog(Polynomial::constant(n, 1), order);
  return series_map(s, [](const Polynomial& c) { return c.scalar_part().value(); });
}

HSeries<Rational> q_factorial(int n, int order) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
  auto acc = HSeries<Rational>::one(order);
  for (int k = 1; k <= n; ++k) acc = acc * q_number(Rational(k), order);
  return acc;
}

HSeries<Rational> q_power(const Rational& s, int order) { return series_exp_h(s, order); }

}  // namespace twistkit
