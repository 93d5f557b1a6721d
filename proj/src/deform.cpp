#include "twistkit/deform.hpp"

#include <algorithm>
#include <sstream>

#include "twistkit/qcalc.hpp"
#include "twistkit/residual.hpp"

namespace twistkit {

namespace {

// Symmetric polynomial in (u, v) rewritten in e1 = u + v, e2 = uv, using
// u^a v^b + u^b v^a = e2^b p_{a-b} with power sums p_n = e1 p_{n-1} - e2 p_{n-2}.
Polynomial to_elementary_symmetric(const Polynomial& sym) {
  const Polynomial e1 = Polynomial::variable(0, 2), e2 = Polynomial::variable(1, 2);
  std::vector<Polynomial> power_sums = {Polynomial::constant(Rational(2), 2), e1};
  auto power_sum = [&](std::uint32_t n) -> const Polynomial& {
    while (power_sums.size() <= n) {
      const std::size_t m = power_sums.size();
      power_sums.push_back(e1 * power_sums[m - 1] - e2 * power_sums[m - 2]);
    }
    return power_sums[n];
  };
  Polynomial out(2);
  for (const auto& [exps, c] : sym.terms()) {
    const std::uint32_t a = exps[0], b = exps[1];
    if (a < b) continue;  // mirrored partner handles it
    if (a == b) out += e2.pow(b) * c;
    else out += e2.pow(b) * power_sum(a - b) * c;
  }
  return out;
}

HSeries<Polynomial> phi_polynomial(Sign sign, int order) {
  // S(x) has only even powers of x; rewrite each coefficient in u = x^2.
  const auto s = sinh_ratio_series(order);
  std::vector<Polynomial> su, sv;
  for (const auto& c : s.coeffs()) {
    Polynomial pu(2), pv(2);
    for (const auto& [exps, q] : c.terms()) {
      const std::uint32_t deg = exps.empty() ? 0 : exps[0];
      if (deg % 2 != 0) throw std::logic_error("sinh ratio series has an odd power");
      pu.add_term({deg / 2, 0}, q);
      pv.add_term({0, deg / 2}, q);
    }
    su.push_back(std::move(pu));
    sv.push_back(std::move(pv));
  }
  const auto product = HSeries<Polynomial>(std::move(su)) * HSeries<Polynomial>(std::move(sv));

  // Substitute e1 = x^2 + y^2, e2 = (xy)^2 with x = j±H, y = 1+j∓H.
  const Polynomial h = Polynomial::variable(0, 2), i = Polynomial::variable(1, 2);
  const Rational s1 = sign == Sign::plus ? Rational(1) : Rational(-1);
  const Polynomial xy = i + h * s1 - h * h;
  const Polynomial sum_sq = i * Rational(2) + h * h * Rational(2) - h * (2 * s1) + Polynomial::constant(Rational(1), 2);
  const Polynomial subst[] = {sum_sq, xy * xy};

  const auto ratio = series_map(product, [&](const Polynomial& c) {
    Polynomial e = to_elementary_symmetric(c);
    if (e.nvars() == 0) return Polynomial::constant(e.scalar_part().value(), 2);
    Polynomial r = e.compose(subst);
    return r.nvars() == 0 ? Polynomial::constant(r.scalar_part().value(), 2) : r;
  });
  return series_sqrt(ratio);
}

}  // namespace

PhiSeries phi(Sign sign, int order) {
  auto poly = phi_polynomial(sign, order);
  auto elements = series_map(poly, [](const Polynomial& p) { return from_h_casimir_polynomial(p); });
  return PhiSeries{sign, std::move(elements), std::move(poly)};
}

std::string render_h_casimir(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Polynomial::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  if (p.nvars() == 0) return to_string(terms.front().second);
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first[1] != y.first[1]) return x.first[1] > y.first[1];
    return x.first[0] > y.first[0];
  });
  const std::string names[] = {"H", "I"};
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const Rational mag = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string word;
    for (int v : {1, 0}) {
      if (e[v] == 0) continue;
      if (!word.empty()) word += '*';
      word += names[v];
      if (e[v] > 1) word += "^" + std::to_string(e[v]);
    }
    if (word.empty()) out << to_string(mag);
    else if (mag == 1) out << word;
    else out << to_string(mag) << '*' << word;
  }
  return out.str();
}

std::string render_phi(const HSeries<Polynomial>& series) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= series.order(); ++k) {
    const Polynomial& c = series[k];
    if (c.is_zero()) continue;
    if (k == 0) {
      out << render_h_casimir(c);
      first = false;
      continue;
    }
    Integer den(1);
    for (const auto& [e, q] : c.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    const Polynomial scaled = c * Rational(den);
    out << (first ? "" : " + ") << "h^" << k << "*(" << render_h_casimir(scaled) << ')';
    if (den != 1) out << '/' << den.get_str();
    first = false;
  }
  return first ? "0" : out.str();
}

HSeries<Element> m_j0(int order) { return HSeries<Element>::constant(Element::gen_h(), order); }

HSeries<Element> m_jplus(int order) {
  const auto p = phi(Sign::plus, order).series;
  return p * HSeries<Element>::constant(Element::gen_e(), order);
}

HSeries<Element> m_jminus(int order) {
  const auto p = phi(Sign::minus, order).series;
  return p * HSeries<Element>::constant(Element::gen_f(), order);
}

GeneratorImages generator_images(int order) { return {m_j0(order), m_jplus(order), m_jminus(order)}; }

VerificationReport quantum_commutator_check(const GeneratorImages& g) {
  const int n = g.j0.order();
  auto bracket = [](const HSeries<Element>& a, const HSeries<Element>& b) { return a * b - b * a; };
  const auto two_h = Polynomial::variable(0, 2) * Rational(2);
  const auto q2h = series_map(q_analog(two_h, n), [](const Polynomial& p) {
    return from_h_casimir_polynomial(p.nvars() == 0 ? Polynomial::constant(p.scalar_part().value(), 2) : p);
  });
  VerificationReport report;
  report.relations.push_back(relation_from_residual("[J0,J+] = J+", bracket(g.j0, g.jplus) - g.jplus));
  report.relations.push_back(relation_from_residual("[J0,J-] = -J-", bracket(g.j0, g.jminus) + g.jminus));
  report.relations.push_back(
      relation_from_residual("[J+,J-] = [2J0]/2", bracket(g.jplus, g.jminus) - q2h * Rational(1, 2)));
  return report;
}

VerificationReport quantum_commutator_check(int order) { return quantum_commutator_check(generator_images(order)); }

HSeries<TensorElement> tensor_series(const HSeries<Element>& a, const HSeries<Element>& b) {
  if (a.order() != b.order()) throw TruncationMismatch("tensor_series: orders differ");
  const int n = a.order();
  std::vector<TensorElement> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[i + j] += tensor_product(a[i], b[j]);
  return HSeries<TensorElement>(std::move(c));
}

HSeries<TensorElement> coproduct(const HSeries<Element>& x) {
  return series_map(x, [](const Element& e) { return coproduct(e); });
}

HSeries<TensorElement> delta_q_image(Generator g, const GeneratorImages& images) {
  const int n = images.j0.order();
  if (g == Generator::j0) return HSeries<TensorElement>::constant(coproduct(Element::gen_h()), n);
  const auto& img = g == Generator::jplus ? images.jplus : images.jminus;
  const auto q_h = series_exp_h(Element::gen_h(), n);
  const auto q_minus_h = series_exp_h(-Element::gen_h(), n);
  return tensor_series(img, q_h) + tensor_series(q_minus_h, img);
}

HSeries<TensorElement> delta_q_image(Generator g, int order) { return delta_q_image(g, generator_images(order)); }

}  // namespace twistkit
