#include "doctest.h"

#include "support.hpp"
#include "twistkit/deform.hpp"
#include "twistkit/qcalc.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

// 2I + 2H(H -/+ 1) - 1, upper sign for phi+.
Element phi_h2(int upper) {
  const Element shifted = upper > 0 ? h() - c(1) : h() + c(1);
  return (casimir() * Rational(2) + h() * shifted * Rational(2) - c(1)) * Rational(1, 12);
}

bool only_h_and_i(const Element& x) {
  // H-polynomial times E^k F^k with the E^k F^k re-expressible through I.
  for (const auto& [m, q] : x.terms())
    if (m.e != m.f) return false;
  return true;
}

}  // namespace

TEST_CASE("phi expansion") {
  const auto plus = phi(Sign::plus, 2);
  CHECK(plus.series == HSeries<Element>({one(), Element(), phi_h2(1)}));
  const auto minus = phi(Sign::minus, 2);
  CHECK(minus.series == HSeries<Element>({one(), Element(), phi_h2(-1)}));
  CHECK(phi(Sign::plus, 0).series == HSeries<Element>::one(0));
  CHECK(phi(Sign::minus, 0).series == HSeries<Element>::one(0));
}

TEST_CASE("render_phi") {
  CHECK(render_phi(phi(Sign::plus, 2).polynomial) == "1 + h^2*(2*I + 2*H^2 - 2*H - 1)/12");
  CHECK(render_phi(phi(Sign::minus, 2).polynomial) == "1 + h^2*(2*I + 2*H^2 + 2*H - 1)/12");
  CHECK(render_phi(phi(Sign::plus, 0).polynomial) == "1");
}

TEST_CASE("phi structure") {
  for (const Sign s : {Sign::plus, Sign::minus}) {
    const auto p = phi(s, 6);
    for (int k = 1; k <= 6; k += 2) CHECK(p.series[k].is_zero());
    for (int k = 0; k <= 6; ++k) CHECK(only_h_and_i(p.series[k]));
  }
}

TEST_CASE("generator images") {
  const int n = 4;
  CHECK(m_j0(n) == HSeries<Element>::constant(h(), n));
  const auto plus = phi(Sign::plus, n).series;
  const auto minus = phi(Sign::minus, n).series;
  const auto e_series = HSeries<Element>::constant(e(), n);
  const auto f_series = HSeries<Element>::constant(f(), n);
  CHECK(m_jplus(n) == plus * e_series);
  CHECK(m_jminus(n) == minus * f_series);
  CHECK(minus * f_series == f_series * plus);
  // phi+(H) E = E phi+(H+1) = E phi-(H)
  const Element shifted_args[] = {h() + c(1), casimir()};
  const auto shifted = series_map(phi(Sign::plus, n).polynomial,
                                  [&](const Polynomial& p) { return evaluate_in<Element>(p, shifted_args); });
  CHECK(plus * e_series == e_series * shifted);
  CHECK(shifted == minus);
}

TEST_CASE("quantum commutation relations") {
  CHECK(quantum_commutator_check(0).passed());
  CHECK(quantum_commutator_check(2).passed());
  CHECK(quantum_commutator_check(4).passed());
}

TEST_CASE("mutation: phi without its h^2 term") {
  auto images = generator_images(2);
  images.jplus = HSeries<Element>::constant(e(), 2);
  images.jminus = HSeries<Element>::constant(f(), 2);
  const auto report = quantum_commutator_check(images);
  CHECK(report.find("[J0,J+] = J+")->passed());
  const auto* rel = report.find("[J+,J-] = [2J0]/2");
  REQUIRE(rel != nullptr);
  REQUIRE(rel->first_failure.has_value());
  CHECK(*rel->first_failure == 2);
}

TEST_CASE("delta_q_image") {
  CHECK(delta_q_image(Generator::j0, 3) == coproduct(HSeries<Element>::constant(h(), 3)));
  const auto jp = delta_q_image(Generator::jplus, 1);
  CHECK(jp[0] == coproduct(e()));
  CHECK(jp[1] == tp(e(), h()) - tp(h(), e()));
  CHECK(delta_q_image(Generator::jplus, 0)[0] == coproduct(e()));
  const auto jm = delta_q_image(Generator::jminus, 1);
  CHECK(jm[1] == tp(f(), h()) - tp(h(), f()));
}

TEST_CASE("delta_q_image is a morphism on the quantum relations") {
  const int n = 3;
  const auto j0 = delta_q_image(Generator::j0, n);
  const auto jp = delta_q_image(Generator::jplus, n);
  const auto jm = delta_q_image(Generator::jminus, n);
  CHECK(j0 * jp - jp * j0 == jp);
  CHECK(j0 * jm - jm * j0 == -jm);
  // [J+, J-] = [2 J0]/2 with Delta(J0) in the argument
  const TensorElement dh[] = {coproduct(h())};
  const auto q2 = series_map(q_analog(Polynomial::variable(0, 1) * Rational(2), n),
                             [&](const Polynomial& p) { return evaluate_in<TensorElement>(p, dh); });
  CHECK(jp * jm - jm * jp == q2 * Rational(1, 2));
}
