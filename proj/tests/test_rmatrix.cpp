#include "doctest.h"

#include "support.hpp"
#include "twistkit/rmatrix.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

TensorElement classical_order2() {
  const Element hh = h() * h(), i = casimir();
  TensorElement x;
  x -= tp(h(), h());
  x -= tp(e(), f()) * Rational(2);
  x -= tp(f(), e()) * Rational(2);
  x += tp(e() * e(), f() * f()) * Rational(2);
  x += tp(f() * f(), e() * e()) * Rational(2);
  x -= tp(e(), h() * f()) * Rational(2);
  x -= tp(h() * f(), e()) * Rational(2);
  x += tp(f(), h() * e()) * Rational(2);
  x += tp(h() * e(), f()) * Rational(2);
  x += tp(h() * e(), h() * f()) * Rational(4);
  x += tp(h() * f(), h() * e()) * Rational(4);
  x += tp(hh, hh) * Rational(3);
  x += tp(i, i);
  x -= tp(i, hh);
  x -= tp(hh, i);
  return x;
}

TensorElement quantum_order2() {
  const Element hh = h() * h();
  TensorElement x;
  x += tp(hh, hh) * Rational(2);
  x -= tp(e(), f()) * Rational(4);
  x -= tp(e(), h() * f()) * Rational(4);
  x += tp(e() * e(), f() * f()) * Rational(8);
  x += tp(h() * e(), f()) * Rational(4);
  x += tp(h() * e(), h() * f()) * Rational(8);
  return x;
}

TwistCandidate one_plus_hr() { return {HSeries<TensorElement>({TensorElement::one(), classical_r()})}; }

}  // namespace

TEST_CASE("classical R expansion") {
  const auto r = classical_R(2);
  CHECK(r[0] == TensorElement::one());
  CHECK(r[1] == (tp(e(), f()) + tp(f(), e()) + tp(h(), h())) * Rational(2));
  CHECK(r[2] == classical_order2());
  const TensorElement p = cartan_killing();
  CHECK(r[2] == p * p * Rational(1, 2));
}

TEST_CASE("quantum R image expansion") {
  for (const RVariant v : {RVariant::intertwining, RVariant::reversed_sign}) {
    const auto r = quantum_R_image(2, v);
    CHECK(r[0] == TensorElement::one());
    CHECK(r[1] == tp(e(), f()) * Rational(4) + tp(h(), h()) * Rational(2));
    CHECK(r[2] == quantum_order2());
  }
}

TEST_CASE("variants differ from order 3") {
  const auto a = quantum_R_image(3, RVariant::intertwining);
  const auto b = quantum_R_image(3, RVariant::reversed_sign);
  CHECK(a[2] == b[2]);
  CHECK_FALSE(a[3] == b[3]);
}

TEST_CASE("R intertwines the twisted coproduct and its flip") {
  CHECK(r_intertwining_check(quantum_R_image(4)).passed());
  const auto reversed = r_intertwining_check(quantum_R_image(4, RVariant::reversed_sign));
  CHECK_FALSE(reversed.passed());
  CHECK(reversed.find("R~q intertwines J0")->passed());
  CHECK(*reversed.find("R~q intertwines J+")->first_failure == 3);
  CHECK(*reversed.find("R~q intertwines J-")->first_failure == 3);
}

TEST_CASE("n-sum truncation is lossless") {
  for (int n = 0; n <= 4; ++n)
    for (const RVariant v : {RVariant::intertwining, RVariant::reversed_sign})
      CHECK(quantum_R_image(n, v, 1) == quantum_R_image(n, v));
  CHECK(quantum_R_image(3, RVariant::intertwining, 2) == quantum_R_image(3));
}

TEST_CASE("classical R is symmetric") {
  const auto r = classical_R(4);
  for (int k = 0; k <= 4; ++k) CHECK(flip(r[k]) == r[k]);
}

TEST_CASE("quasitriangular residual") {
  CHECK(quasitriangular_check(published_candidate(), 2).passed());
  const auto id = quasitriangular_residual(identity_candidate(0), 1);
  CHECK(id[0].is_zero());
  CHECK(id[1] == (tp(e(), f()) - tp(f(), e())) * Rational(2));
  // First order: f1 added to r survives iff symmetric.
  const TensorElement sym = cartan_killing();
  const TensorElement anti = tp(h(), casimir()) - tp(casimir(), h());
  const TwistCandidate with_sym = {HSeries<TensorElement>({TensorElement::one(), classical_r() + sym})};
  const TwistCandidate with_anti = {HSeries<TensorElement>({TensorElement::one(), classical_r() + anti})};
  CHECK(quasitriangular_residual(one_plus_hr(), 1)[1].is_zero());
  CHECK(quasitriangular_residual(with_sym, 1)[1].is_zero());
  CHECK(quasitriangular_residual(with_anti, 1)[1] == anti * Rational(2));
}

TEST_CASE("symmetry right-hand side") {
  CHECK(symmetry_rhs(1, published_candidate()).is_zero());
  CHECK(symmetry_rhs(2, published_candidate()).is_zero());
  const auto classical = classical_R(2);
  const RMatrixPair mutated{classical, classical};
  CHECK_FALSE(symmetry_rhs(1, published_candidate(), mutated).is_zero());
}

TEST_CASE("quasitriangular filter at second order") {
  const SolutionSet s = solve_order(2, one_plus_hr(), TwistAnsatz(3, 4));
  const SolutionSet q = impose_quasitriangular(one_plus_hr(), s);
  REQUIRE(q.status == SolveStatus::solved);
  const TwistCandidate f = extend(one_plus_hr(), q.particular);
  CHECK(twist_residuals(f, 2).passed());
  CHECK(quasitriangular_check(f, 2).passed());
  for (const auto& b : q.homogeneous_basis) CHECK(flip(b) == b);
}
