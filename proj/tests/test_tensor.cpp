#include "doctest.h"

#include "support.hpp"
#include "twistkit/tensor.hpp"
#include "twistkit/twist.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

TensorElement3 tp3(const Element& a, const Element& b, const Element& c) { return tensor_product(a, b, c); }

bool commutes_with_delta_h(const TensorElement& x) {
  const TensorElement dh = coproduct(h());
  return (x * dh - dh * x).is_zero();
}

// Random polynomial in I1, I2 and Delta(I) of low degree.
TensorElement random_kernel_element() {
  const Element i = casimir();
  const TensorElement gens[] = {tp(i, one()), tp(one(), i), coproduct(i)};
  TensorElement out(random_rational());
  for (int t = 0; t < uniform(1, 3); ++t) {
    TensorElement term(random_rational());
    for (int k = 0; k < uniform(1, 2); ++k) term = term * gens[uniform(0, 2)];
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("tensor_mul") {
  CHECK(tensor_mul(tp(e(), f()), tp(f(), e())) == tp(e() * f(), e() * f() - h()));
  for (int i = 0; i < 10; ++i) {
    const TensorElement x = random_tensor(3);
    CHECK(TensorElement::one() * x == x);
  }
  const TensorElement r = classical_r();
  const TensorElement expected =
      tp(f() * f(), e() * e()) - tp(f() * e(), e() * f()) - tp(e() * f(), f() * e()) + tp(e() * e(), f() * f());
  CHECK(r * r == expected);
}

TEST_CASE("flip") {
  CHECK(flip(tp(e(), f())) == tp(f(), e()));
  CHECK(flip(classical_r()) == -classical_r());
  CHECK(flip(cartan_killing()) == cartan_killing());
}

TEST_CASE("coproduct") {
  CHECK(coproduct(h()) == tp(h(), one()) + tp(one(), h()));
  CHECK(coproduct(h() * h()) == tp(h() * h(), one()) + tp(h(), h()) * Rational(2) + tp(one(), h() * h()));
  const Element i = casimir();
  CHECK(coproduct(i) == tp(i, one()) + tp(one(), i) + cartan_killing());
  CHECK(coproduct(one()) == TensorElement::one());
}

TEST_CASE("leg_embed") {
  CHECK(leg_embed(e(), 1) == tp(e(), one()));
  CHECK(leg_embed(one(), 2) == TensorElement::one());
  for (int n = 0; n < 10; ++n) {
    const Element x = random_element(3), y = random_element(3);
    CHECK(leg_embed(x, 1) * leg_embed(y, 2) == tp(x, y));
  }
  CHECK_THROWS_AS(leg_embed(e(), 3), std::invalid_argument);
}

TEST_CASE("coproduct_leg") {
  CHECK(coproduct_leg(tp(h(), one()), CoproductLeg::first) == tp3(h(), one(), one()) + tp3(one(), h(), one()));
  CHECK(coproduct_leg(tp(one(), h()), CoproductLeg::second) == tp3(one(), h(), one()) + tp3(one(), one(), h()));
  CHECK(coproduct_leg(classical_r(), CoproductLeg::first) ==
        tp3(f(), one(), e()) + tp3(one(), f(), e()) - tp3(e(), one(), f()) - tp3(one(), e(), f()));
}

TEST_CASE("weight") {
  CHECK(weight({PBWMonomial{1, 0, 0}, PBWMonomial{0, 1, 0}}) == 0);
  CHECK(weight({PBWMonomial{1, 0, 0}, PBWMonomial{}}) == 1);
  CHECK(weight({PBWMonomial{0, 2, 1}, PBWMonomial{1, 0, 3}}) == -1);
}

TEST_CASE("render") {
  CHECK(classical_r().render() == "-1 * (E ⊗ F) + 1 * (F ⊗ E)");
  CHECK(TensorElement().render() == "0");
}

TEST_CASE("coassociativity") {
  for (int n = 0; n < 50; ++n) {
    const Element x = random_element(4);
    const TensorElement d = coproduct(x);
    CHECK(coproduct_leg(d, CoproductLeg::first) == coproduct_leg(d, CoproductLeg::second));
  }
}

TEST_CASE("coproduct is an algebra morphism") {
  for (int n = 0; n < 30; ++n) {
    const Element x = random_element(3), y = random_element(3);
    CHECK(coproduct(x * y) == coproduct(x) * coproduct(y));
  }
}

TEST_CASE("flip is an involutive morphism") {
  for (int n = 0; n < 30; ++n) {
    const TensorElement x = random_tensor(3), y = random_tensor(3);
    CHECK(flip(x * y) == flip(x) * flip(y));
    CHECK(flip(flip(x)) == x);
  }
}

TEST_CASE("kernel characterization") {
  for (int n = 0; n < 40; ++n) CHECK(kernel_check(random_kernel_element()));
}

TEST_CASE("weight decomposition") {
  for (int n = 0; n < 100; ++n) {
    const TensorElement x = random_tensor(4);
    bool all_zero = true;
    for (const auto& [k, c] : x.terms()) all_zero = all_zero && weight(k) == 0;
    CHECK(commutes_with_delta_h(x) == all_zero);
  }
  // Weight-zero by construction.
  for (int n = 0; n < 20; ++n) {
    const int l = uniform(0, 2);
    const Element left = random_element(2) * Element({static_cast<std::uint32_t>(l), 0, 0}, 1);
    const Element right = Element({0, static_cast<std::uint32_t>(l), 0}, 1);
    const TensorElement x = tp(h() * left, right * h());
    bool all_zero = true;
    for (const auto& [k, c] : x.terms()) all_zero = all_zero && weight(k) == 0;
    CHECK(commutes_with_delta_h(x) == all_zero);
  }
}
