#pragma once

// The deforming map m: U_h(sl(2)) -> U(sl(2))[[h]],
//   J0 -> H,  J+ -> phi+ E,  J- -> phi- F = F phi+,
// with phi± = sqrt([j±H][1+j∓H] / ((j±H)(1+j∓H))). The spectral label j is
// eliminated through
//   (j±H)(1+j∓H)        = I ± H - H^2,
//   (j±H)^2 + (1+j∓H)^2 = 2I + 2H^2 ∓ 2H + 1,
// so every coefficient is a polynomial in H and I.

#include "twistkit/hseries.hpp"
#include "twistkit/pbw.hpp"
#include "twistkit/polynomial.hpp"
#include "twistkit/report.hpp"
#include "twistkit/tensor.hpp"

namespace twistkit {

enum class Sign { plus, minus };

struct PhiSeries {
  Sign sign;
  HSeries<Element> series;
  HSeries<Polynomial> polynomial;  // same series, coefficients in (H, I)
};

PhiSeries phi(Sign sign, int order);

/// "1 + h^2*(2*I + 2*H^2 - 2*H - 1)/12": each h^k coefficient in (H, I)
/// with its common denominator pulled out.
std::string render_phi(const HSeries<Polynomial>& series);

/// Polynomial in (H, I) rendered I-degree first: "2*I + 2*H^2 - 2*H - 1".
std::string render_h_casimir(const Polynomial& p);

/// Images of the quantum generators.
struct GeneratorImages {
  HSeries<Element> j0;
  HSeries<Element> jplus;
  HSeries<Element> jminus;
};

HSeries<Element> m_j0(int order);
HSeries<Element> m_jplus(int order);
HSeries<Element> m_jminus(int order);
GeneratorImages generator_images(int order);

/// Checks [J0,J±] = ±J± and [J+,J-] = [2J0]/2 on the given images.
VerificationReport quantum_commutator_check(const GeneratorImages& images);
VerificationReport quantum_commutator_check(int order);

enum class Generator { j0, jplus, jminus };

/// (m (x) m) Delta_q on a generator:
///   J0 -> H(x)1 + 1(x)H,   J± -> m(J±) (x) q^H + q^-H (x) m(J±).
HSeries<TensorElement> delta_q_image(Generator g, int order);
HSeries<TensorElement> delta_q_image(Generator g, const GeneratorImages& images);

/// Series of pure tensors: (sum_i h^i a_i) (x) (sum_j h^j b_j).
HSeries<TensorElement> tensor_series(const HSeries<Element>& a, const HSeries<Element>& b);

/// Coproduct applied coefficientwise.
HSeries<TensorElement> coproduct(const HSeries<Element>& x);

}  // namespace twistkit
