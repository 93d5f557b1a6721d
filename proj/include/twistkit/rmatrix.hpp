#pragma once

// Classical R = q^P and the image (m (x) m)(R_q) of the quantum universal
// R-matrix
//   R_q = q^{2 J0 (x) J0} sum_n q^{s n(n-1)/2} 2^n (1-q^-2)^n / [n]! (q^J0 J+ (x) q^-J0 J-)^n,
// together with the quasitriangular relation R~_q F = sigma(F) R.
//
// With s = -1 the sum does not intertwine Delta~_q and its flip beyond
// order 2; s = +1 does. Both agree through order 2.

#include "twistkit/hseries.hpp"
#include "twistkit/report.hpp"
#include "twistkit/tensor.hpp"
#include "twistkit/twist.hpp"

namespace twistkit {

struct RMatrixPair {
  HSeries<TensorElement> classical;
  HSeries<TensorElement> quantum_image;
};

HSeries<TensorElement> classical_R(int order);

enum class RVariant {
  intertwining,   // s = +1
  reversed_sign,  // s = -1
};

/// The n-sum is cut at n = order + extra_terms; terms beyond n = order are O(h^{n}).
HSeries<TensorElement> quantum_R_image(int order, RVariant variant = RVariant::intertwining, int extra_terms = 0);

/// R~_q Delta~_q(g) - flip(Delta~_q(g)) R~_q for g = J0, J+, J-.
VerificationReport r_intertwining_check(const HSeries<TensorElement>& quantum_image);

RMatrixPair r_matrix_pair(int order, RVariant variant = RVariant::intertwining);

/// R~_q F - sigma(F) R, with F zero-padded to `order`.
HSeries<TensorElement> quasitriangular_residual(const TwistCandidate& f, int order);
HSeries<TensorElement> quasitriangular_residual(const TwistCandidate& f, const RMatrixPair& r);
VerificationReport quasitriangular_check(const TwistCandidate& f, int order);

/// Right-hand side of sigma(f_k) - f_k for k = 1, 2 built from the particular
/// solution F~ (coefficients 1, 2) and the given R-matrices; zero means that
/// any symmetric kernel correction f_k is admissible.
TensorElement symmetry_rhs(int order, const TwistCandidate& ftilde, const RMatrixPair& r);
TensorElement symmetry_rhs(int order, const TwistCandidate& ftilde);

/// Adds the combination of homogeneous solutions (minimal, deterministic) that
/// makes the order-k quasitriangular residual vanish. The returned
/// homogeneous basis spans the corrections that keep it zero.
SolutionSet impose_quasitriangular(const TwistCandidate& lower, const SolutionSet& solution);

}  // namespace twistkit
