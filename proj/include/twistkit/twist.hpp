#pragma once

// The twist F in (U(sl2) (x) U(sl2))[[h]] with
//   (m (x) m) Delta_q(g) * F = F * Delta(m(g))   for g in {J0, J+, J-},
// i.e. Delta~_q(x) = F Delta(x) F^-1 in multiplied-through form.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistkit/deform.hpp"
#include "twistkit/hseries.hpp"
#include "twistkit/polynomial.hpp"
#include "twistkit/report.hpp"
#include "twistkit/tensor.hpp"

namespace twistkit {

struct TwistCandidate {
  HSeries<TensorElement> series;

  int order() const { return series.order(); }
  const TensorElement& operator[](int k) const { return series[k]; }
};

/// 1 (x) 1 at every order.
TwistCandidate identity_candidate(int order);
/// The published second-order particular solution, entered term by term.
TensorElement published_f2();
/// 1 + h r + h^2 F2~ (order 2).
TwistCandidate published_candidate();
/// Appends F_k as the next coefficient.
TwistCandidate extend(const TwistCandidate& lower, const TensorElement& next);

struct TwistResiduals {
  HSeries<TensorElement> j0, jplus, jminus;
};

/// F Delta(m(g)) - Delta~_q(g) F for the three generators, orders 0..N.
/// The candidate is zero-padded to N. Throws NotInvertible unless F_0 is a
/// nonzero scalar.
TwistResiduals twist_residual_series(const TwistCandidate& f, int order);
VerificationReport twist_residuals(const TwistCandidate& f, int order);

/// One ansatz unknown: the coefficient of H1^a H2^b I1^c I2^d times
/// E1^l F2^l (side a) or F1^l E2^l (side b).
struct AnsatzUnknown {
  int power = 0;
  bool e_first = true;  // E^l (x) F^l
  Polynomial::Exponents exponents;  // (H1, H2, I1, I2)

  int degree() const;
  std::string label() const;  // "a1[H1*I2]"
};

class TwistAnsatz {
 public:
  /// Powers l < power_cutoff, coefficient polynomials of total degree <= degree_cutoff.
  TwistAnsatz(int power_cutoff, int degree_cutoff);

  int power_cutoff() const { return power_cutoff_; }
  int degree_cutoff() const { return degree_cutoff_; }
  const std::vector<AnsatzUnknown>& unknowns() const { return unknowns_; }

  TensorElement basis_tensor(std::size_t index) const;
  TensorElement instantiate(std::span<const Rational> values) const;

 private:
  int power_cutoff_;
  int degree_cutoff_;
  std::vector<AnsatzUnknown> unknowns_;
};

enum class SolveStatus { solved, infeasible_at_cutoff, inconsistent };

struct SolutionSet {
  SolveStatus status = SolveStatus::solved;
  int order = 0;
  int cutoff_l = 0;
  int cutoff_d = 0;
  TensorElement particular;
  std::vector<TensorElement> homogeneous_basis;
  std::vector<std::string> pivot_log;
  std::string message;
};

/// Assembles the order-k equations of all three generator relations as an
/// exact linear system over the ansatz unknowns and solves it. Pivots are
/// taken from the last unknown down, so the free unknowns are the lowest in
/// (l, degree, lex) order; the particular solution sets them to zero.
SolutionSet solve_order(int k, const TwistCandidate& lower, const TwistAnsatz& ansatz);

/// solve_order with default cutoffs L = k+1, D = 2k (when not given), retrying
/// with (L+1, D+2) on infeasibility up to `max_escalations` times.
SolutionSet solve_order_escalating(int k, const TwistCandidate& lower, std::optional<int> cutoff_l = std::nullopt,
                                   std::optional<int> cutoff_d = std::nullopt, int max_escalations = 2);

/// True iff f commutes with Delta(H), Delta(E), Delta(F).
bool kernel_check(const TensorElement& f);

/// (eps (x) id)(F) = (id (x) eps)(F) = 1, order by order.
VerificationReport normalization_check(const TwistCandidate& f);

/// sigma(F) F - 1.
HSeries<TensorElement> unitarity_defect(const TwistCandidate& f);

/// (F (x) 1)(Delta (x) id)(F) - (1 (x) F)(id (x) Delta)(F).
HSeries<TensorElement3> cocycle_defect(const TwistCandidate& f);

}  // namespace twistkit
