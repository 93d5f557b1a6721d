#include "twistkit/rmatrix.hpp"

#include <map>
#include <sstream>

#include "twistkit/deform.hpp"
#include "twistkit/linear_system.hpp"
#include "twistkit/qcalc.hpp"
#include "twistkit/residual.hpp"

namespace twistkit {

HSeries<TensorElement> classical_R(int order) { return series_exp_h(cartan_killing(), order); }

HSeries<TensorElement> quantum_R_image(int order, RVariant variant, int extra_terms) {
  const int s = variant == RVariant::intertwining ? 1 : -1;
  const auto h = Element::gen_h();
  const auto x = series_exp_h(h, order) * m_jplus(order);
  const auto y = series_exp_h(-h, order) * m_jminus(order);
  const auto step = tensor_series(x, y);
  const auto one_minus_q2 = HSeries<Rational>::one(order) - q_power(Rational(-2), order);

  HSeries<TensorElement> sum(order);
  auto power = HSeries<TensorElement>::one(order);
  auto base = HSeries<Rational>::one(order);  // 2^n (1 - q^-2)^n
  for (int n = 0; n <= order + extra_terms; ++n) {
    if (n > 0) {
      power = power * step;
      base = base * one_minus_q2 * Rational(2);
    }
    const auto coeff = q_power(make_rational(s * n * (n - 1), 2), order) * base * series_inverse(q_factorial(n, order));
    sum += scale(coeff, power);
  }
  return series_exp_h(tensor_product(h, h) * Rational(2), order) * sum;
}

VerificationReport r_intertwining_check(const HSeries<TensorElement>& quantum_image) {
  const int order = quantum_image.order();
  const auto images = generator_images(order);
  VerificationReport report;
  const std::pair<Generator, const char*> gens[] = {
      {Generator::j0, "R~q intertwines J0"}, {Generator::jplus, "R~q intertwines J+"}, {Generator::jminus, "R~q intertwines J-"}};
  for (const auto& [g, name] : gens) {
    const auto d = delta_q_image(g, images);
    const auto d_op = series_map(d, [](const TensorElement& t) { return flip(t); });
    report.relations.push_back(relation_from_residual(name, quantum_image * d - d_op * quantum_image));
  }
  return report;
}

RMatrixPair r_matrix_pair(int order, RVariant variant) {
  return {classical_R(order), quantum_R_image(order, variant)};
}

HSeries<TensorElement> quasitriangular_residual(const TwistCandidate& f, const RMatrixPair& r) {
  const int n = r.classical.order();
  const auto fs = f.series.padded(n);
  const auto flipped = series_map(fs, [](const TensorElement& t) { return flip(t); });
  return r.quantum_image * fs - flipped * r.classical;
}

HSeries<TensorElement> quasitriangular_residual(const TwistCandidate& f, int order) {
  return quasitriangular_residual(f, r_matrix_pair(order));
}

VerificationReport quasitriangular_check(const TwistCandidate& f, int order) {
  VerificationReport report;
  report.relations.push_back(relation_from_residual("R~q F = sigma(F) R", quasitriangular_residual(f, order)));
  return report;
}

TensorElement symmetry_rhs(int order, const TwistCandidate& ftilde, const RMatrixPair& r) {
  if (order != 1 && order != 2) throw std::invalid_argument("symmetry_rhs: order must be 1 or 2");
  if (r.classical.order() < order) throw std::invalid_argument("symmetry_rhs: R-matrices truncated too low");
  const auto fs = ftilde.series.padded(2);
  const TensorElement& f1 = fs[1];
  if (order == 1) return r.quantum_image[1] - r.classical[1] - (flip(f1) - f1);
  const TensorElement& f2 = fs[2];
  return f2 - flip(f2) - flip(f1) * r.classical[1] + r.quantum_image[1] * f1 + r.quantum_image[2] - r.classical[2];
}

TensorElement symmetry_rhs(int order, const TwistCandidate& ftilde) {
  return symmetry_rhs(order, ftilde, r_matrix_pair(order));
}

SolutionSet impose_quasitriangular(const TwistCandidate& lower, const SolutionSet& solution) {
  SolutionSet out = solution;
  if (solution.status != SolveStatus::solved) return out;
  const int k = solution.order;
  const TwistCandidate candidate = extend(TwistCandidate{lower.series.truncated(k - 1)}, solution.particular);
  const auto residual = quasitriangular_residual(candidate, k);
  for (int j = 0; j < k; ++j) {
    if (!residual[j].is_zero()) {
      out.status = SolveStatus::inconsistent;
      out.message = "lower orders violate the quasitriangular relation at order " + std::to_string(j);
      return out;
    }
  }

  // Order-k residual is affine in F_k through F_k - sigma(F_k).
  const auto& basis = solution.homogeneous_basis;
  std::map<TensorElement::Key, SparseVector> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const TensorElement antisym = basis[i] - flip(basis[i]);
    for (const auto& [key, c] : antisym.terms()) rows[key].emplace_back(i, c);
  }
  for (const auto& [key, c] : residual[k].terms()) rows.try_emplace(key);

  ExactLinearSystem system(basis.size());
  for (const auto& [key, coeffs] : rows) system.add_equation(coeffs, -residual[k].coefficient(key));
  const LinearSolution sol = system.solve();

  std::ostringstream summary;
  summary << "quasitriangular: corrections=" << basis.size() << " rank=" << sol.pivot_columns.size()
          << " remaining=" << sol.free_columns.size();
  out.pivot_log.push_back(summary.str());
  if (!sol.consistent) {
    out.status = SolveStatus::infeasible_at_cutoff;
    out.message = "quasitriangular relation cannot be met within the homogeneous space at order " + std::to_string(k);
    return out;
  }
  auto combine = [&](const std::vector<Rational>& c) {
    TensorElement t;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) t += basis[i] * c[i];
    return t;
  };
  out.particular = solution.particular + combine(sol.particular);
  out.homogeneous_basis.clear();
  for (const auto& v : sol.nullspace) out.homogeneous_basis.push_back(combine(v));
  return out;
}

}  // namespace twistkit
