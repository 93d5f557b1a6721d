#include "twistkit/twist.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twistkit/linear_system.hpp"
#include "twistkit/residual.hpp"

namespace twistkit {

TwistCandidate identity_candidate(int order) { return {HSeries<TensorElement>::one(order)}; }

TensorElement published_f2() {
  const Element e = Element::gen_e(), f = Element::gen_f(), h = Element::gen_h(), i = casimir();
  const TensorElement p = cartan_killing();
  const TensorElement id = TensorElement::one();
  const TensorElement hh = tensor_product(h, h);
  TensorElement out;
  out += (tensor_product(i, h * h) + tensor_product(h * h, i)) * Rational(1, 2);
  out += (tensor_product(e, h * f) - tensor_product(h * e, f) + tensor_product(h * f, e) - tensor_product(f, h * e)) *
         Rational(1, 3);
  out += hh * (id - p * Rational(3)) * Rational(1, 6);
  out -= p * Rational(11, 24);
  const TensorElement one_plus_p = id + p;
  out += (one_plus_p * one_plus_p - id - tensor_product(i, i) * Rational(2)) * Rational(1, 2);
  return out;
}

TwistCandidate published_candidate() {
  return {HSeries<TensorElement>({TensorElement::one(), classical_r(), published_f2()})};
}

TwistCandidate extend(const TwistCandidate& lower, const TensorElement& next) {
  std::vector<TensorElement> c = lower.series.coeffs();
  c.push_back(next);
  return {HSeries<TensorElement>(std::move(c))};
}

namespace {

struct GeneratorData {
  HSeries<TensorElement> classical;  // Delta(m(g))
  HSeries<TensorElement> quantum;    // Delta~_q(g)
};

std::array<GeneratorData, 3> generator_data(int order) {
  const auto images = generator_images(order);
  return {GeneratorData{coproduct(images.j0), delta_q_image(Generator::j0, images)},
          GeneratorData{coproduct(images.jplus), delta_q_image(Generator::jplus, images)},
          GeneratorData{coproduct(images.jminus), delta_q_image(Generator::jminus, images)}};
}

void require_invertible(const TwistCandidate& f) {
  auto c0 = f.series[0].scalar_part();
  if (!c0 || sgn(*c0) == 0) throw NotInvertible("twist candidate: F_0 must be a nonzero scalar multiple of 1 (x) 1");
}

constexpr const char* kRelationNames[3] = {"twist J0", "twist J+", "twist J-"};

}  // namespace

TwistResiduals twist_residual_series(const TwistCandidate& f, int order) {
  require_invertible(f);
  const auto fs = f.series.padded(order);
  const auto data = generator_data(order);
  auto residual = [&](const GeneratorData& g) { return fs * g.classical - g.quantum * fs; };
  return {residual(data[0]), residual(data[1]), residual(data[2])};
}

VerificationReport twist_residuals(const TwistCandidate& f, int order) {
  const auto r = twist_residual_series(f, order);
  VerificationReport report;
  report.relations.push_back(relation_from_residual(kRelationNames[0], r.j0));
  report.relations.push_back(relation_from_residual(kRelationNames[1], r.jplus));
  report.relations.push_back(relation_from_residual(kRelationNames[2], r.jminus));
  return report;
}

// ---------------------------------------------------------------------------
// Ansatz

int AnsatzUnknown::degree() const {
  int d = 0;
  for (auto x : exponents) d += static_cast<int>(x);
  return d;
}

std::string AnsatzUnknown::label() const {
  static const char* names[] = {"H1", "H2", "I1", "I2"};
  std::string mono;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!mono.empty()) mono += '*';
    mono += names[i];
    if (exponents[i] > 1) mono += "^" + std::to_string(exponents[i]);
  }
  return std::string(e_first ? "a" : "b") + std::to_string(power) + "[" + (mono.empty() ? "1" : mono) + "]";
}

TwistAnsatz::TwistAnsatz(int power_cutoff, int degree_cutoff)
    : power_cutoff_(power_cutoff), degree_cutoff_(degree_cutoff) {
  if (power_cutoff < 1 || degree_cutoff < 0) throw std::invalid_argument("TwistAnsatz: cutoffs must be positive");
  // Monomials in (H1, H2, I1, I2) sorted by (degree, lexicographic).
  std::vector<Polynomial::Exponents> monos;
  for (int d = 0; d <= degree_cutoff; ++d) {
    std::vector<Polynomial::Exponents> level;
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b)
        for (int c = d - a - b; c >= 0; --c) {
          const int e = d - a - b - c;
          level.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c),
                           static_cast<std::uint32_t>(e)});
        }
    std::sort(level.begin(), level.end());
    monos.insert(monos.end(), level.begin(), level.end());
  }
  for (int l = 0; l < power_cutoff; ++l) {
    for (bool e_first : {true, false}) {
      if (l == 0 && !e_first) continue;  // a_0 and b_0 multiply the same 1 (x) 1
      for (const auto& m : monos) unknowns_.push_back(AnsatzUnknown{l, e_first, m});
    }
  }
}

TensorElement TwistAnsatz::basis_tensor(std::size_t index) const {
  const AnsatzUnknown& u = unknowns_.at(index);
  const auto l = static_cast<std::uint32_t>(u.power);
  const Element h = Element::gen_h(), i = casimir();
  const Element e_pow({l, 0, 0}, Rational(1)), f_pow({0, l, 0}, Rational(1));
  const Element left = h.pow(u.exponents[0]) * i.pow(u.exponents[2]) * (u.e_first ? e_pow : f_pow);
  const Element right = h.pow(u.exponents[1]) * i.pow(u.exponents[3]) * (u.e_first ? f_pow : e_pow);
  return tensor_product(left, right);
}

TensorElement TwistAnsatz::instantiate(std::span<const Rational> values) const {
  if (values.size() != unknowns_.size()) throw std::invalid_argument("TwistAnsatz::instantiate: size mismatch");
  TensorElement out;
  for (std::size_t u = 0; u < values.size(); ++u)
    if (sgn(values[u]) != 0) out += basis_tensor(u) * values[u];
  return out;
}

// ---------------------------------------------------------------------------
// Solver

SolutionSet solve_order(int k, const TwistCandidate& lower, const TwistAnsatz& ansatz) {
  if (k < 1) throw std::invalid_argument("solve_order: k must be >= 1");
  if (lower.order() < k - 1) throw std::invalid_argument("solve_order: lower candidate must reach order k-1");
  SolutionSet out;
  out.order = k;
  out.cutoff_l = ansatz.power_cutoff();
  out.cutoff_d = ansatz.degree_cutoff();

  // Residual of the lower orders with F_k = 0 gives the source terms.
  const TwistCandidate base{lower.series.truncated(k - 1).padded(k)};
  const auto residuals = twist_residual_series(base, k);
  const HSeries<TensorElement>* per_gen[3] = {&residuals.j0, &residuals.jplus, &residuals.jminus};
  for (int g = 0; g < 3; ++g)
    for (int j = 0; j < k; ++j)
      if (!(*per_gen[g])[j].is_zero()) {
        out.status = SolveStatus::inconsistent;
        out.message = std::string("lower orders violate ") + kRelationNames[g] + " at order " + std::to_string(j);
        return out;
      }

  // Order-k equations: F_k Delta(g) - Delta(g) F_k = -(source)_k.
  const Element gens[3] = {Element::gen_h(), Element::gen_e(), Element::gen_f()};
  const int expected_weight[3] = {0, 1, -1};
  TensorElement deltas[3];
  for (int g = 0; g < 3; ++g) deltas[g] = coproduct(gens[g]);

  using RowKey = std::pair<int, TensorElement::Key>;
  std::map<RowKey, SparseVector> rows;
  const auto& unknowns = ansatz.unknowns();
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const TensorElement t = ansatz.basis_tensor(u);
    for (int g = 0; g < 3; ++g) {
      const TensorElement image = t * deltas[g] - deltas[g] * t;
      for (const auto& [key, c] : image.terms()) rows[{g, key}].emplace_back(u, c);
    }
  }
  std::map<RowKey, Rational> rhs;
  for (int g = 0; g < 3; ++g)
    for (const auto& [key, c] : (*per_gen[g])[k].terms()) {
      rhs[{g, key}] = -c;
      rows.try_emplace({g, key});
    }

  ExactLinearSystem system(unknowns.size(), PivotPreference::rightmost);
  for (const auto& [key, coeffs] : rows) {
    auto it = rhs.find(key);
    const Rational b = it == rhs.end() ? Rational(0) : it->second;
    if (coeffs.empty() && sgn(b) != 0 && weight(key.second) != expected_weight[key.first]) {
      // No weight-zero ansatz can ever produce this monomial.
      out.status = SolveStatus::inconsistent;
      out.message = std::string("source term of wrong weight in ") + kRelationNames[key.first];
      return out;
    }
    system.add_equation(coeffs, b);
  }
  const LinearSolution sol = system.solve();

  std::ostringstream summary;
  summary << "unknowns=" << unknowns.size() << " equations=" << system.num_equations()
          << " rank=" << sol.pivot_columns.size() << " free=" << sol.free_columns.size();
  out.pivot_log.push_back(summary.str());
  if (!sol.consistent) {
    out.status = SolveStatus::infeasible_at_cutoff;
    out.message = "no solution within cutoff L=" + std::to_string(out.cutoff_l) + ", D=" + std::to_string(out.cutoff_d);
    return out;
  }
  for (std::size_t c : sol.pivot_columns) {
    if (sgn(sol.particular[c]) == 0) continue;
    out.pivot_log.push_back(unknowns[c].label() + " = " + to_string(sol.particular[c]));
  }
  out.particular = ansatz.instantiate(sol.particular);
  for (const auto& v : sol.nullspace) out.homogeneous_basis.push_back(ansatz.instantiate(v));
  out.status = SolveStatus::solved;
  return out;
}

SolutionSet solve_order_escalating(int k, const TwistCandidate& lower, std::optional<int> cutoff_l,
                                   std::optional<int> cutoff_d, int max_escalations) {
  int l = cutoff_l.value_or(k + 1);
  int d = cutoff_d.value_or(2 * k);
  SolutionSet result;
  for (int attempt = 0; attempt <= max_escalations; ++attempt) {
    result = solve_order(k, lower, TwistAnsatz(l, d));
    if (result.status != SolveStatus::infeasible_at_cutoff) return result;
    l += 1;
    d += 2;
  }
  return result;
}

bool kernel_check(const TensorElement& f) {
  for (const Element& g : {Element::gen_h(), Element::gen_e(), Element::gen_f()}) {
    const TensorElement d = coproduct(g);
    if (!(f * d - d * f).is_zero()) return false;
  }
  return true;
}

VerificationReport normalization_check(const TwistCandidate& f) {
  VerificationReport report;
  for (int leg : {1, 2}) {
    std::vector<Element> defect;
    for (int k = 0; k <= f.order(); ++k) {
      Element c = counit_leg(f[k], leg);
      if (k == 0) c -= Element::one();
      defect.push_back(std::move(c));
    }
    report.relations.push_back(
        relation_from_residual(leg == 1 ? "(eps x id)(F) = 1" : "(id x eps)(F) = 1", HSeries<Element>(defect)));
  }
  return report;
}

HSeries<TensorElement> unitarity_defect(const TwistCandidate& f) {
  const auto flipped = series_map(f.series, [](const TensorElement& t) { return flip(t); });
  return flipped * f.series - HSeries<TensorElement>::one(f.order());
}

HSeries<TensorElement3> cocycle_defect(const TwistCandidate& f) {
  const auto f12 = series_map(f.series, [](const TensorElement& t) { return leg_embed3(t, 1); });
  const auto f23 = series_map(f.series, [](const TensorElement& t) { return leg_embed3(t, 2); });
  const auto d1 = series_map(f.series, [](const TensorElement& t) { return coproduct_leg(t, CoproductLeg::first); });
  const auto d2 = series_map(f.series, [](const TensorElement& t) { return coproduct_leg(t, CoproductLeg::second); });
  return f12 * d1 - f23 * d2;
}

}  // namespace twistkit
