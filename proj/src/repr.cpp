#include "twistkit/repr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "twistkit/residual.hpp"

namespace twistkit {

Matrix Matrix::scalar(const Rational& c) {
  Matrix m;
  m.scalar_ = c;
  return m;
}

Matrix Matrix::identity(std::size_t n) { return scalar(Rational(1)).sized(n); }

Rational Matrix::operator()(std::size_t r, std::size_t c) const {
  if (is_scalar()) return r == c ? scalar_ : Rational(0);
  return data_.at(r * n_ + c);
}

Rational& Matrix::at(std::size_t r, std::size_t c) {
  if (is_scalar()) throw std::logic_error("Matrix::at on a scalar matrix");
  return data_.at(r * n_ + c);
}

bool Matrix::is_zero() const {
  if (is_scalar()) return sgn(scalar_) == 0;
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::sized(std::size_t n) const {
  if (!is_scalar()) {
    if (n != n_) throw std::invalid_argument("Matrix: dimension mismatch");
    return *this;
  }
  Matrix out(n);
  if (sgn(scalar_) != 0)
    for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = scalar_;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (is_scalar() && o.is_scalar()) {
    scalar_ += o.scalar_;
    return *this;
  }
  const std::size_t n = is_scalar() ? o.n_ : n_;
  if (is_scalar()) *this = sized(n);
  const Matrix rhs = o.sized(n);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) { return *this += o * Rational(-1); }

Matrix operator*(const Matrix& a, const Rational& q) {
  Matrix out = a;
  out.scalar_ *= q;
  for (auto& x : out.data_) x *= q;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.is_scalar()) return b * a.scalar_;
  if (b.is_scalar()) return a * b.scalar_;
  if (a.n_ != b.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  const std::size_t n = a.n_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = a.data_[i * n + k];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.data_[i * n + j] += x * b.data_[k * n + j];
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.is_scalar() && b.is_scalar()) return a.scalar_ == b.scalar_;
  const std::size_t n = a.is_scalar() ? b.n_ : a.n_;
  return a.sized(n).data_ == b.sized(n).data_;
}

std::string Matrix::render() const {
  if (is_scalar()) return to_string(scalar_);
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < n_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < n_; ++c) out << (c ? ", " : "") << to_string(data_[r * n_ + c]);
    out << ']';
  }
  out << ']';
  return out.str();
}

std::optional<Rational> coeff_traits<Matrix>::scalar_part(const Matrix& m) {
  if (m.is_scalar()) return m(0, 0);
  const Rational d = m(0, 0);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (m(r, c) != (r == c ? d : Rational(0))) return std::nullopt;
  return d;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.is_scalar() || b.is_scalar()) throw std::invalid_argument("kron: operands must have a size");
  const std::size_t na = a.dim(), nb = b.dim();
  Matrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Rational x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out.at(i * nb + k, j * nb + l) = x * b(k, l);
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

HSeries<Rational> entry(const RepMatrix& m, std::size_t r, std::size_t c) {
  return series_map(m, [&](const Matrix& x) { return x(r, c); });
}

std::string render_table(const RepMatrix& m) {
  std::size_t n = 0;
  for (const auto& c : m.coeffs()) n = std::max(n, c.dim());
  if (n == 0) return render(series_map(m, [](const Matrix& x) { return x(0, 0); }));
  std::vector<std::string> cells(n * n);
  std::size_t width = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      cells[r * n + c] = render(entry(m, r, c));
      width = std::max(width, cells[r * n + c].size());
    }
  std::ostringstream out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& s = cells[r * n + c];
      out << (c ? "  " : "") << s;
      if (c + 1 < n) out << std::string(width - s.size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

SpinRep::SpinRep(int two_j) : two_j_(two_j) {
  if (two_j < 0) throw std::invalid_argument("spin_rep: two_j must be >= 0");
  const std::size_t n = dim();
  h_ = Matrix(n);
  e_ = Matrix(n);
  f_ = Matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational m = j() - static_cast<long>(i);
    h_.at(i, i) = m;
    if (i > 0) e_.at(i - 1, i) = j() - m;
    if (i + 1 < n) f_.at(i + 1, i) = (j() + m) / 2;
  }
}

Matrix SpinRep::casimir() const { return e_ * f_ * Rational(2) + h_ * h_ - h_; }

namespace {

Matrix power(const Matrix& m, std::uint32_t k, std::size_t n) {
  Matrix out = Matrix::identity(n);
  for (std::uint32_t i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

Matrix SpinRep::monomial(const PBWMonomial& m) const {
  const std::size_t n = dim();
  // E^e and F^f vanish once the exponent reaches the dimension.
  if (m.e >= n || m.f >= n) return Matrix(n);
  return power(e_, m.e, n) * power(f_, m.f, n) * power(h_, m.d, n);
}

SpinRep spin_rep(int two_j) { return SpinRep(two_j); }

Matrix evaluate(const Element& x, const SpinRep& rep) {
  Matrix out(rep.dim());
  for (const auto& [m, c] : x.terms()) out += rep.monomial(m) * c;
  return out;
}

Matrix evaluate(const TensorElement& x, const SpinRep& rep1, const SpinRep& rep2) {
  Matrix out(rep1.dim() * rep2.dim());
  for (const auto& [k, c] : x.terms()) out += kron(rep1.monomial(k[0]), rep2.monomial(k[1])) * c;
  return out;
}

Matrix evaluate(const TensorElement3& x, const SpinRep& rep1, const SpinRep& rep2, const SpinRep& rep3) {
  Matrix out(rep1.dim() * rep2.dim() * rep3.dim());
  for (const auto& [k, c] : x.terms())
    out += kron(kron(rep1.monomial(k[0]), rep2.monomial(k[1])), rep3.monomial(k[2])) * c;
  return out;
}

RepMatrix evaluate(const HSeries<Element>& x, const SpinRep& rep) {
  return series_map(x, [&](const Element& c) { return evaluate(c, rep); });
}

RepMatrix evaluate(const HSeries<TensorElement>& x, const SpinRep& rep1, const SpinRep& rep2) {
  return series_map(x, [&](const TensorElement& c) { return evaluate(c, rep1, rep2); });
}

RepMatrix evaluate(const HSeries<TensorElement3>& x, const SpinRep& rep1, const SpinRep& rep2, const SpinRep& rep3) {
  return series_map(x, [&](const TensorElement3& c) { return evaluate(c, rep1, rep2, rep3); });
}

SemiUniversal semi_universal(const TwistCandidate& f, int order, const SpinRep& rep) {
  const auto fs = f.series.padded(order);
  const std::size_t n = rep.dim();
  SemiUniversal out;
  out.dim = n;
  std::vector<std::vector<Element>> cells(n * n, std::vector<Element>(static_cast<std::size_t>(order) + 1));
  for (int k = 0; k <= order; ++k)
    for (const auto& [key, c] : fs[k].terms()) {
      const Matrix m = rep.monomial(key[0]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) {
          const Rational x = m(r, col);
          if (sgn(x) != 0) cells[r * n + col][static_cast<std::size_t>(k)].add_term(key[1], c * x);
        }
    }
  for (auto& cell : cells) out.entries.emplace_back(std::move(cell));
  return out;
}

RepMatrix evaluate(const SemiUniversal& s, const SpinRep& rep) {
  if (s.entries.empty()) throw std::invalid_argument("evaluate: empty semi-universal array");
  const int order = s.entries.front().order();
  const std::size_t m = rep.dim(), n = s.dim * m;
  std::vector<Matrix> coeffs;
  for (int k = 0; k <= order; ++k) {
    Matrix out(n);
    for (std::size_t r = 0; r < s.dim; ++r)
      for (std::size_t c = 0; c < s.dim; ++c) {
        const Matrix block = evaluate(s.at(r, c)[k], rep);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) out.at(r * m + i, c * m + j) = block(i, j);
      }
    coeffs.push_back(std::move(out));
  }
  return RepMatrix(std::move(coeffs));
}

VerificationReport rep_unitarity_check(const TwistCandidate& f, int order, const SpinRep& rep) {
  const auto fs = f.series.padded(order);
  const auto flipped = series_map(fs, [](const TensorElement& t) { return flip(t); });
  const RepMatrix defect = evaluate(flipped * fs - HSeries<TensorElement>::one(order), rep, rep);
  VerificationReport report;
  report.relations.push_back(relation_from_residual(
      "sigma(F) F = 1 in spin " + to_string(rep.j()) + " x " + to_string(rep.j()), defect));
  return report;
}

RepMatrix yang_baxter_defect(const HSeries<TensorElement>& r, const SpinRep& rep) {
  auto embed = [&](int a, int b) {
    return evaluate(series_map(r, [&](const TensorElement& t) {
      TensorElement3 out;
      for (const auto& [k, c] : t.terms()) {
        TensorElement3::Key key{};
        key[static_cast<std::size_t>(a)] = k[0];
        key[static_cast<std::size_t>(b)] = k[1];
        out.add_term(key, c);
      }
      return out;
    }), rep, rep, rep);
  };
  const auto r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
  return r12 * r13 * r23 - r23 * r13 * r12;
}

}  // namespace twistkit
