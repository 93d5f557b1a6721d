#pragma once

// Spin-j representations of sl(2) over Q and evaluation of universal
// elements and series.
//
// Basis e_m, m = j, j-1, ..., -j (index i = j - m):
//   H e_m = m e_m,   E e_m = (j - m) e_{m+1},   F e_m = ((j + m)/2) e_{m-1}.
// Not the unitary normalization: matrices differ from the square-root
// convention by a diagonal similarity, which no algebraic check can see.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "twistkit/hseries.hpp"
#include "twistkit/pbw.hpp"
#include "twistkit/report.hpp"
#include "twistkit/tensor.hpp"
#include "twistkit/twist.hpp"

namespace twistkit {

/// Square matrix over Q. A default-constructed Matrix is the scalar 0 of
/// unspecified size; scalars combine with sized matrices as multiples of the
/// identity, which lets HSeries<Matrix> work without knowing the dimension.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix scalar(const Rational& c);
  static Matrix identity(std::size_t n);

  /// 0 for a scalar matrix.
  std::size_t dim() const { return n_; }
  bool is_scalar() const { return n_ == 0; }

  Rational operator()(std::size_t r, std::size_t c) const;
  Rational& at(std::size_t r, std::size_t c);

  bool is_zero() const;
  /// Materializes a scalar at size n (no-op for sized matrices of size n).
  Matrix sized(std::size_t n) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Rational& q);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string render() const;

 private:
  std::size_t n_ = 0;
  Rational scalar_{0};
  std::vector<Rational> data_;  // row-major
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);
/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

template <>
struct coeff_traits<Matrix> {
  static Matrix one() { return Matrix::scalar(Rational(1)); }
  static std::optional<Rational> scalar_part(const Matrix& m);
  static bool is_zero(const Matrix& m) { return m.is_zero(); }
  static std::string render(const Matrix& m) { return m.render(); }
  static bool is_atomic(const Matrix&) { return false; }
};

/// Matrix-valued series; cell (r, c) is a series of rationals.
using RepMatrix = HSeries<Matrix>;

HSeries<Rational> entry(const RepMatrix& m, std::size_t r, std::size_t c);
/// Aligned plain-text table of series entries.
std::string render_table(const RepMatrix& m);

class SpinRep {
 public:
  explicit SpinRep(int two_j);

  int two_j() const { return two_j_; }
  Rational j() const { return make_rational(two_j_, 2); }
  std::size_t dim() const { return static_cast<std::size_t>(two_j_) + 1; }

  const Matrix& h() const { return h_; }
  const Matrix& e() const { return e_; }
  const Matrix& f() const { return f_; }
  /// rho(I) = 2 rho(E) rho(F) + rho(H)^2 - rho(H).
  Matrix casimir() const;

  /// rho(E^e F^f H^d).
  Matrix monomial(const PBWMonomial& m) const;

 private:
  int two_j_;
  Matrix h_, e_, f_;
};

SpinRep spin_rep(int two_j);

Matrix evaluate(const Element& x, const SpinRep& rep);
Matrix evaluate(const TensorElement& x, const SpinRep& rep1, const SpinRep& rep2);
Matrix evaluate(const TensorElement3& x, const SpinRep& rep1, const SpinRep& rep2, const SpinRep& rep3);
RepMatrix evaluate(const HSeries<Element>& x, const SpinRep& rep);
RepMatrix evaluate(const HSeries<TensorElement>& x, const SpinRep& rep1, const SpinRep& rep2);
RepMatrix evaluate(const HSeries<TensorElement3>& x, const SpinRep& rep1, const SpinRep& rep2, const SpinRep& rep3);

/// (rho (x) id)(F) up to `order`: a dim x dim array of universal series,
/// row-major. Defaults to the spin-1/2 representation on leg 1.
struct SemiUniversal {
  std::size_t dim = 0;
  std::vector<HSeries<Element>> entries;

  const HSeries<Element>& at(std::size_t r, std::size_t c) const { return entries.at(r * dim + c); }
};

SemiUniversal semi_universal(const TwistCandidate& f, int order, const SpinRep& rep = SpinRep(1));
/// Evaluates the universal leg of a semi-universal array in `rep`, giving
/// the matrix of (rho1 (x) rep)(F).
RepMatrix evaluate(const SemiUniversal& s, const SpinRep& rep);

/// rho(sigma(F) F) - 1 in rep (x) rep, default 1/2 (x) 1/2.
VerificationReport rep_unitarity_check(const TwistCandidate& f, int order, const SpinRep& rep = SpinRep(1));

/// R12 R13 R23 - R23 R13 R12 in rep^{(x)3}.
RepMatrix yang_baxter_defect(const HSeries<TensorElement>& r, const SpinRep& rep);

}  // namespace twistkit
