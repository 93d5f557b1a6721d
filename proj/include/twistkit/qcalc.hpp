#pragma once

// q-calculus with q = e^h, expanded as truncated h-series.

#include "twistkit/hseries.hpp"
#include "twistkit/polynomial.hpp"

namespace twistkit {

/// S(x) = (sinh(hx)/(hx)) / (sinh(h)/h) as a series whose coefficients are
/// univariate polynomials in x (only even powers of h and x occur).
HSeries<Polynomial> sinh_ratio_series(int order);

/// [p] = (q^p - q^-p)/(q - q^-1) = p * S(p) for p in commuting symbols.
HSeries<Polynomial> q_analog(const Polynomial& p, int order);

/// Scalar q-number [n].
HSeries<Rational> q_number(const Rational& n, int order);

/// [n]! = [n][n-1]...[1], with [0]! = 1.
HSeries<Rational> q_factorial(int n, int order);

/// q^s = exp(h s) for a scalar s.
HSeries<Rational> q_power(const Rational& s, int order);

}  // namespace twistkit
