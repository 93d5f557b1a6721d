#pragma once

#include <string>

#include "twistkit/hseries.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

/// Per-order zero test of a residual series.
template <Coefficient T>
RelationResult relation_from_residual(std::string name, const HSeries<T>& residual) {
  RelationResult r;
  r.name = std::move(name);
  for (int k = 0; k <= residual.order(); ++k) {
    const bool ok = coeff_traits<T>::is_zero(residual[k]);
    r.order_ok.push_back(ok);
    if (!ok && !r.first_failure) {
      r.first_failure = k;
      r.residual = coeff_traits<T>::render(residual[k]);
    }
  }
  return r;
}

}  // namespace twistkit
