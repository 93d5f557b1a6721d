#include "twistkit/report.hpp"

#include <sstream>

namespace twistkit {

std::string VerificationReport::render() const {
  std::ostringstream out;
  for (const auto& r : relations) {
    out << r.name << ": ";
    if (r.passed()) {
      out << "pass (orders 0.." << static_cast<int>(r.order_ok.size()) - 1 << ")";
    } else {
      out << (r.expected_failure ? "fails-as-paper-states" : "FAIL") << " at order " << *r.first_failure;
      if (!r.residual.empty()) out << "\n  residual: " << r.residual;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace twistkit
