#pragma once

#include "qmckay/series.hpp"

namespace oracle {

/// prod_{m=1..M} (1 - q^beta Q^m)^m by plain repeated multiplication.
inline qmckay::MultiSeries direct_macmahon(const std::vector<int>& beta, const qmckay::Truncation& tr) {
  using namespace qmckay;
  auto vars = curve_and_formal_variables(static_cast<int>(beta.size()));
  MultiSeries out = MultiSeries::constant(vars, tr, 1);
  for (int m = 1; m <= tr.Q_degree; ++m) {
    MultiSeries f = MultiSeries::constant(vars, tr, 1);
    Monomial mono{beta, 0};
    mono.exponents.push_back(m);
    f.add_term(mono, -1);
    for (int k = 0; k < m; ++k) out = out * f;
  }
  return out;
}

/// M(q1) M(q1 q2)^2 M(q2)^4 M(q2^2)^{1/2} M(q1 q2^2), as written out for D5.
inline qmckay::MultiSeries d5_closed_product(const qmckay::Truncation& tr) {
  using namespace qmckay;
  auto m1 = direct_macmahon({1, 0}, tr), m11 = direct_macmahon({1, 1}, tr), m2 = direct_macmahon({0, 1}, tr);
  auto m22 = direct_macmahon({0, 2}, tr), m12 = direct_macmahon({1, 2}, tr);
  auto m2sq = m2 * m2;
  return m1 * m11 * m11 * m2sq * m2sq * pow_rational(m22, Rational(1, 2)) * m12;
}

}  // namespace oracle
