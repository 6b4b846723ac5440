#include "qmckay/intersect.hpp"

#include "qmckay/errors.hpp"

namespace qmckay {

namespace {

IntersectionData from_root_sums(const std::vector<RootVector>& roots, const std::vector<int>& coords) {
  IntersectionData d;
  const int n = static_cast<int>(coords.size());
  d.dimension = n;
  d.one_point.assign(static_cast<size_t>(n), Rational(0));
  d.two_point = RationalMatrix(n, n);
  d.three_point.assign(static_cast<size_t>(n * n * n), Rational(0));
  std::vector<long> two(static_cast<size_t>(n * n), 0), three(static_cast<size_t>(n * n * n), 0);
  for (const auto& a : roots) {
    for (int i = 0; i < n; ++i) {
      long ai = a[coords[i]];
      if (ai == 0) continue;
      for (int j = 0; j < n; ++j) {
        long aij = ai * a[coords[j]];
        two[i * n + j] += aij;
        if (aij == 0) continue;
        for (int k = 0; k < n; ++k) three[(i * n + j) * n + k] += aij * a[coords[k]];
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.two_point(i, j) = two[i * n + j];
  for (size_t i = 0; i < three.size(); ++i) d.three_point[i] = three[i];
  return d;
}

}  // namespace

IntersectionData threefold_integrals(const McKayData& data) {
  const Rational h = data.roots.coxeter_number;
  IntersectionData d = from_root_sums(data.roots.positive_roots, data.curve_nodes);
  d.zero_point = {Rational(1, data.group.order), -3};
  d.one_point_t_power = -2;
  d.two_point = d.two_point.scaled(Rational(-1) / (2 * h));
  d.two_point_t_power = -1;
  for (auto& x : d.three_point) x /= 4;
  d.three_point_t_power = 0;
  return d;
}

IntersectionData surface_integrals(const McKayData& data) {
  const Rational h = data.roots.coxeter_number;
  std::vector<int> all(static_cast<size_t>(data.roots.rank()));
  for (int i = 0; i < data.roots.rank(); ++i) all[i] = i;
  IntersectionData d = from_root_sums(data.roots.positive_roots, all);
  d.zero_point = {Rational(4, data.binary.order), -2};
  d.one_point_t_power = -1;
  d.two_point = d.two_point.scaled(Rational(-1) / h);
  d.two_point_t_power = 0;
  for (auto& x : d.three_point) x /= 2;
  d.three_point_t_power = 1;
  return d;
}

PairingMatrix mckay_pairing(const McKayData& data) {
  const GroupModel& g = data.group;
  const int n = data.curve_count();
  const Real tol = tolerance(30);
  PairingMatrix p{RationalMatrix(n, n), 1};
  for (int a = 0; a < n; ++a) {
    const auto& chi_a = g.table.values[data.curve_irreps[a]];
    std::vector<Complex> twisted;
    for (int c = 0; c < g.class_count(); ++c) twisted.push_back((g.defining_character[c] - Complex(Real(3))) * chi_a[c]);
    for (int b = 0; b < n; ++b) {
      Complex v = g.inner_product(twisted, g.table.values[data.curve_irreps[b]]);
      auto r = round_to_integer(v.re, tol);
      if (!r || boost::multiprecision::abs(v.im) >= tol)
        throw ConsistencyError("McKay pairing entry is not an integer for " + data.spec.name());
      p.matrix(a, b) = Rational(*r);
    }
  }
  return p;
}

ClassicalPotential classical_potential(const McKayData& data) {
  ClassicalPotential pot;
  IntersectionData d = threefold_integrals(data);
  const int n = d.dimension;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const Rational& v = d.three(i, j, k);
        if (v == 0) continue;
        // number of distinct orderings of (i, j, k)
        int perms = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
        pot.cubic.push_back({{i, j, k}, v, v * perms / 6});
      }
  pot.x_e_cubed = {Rational(1, data.group.order), -3};
  for (int c = 1; c < data.group.class_count(); ++c) {
    pot.class_labels.push_back(data.group.classes[c].label);
    pot.x_e_pairs.push_back({Rational(1, data.group.centralizer_order(c)), -1});
  }
  return pot;
}

}  // namespace qmckay
