#include "qmckay/gwtheory.hpp"

#include "qmckay/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qmckay {

CurveClass curve_class(const McKayData& data, const RootVector& alpha) {
  const auto& roots = data.roots.positive_roots;
  if (std::find(roots.begin(), roots.end(), alpha) == roots.end())
    throw PreconditionError("not a positive root of " + data.roots.ade.name());
  CurveClass c;
  for (int node : data.curve_nodes) c.push_back(alpha[node]);
  return c;
}

namespace {
bool is_zero_class(const CurveClass& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}
}  // namespace

Rational BPSTable::n0(const CurveClass& beta) const {
  for (const auto& e : entries)
    if (e.beta == beta) return e.n0;
  return 0;
}

BPSTable bps_table(const McKayData& data) {
  std::map<CurveClass, int> fibers;
  for (const auto& alpha : data.roots.positive_roots) {
    CurveClass c = curve_class(data, alpha);
    if (!is_zero_class(c)) ++fibers[c];
  }
  BPSTable t;
  t.curve_count = data.curve_count();
  for (const auto& [beta, n] : fibers) t.entries.push_back({beta, Rational(n, 2), n});
  return t;
}

namespace {

PartitionFunction product_of(const std::vector<std::pair<CurveClass, Rational>>& factors, int curve_count, const Truncation& tr) {
  MultiSeries z = MultiSeries::constant(curve_and_formal_variables(curve_count), tr, 1);
  for (const auto& [beta, w] : factors) {
    if (std::accumulate(beta.begin(), beta.end(), 0) > tr.q_total_degree) continue;
    z = z * macmahon_factor(beta, w, tr);
  }
  return {z, factors, "reduced GW partition function"};
}

}  // namespace

PartitionFunction partition_function(const McKayData& data, const Truncation& tr) {
  std::vector<std::pair<CurveClass, Rational>> factors;
  for (const auto& alpha : data.roots.positive_roots) {
    CurveClass c = curve_class(data, alpha);
    if (!is_zero_class(c)) factors.emplace_back(c, Rational(1, 2));
  }
  return product_of(factors, data.curve_count(), tr);
}

PartitionFunction partition_function_by_class(const McKayData& data, const Truncation& tr) {
  std::vector<std::pair<CurveClass, Rational>> factors;
  for (const auto& e : bps_table(data).entries) factors.emplace_back(e.beta, e.n0);
  return product_of(factors, data.curve_count(), tr);
}

PartitionFunction dt_partition(const McKayData& data, const Truncation& tr) {
  PartitionFunction z = partition_function_by_class(data, tr);
  z.tag = "reduced DT prediction";
  return z;
}

std::vector<int> class_divisors(const CurveClass& beta) {
  int g = 0;
  for (int b : beta) {
    if (b < 0) throw PreconditionError("curve class with a negative coefficient");
    g = std::gcd(g, b);
  }
  if (g == 0) throw PreconditionError("the zero class has no divisors");
  std::vector<int> out;
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) out.push_back(d);
  return out;
}

namespace {
CurveClass divided(const CurveClass& beta, int d) {
  CurveClass c = beta;
  for (int& x : c) x /= d;
  return c;
}
}  // namespace

Rational gw_genus0(const BPSTable& bps, const CurveClass& beta) {
  Rational n(0);
  for (int d : class_divisors(beta)) n += bps.n0(divided(beta, d)) / Rational(d * d * d);
  return n;
}

Rational gw_all_genus(const BPSTable& bps, const CurveClass& beta, int g) {
  if (g < 0) throw PreconditionError("genus must be nonnegative");
  const int L = std::max(0, 2 * g - 2);
  Rational n(0);
  for (int d : class_divisors(beta)) {
    Rational w = bps.n0(divided(beta, d));
    if (w == 0) continue;
    n += w * sin_power_expansion(d, 0, L).coefficient({2 * g - 2});
  }
  return n;
}

BridgeReport free_energy_bridge(const McKayData& data, const Truncation& tr) {
  BridgeReport report;
  const BPSTable bps = bps_table(data);
  const MultiSeries lz = log(partition_function(data, tr).series);
  const int n = data.curve_count();

  // Group the coefficients of log Z by curve class.
  std::map<CurveClass, std::map<int, Rational>> by_class;
  for (const auto& [m, c] : lz.terms()) {
    CurveClass gamma(m.exponents.begin(), m.exponents.begin() + n);
    by_class[gamma][m.exponents[n]] = c;
  }
  // Every BPS multiple in range must show up, so walk the lattice points of
  // the classes that appear in log Z, plus multiples of BPS classes.
  std::map<CurveClass, bool> gammas;
  for (const auto& [gamma, _] : by_class) gammas[gamma] = true;
  for (const auto& e : bps.entries) {
    int deg = std::accumulate(e.beta.begin(), e.beta.end(), 0);
    for (int d = 1; d * deg <= tr.q_total_degree; ++d) {
      CurveClass g = e.beta;
      for (int& x : g) x *= d;
      gammas[g] = true;
    }
  }

  for (const auto& [gamma, _] : gammas) {
    const auto& qcoef = by_class[gamma];
    auto coef = [&](int j) {
      auto it = qcoef.find(j);
      return it == qcoef.end() ? Rational(0) : it->second;
    };
    auto divs = class_divisors(gamma);
    // coef(Q^j) = -sum_{d | gcd(gamma, j)} w_d j / d^2
    std::map<int, Rational> w;
    bool solvable = true;
    for (int d0 : divs) {
      if (d0 > tr.Q_degree) {
        solvable = false;
        break;
      }
      Rational rest = -coef(d0);
      for (const auto& [d, wd] : w)
        if (d0 % d == 0) rest -= wd * Rational(d0, d * d);
      w[d0] = rest * d0;
    }
    if (!solvable) continue;
    ++report.classes_checked;
    const std::string name = [&] {
      std::string s = "(";
      for (size_t i = 0; i < gamma.size(); ++i) s += (i ? "," : "") + std::to_string(gamma[i]);
      return s + ")";
    }();
    for (int j = 0; j <= tr.Q_degree; ++j) {
      Rational predicted(0);
      for (const auto& [d, wd] : w)
        if (j > 0 && j % d == 0) predicted -= wd * Rational(j, d * d);
      if (predicted != coef(j)) report.mismatches.push_back("class " + name + ": Q^" + std::to_string(j) + " coefficient is not a divisor sum");
    }
    for (int g = 0; 2 * g - 2 <= tr.lambda_order; ++g) {
      Rational from_series(0);
      for (const auto& [d, wd] : w)
        if (wd != 0) from_series += wd * sin_power_expansion(d, 0, std::max(0, 2 * g - 2)).coefficient({2 * g - 2});
      if (from_series != gw_all_genus(bps, gamma, g))
        report.mismatches.push_back("class " + name + ": genus " + std::to_string(g) + " disagrees");
    }
  }
  return report;
}

std::pair<int, int> normal_bundle_type(const McKayData& data, int curve) {
  if (curve < 0 || curve >= data.curve_count()) throw PreconditionError("curve index out of range");
  const int node = data.curve_nodes[curve];
  const auto adjacency = dynkin_neighbors(data.roots.ade);
  int k = 0;
  for (int nb : adjacency[node])
    if (data.binary_node[nb]) ++k;
  return {-k, k - 2};
}

}  // namespace qmckay
