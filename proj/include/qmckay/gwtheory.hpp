#pragma once

#include "qmckay/grouprep.hpp"
#include "qmckay/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmckay {

/// Coefficients over Irr*(G) in McKayData::curve_irreps order.
using CurveClass = std::vector<int>;

/// Restriction of a positive root to the non-binary nodes. Throws
/// PreconditionError when alpha is not a positive root.
CurveClass curve_class(const McKayData& data, const RootVector& alpha);

struct BPSEntry {
  CurveClass beta;
  Rational n0;
  int fiber_size = 0;  // |c^{-1}(beta)|
};

/// Genus zero only; higher genus BPS numbers all vanish.
struct BPSTable {
  std::vector<BPSEntry> entries;  // sorted by class
  int curve_count = 0;

  Rational n0(const CurveClass& beta) const;
};

BPSTable bps_table(const McKayData& data);

struct PartitionFunction {
  MultiSeries series;
  /// (class, weight) of every factor macmahon_factor(class, weight).
  std::vector<std::pair<CurveClass, Rational>> factors;
  std::string tag;
};

/// Product over positive roots with c(alpha) != 0 of M(q^{c(alpha)})^{1/2}.
PartitionFunction partition_function(const McKayData& data, const Truncation& tr);
/// Product over BPS classes of M(q^beta)^{n0}.
PartitionFunction partition_function_by_class(const McKayData& data, const Truncation& tr);
/// The same series, read with Q as the DT variable.
PartitionFunction dt_partition(const McKayData& data, const Truncation& tr);

/// Positive integers d with beta/d integral.
std::vector<int> class_divisors(const CurveClass& beta);

Rational gw_genus0(const BPSTable& bps, const CurveClass& beta);
Rational gw_all_genus(const BPSTable& bps, const CurveClass& beta, int g);

/// Compares log(partition_function) with the all-genus GW invariants: for
/// every class gamma in the truncation, the Q-expansion of log Z at q^gamma
/// determines per-divisor weights w_d, and sum_d w_d (1/d)(2 sin(d lambda/2))^-2
/// must reproduce sum_g N^g_gamma lambda^{2g-2}.
struct BridgeReport {
  int classes_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
BridgeReport free_energy_bridge(const McKayData& data, const Truncation& tr);

/// O(-k) + O(k-2), k = number of binary nodes adjacent to the node of the
/// curve-th element of Irr*(G).
std::pair<int, int> normal_bundle_type(const McKayData& data, int curve);

}  // namespace qmckay
