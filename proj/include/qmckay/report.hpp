#pragma once

#include "qmckay/crc.hpp"
#include "qmckay/gwtheory.hpp"
#include "qmckay/intersect.hpp"
#include "qmckay/series.hpp"

#include "json.hpp"

#include <string>

namespace qmckay {

using Json = nlohmann::ordered_json;

// Every number is serialized as a string: rationals as "p/q", reals in
// scientific notation.

Json rational_json(const Rational& r);
Json real_json(const Real& x);
Json complex_json(const Complex& z);
Json matrix_json(const RationalMatrix& m);
Json series_json(const MultiSeries& s);
Json bps_json(const BPSTable& t);

Json roots_report(const McKayData& data);
Json group_report(const McKayData& data);
Json bps_report(const McKayData& data);
Json gw_report(const McKayData& data, const Truncation& tr);
Json partition_report(const McKayData& data, const Truncation& tr, bool dt);
Json intersect_report(const McKayData& data);
Json crc_report(const McKayData& data, int degree);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};
std::vector<CheckResult> verify_group(const McKayData& data, const Truncation& tr);
Json verify_report(const McKayData& data, const std::vector<CheckResult>& checks);

/// One "path,value" row per leaf.
std::string to_csv(const Json& j);
/// Indented "key: value" lines.
std::string to_text(const Json& j);

}  // namespace qmckay
