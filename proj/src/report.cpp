#include "qmckay/report.hpp"

#include "qmckay/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qmckay {

namespace {
constexpr int kDigits = 30;

std::string class_name(const CurveClass& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

Json header(const McKayData& data) {
  Json j;
  j["group"] = data.spec.name();
  j["order"] = data.group.order;
  j["root_system"] = data.roots.ade.name();
  j["precision"] = working_precision();
  return j;
}

Json curve_irreps_json(const McKayData& data) {
  Json arr = Json::array();
  for (size_t i = 0; i < data.curve_irreps.size(); ++i) {
    const auto& irrep = data.group.table.irreps[data.curve_irreps[i]];
    arr.push_back({{"label", irrep.label}, {"dim", irrep.dim}, {"node", data.curve_nodes[i]}});
  }
  return arr;
}

Json table_json(const GroupModel& g) {
  Json j;
  Json classes = Json::array();
  for (const auto& c : g.classes)
    classes.push_back({{"label", c.label},
                       {"size", c.size},
                       {"element_order", c.element_order},
                       {"angle_turns", rational_json(c.angle)},
                       {"inverse_class", c.inverse_class}});
  j["classes"] = classes;
  Json irreps = Json::array();
  for (int r = 0; r < g.table.irrep_count(); ++r) {
    Json row = Json::array();
    for (const auto& v : g.table.values[r]) row.push_back(complex_json(v));
    irreps.push_back({{"label", g.table.irreps[r].label}, {"dim", g.table.irreps[r].dim}, {"character", row}});
  }
  j["irreps"] = irreps;
  Json def = Json::array();
  for (const auto& v : g.defining_character) def.push_back(complex_json(v));
  j[g.binary ? "chi_U" : "chi_V"] = def;
  return j;
}

Json intersection_json(const IntersectionData& d) {
  Json j;
  j["dimension"] = d.dimension;
  j["zero_point"] = {{"value", rational_json(d.zero_point.value)}, {"t_power", d.zero_point.t_power}};
  Json one = Json::array();
  for (const auto& v : d.one_point) one.push_back(rational_json(v));
  j["one_point"] = {{"values", one}, {"t_power", d.one_point_t_power}};
  j["two_point"] = {{"matrix", matrix_json(d.two_point)}, {"t_power", d.two_point_t_power}};
  Json three = Json::array();
  for (int a = 0; a < d.dimension; ++a)
    for (int b = a; b < d.dimension; ++b)
      for (int c = b; c < d.dimension; ++c)
        if (d.three(a, b, c) != 0) three.push_back({{"indices", {a, b, c}}, {"value", rational_json(d.three(a, b, c))}});
  j["three_point"] = {{"entries", three}, {"t_power", d.three_point_t_power}};
  return j;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Json real_json(const Real& x) {
  if (x == 0) return "0";
  return to_decimal(x, kDigits);
}

Json complex_json(const Complex& z) {
  if (boost::multiprecision::abs(z.im) < tolerance(40)) return real_json(z.re);
  return {{"re", real_json(z.re)}, {"im", real_json(z.im)}};
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json series_json(const MultiSeries& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json ex = Json::object();
    for (size_t i = 0; i < s.variables().size(); ++i)
      if (m.exponents[i] != 0) ex[s.variables()[i].name] = m.exponents[i];
    terms.push_back({{"exponents", ex},
                     {"t_power", m.t_power},
                     {"numerator", boost::multiprecision::numerator(c).str()},
                     {"denominator", boost::multiprecision::denominator(c).str()}});
  }
  return terms;
}

Json bps_json(const BPSTable& t) {
  Json arr = Json::array();
  for (const auto& e : t.entries) arr.push_back({{"class", e.beta}, {"n0", rational_json(e.n0)}, {"fiber_size", e.fiber_size}});
  return arr;
}

Json roots_report(const McKayData& data) {
  Json j = header(data);
  j["rank"] = data.roots.rank();
  j["coxeter_number"] = data.roots.coxeter_number;
  j["cartan"] = data.roots.cartan;
  j["highest_root"] = data.roots.highest_root;
  j["positive_roots"] = data.roots.positive_roots;
  Json nodes = Json::array();
  for (int i = 0; i < data.roots.rank(); ++i)
    nodes.push_back({{"node", i}, {"irrep", data.binary.table.irreps[data.node_irrep[i]].label}, {"binary", static_cast<bool>(data.binary_node[i])}});
  j["nodes"] = nodes;
  return j;
}

Json group_report(const McKayData& data) {
  Json j = header(data);
  j["G"] = table_json(data.group);
  j["binary"] = table_json(data.binary);
  j["binary"]["central_class"] = *data.binary.central_class;
  Json pulls = Json::array();
  for (int r = 0; r < data.binary.table.irrep_count(); ++r) pulls.push_back(pulls_back(data.binary, r));
  j["binary"]["pulls_back"] = pulls;
  j["mckay_graph"] = data.graph.adjacency;
  j["binary_simple_roots"] = binary_simple_roots(data.spec);
  j["curve_irreps"] = curve_irreps_json(data);
  auto hl = hard_lefschetz_check(data.group);
  Json ages = Json::array();
  for (const auto& a : hl.ages) ages.push_back(rational_json(a));
  j["ages"] = ages;
  j["hard_lefschetz"] = hl.holds;
  Json bundles = Json::array();
  for (int c = 0; c < data.curve_count(); ++c) {
    auto [a, b] = normal_bundle_type(data, c);
    bundles.push_back({a, b});
  }
  j["normal_bundles"] = bundles;
  return j;
}

Json bps_report(const McKayData& data) {
  Json j = header(data);
  j["curve_irreps"] = curve_irreps_json(data);
  j["genus"] = 0;
  j["bps"] = bps_json(bps_table(data));
  return j;
}

Json gw_report(const McKayData& data, const Truncation& tr) {
  Json j = header(data);
  j["curve_irreps"] = curve_irreps_json(data);
  BPSTable bps = bps_table(data);
  // every nonzero class of total degree <= D with some nonzero invariant
  Json rows = Json::array();
  const int n = data.curve_count();
  std::vector<int> beta(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; })) return;
      Json genera = Json::array();
      bool any = false;
      for (int g = 0; 2 * g - 2 <= tr.lambda_order; ++g) {
        Rational v = gw_all_genus(bps, beta, g);
        any = any || v != 0;
        genera.push_back({{"genus", g}, {"N", rational_json(v)}});
      }
      if (any) rows.push_back({{"class", beta}, {"invariants", genera}});
      return;
    }
    for (int e = 0; e <= left; ++e) {
      beta[pos] = e;
      rec(pos + 1, left - e);
    }
    beta[pos] = 0;
  };
  rec(0, tr.q_total_degree);
  j["gw"] = rows;
  return j;
}

Json partition_report(const McKayData& data, const Truncation& tr, bool dt) {
  Json j = header(data);
  PartitionFunction z = dt ? dt_partition(data, tr) : partition_function(data, tr);
  j["tag"] = z.tag;
  j["truncation"] = {{"max_q_degree", tr.q_total_degree}, {"q_series_degree", tr.Q_degree}};
  j["variables"] = Json::array();
  for (const auto& v : z.series.variables()) j["variables"].push_back(v.name);
  Json factors = Json::array();
  for (const auto& [beta, w] : z.factors) factors.push_back({{"class", beta}, {"weight", rational_json(w)}});
  j["factors"] = factors;
  j["series"] = series_json(z.series);
  j["text"] = z.series.to_string();
  return j;
}

Json intersect_report(const McKayData& data) {
  Json j = header(data);
  j["curve_irreps"] = curve_irreps_json(data);
  j["threefold"] = intersection_json(threefold_integrals(data));
  j["surface"] = intersection_json(surface_integrals(data));
  auto p = mckay_pairing(data);
  j["mckay_pairing"] = {{"matrix", matrix_json(p.matrix)}, {"t_power", p.t_power}};
  auto pot = classical_potential(data);
  Json cubic = Json::array();
  for (const auto& t : pot.cubic)
    cubic.push_back({{"indices", t.indices}, {"integral", rational_json(t.integral)}, {"coefficient", rational_json(t.coefficient)}});
  Json pairs = Json::array();
  for (size_t i = 0; i < pot.x_e_pairs.size(); ++i)
    pairs.push_back({{"class", pot.class_labels[i]}, {"value", rational_json(pot.x_e_pairs[i].value)}, {"t_power", pot.x_e_pairs[i].t_power}});
  j["classical_potential"] = {{"cubic", cubic},
                              {"x_e_cubed", {{"value", rational_json(pot.x_e_cubed.value)}, {"t_power", pot.x_e_cubed.t_power}}},
                              {"x_e_g_ginv", pairs}};
  return j;
}

Json crc_report(const McKayData& data, int degree) {
  Json j = header(data);
  j["classes"] = Json::array();
  for (int c = 1; c < data.group.class_count(); ++c) j["classes"].push_back(data.group.classes[c].label);
  Json forms = Json::array();
  for (const auto& f : linear_forms(data)) {
    Json coef = Json::array();
    for (const auto& c : f.coefficients) coef.push_back(complex_json(c));
    forms.push_back({{"irrep", f.irrep}, {"constant", real_json(f.constant)}, {"coefficients", coef}});
  }
  j["linear_forms"] = forms;
  auto pot = orbifold_potential(data, degree);
  Json terms = Json::array();
  for (const auto& t : pot.terms) {
    Json row = {{"degree", std::accumulate(t.exponents.begin(), t.exponents.end(), 0)},
                {"exponents", t.exponents},
                {"coefficient", real_json(t.value)}};
    if (t.rational) row["rational_guess"] = rational_json(*t.rational);
    else row["rational_guess"] = nullptr;
    terms.push_back(row);
  }
  j["potential"] = terms;
  auto cv = change_of_variables(data);
  Json q = Json::array();
  for (size_t i = 0; i < cv.irreps.size(); ++i) q.push_back({{"irrep", cv.irreps[i]}, {"q", complex_json(cv.q_values[i])}});
  j["change_of_variables"] = {{"q", q}};
  if (data.spec == GroupSpec::dihedral(3)) {
    Json b = Json::array();
    for (const auto& v : b_series(data, 8)) b.push_back(real_json(v));
    j["B"] = b;
  }
  return j;
}

std::vector<CheckResult> verify_group(const McKayData& data, const Truncation& tr) {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    try {
      std::string detail = body();
      out.push_back({name, detail.empty(), detail});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };
  const Real tol = tolerance(30);

  run("root count", [&] {
    return 2 * static_cast<int>(data.roots.positive_roots.size()) == data.roots.rank() * data.roots.coxeter_number ? "" : "|R+| != rank h / 2";
  });
  run("root sum identity", [&] {
    RationalMatrix c(data.roots.cartan);
    return root_outer_product_sum(data.roots.positive_roots, data.roots.rank()) == c.inverse().scaled(data.roots.coxeter_number)
               ? ""
               : "sum alpha alpha^T != h C^-1";
  });
  run("character orthogonality", [&]() -> std::string {
    for (const GroupModel* g : {&data.group, &data.binary}) {
      int dims = 0;
      for (int r = 0; r < g->table.irrep_count(); ++r) {
        dims += g->table.irreps[r].dim * g->table.irreps[r].dim;
        for (int s = 0; s < g->table.irrep_count(); ++s) {
          Complex ip = g->inner_product(g->table.values[r], g->table.values[s]);
          if ((ip - Complex(Real(r == s ? 1 : 0))).abs() >= tol) return "rows " + std::to_string(r) + "," + std::to_string(s);
        }
      }
      if (dims != g->order) return "sum of squared dimensions";
    }
    return "";
  });
  run("affine McKay graph", [&]() -> std::string {
    const auto& a = data.graph.adjacency;
    for (size_t r = 0; r < a.size(); ++r) {
      int acc = 0;
      for (size_t s = 0; s < a.size(); ++s) acc += a[r][s] * data.binary.table.irreps[s].dim;
      if (acc != 2 * data.binary.table.irreps[r].dim) return "marks are not a kernel vector";
    }
    for (int i = 0; i < data.roots.rank(); ++i)
      for (int k = 0; k < data.roots.rank(); ++k)
        if (i != k && a[data.node_irrep[i]][data.node_irrep[k]] != -data.roots.cartan[i][k]) return "node map is not a graph isomorphism";
    return "";
  });
  run("binary roots count", [&] {
    return static_cast<int>(binary_simple_roots(data.spec).size()) + data.curve_count() == data.roots.rank() ? "" : "count mismatch";
  });
  run("fiber cardinalities", [&]() -> std::string {
    for (const auto& e : bps_table(data).entries)
      if (e.fiber_size != 1 && e.fiber_size != 2 && e.fiber_size != 4 && e.fiber_size != 8) return "class " + class_name(e.beta);
    return "";
  });
  run("partition factorizations", [&] {
    Truncation t{tr.q_total_degree, tr.Q_degree, 0};
    return partition_function(data, t).series == partition_function_by_class(data, t).series ? "" : "per-root and per-class differ";
  });
  run("exp log round trip", [&] {
    Truncation t{tr.q_total_degree, tr.Q_degree, 0};
    auto z = partition_function(data, t).series;
    return exp(log(z)) == z ? "" : "exp(log Z) != Z";
  });
  run("free energy bridge", [&]() -> std::string {
    auto r = free_energy_bridge(data, tr);
    return r.ok() ? "" : r.mismatches.front();
  });
  run("pairing inverse", [&] {
    return mckay_pairing(data).matrix * threefold_integrals(data).two_point == RationalMatrix::identity(data.curve_count())
               ? ""
               : "pairing times two-point is not the identity";
  });
  run("surface two-point", [&] {
    RationalMatrix c(data.roots.cartan);
    return surface_integrals(data).two_point == c.inverse().scaled(-1) ? "" : "not -C^-1";
  });
  run("hard Lefschetz", [&] {
    auto hl = hard_lefschetz_check(data.group);
    for (size_t c = 1; c < hl.ages.size(); ++c)
      if (hl.ages[c] != 1) return std::string("age != 1");
    return hl.holds ? std::string() : std::string("age(g) != age(g^-1)");
  });
  run("normal bundle degrees", [&]() -> std::string {
    for (int c = 0; c < data.curve_count(); ++c) {
      auto [a, b] = normal_bundle_type(data, c);
      if (a + b != -2) return "curve " + std::to_string(c);
    }
    return "";
  });
  run("third partials", [&]() -> std::string {
    const int m = data.group.class_count() - 1;
    auto f = orbifold_potential(data, 3);
    std::vector<Complex> zero(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b)
        for (int c = b; c < m; ++c) {
          std::vector<int> e(static_cast<size_t>(m), 0);
          ++e[a];
          ++e[b];
          ++e[c];
          Real mult(1);
          for (int x : e) mult *= x == 2 ? 2 : x == 3 ? 6 : 1;
          Complex tp = third_partial(data, a, b, c, zero);
          if (boost::multiprecision::abs(tp.re - f.coefficient(e) * mult) >= tolerance(20)) return "tan formula disagrees";
        }
    return "";
  });
  run("crepant resolution degree 3-4", [&]() -> std::string {
    auto fx = orbifold_potential(data, 4);
    auto fy = resolution_potential(data, 4);
    for (size_t i = 0; i < fy.values.size(); ++i)
      if ((fy.values[i] - Complex(fx.terms[i].value)).abs() >= tolerance(20)) return "coefficient " + std::to_string(i);
    return "";
  });
  return out;
}

Json verify_report(const McKayData& data, const std::vector<CheckResult>& checks) {
  Json j = header(data);
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    Json row = {{"check", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) row["detail"] = c.detail;
    arr.push_back(row);
  }
  j["checks"] = arr;
  j["passed"] = all;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << csv_escape(path) << "," << csv_escape(scalar(j)) << "\n";
  }
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !is_flat_array(x))) return false;
  return true;
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + (j[i].is_array() ? inline_array(j[i]) : scalar(j[i]));
  return s + "]";
}

void text(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_object() || (v.is_array() && !is_flat_array(v))) {
        os << pad << it.key() << ":\n";
        text(v, indent + 2, os);
      } else {
        os << pad << it.key() << ": " << (v.is_array() ? inline_array(v) : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        text(v, indent + 2, os);
      } else {
        os << pad << "- " << (v.is_array() ? inline_array(v) : scalar(v)) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string to_csv(const Json& j) {
  std::ostringstream os;
  os << "path,value\n";
  flatten(j, "", os);
  return os.str();
}

std::string to_text(const Json& j) {
  std::ostringstream os;
  text(j, 0, os);
  return os.str();
}

}  // namespace qmckay
