#include "qmckay/rootsys.hpp"

#include "qmckay/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace qmckay {

ADEType::ADEType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw ConfigurationError("no root system of type " + name());
}

ADEType ADEType::parse(const std::string& name) {
  if (name.size() < 2) throw ConfigurationError("bad root system name '" + name + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw ConfigurationError("bad root system name '" + name + "'");
  }
  std::string digits = name.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 4)
    throw ConfigurationError("bad root system name '" + name + "'");
  return {family, std::stoi(digits)};
}

std::string ADEType::name() const {
  const char* letter = family_ == Family::A ? "A" : family_ == Family::D ? "D" : "E";
  return letter + std::to_string(rank_);
}

int height(const RootVector& root) { return std::accumulate(root.begin(), root.end(), 0); }

std::vector<std::vector<int>> dynkin_neighbors(const ADEType& type) {
  const int n = type.rank();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  auto link = [&](int a, int b) {  // 1-based node labels
    adj[a - 1].push_back(b - 1);
    adj[b - 1].push_back(a - 1);
  };
  switch (type.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

IntMatrix cartan_matrix(const ADEType& type) {
  const int n = type.rank();
  IntMatrix c(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  auto adj = dynkin_neighbors(type);
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    for (int j : adj[i]) c[i][j] = -1;
  }
  return c;
}

std::vector<RootVector> positive_roots(const ADEType& type) {
  const int n = type.rank();
  const IntMatrix c = cartan_matrix(type);
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<size_t>(n), 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  std::vector<RootVector> all = layer;
  // Height induction: beta + alpha_i is a root iff the alpha_i-string through
  // beta extends upward, i.e. q = p - <beta, alpha_i^vee> >= 1.
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += c[i][j] * beta[j];
        int p = 0;
        RootVector down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          RootVector up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::sort(all.begin(), all.end(), [](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return all;
}

int coxeter_number(const ADEType& type) {
  auto roots = positive_roots(type);
  return 2 * static_cast<int>(roots.size()) / type.rank();
}

RootVector highest_root(const ADEType& type) { return positive_roots(type).back(); }

RootSystemData RootSystemData::build(const ADEType& type) {
  auto roots = qmckay::positive_roots(type);
  int h = 2 * static_cast<int>(roots.size()) / type.rank();
  RootVector top = roots.back();
  return RootSystemData{type, cartan_matrix(type), std::move(roots), h, std::move(top)};
}

RationalMatrix root_outer_product_sum(const std::vector<RootVector>& roots, int rank) {
  std::vector<std::vector<long>> acc(static_cast<size_t>(rank), std::vector<long>(static_cast<size_t>(rank), 0));
  for (const auto& a : roots)
    for (int i = 0; i < rank; ++i)
      if (a[i] != 0)
        for (int j = 0; j < rank; ++j) acc[i][j] += static_cast<long>(a[i]) * a[j];
  RationalMatrix out(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out(i, j) = acc[i][j];
  return out;
}

}  // namespace qmckay
