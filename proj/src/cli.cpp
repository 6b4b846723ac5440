#include "qmckay/cli.hpp"

#include "qmckay/errors.hpp"
#include "qmckay/report.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <fstream>
#include <iostream>

namespace qmckay {

namespace {

int parse_parameter(const std::string& digits, const std::string& text) {
  if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ConfigurationError("unsupported group '" + text + "'");
  return std::stoi(digits);
}

struct Config {
  std::string group = "D5";
  int max_q_degree = 4;
  int q_series_degree = 4;
  int lambda_order = 4;
  int degree = 5;
  unsigned precision = 0;
  std::string format = "json";
  std::string output;
};

}  // namespace

GroupSpec parse_group(const std::string& text) {
  if (text.empty()) throw ConfigurationError("empty group");
  std::string upper;
  for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "T") return GroupSpec::tetrahedral();
  if (upper == "O") return GroupSpec::octahedral();
  if (upper == "I") return GroupSpec::icosahedral();
  if (upper.size() > 2 && upper[1] == ':') {
    int p = parse_parameter(upper.substr(2), text);
    if (upper[0] == 'C') return GroupSpec::cyclic(p);
    if (upper[0] == 'D') return GroupSpec::dihedral(p);
    throw ConfigurationError("unsupported group '" + text + "'");
  }
  // ADE labels refer to the binary group.
  if (upper.size() >= 2 && (upper[0] == 'A' || upper[0] == 'D' || upper[0] == 'E')) {
    int n = parse_parameter(upper.substr(1), text);
    switch (upper[0]) {
      case 'A':
        if (n >= 3 && n % 2 == 1) return GroupSpec::cyclic((n + 1) / 2);
        break;
      case 'D':
        if (n >= 4) return GroupSpec::dihedral(n - 2);
        break;
      case 'E':
        if (n == 6) return GroupSpec::tetrahedral();
        if (n == 7) return GroupSpec::octahedral();
        if (n == 8) return GroupSpec::icosahedral();
        break;
    }
    throw ConfigurationError("no polyhedral group has binary type " + text);
  }
  throw ConfigurationError("unsupported group '" + text + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum McKay correspondence data for polyhedral singularities C^3/G", "qmckay"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"roots", "positive roots, Cartan matrix and node dictionary"},
      {"group", "classes, character tables, McKay graph, ages"},
      {"bps", "genus zero BPS states"},
      {"gw", "Gromov-Witten invariants of all genera"},
      {"partition", "reduced GW partition function"},
      {"dt", "reduced DT prediction"},
      {"intersect", "equivariant intersection numbers and pairing"},
      {"crc", "predicted orbifold potential"},
      {"verify", "run the invariant suite"},
  };
  std::string chosen;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--group,-g", cfg.group, "C:k, D:m, T, O, I, or an ADE label (A3, D5, E6..E8)")->capture_default_str();
    sub->add_option("--max-q-degree", cfg.max_q_degree, "total degree bound D in the curve variables")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    sub->add_option("--q-series-degree", cfg.q_series_degree, "degree bound M in Q")->check(CLI::Range(0, 64))->capture_default_str();
    sub->add_option("--lambda-order", cfg.lambda_order, "even bound L on the genus expansion")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    sub->add_option("--degree", cfg.degree, "top degree of the orbifold potential (crc)")->check(CLI::Range(3, 24))->capture_default_str();
    sub->add_option("--precision", cfg.precision, "decimal digits (default 64 or $QMCKAY_PRECISION)")->check(CLI::Range(20u, 2000u));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }
  if (cfg.lambda_order % 2 != 0) {
    err << "error: --lambda-order must be even\n";
    return kExitBadArguments;
  }

  try {
    std::optional<PrecisionScope> scope;
    if (cfg.precision) scope.emplace(cfg.precision);
    GroupSpec spec = parse_group(cfg.group);
    McKayData data = McKayData::build(spec);
    Truncation tr{cfg.max_q_degree, cfg.q_series_degree, cfg.lambda_order};
    Json report;
    int code = kExitOk;
    if (chosen == "roots") report = roots_report(data);
    else if (chosen == "group") report = group_report(data);
    else if (chosen == "bps") report = bps_report(data);
    else if (chosen == "gw") report = gw_report(data, tr);
    else if (chosen == "partition") report = partition_report(data, tr, false);
    else if (chosen == "dt") report = partition_report(data, tr, true);
    else if (chosen == "intersect") report = intersect_report(data);
    else if (chosen == "crc") report = crc_report(data, cfg.degree);
    else if (chosen == "verify") {
      auto checks = verify_group(data, tr);
      report = verify_report(data, checks);
      if (!report["passed"].get<bool>()) code = kExitVerificationFailed;
    }
    Json tagged{{"command", chosen}};
    tagged.update(report);
    report = std::move(tagged);

    std::string text;
    if (cfg.format == "json") text = report.dump(2) + "\n";
    else if (cfg.format == "csv") text = to_csv(report);
    else text = to_text(report);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << cfg.output << "\n";
        return kExitBadArguments;
      }
      f << text;
    }
    return code;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupportedGroup;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const PoleError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace qmckay
