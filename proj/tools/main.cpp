#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosym/inspect.hpp"
#include "cosym/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

/// Parse "p,q" into the config's signature fields.
void apply_signature(const std::string& text, cosym::RunConfig& cfg) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("--signature expects \"p,q\"");
  try {
    const int p = std::stoi(text.substr(0, comma));
    const int q = std::stoi(text.substr(comma + 1));
    if (p < 0 || q < 0) throw std::invalid_argument("negative");
    cfg.plus = static_cast<std::size_t>(p);
    cfg.minus = static_cast<std::size_t>(q);
  } catch (const std::exception&) {
    throw std::invalid_argument("--signature expects \"p,q\" with small non-negative integers");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open JSON output path: " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifier for the conformal co-symplectic structure on the space of\n"
               "unparametrized geodesics of a flat pseudo-Riemannian metric."};
  app.require_subcommand(1);

  cosym::RunConfig cfg;
  std::string signature = "3,1";
  std::string mode = "exact";
  std::string suites;
  std::string json_path;
  std::string gamma_text;

  CLI::App* verify = app.add_subcommand("verify", "Run randomized property suites");
  verify->add_option("--signature", signature, "Metric signature as \"p,q\" (default 3,1)");
  verify->add_option("--mode", mode, "Scalar mode: exact | float")
      ->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--samples", cfg.samples, "Sample count per suite (default 1000)");
  verify->add_option("--seed", cfg.seed, "RNG seed (default 42)");
  verify->add_option("--tol", cfg.tol, "Comparison tolerance, float mode only (default 1e-6)");
  verify->add_option("--suites", suites,
                     "Comma-separated subset of: phase,action,orbits,quotient,contact,audit");
  verify->add_option("--json", json_path, "Write the JSON report to this path");

  CLI::App* inspect = app.add_subcommand("inspect", "Dump the full structure at one geodesic");
  inspect->add_option("--gamma", gamma_text, "Geodesic as \"x1,..,xn;v1,..,vn\" (rational entries)")
      ->required();
  inspect->add_option("--signature", signature, "Metric signature as \"p,q\" (default 3,1)");
  inspect->add_option("--json", json_path, "Write the JSON dump to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the CLI11 diagnostic
    return kExitUsage;
  }

  try {
    apply_signature(signature, cfg);
    if (verify->parsed()) {
      cfg.mode = mode == "float" ? cosym::ScalarMode::Float : cosym::ScalarMode::Exact;
      if (!suites.empty()) cfg.suites = split_list(suites);
      const cosym::Report report = cosym::run_suites(cfg);
      std::cout << cosym::to_text(report);
      if (!json_path.empty()) write_json_file(json_path, cosym::to_json(report));
      return report.overall_pass() ? kExitPass : kExitFalsified;
    }
    // inspect
    const cosym::Geodesic<cosym::Rat> gamma =
        cosym::parse_geodesic(gamma_text, cfg.plus + cfg.minus);
    const nlohmann::json dump = cosym::inspect_point(cfg, gamma);
    std::cout << cosym::inspect_text(dump);
    if (!json_path.empty()) write_json_file(json_path, dump);
    return kExitPass;
  } catch (const cosym::verification_error& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
