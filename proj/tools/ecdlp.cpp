// ecdlp — a desk-scale elliptic-curve discrete-log workbench.
//
// Subcommands: curve-search, params-validate, keygen, attack, bench, report.
// Exit status: 0 success, 1 domain error (one diagnostic line per named
// error), 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ecdlp/bench.hpp"
#include "ecdlp/dlp.hpp"
#include "ecdlp/errors.hpp"
#include "ecdlp/io.hpp"
#include "ecdlp/keys.hpp"
#include "ecdlp/params.hpp"

namespace {

using namespace ecdlp;

DomainParams load_params(const std::string& path) {
  return validate_params(io::params_from_json(io::read_file(path)));
}

int run(int argc, char** argv) {
  CLI::App app{"desk-scale elliptic-curve discrete-log workbench"};
  app.require_subcommand(1);

  // curve-search
  auto* search_cmd =
      app.add_subcommand("curve-search", "find curves with validated tuples");
  std::uint64_t p_min = 0, p_max = 0;
  bool prime_order = false;
  std::string search_out;
  search_cmd->add_option("--p-min", p_min, "lower end of the prime range")
      ->required();
  search_cmd->add_option("--p-max", p_max, "upper end of the prime range")
      ->required();
  search_cmd->add_flag("--prime-order", prime_order,
                       "keep only curves with a prime number of points");
  search_cmd->add_option("--out", search_out, "output file (JSON array)")
      ->required();

  // params-validate
  auto* validate_cmd =
      app.add_subcommand("params-validate", "check a domain parameter file");
  std::string validate_path;
  validate_cmd->add_option("--params", validate_path, "parameter file")
      ->required();

  // keygen
  auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  std::string keygen_params, keygen_out;
  std::uint64_t keygen_seed = 0;
  keygen_cmd->add_option("--params", keygen_params, "parameter file")
      ->required();
  keygen_cmd->add_option("--seed", keygen_seed, "generator seed")->required();
  keygen_cmd->add_option("--out", keygen_out, "output key file")->required();

  // attack
  auto* attack_cmd =
      app.add_subcommand("attack", "recover a private key from a public point");
  std::string attack_params, attack_public, attack_method;
  std::optional<std::uint64_t> attack_cap;
  attack_cmd->add_option("--params", attack_params, "parameter file")
      ->required();
  attack_cmd->add_option("--public", attack_public,
                         "public point, \"x,y\" or \"infinity\"")
      ->required();
  attack_cmd->add_option("--method", attack_method, "linear or bsgs")
      ->required()
      ->check(CLI::IsMember({"linear", "bsgs"}));
  attack_cmd->add_option("--cap", attack_cap,
                         "safety cap on walk additions (default 10^8)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a measurement suite");
  std::string bench_config, bench_csv, bench_report;
  bench_cmd->add_option("--config", bench_config, "suite config file")
      ->required();
  bench_cmd->add_option("--out-csv", bench_csv, "CSV output path")->required();
  bench_cmd->add_option("--out-report", bench_report,
                        "structured report output path")
      ->required();

  // report
  auto* report_cmd =
      app.add_subcommand("report", "fit scaling laws over existing records");
  std::string report_csv;
  report_cmd->add_option("--csv", report_csv, "records CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (search_cmd->parsed()) {
      auto found = curve_search(p_min, p_max, prime_order);
      io::write_file(search_out, io::params_list_to_json(found) + "\n");
      std::cout << "found " << found.size() << " curve(s)\n";
      return 0;
    }

    if (validate_cmd->parsed()) {
      load_params(validate_path);
      std::cout << "ok\n";
      return 0;
    }

    if (keygen_cmd->parsed()) {
      DomainParams params = load_params(keygen_params);
      KeyPair kp = keygen(params, keygen_seed);
      io::write_file(keygen_out, io::keypair_to_json(kp) + "\n");
      return 0;
    }

    if (attack_cmd->parsed()) {
      DomainParams params = load_params(attack_params);
      Point q = io::point_from_text(attack_public, params.curve);
      AttackResult result =
          attack_method == "bsgs" ? bsgs(params, q)
                                  : linear_walk(params, q, attack_cap);
      std::cout << io::attack_result_to_json(result) << "\n";
      return 0;
    }

    if (bench_cmd->parsed()) {
      BenchConfig config = config_from_json(io::read_file(bench_config));
      auto records = run_suite(config);
      ScalingReport scaling = fit_scaling(records);
      io::write_file(bench_csv,
                     emit_report(records, scaling, ReportFormat::csv));
      io::write_file(bench_report,
                     emit_report(records, scaling, ReportFormat::structured));
      std::cout << "wrote " << records.size() << " record(s)\n";
      return 0;
    }

    if (report_cmd->parsed()) {
      auto records = records_from_csv(io::read_file(report_csv));
      std::cout << scaling_to_json(fit_scaling(records));
      return 0;
    }
  } catch (const ValidationError& e) {
    for (const auto& violation : e.violations())
      std::cerr << "error: " << violation << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
