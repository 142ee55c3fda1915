// SPDX-License-Identifier: Apache-2.0
//
// Batch front-end. Subcommands: charge, sweep, optimize, verify, figure.
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "coheng.h"

namespace {

struct TableDeleter {
  void operator()(coheng_table* t) const { coheng_table_free(t); }
};
struct ReportDeleter {
  void operator()(coheng_report* r) const { coheng_report_free(r); }
};
using TablePtr = std::unique_ptr<coheng_table, TableDeleter>;
using ReportPtr = std::unique_ptr<coheng_report, ReportDeleter>;

struct GridAxis {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
};

GridAxis parse_axis(const std::string& text) {
  GridAxis axis;
  const size_t c1 = text.find(':');
  const size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("grid", "expected min:max:steps, got '" + text + "'");
  try {
    axis.min = std::stod(text.substr(0, c1));
    axis.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    axis.steps = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("grid", "expected min:max:steps, got '" + text + "'");
  }
  return axis;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string serialize(const coheng_table* table, const std::string& format) {
  char* raw = nullptr;
  const coheng_status st =
      format == "json" ? coheng_table_json(table, &raw) : coheng_table_csv(table, &raw);
  if (st != COHENG_OK) throw std::runtime_error(coheng_last_error());
  std::string out(raw);
  coheng_string_free(raw);
  return out;
}

std::string report_text(const coheng_report* report) {
  char* raw = nullptr;
  if (coheng_report_json(report, &raw) != COHENG_OK)
    throw std::runtime_error(coheng_last_error());
  std::string out(raw);
  coheng_string_free(raw);
  return out;
}

[[noreturn]] void fail(coheng_status status) {
  std::cerr << "error: " << coheng_last_error() << "\n";
  std::exit(status == COHENG_ERR_INVALID_ARGUMENT ? 2 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-driven quantum heat engine simulator"};
  app.require_subcommand(1);

  double beta = 1.0, gt = 0.0, acc = 1e-8;
  int n = 1, n_max = 10, n_fig = 4;
  unsigned long long seed = 0;
  std::string out_path = "-", format = "csv", objective = "eta", prefactor = "on";
  std::string grid_beta = "0.01:3:60", grid_gt = "0:30:60";
  std::string suite = "all", preset;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--acc", acc, "bath truncation accuracy target");
    cmd->add_option("--out", out_path, "output path ('-' for stdout)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", seed, "random seed for verification sampling");
  };

  CLI::App* charge = app.add_subcommand("charge", "charge one qubit and report the metrics");
  charge->add_option("--beta", beta, "inverse temperature beta*omega0")->required();
  charge->add_option("--gt", gt, "dimensionless coupling strength g*t")->required();
  charge->add_option("--n", n, "number of charged copies");
  charge->add_option("--prefactor", prefactor, "delta series convention")
      ->check(CLI::IsMember({"on", "off"}));
  add_common(charge);

  CLI::App* sweep = app.add_subcommand("sweep", "engine metrics over a (beta, gt) grid");
  sweep->add_option("--n", n, "number of charged copies");
  sweep->add_option("--objective", objective, "column of interest (ext|eta)")
      ->check(CLI::IsMember({"ext", "eta"}));
  sweep->add_option("--grid-beta", grid_beta, "beta axis as min:max:steps");
  sweep->add_option("--grid-gt", grid_gt, "gt axis as min:max:steps");
  add_common(sweep);

  CLI::App* optimize = app.add_subcommand("optimize", "per-N optimum of the objective");
  optimize->add_option("--n", n_max, "largest copy count");
  optimize->add_option("--objective", objective, "objective (ext|eta)")
      ->check(CLI::IsMember({"ext", "eta"}));
  optimize->add_option("--grid-beta", grid_beta, "beta axis as min:max:steps");
  optimize->add_option("--grid-gt", grid_gt, "gt axis as min:max:steps");
  add_common(optimize);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "observations|conservation|rates|truncation|populations|all");
  add_common(verify);

  CLI::App* figure = app.add_subcommand("figure", "emit a named figure dataset");
  figure->add_option("--preset", preset, "fig2a|fig2b|fig3|fig4|fig5|fig6|fig7")->required();
  figure->add_option("--n", n_fig, "copy count for fig4");
  add_common(figure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0, any parse failure is a usage error
  }

  try {
    if (*charge) {
      coheng_table* raw = nullptr;
      const coheng_status st = coheng_charge(beta, gt, n, acc, prefactor == "on", &raw);
      if (st != COHENG_OK) fail(st);
      const TablePtr table(raw);
      write_output(out_path, serialize(table.get(), format));
    } else if (*sweep) {
      const GridAxis ba = parse_axis(grid_beta), ga = parse_axis(grid_gt);
      coheng_table* raw = nullptr;
      const coheng_status st =
          coheng_sweep(n, ba.min, ba.max, ba.steps, ga.min, ga.max, ga.steps, acc, &raw);
      if (st != COHENG_OK) fail(st);
      const TablePtr table(raw);
      write_output(out_path, serialize(table.get(), format));
    } else if (*optimize) {
      const GridAxis ba = parse_axis(grid_beta), ga = parse_axis(grid_gt);
      coheng_table* raw = nullptr;
      const coheng_status st = coheng_optimize(objective.c_str(), n_max, ba.min, ba.max,
                                               ba.steps, ga.min, ga.max, ga.steps, acc, &raw);
      if (st != COHENG_OK) fail(st);
      const TablePtr table(raw);
      write_output(out_path, serialize(table.get(), format));
    } else if (*verify) {
      coheng_report* raw = nullptr;
      const coheng_status st = coheng_verify(suite.c_str(), seed, acc, &raw);
      if (st != COHENG_OK) fail(st);
      const ReportPtr report(raw);
      write_output(out_path, report_text(report.get()));
      if (!coheng_report_passed(report.get())) {
        std::cerr << "verification failed\n";
        return 1;
      }
    } else if (*figure) {
      coheng_table* raw_table = nullptr;
      coheng_report* raw_report = nullptr;
      const coheng_status st =
          coheng_figure(preset.c_str(), n_fig, acc, &raw_table, &raw_report);
      if (st != COHENG_OK) fail(st);
      const TablePtr table(raw_table);
      const ReportPtr report(raw_report);
      write_output(out_path, serialize(table.get(), format));
      if (report) {
        const std::string report_path =
            (out_path.empty() || out_path == "-") ? "-" : out_path + ".report.json";
        write_output(report_path, report_text(report.get()));
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
