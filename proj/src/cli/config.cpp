#include "config.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace khup::cli {

ParseOutcome parse_args(int argc, const char* const* argv) {
  CLI::App app{"Construct k-Hadamard operators and check uncertainty inequalities", "khup"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  app.add_option("--tol", cfg.tol, "relative tolerance on ratios")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed, recorded in every output");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");

  app.add_option("--construct", cfg.construct, "fourier, sylvester, paley, code, pg2, random");
  app.add_option("--group", cfg.group, "cyclic factors (2,2,3), builtin (Z6, D4, Q8, S3) or file:path");
  app.add_option("--factors", cfg.group, "cyclic factors (same as --group)");
  app.add_option("--matrix", cfg.matrix_file, "matrix JSON file");
  app.add_option("--m", cfg.m, "Sylvester exponent");
  app.add_option("--prime", cfg.prime, "field size for paley / pg2");
  app.add_option("--size", cfg.size, "size for code / random constructions");

  app.add_option("--vector", cfg.vector, "vector spec: subgroup:i,j  indicator:i,j  delta:i  ones  harmonic  random:seed  values:x,y  file:path");
  app.add_option("--function", cfg.function, "grid function: gaussian, shifted-gaussian:a, lorentzian, fab, gc, file:path");
  app.add_option("--family", cfg.function, "fab or gc (same as --function)");
  app.add_option("--transform", cfg.transform, "ft or lct:a,b,c,d");
  app.add_option("--lct", cfg.lct, "LCT matrix a,b,c,d (same as --transform lct:a,b,c,d)");

  app.add_option("--n", cfg.n, "group order / dimension (grid allowed in sweeps)");
  app.add_option("--p", cfg.p);
  app.add_option("--q", cfg.q, "norm index (inf allowed); field size for certify/construct pg2|paley");
  app.add_option("--eps", cfg.eps);
  app.add_option("--eta", cfg.eta);
  app.add_option("--r", cfg.r);
  app.add_option("--s", cfg.s);
  app.add_option("--a", cfg.a);
  app.add_option("--b", cfg.b);
  app.add_option("--c", cfg.c);
  auto* samples = app.add_option("--samples", cfg.samples, "grid points")->check(CLI::Range(2, 1 << 22));
  app.add_option("--domain-halfwidth", cfg.halfwidth, "grid half-width L")->check(CLI::PositiveNumber);
  app.add_option("--threshold", cfg.threshold, "support threshold relative to the peak");
  app.add_option("--trials", cfg.trials, "random inputs per sweep point");
  app.add_option("--budget", cfg.budget, "search evaluations");
  app.add_option("--objective", cfg.objective, "support_product, l1_ratio_product, approx_support");

  app.fallthrough();
  auto* construct = app.add_subcommand("construct", "build a matrix and print it");
  construct->add_option("construction", cfg.construct, "construction name (or --construct)");
  auto* certify = app.add_subcommand("certify", "certify the k-Hadamard property");
  certify->add_option("construction", cfg.construct, "construction name (or --construct)");
  auto* check = app.add_subcommand("check", "run one inequality check");
  check->add_option("name", cfg.name)->required();
  auto* sweep = app.add_subcommand("sweep", "run a check over a parameter grid");
  sweep->add_option("name", cfg.name)->required();
  auto* search = app.add_subcommand("search", "search for near-tight vectors");
  search->add_option("construction", cfg.construct, "construction name (or --construct)");
  auto* report = app.add_subcommand("report", "run the fixed battery of checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return {std::nullopt, app.exit(e)};
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return {std::nullopt, 2};
  }

  if (construct->parsed()) cfg.command = Command::Construct;
  if (certify->parsed()) cfg.command = Command::Certify;
  if (check->parsed()) cfg.command = Command::Check;
  if (sweep->parsed()) cfg.command = Command::Sweep;
  if (search->parsed()) cfg.command = Command::Search;
  if (report->parsed()) cfg.command = Command::Report;
  if (!format.empty()) cfg.format = format == "csv" ? Format::Csv : Format::Json;
  cfg.samples_set = samples->count() > 0;
  return {cfg, 0};
}

}  // namespace khup::cli
