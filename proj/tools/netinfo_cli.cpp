// Command-line front end: builds datasets, evaluates the NNGP kernel,
// estimates information content, and emits PAC-Bayes certificates as
// tidy CSV or JSON for downstream plotting.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netinfo/dataset.hpp"
#include "netinfo/idx.hpp"
#include "netinfo/kernel.hpp"
#include "netinfo/orthant.hpp"
#include "netinfo/pac_bayes.hpp"
#include "netinfo/version.hpp"

using json = nlohmann::json;
using namespace netinfo;

namespace {

struct RunConfig {
  std::string variant = "synthetic";
  std::vector<std::string> variants;  // sweep only
  long n = 100;
  std::vector<long> n_list;
  int depth = 7;
  std::int64_t samples = 10000;   // Monte-Carlo samples M
  double delta = 0.01;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds = {0, 1, 2};
  std::string mnist_images;
  std::string mnist_labels;
  double jitter = 0.0;
  double residual_tol = kDefaultResidualTol;
  std::string format = "csv";
  std::string units = "nats";
  std::string out;
  // synthetic variant knobs
  long d0 = 784;
  double intra_cos = 0.5;
  // oracle command
  std::int64_t trials = 1000000;
  double rho = 0.5;
  // symmetry command
  std::vector<long> widths;
  int weight_bits = 32;

  json to_json() const {
    return {{"variant", variant},       {"n", n},
            {"depth", depth},           {"samples", samples},
            {"delta", delta},           {"seed", seed},
            {"mnist_images", mnist_images}, {"mnist_labels", mnist_labels},
            {"jitter", jitter},         {"residual_tol", residual_tol},
            {"format", format},         {"units", units},
            {"d0", d0},                 {"intra_cos", intra_cos},
            {"library_version", kVersion}};
  }
};

// One row of the fixed-schema record table shared by info/bound/sweep.
struct Record {
  std::string variant;
  long n = 0;
  std::uint64_t seed = 0;
  int depth = 0;
  std::int64_t samples = 0;
  double c0_nats = 0, c0_stderr = 0, c1_nats = 0, info_upper_nats = 0;
  double raw_bound_c0 = 0, error_bound_c0 = 0;
  double raw_bound_c1 = 0, error_bound_c1 = 0;
  bool vacuous = false;  // of the C0-based error bound
  double wall_ms = 0;
};

constexpr const char* kRecordColumns =
    "variant,n,seed,depth,samples,c0_nats,c0_stderr,c1_nats,info_upper_nats,"
    "raw_bound_c0,error_bound_c0,raw_bound_c1,error_bound_c1,vacuous,wall_ms";

double unit_scale(const RunConfig& cfg) {
  return cfg.units == "bits" ? 1.0 / std::numbers::ln2 : 1.0;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string record_csv_row(const Record& r, double scale) {
  std::ostringstream os;
  os << r.variant << ',' << r.n << ',' << r.seed << ',' << r.depth << ','
     << r.samples << ',' << fmt(r.c0_nats * scale) << ','
     << fmt(r.c0_stderr * scale) << ',' << fmt(r.c1_nats * scale) << ','
     << fmt(r.info_upper_nats * scale) << ',' << fmt(r.raw_bound_c0) << ','
     << fmt(r.error_bound_c0) << ',' << fmt(r.raw_bound_c1) << ','
     << fmt(r.error_bound_c1) << ',' << (r.vacuous ? 1 : 0) << ','
     << fmt(r.wall_ms);
  return os.str();
}

json record_json(const Record& r, double scale) {
  return {{"variant", r.variant},
          {"n", r.n},
          {"seed", r.seed},
          {"depth", r.depth},
          {"samples", r.samples},
          {"c0_nats", r.c0_nats * scale},
          {"c0_stderr", r.c0_stderr * scale},
          {"c1_nats", r.c1_nats * scale},
          {"info_upper_nats", r.info_upper_nats * scale},
          {"raw_bound_c0", r.raw_bound_c0},
          {"error_bound_c0", r.error_bound_c0},
          {"raw_bound_c1", r.raw_bound_c1},
          {"error_bound_c1", r.error_bound_c1},
          {"vacuous", r.vacuous},
          {"wall_ms", r.wall_ms}};
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InvalidArgument("cannot open output path " + cfg.out);
  f << text;
}

// Reproducibility header: every emission carries the resolved config.
std::string csv_config_header(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# config " << cfg.to_json().dump() << '\n';
  return os.str();
}

Dataset make_dataset(const RunConfig& cfg, const std::string& variant_name,
                     long n, std::uint64_t seed) {
  const Variant v = variant_from_string(variant_name);
  if (v == Variant::synthetic) {
    return synthetic_dataset(n, cfg.d0, cfg.intra_cos, seed);
  }
  if (cfg.mnist_images.empty() || cfg.mnist_labels.empty()) {
    throw DatasetNotFound(
        "variant '" + variant_name +
        "' needs --mnist-images and --mnist-labels IDX paths");
  }
  const RawImageSet raw = load_idx_pair(cfg.mnist_images, cfg.mnist_labels);
  return build_dataset(raw, v, n, seed);
}

Record evaluate_cell(const RunConfig& cfg, const std::string& variant_name,
                     long n, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const Dataset ds = make_dataset(cfg, variant_name, n, seed);
  Matrix sigma = kernel_matrix(ds.inputs, {.depth_L = cfg.depth});
  if (cfg.jitter > 0.0) {
    sigma += cfg.jitter * Matrix::Identity(sigma.rows(), sigma.cols());
  }
  const InfoEstimate est =
      estimate_c0(sigma, ds.labels, cfg.samples, seed, cfg.residual_tol);

  Record r;
  r.variant = variant_name;
  r.n = n;
  r.seed = seed;
  r.depth = cfg.depth;
  r.samples = cfg.samples;
  r.c0_nats = est.c0_nats;
  r.c0_stderr = est.c0_std_error;
  r.c1_nats = est.c1_nats;
  r.info_upper_nats = est.info_upper_nats;
  if (n >= 2) {
    const GeneralisationBound b0 =
        realisable_bound(std::max(0.0, est.c0_nats), n, cfg.delta);
    const GeneralisationBound b1 =
        realisable_bound(est.info_upper_nats, n, cfg.delta);
    r.raw_bound_c0 = b0.raw_bound;
    r.error_bound_c0 = b0.error_bound;
    r.raw_bound_c1 = b1.raw_bound;
    r.error_bound_c1 = b1.error_bound;
    r.vacuous = b0.vacuous;
  }  // n = 1: information content is defined, the PAC-Bayes bound is not
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

void emit_records(const RunConfig& cfg, const std::vector<Record>& records) {
  const double scale = unit_scale(cfg);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : records) {
      json j = record_json(r, scale);
      j["config"] = cfg.to_json();
      arr.push_back(std::move(j));
    }
    write_output(cfg, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_config_header(cfg) << kRecordColumns << '\n';
    for (const auto& r : records) os << record_csv_row(r, scale) << '\n';
    write_output(cfg, os.str());
  }
}

int cmd_info(const RunConfig& cfg) {
  emit_records(cfg, {evaluate_cell(cfg, cfg.variant, cfg.n, cfg.seed)});
  return 0;
}

int cmd_bound(const RunConfig& cfg) {
  if (cfg.n < 2) throw Error("INVALID_N", "bound requires n >= 2");
  emit_records(cfg, {evaluate_cell(cfg, cfg.variant, cfg.n, cfg.seed)});
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.n_list.empty()) throw Error("INVALID_SWEEP", "empty --n-list");
  if (cfg.seeds.empty()) throw Error("INVALID_SWEEP", "empty --seeds");
  if (!std::is_sorted(cfg.n_list.begin(), cfg.n_list.end()) ||
      std::adjacent_find(cfg.n_list.begin(), cfg.n_list.end()) !=
          cfg.n_list.end()) {
    throw Error("INVALID_SWEEP", "--n-list must be strictly increasing");
  }
  std::vector<std::string> variants = cfg.variants;
  if (variants.empty()) {
    variants = {"binary_digits", "decimal_digits", "random_labels"};
  }

  std::vector<Record> records;
  for (const auto& variant : variants) {
    for (long n : cfg.n_list) {
      for (std::uint64_t seed : cfg.seeds) {
        records.push_back(evaluate_cell(cfg, variant, n, seed));
      }
    }
  }

  const double scale = unit_scale(cfg);
  // Aggregates: mean and range of C0 and of the C0-based error bound per
  // (variant, n) across seeds.
  struct Agg {
    std::string variant;
    long n;
    double c0_mean, c0_min, c0_max;
    double err_mean, err_min, err_max;
  };
  std::vector<Agg> aggs;
  for (const auto& variant : variants) {
    for (long n : cfg.n_list) {
      Agg a{variant, n, 0, 1e300, -1e300, 0, 1e300, -1e300};
      int count = 0;
      for (const auto& r : records) {
        if (r.variant != variant || r.n != n) continue;
        a.c0_mean += r.c0_nats;
        a.c0_min = std::min(a.c0_min, r.c0_nats);
        a.c0_max = std::max(a.c0_max, r.c0_nats);
        a.err_mean += r.error_bound_c0;
        a.err_min = std::min(a.err_min, r.error_bound_c0);
        a.err_max = std::max(a.err_max, r.error_bound_c0);
        ++count;
      }
      a.c0_mean /= count;
      a.err_mean /= count;
      aggs.push_back(a);
    }
  }

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : records) {
      json j = record_json(r, scale);
      j["config"] = cfg.to_json();
      arr.push_back(std::move(j));
    }
    for (const auto& a : aggs) {
      arr.push_back({{"record_type", "aggregate"},
                     {"variant", a.variant},
                     {"n", a.n},
                     {"c0_mean_nats", a.c0_mean * scale},
                     {"c0_min_nats", a.c0_min * scale},
                     {"c0_max_nats", a.c0_max * scale},
                     {"error_bound_mean", a.err_mean},
                     {"error_bound_min", a.err_min},
                     {"error_bound_max", a.err_max},
                     {"config", cfg.to_json()}});
    }
    write_output(cfg, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_config_header(cfg) << kRecordColumns << '\n';
    for (const auto& r : records) os << record_csv_row(r, scale) << '\n';
    os << "# aggregates\n"
       << "# variant,n,c0_mean,c0_min,c0_max,error_bound_mean,"
          "error_bound_min,error_bound_max\n";
    for (const auto& a : aggs) {
      os << "# " << a.variant << ',' << a.n << ',' << fmt(a.c0_mean * scale)
         << ',' << fmt(a.c0_min * scale) << ',' << fmt(a.c0_max * scale) << ','
         << fmt(a.err_mean) << ',' << fmt(a.err_min) << ',' << fmt(a.err_max)
         << '\n';
    }
    write_output(cfg, os.str());
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  if (cfg.n > 12) {
    throw Error("N_TOO_LARGE", "oracle is limited to n <= 12, got " +
                                   std::to_string(cfg.n));
  }
  // Fixture: n = 2 uses the requested correlation; larger n uses the
  // synthetic dataset kernel at the requested depth.
  Matrix sigma;
  LabelVector c;
  if (cfg.n <= 2) {
    sigma = Matrix(2, 2);
    sigma << 1.0, cfg.rho, cfg.rho, 1.0;
    c.c = Vector::Ones(2);
  } else {
    const Dataset ds = synthetic_dataset(cfg.n, cfg.d0, cfg.intra_cos, cfg.seed);
    sigma = kernel_matrix(ds.inputs, {.depth_L = cfg.depth});
    c = ds.labels;
  }
  const InfoEstimate est =
      estimate_c0(sigma, c, cfg.samples, cfg.seed, cfg.residual_tol);
  const auto [p_oracle, se_oracle] = orthant_oracle(sigma, c, cfg.trials,
                                                    cfg.seed);
  const double p_est = std::exp(-est.c0_nats);
  const double se_est = p_est * est.c0_std_error;
  const double combined = std::sqrt(se_est * se_est + se_oracle * se_oracle);
  const bool agree = std::abs(p_est - p_oracle) <= 3.0 * combined;

  if (cfg.format == "json") {
    json j = {{"estimator_p", p_est},       {"estimator_se", se_est},
              {"oracle_p", p_oracle},       {"oracle_se", se_oracle},
              {"combined_se", combined},    {"agree", agree},
              {"c0_nats", est.c0_nats},     {"config", cfg.to_json()}};
    write_output(cfg, json::array({j}).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_config_header(cfg)
       << "estimator_p,estimator_se,oracle_p,oracle_se,combined_se,agree,"
          "c0_nats\n"
       << fmt(p_est) << ',' << fmt(se_est) << ',' << fmt(p_oracle) << ','
       << fmt(se_oracle) << ',' << fmt(combined) << ',' << (agree ? 1 : 0)
       << ',' << fmt(est.c0_nats) << '\n';
    write_output(cfg, os.str());
  }
  return agree ? 0 : 1;
}

int cmd_symmetry(const RunConfig& cfg) {
  if (cfg.weight_bits < 1) {
    throw Error("INVALID_ARGUMENT", "--weight-bits must be >= 1");
  }
  if (cfg.widths.empty()) {
    throw Error("INVALID_ARGUMENT", "--widths is required");
  }
  ArchSpec arch;
  arch.depth_L = static_cast<int>(cfg.widths.size()) + 1;
  arch.input_dim_d0 = static_cast<int>(cfg.d0);
  arch.widths = cfg.widths;
  arch.weight_bits_w = cfg.weight_bits;
  const double nats = symmetry_info_bound(arch);
  const double scale = unit_scale(cfg);

  if (cfg.format == "json") {
    json j = {{"symmetry_bound", nats * scale},
              {"units", cfg.units},
              {"depth", arch.depth_L},
              {"config", cfg.to_json()}};
    write_output(cfg, json::array({j}).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_config_header(cfg) << "symmetry_bound,units,depth\n"
       << fmt(nats * scale) << ',' << cfg.units << ',' << arch.depth_L << '\n';
    write_output(cfg, os.str());
  }
  return 0;
}

int cmd_kernel(const RunConfig& cfg) {
  const Dataset ds = make_dataset(cfg, cfg.variant, cfg.n, cfg.seed);
  const Matrix sigma = kernel_matrix(ds.inputs, {.depth_L = cfg.depth});
  std::ostringstream os;
  if (cfg.format == "json") {
    json rows = json::array();
    for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < sigma.cols(); ++j) row.push_back(sigma(i, j));
      rows.push_back(std::move(row));
    }
    json j = {{"kernel", rows}, {"config", cfg.to_json()}};
    write_output(cfg, j.dump(2) + "\n");
  } else {
    os << csv_config_header(cfg);
    for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
      for (Eigen::Index j = 0; j < sigma.cols(); ++j) {
        os << fmt(sigma(i, j)) << (j + 1 < sigma.cols() ? "," : "");
      }
      os << '\n';
    }
    write_output(cfg, os.str());
  }
  return 0;
}

void add_common_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--variant", cfg.variant,
                  "dataset variant: binary_digits, decimal_digits, "
                  "random_labels, synthetic");
  app->add_option("--n", cfg.n, "training set size");
  app->add_option("--depth", cfg.depth, "network depth L (>= 2)");
  app->add_option("--samples", cfg.samples, "Monte-Carlo samples M");
  app->add_option("--delta", cfg.delta, "PAC-Bayes failure probability");
  app->add_option("--seed", cfg.seed, "random seed");
  app->add_option("--mnist-images", cfg.mnist_images, "IDX image file path");
  app->add_option("--mnist-labels", cfg.mnist_labels, "IDX label file path");
  app->add_option("--jitter", cfg.jitter,
                  "epsilon added to the kernel diagonal (default 0; "
                  "regularisation changes the reported information content)");
  app->add_option("--residual-tol", cfg.residual_tol,
                  "max allowed ||Sigma Sigma^-1 - I||_inf");
  app->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--units", cfg.units, "nats or bits")
      ->check(CLI::IsMember({"nats", "bits"}));
  app->add_option("--out", cfg.out, "output path (default stdout)");
  app->add_option("--d0", cfg.d0, "input dimension for synthetic data");
  app->add_option("--intra-cos", cfg.intra_cos,
                  "within-class cosine for synthetic data");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information content and PAC-Bayes certificates for "
               "infinitely wide relu networks"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* info = app.add_subcommand(
      "info", "estimate the information content C0 (and C1) of a dataset");
  add_common_options(info, cfg);

  CLI::App* bound = app.add_subcommand(
      "bound", "PAC-Bayes generalisation bounds from C0 and C1");
  add_common_options(bound, cfg);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "sweep (variant, n, seed) cells and aggregate across seeds");
  add_common_options(sweep, cfg);
  sweep->add_option("--n-list", cfg.n_list,
                    "strictly increasing list of training set sizes")
      ->delimiter(',');
  sweep->add_option("--seeds", cfg.seeds, "list of seeds")->delimiter(',');
  sweep->add_option("--variants", cfg.variants,
                    "variants to sweep (default: the three MNIST variants)")
      ->delimiter(',');

  CLI::App* oracle = app.add_subcommand(
      "oracle", "cross-check the estimator against rejection sampling");
  add_common_options(oracle, cfg);
  oracle->add_option("--trials", cfg.trials, "rejection sampling trials");
  oracle->add_option("--rho", cfg.rho, "correlation for the n = 2 fixture");

  CLI::App* symmetry = app.add_subcommand(
      "symmetry", "permutation-symmetry information bound for an MLP");
  add_common_options(symmetry, cfg);
  symmetry->add_option("--widths", cfg.widths, "hidden widths d_1..d_{L-1}")
      ->delimiter(',');
  symmetry->add_option("--weight-bits", cfg.weight_bits, "bits per weight");

  CLI::App* kernel = app.add_subcommand(
      "kernel", "emit the NNGP kernel matrix for a dataset");
  add_common_options(kernel, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(cfg);
    if (bound->parsed()) return cmd_bound(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (symmetry->parsed()) return cmd_symmetry(cfg);
    if (kernel->parsed()) return cmd_kernel(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: INTERNAL: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
