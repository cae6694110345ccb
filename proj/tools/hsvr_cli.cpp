#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "hsvr/pipeline.hpp"

namespace fs = std::filesystem;
using namespace hsvr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitEmptySupport = 2;
constexpr int kExitUsage = 64;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Input resolution: an existing file is a CSV series; otherwise the name must
// be a registered function slug (sampled on [0,2] with 2001 points) or one of
// lorenz-x/y/z (2001 points on [0,10]).
Signal resolve_input(const std::string& input) {
  if (fs::exists(input)) return signals::load_csv(input);
  if (input == "lorenz-x" || input == "lorenz-y" || input == "lorenz-z") {
    const signals::LorenzTrajectory traj = signals::lorenz_trajectory(10.0, 2001);
    if (input == "lorenz-x") return traj.x;
    if (input == "lorenz-y") return traj.y;
    return traj.z;
  }
  return signals::generate_named(input, 0.0, 2.0, 2001);
}

std::string summary_csv_header() {
  return "function,epsilon,method,predicted_layers,final_error,error_over_epsilon\n";
}

std::string summary_csv_row(const RunReport& r) {
  std::ostringstream row;
  row << r.id << ',' << fmt17(r.epsilon) << ',' << to_string(r.method) << ','
      << r.predicted_layers << ',' << fmt17(r.final_error) << ','
      << fmt17(r.error_over_epsilon) << '\n';
  return row.str();
}

struct CommonScaleFlags {
  std::string method = "fft";
  double decay = 2.0;
  double threshold = 0.01;
  double tol = 1e-2;
  double eta = 0.02;
  std::size_t rows = 0;

  PipelineOptions to_options() const {
    PipelineOptions opt;
    opt.method = method == "dmd" ? ScaleMethod::DMD : ScaleMethod::FFT;
    opt.decay = decay;
    opt.fft_threshold = threshold;
    opt.dmd.tol = tol;
    opt.dmd.eta = eta;
    opt.dmd.m_rows = rows;
    opt.dmd.decay = decay;
    return opt;
  }
};

void add_scale_flags(CLI::App* cmd, CommonScaleFlags& flags) {
  cmd->add_option("--method", flags.method, "Scale estimation method")
      ->check(CLI::IsMember({"fft", "dmd"}))
      ->capture_default_str();
  cmd->add_option("--decay", flags.decay, "Geometric filter ratio")->capture_default_str();
  cmd->add_option("--threshold", flags.threshold, "FFT relative magnitude cutoff")
      ->capture_default_str();
  cmd->add_option("--tol", flags.tol, "DMD residual cutoff")->capture_default_str();
  cmd->add_option("--eta", flags.eta, "DMD energy cutoff fraction")->capture_default_str();
  cmd->add_option("--rows", flags.rows, "DMD Hankel rows (0 = N/2+1)")->capture_default_str();
}

int run_scales(const std::string& input, const CommonScaleFlags& flags, bool no_split,
               const std::string& out) {
  Signal signal = resolve_input(input);
  if (!no_split) signal = signals::split_alternating(signal).first;
  const PipelineOptions opt = flags.to_options();
  ScaleEstimate est;
  if (opt.method == ScaleMethod::FFT)
    est = fft_scales(signal, opt.decay, opt.fft_threshold);
  else
    est = dmd_scales(signal, opt.dmd);
  const std::string text = to_json(est);
  if (out.empty())
    std::cout << text << "\n";
  else
    write_file(out, text);
  std::cerr << "scales: " << est.scales.size() << " scale(s) via " << to_string(est.method)
            << "\n";
  return kExitOk;
}

int run_train(const std::string& input, const CommonScaleFlags& flags,
              const std::string& scales_arg, const std::string& out, const std::string& report,
              const std::string& run_report) {
  const Signal full = resolve_input(input);
  PipelineOptions opt = flags.to_options();
  if (!scales_arg.empty() && scales_arg != "auto") {
    const ScaleEstimate est = scale_estimate_from_json(read_file(scales_arg));
    opt.fixed_scales = est.scales;
  }
  const PipelineResult result = run_pipeline(full, input, opt);
  if (!out.empty()) write_file(out, to_json(result.model));
  if (!report.empty()) write_file(report, layer_reports_to_csv(result.report.layers));
  if (!run_report.empty()) write_file(run_report, to_json(result.report));
  std::cout << to_json(result.report) << "\n";
  return kExitOk;
}

int run_sweep(const std::string& input, double sigma0, double decay, std::size_t layers,
              const std::string& out) {
  const Signal full = resolve_input(input);
  const auto [train_set, test_set] = signals::split_alternating(full);
  const auto curve =
      phase_sweep(train_set.x, train_set.y, test_set.x, test_set.y, sigma0, decay, layers);
  std::ostringstream csv;
  csv << "sigma,error\n";
  for (const auto& [sigma, error] : curve) csv << fmt17(sigma) << ',' << fmt17(error) << '\n';
  if (out.empty())
    std::cout << csv.str();
  else
    write_file(out, csv.str());
  return kExitOk;
}

int run_bench(const std::string& suite, const std::string& method, const std::string& out_dir) {
  std::vector<std::string> methods;
  if (method == "both")
    methods = {"fft", "dmd"};
  else
    methods = {method};

  if (!out_dir.empty()) fs::create_directories(out_dir);
  std::ostringstream summary;
  summary << summary_csv_header();

  auto process = [&](const Signal& train_set, const Signal& test_set, const std::string& id,
                     const std::string& m) {
    CommonScaleFlags flags;
    flags.method = m;
    try {
      const PipelineResult result = run_pipeline_split(train_set, test_set, id, flags.to_options());
      summary << summary_csv_row(result.report);
      if (!out_dir.empty())
        write_file((fs::path(out_dir) / (id + "." + m + ".json")).string(),
                   to_json(result.report));
      std::cout << id << " [" << m << "]: layers=" << result.report.predicted_layers
                << " error=" << result.report.final_error
                << " error/eps=" << result.report.error_over_epsilon << "\n";
    } catch (const NoOscillatoryContent& e) {
      summary << id << ',' << ',' << m << ",0,," << '\n';
      std::cout << id << " [" << m << "]: " << e.what() << "\n";
    }
  };

  if (suite == "table1") {
    for (const std::string& slug : table1_slugs()) {
      const Signal full = signals::generate_named(slug, 0.0, 2.0, 2001);
      const auto [train_set, test_set] = signals::split_alternating(full);
      for (const std::string& m : methods) process(train_set, test_set, slug, m);
    }
  } else if (suite == "lorenz") {
    for (const LorenzBenchSet& set : lorenz_bench_sets())
      for (const std::string& m : methods) process(set.train, set.test, set.id, m);
  } else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kExitUsage;
  }

  if (!out_dir.empty())
    write_file((fs::path(out_dir) / "summary.csv").string(), summary.str());
  else
    std::cout << summary.str();
  return kExitOk;
}

int run_batch_cmd(const std::vector<std::string>& paths, const std::string& dir,
                  const CommonScaleFlags& flags, const std::string& out, std::size_t jobs) {
  std::vector<std::string> files = paths;
  if (!dir.empty()) {
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".csv") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  }
  if (files.empty()) {
    std::cerr << "no input series\n";
    return kExitUsage;
  }
  std::vector<Signal> inputs;
  for (const std::string& f : files) inputs.push_back(signals::load_csv(f));

  const std::vector<BatchEntry> entries = run_batch(inputs, files, flags.to_options(), jobs);
  std::ostringstream summary;
  summary << summary_csv_header();
  std::size_t failures = 0;
  for (const BatchEntry& e : entries) {
    if (e.ok) {
      summary << summary_csv_row(e.report);
    } else {
      summary << e.id << ",,,,," << '\n';
      std::cerr << e.id << ": " << e.error << "\n";
      ++failures;
    }
  }
  if (out.empty())
    std::cout << summary.str();
  else
    write_file(out, summary.str());
  std::cerr << "batch: " << (entries.size() - failures) << "/" << entries.size() << " trained\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiscale SVR cascades with spectrum-derived kernel scales"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value config file");

  std::string input, out, report, run_report, scales_arg = "auto";
  bool no_split = false;
  CommonScaleFlags flags;

  CLI::App* scales_cmd =
      app.add_subcommand("scales", "Estimate kernel scales from a signal's spectrum");
  scales_cmd->add_option("input", input, "CSV path or generator slug")->required();
  add_scale_flags(scales_cmd, flags);
  scales_cmd->add_flag("--no-split", no_split,
                       "Estimate on the full series instead of the training half");
  scales_cmd->add_option("--out", out, "Output JSON path (default stdout)");

  CLI::App* train_cmd = app.add_subcommand("train", "Train a multiscale cascade");
  train_cmd->add_option("input", input, "CSV path or generator slug")->required();
  add_scale_flags(train_cmd, flags);
  train_cmd->add_option("--scales", scales_arg, "'auto' or a ScaleEstimate JSON file")
      ->capture_default_str();
  train_cmd->add_option("--out", out, "Model JSON path");
  train_cmd->add_option("--report", report, "Layer report CSV path");
  train_cmd->add_option("--run-report", run_report, "Run report JSON path");

  double sigma0 = 1.0, decay = 2.0;
  std::size_t layers = 10;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Phase-transition sweep over scales");
  sweep_cmd->add_option("input", input, "CSV path or generator slug")->required();
  sweep_cmd->add_option("--sigma0", sigma0, "Coarsest scale")->capture_default_str();
  sweep_cmd->add_option("--decay", decay, "Scale decay per layer")->capture_default_str();
  sweep_cmd->add_option("--layers", layers, "Number of layers")->capture_default_str();
  sweep_cmd->add_option("--out", out, "Output CSV path (default stdout)");

  std::string suite, bench_method = "fft";
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", suite, "table1 or lorenz")->required();
  bench_cmd->add_option("--method", bench_method, "fft, dmd, or both")
      ->check(CLI::IsMember({"fft", "dmd", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", out, "Output directory for reports");

  std::vector<std::string> batch_paths;
  std::string batch_dir;
  std::size_t jobs = 0;
  CLI::App* batch_cmd = app.add_subcommand("batch", "Train many CSV series in parallel");
  batch_cmd->add_option("inputs", batch_paths, "CSV files");
  batch_cmd->add_option("--dir", batch_dir, "Directory of CSV files");
  add_scale_flags(batch_cmd, flags);
  batch_cmd->add_option("--out", out, "Summary CSV path (default stdout)");
  batch_cmd->add_option("--jobs", jobs, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (scales_cmd->parsed()) return run_scales(input, flags, no_split, out);
    if (train_cmd->parsed()) return run_train(input, flags, scales_arg, out, report, run_report);
    if (sweep_cmd->parsed()) return run_sweep(input, sigma0, decay, layers, out);
    if (bench_cmd->parsed()) return run_bench(suite, bench_method, out);
    if (batch_cmd->parsed()) return run_batch_cmd(batch_paths, batch_dir, flags, out, jobs);
  } catch (const NoOscillatoryContent& e) {
    std::cerr << e.what() << "\n";
    return kExitEmptySupport;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
