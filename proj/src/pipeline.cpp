#include "hsvr/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace hsvr {

namespace {

ScaleEstimate estimate_scales(const Signal& train_set, const PipelineOptions& options) {
  if (!options.fixed_scales.empty()) {
    ScaleEstimate est;
    est.method = options.method;
    est.decay = options.decay;
    est.scales = options.fixed_scales;
    for (double s : est.scales)
      est.support_frequencies.push_back(train_set.dx > 0 ? train_set.dx / (6.0 * s) : 0.0);
    return est;
  }
  if (options.method == ScaleMethod::FFT)
    return fft_scales(train_set, options.decay, options.fft_threshold);
  DmdOptions dmd = options.dmd;
  dmd.decay = options.decay;
  return dmd_scales(train_set, dmd);
}

}  // namespace

PipelineResult run_pipeline_split(const Signal& train_set, const Signal& test_set,
                                  const std::string& id, const PipelineOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();

  PipelineResult result;
  result.scales = estimate_scales(train_set, options);

  const double epsilon = epsilon_rule(train_set.y);
  TrainResult tr = train(train_set.x, train_set.y, result.scales.scales, epsilon, options.train);
  result.model = std::move(tr.model);

  const std::vector<double> errors = layerwise_errors(result.model, test_set.x, test_set.y);
  for (std::size_t l = 0; l < tr.reports.size(); ++l) tr.reports[l].test_error = errors[l];

  result.report.id = id;
  result.report.epsilon = epsilon;
  result.report.method = result.scales.method;
  result.report.predicted_layers = result.model.layers.size();
  result.report.final_error = errors.back();
  result.report.error_over_epsilon = epsilon > 0 ? errors.back() / epsilon : 0.0;
  result.report.layers = std::move(tr.reports);
  result.report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

PipelineResult run_pipeline(const Signal& full, const std::string& id,
                            const PipelineOptions& options) {
  const auto [train_set, test_set] = signals::split_alternating(full);
  return run_pipeline_split(train_set, test_set, id, options);
}

std::vector<BatchEntry> run_batch(const std::vector<Signal>& inputs,
                                  const std::vector<std::string>& ids,
                                  const PipelineOptions& options, std::size_t n_threads) {
  if (inputs.size() != ids.size()) throw InvalidSignal("inputs and ids length mismatch");
  std::vector<BatchEntry> entries(inputs.size());
  if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<std::size_t>(n_threads, inputs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      entries[i].id = ids[i];
      try {
        entries[i].report = run_pipeline(inputs[i], ids[i], options).report;
        entries[i].ok = true;
      } catch (const std::exception& e) {
        entries[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return entries;
}

const std::vector<std::string>& table1_slugs() {
  static const std::vector<std::string> slugs = {
      "sin-2pi-x",
      "sin-20pi-x",
      "sin-200pi-x",
      "100sin-20pi-x",
      "40cos-2pi-x",
      "100cos-20pi-x",
      "sin-2pi-x2",
      "x-plus-x2-plus-x3",
      "e-x",
      "sin-2pi-x4-plus-x",
      "cos-2pi-x-plus-sin-20pi-x",
      "cos-20pi-x-sin-15pi-x",
      "cos-32pi-x-cubed",
      "sin-13-17-19-23pi-x",
      "sin-50pi-x-sin-20pi-x-cos-15pi-x",
      "sin-40pi-x-cos-10pi-x-plus-3sin-20x-sin-40x",
      "sin-2x-cos-32x",
      "sin-20pi-x2",
  };
  return slugs;
}

std::vector<LorenzBenchSet> lorenz_bench_sets() {
  // One integration at the finest grid; the 501-point training set (spacing
  // 0.02) is a subsample of the 2001-point test grid.
  const signals::LorenzTrajectory traj = signals::lorenz_trajectory(10.0, 2001);
  auto subsample = [](const Signal& s) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < s.size(); i += 4) {
      x.push_back(s.x[i]);
      y.push_back(s.y[i]);
    }
    return make_signal(std::move(x), std::move(y));
  };
  std::vector<LorenzBenchSet> sets;
  sets.push_back({subsample(traj.x), traj.x, "lorenz-x"});
  sets.push_back({subsample(traj.y), traj.y, "lorenz-y"});
  sets.push_back({subsample(traj.z), traj.z, "lorenz-z"});
  return sets;
}

}  // namespace hsvr
