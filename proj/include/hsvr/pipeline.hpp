#pragma once

#include <string>
#include <vector>

#include "hsvr/scales_dmd.hpp"
#include "hsvr/serialize.hpp"
#include "hsvr/signals.hpp"

namespace hsvr {

struct PipelineOptions {
  ScaleMethod method = ScaleMethod::FFT;
  double decay = 2.0;
  double fft_threshold = 0.01;
  DmdOptions dmd;
  // iteration cap high enough that benchmark-sized layers train to kkt_tol
  TrainOptions train{.max_passes = 2000000};
  std::vector<double> fixed_scales;  // overrides spectral estimation when non-empty
};

struct PipelineResult {
  HsvrModel model;
  ScaleEstimate scales;
  RunReport report;
};

/// End-to-end run on a full signal: alternating split, tube width from the
/// training targets, a-priori scale estimation, cascade training, and
/// layerwise test errors.
PipelineResult run_pipeline(const Signal& full, const std::string& id,
                            const PipelineOptions& options = {});

/// Same pipeline on pre-split data (the Lorenz benchmark trains and tests on
/// different grids of one trajectory).
PipelineResult run_pipeline_split(const Signal& train_set, const Signal& test_set,
                                  const std::string& id, const PipelineOptions& options = {});

/// Runs the pipeline over many signals in parallel; results keep input order.
/// Failures are reported per entry instead of aborting the batch.
struct BatchEntry {
  std::string id;
  bool ok = false;
  std::string error;   // set when !ok
  RunReport report;    // valid when ok
};

std::vector<BatchEntry> run_batch(const std::vector<Signal>& inputs,
                                  const std::vector<std::string>& ids,
                                  const PipelineOptions& options, std::size_t n_threads = 0);

/// The benchmark function slugs in table order.
const std::vector<std::string>& table1_slugs();

/// The Lorenz benchmark: one trajectory on [0, 10], 500 training samples and
/// a 2000-sample test grid drawn from the same integration.
struct LorenzBenchSet {
  Signal train;
  Signal test;
  std::string id;
};
std::vector<LorenzBenchSet> lorenz_bench_sets();

}  // namespace hsvr
