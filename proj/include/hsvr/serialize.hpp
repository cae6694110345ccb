#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsvr/cascade.hpp"
#include "hsvr/scales_dmd.hpp"
#include "hsvr/scales_fft.hpp"
#include "hsvr/svr.hpp"

namespace hsvr {

/// Aggregate result of one end-to-end run, mirroring one benchmark table row.
struct RunReport {
  std::string id;                 // function slug or dataset path
  double epsilon = 0.0;
  ScaleMethod method = ScaleMethod::FFT;
  std::size_t predicted_layers = 0;
  double final_error = 0.0;       // max-abs test error of the full model
  double error_over_epsilon = 0.0;
  std::vector<LayerReport> layers;
  double wall_time_seconds = 0.0;
};

std::string to_json(const SvrModel& model);
SvrModel svr_model_from_json(const std::string& text);

std::string to_json(const HsvrModel& model);
HsvrModel hsvr_model_from_json(const std::string& text);

std::string to_json(const ScaleEstimate& estimate);
ScaleEstimate scale_estimate_from_json(const std::string& text);

std::string to_json(const DmdSpectrum& spectrum);

std::string to_json(const RunReport& report);

/// CSV with header layer,sigma,c_used,n_support,residual_max,test_error.
std::string layer_reports_to_csv(const std::vector<LayerReport>& reports);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hsvr
