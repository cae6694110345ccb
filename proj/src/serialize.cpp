#include "hsvr/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hsvr {

using nlohmann::json;

namespace {

json svr_to_obj(const SvrModel& model) {
  return json{{"gamma", model.gamma},
              {"bias", model.bias},
              {"support_x", model.support_x},
              {"beta", model.beta}};
}

SvrModel svr_from_obj(const json& obj) {
  SvrModel model;
  model.gamma = obj.at("gamma").get<double>();
  model.bias = obj.at("bias").get<double>();
  model.support_x = obj.at("support_x").get<std::vector<double>>();
  model.beta = obj.at("beta").get<std::vector<double>>();
  if (model.support_x.size() != model.beta.size())
    throw ParseError("support_x and beta lengths differ");
  return model;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_json(const SvrModel& model) { return svr_to_obj(model).dump(2); }

SvrModel svr_model_from_json(const std::string& text) {
  try {
    return svr_from_obj(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("SvrModel JSON: ") + e.what());
  }
}

std::string to_json(const HsvrModel& model) {
  json layers = json::array();
  for (const SvrModel& layer : model.layers) layers.push_back(svr_to_obj(layer));
  return json{{"epsilon", model.epsilon},
              {"training_range", model.training_range},
              {"scales", model.scales},
              {"layers", layers}}
      .dump(2);
}

HsvrModel hsvr_model_from_json(const std::string& text) {
  try {
    const json obj = json::parse(text);
    HsvrModel model;
    model.epsilon = obj.at("epsilon").get<double>();
    model.training_range = obj.value("training_range", 0.0);
    model.scales = obj.at("scales").get<std::vector<double>>();
    for (const json& layer : obj.at("layers")) model.layers.push_back(svr_from_obj(layer));
    if (model.layers.size() != model.scales.size())
      throw ParseError("layer and scale counts differ");
    return model;
  } catch (const json::exception& e) {
    throw ParseError(std::string("HsvrModel JSON: ") + e.what());
  }
}

std::string to_json(const ScaleEstimate& estimate) {
  return json{{"method", to_string(estimate.method)},
              {"decay", estimate.decay},
              {"threshold", estimate.coefficient_threshold},
              {"support_frequencies", estimate.support_frequencies},
              {"scales", estimate.scales}}
      .dump(2);
}

ScaleEstimate scale_estimate_from_json(const std::string& text) {
  try {
    const json obj = json::parse(text);
    ScaleEstimate est;
    est.method = obj.at("method").get<std::string>() == "dmd" ? ScaleMethod::DMD : ScaleMethod::FFT;
    est.decay = obj.at("decay").get<double>();
    est.coefficient_threshold = obj.at("threshold").get<double>();
    est.support_frequencies = obj.at("support_frequencies").get<std::vector<double>>();
    est.scales = obj.at("scales").get<std::vector<double>>();
    return est;
  } catch (const json::exception& e) {
    throw ParseError(std::string("ScaleEstimate JSON: ") + e.what());
  }
}

std::string to_json(const DmdSpectrum& spectrum) {
  std::vector<double> re, im;
  for (const auto& l : spectrum.ritz_values) {
    re.push_back(l.real());
    im.push_back(l.imag());
  }
  return json{{"ritz_re", re},
              {"ritz_im", im},
              {"residual", spectrum.residuals},
              {"energy", spectrum.energies},
              {"frequency", spectrum.frequencies},
              {"total_power", spectrum.total_power}}
      .dump(2);
}

std::string to_json(const RunReport& report) {
  json layers = json::array();
  for (const LayerReport& lr : report.layers) {
    json obj{{"layer", lr.layer_index},
             {"sigma", lr.sigma},
             {"c_used", lr.c_used},
             {"n_support", lr.n_support},
             {"residual_max", lr.residual_max},
             {"residual_rms", lr.residual_rms}};
    if (lr.test_error) obj["test_error"] = *lr.test_error;
    layers.push_back(obj);
  }
  return json{{"id", report.id},
              {"epsilon", report.epsilon},
              {"method", to_string(report.method)},
              {"predicted_layers", report.predicted_layers},
              {"final_error", report.final_error},
              {"error_over_epsilon", report.error_over_epsilon},
              {"wall_time_seconds", report.wall_time_seconds},
              {"layers", layers}}
      .dump(2);
}

std::string layer_reports_to_csv(const std::vector<LayerReport>& reports) {
  std::ostringstream out;
  out << "layer,sigma,c_used,n_support,residual_max,test_error\n";
  for (const LayerReport& r : reports) {
    out << r.layer_index << ',' << fmt17(r.sigma) << ',' << fmt17(r.c_used) << ',' << r.n_support
        << ',' << fmt17(r.residual_max) << ',';
    if (r.test_error) out << fmt17(*r.test_error);
    out << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hsvr
